#include "doctest.h"

#include "grpdlim/cohomology.hpp"
#include "grpdlim/constructions.hpp"
#include "grpdlim/site.hpp"
#include "oracles.hpp"

using namespace grpdlim;

namespace {

// U <= V with a point inside U (neighbourhoods V ⊇ U) and one seeing only V.
FiniteSite two_opens() {
  auto shape = poset_category(2, {{0, 1}});
  auto op = opposite(shape);
  auto I = chain_category(2);
  SitePoint inside_u{"u", I, CatFunctor(I, op, {1, 0}, {2, 1, 0})};
  auto t = terminal_category();
  SitePoint only_v{"v", t, CatFunctor(t, op, {1}, {2})};
  return FiniteSite(shape, {inside_u, only_v});
}

SitePresheaf mixed(const FiniteSite& site) {
  // X(V) = codiscrete(3) restricting onto X(U) = BZ2 at its base point.
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto c3 = codiscrete(3);
  return SitePresheaf(site, {bz2, c3},
                      {CatFunctor::identity(bz2.category()),
                       CatFunctor::constant(c3.category(), bz2.category(), 0),
                       CatFunctor::identity(c3.category())});
}

// Z2 acting by inversion on the constant BZ3 presheaf, as a BZ2-diagram.
PresheafDiagram inversion_diagram(const FiniteSite& site) {
  auto a = ActionOnGroup::inversion(FiniteGroup::cyclic(2), {false, true}, FiniteGroup::cyclic(3));
  auto act = delooping_action(a);
  auto x = SitePresheaf::constant(site, act.space());
  std::vector<PresheafMap> edges;
  for (ElementIndex g = 0; g < 2; ++g)
    edges.emplace_back(x, x, std::vector<CatFunctor>(2, act.act(g)));
  return PresheafDiagram(delooping(FiniteGroup::cyclic(2)).category(), {x}, edges);
}

// A constant presheaf diagram over `index` with identity edges.
PresheafDiagram constant_diagram(const FiniteCategory& index, const SitePresheaf& x) {
  std::vector<SitePresheaf> vertices(index.object_count(), x);
  std::vector<PresheafMap> edges(index.morphism_count(), PresheafMap::identity(x));
  return PresheafDiagram(index, vertices, edges);
}

// f as a map of constant diagrams over `index`.
PresheafDiagramMap constant_map(const FiniteCategory& index, const PresheafMap& f) {
  return PresheafDiagramMap(constant_diagram(index, f.source()), constant_diagram(index, f.target()),
                            std::vector<PresheafMap>(index.object_count(), f));
}

}  // namespace

TEST_CASE("sites reject non-filtered point indices") {
  auto shape = poset_category(2, {{0, 1}});
  auto d2 = discrete(2).category();
  SitePoint bad{"p", d2, CatFunctor(d2, opposite(shape), {0, 1}, {0, 2})};
  CHECK_THROWS_AS(FiniteSite(shape, {bad}), InvalidStructure);
  auto t = terminal_category();
  SitePoint wrong{"q", t, CatFunctor(t, shape, {0}, {0})};  // lands in 𝒞, not 𝒞^op
  CHECK_THROWS_AS(FiniteSite(poset_category(2, {{0, 1}}), {wrong}), InvalidStructure);
}

TEST_CASE("stalks of the two-open site") {
  auto site = two_opens();
  auto x = mixed(site);
  auto su = stalk(x, site.points()[0]);
  CHECK(su.groupoid().object_count() == 1);
  CHECK(su.groupoid().morphism_count() == 2);
  CHECK(is_isomorphism(su.colim.cocone[1]));  // the top neighbourhood is U
  auto sv = stalk(x, site.points()[1]);
  CHECK(sv.groupoid().object_count() == 3);
  CHECK(sv.groupoid().morphism_count() == 9);

  auto s3 = delooping(FiniteGroup::symmetric(3));
  auto c = SitePresheaf::constant(site, s3);
  for (const auto& p : site.points()) CHECK(stalk(c, p).groupoid().morphism_count() == 6);
  CHECK(site.point_index("v") == 1);
  CHECK(site.point_index("w") == npos);
}

TEST_CASE("separation witness: local but not sectionwise") {
  auto w = separation_witness();
  auto local = is_local_weak_equivalence(w.f);
  CHECK(local.holds);
  REQUIRE(local.points.size() == 1);
  CHECK(local.points[0].equivalence.equivalence);
  auto sect = is_sectionwise_weak_equivalence(w.f);
  CHECK_FALSE(sect.holds);
  CHECK(sect.failing_section == 1);
  CHECK(sect.sections[0].equivalence);
  CHECK(sect.sections[1].violation == EquivalenceViolation::NotEssentiallySurjective);
  // Both stalk maps checked by definition as well.
  auto sx = stalk(w.x, w.site.points()[0]);
  auto sy = stalk(w.y, w.site.points()[0]);
  CHECK(oracle::is_equivalence(stalk_map(w.f, w.site.points()[0], sx, sy)));
}

TEST_CASE("identities and sectionwise equivalences are local equivalences") {
  auto site = two_opens();
  auto x = mixed(site);
  CHECK(is_local_weak_equivalence(PresheafMap::identity(x)).holds);
  CHECK(is_sectionwise_weak_equivalence(PresheafMap::identity(x)).holds);
  CHECK(is_local_fibration(PresheafMap::identity(x)).holds);

  // codiscrete(3) -> point and BZ2 -> BZ2 at U: sectionwise only at V.
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto pt = terminal_groupoid();
  auto y = SitePresheaf(site, {bz2, pt},
                        {CatFunctor::identity(bz2.category()),
                         CatFunctor::constant(pt.category(), bz2.category(), 0),
                         CatFunctor::identity(pt.category())});
  auto f = PresheafMap(x, y, {CatFunctor::identity(bz2.category()),
                              CatFunctor::constant(codiscrete(3).category(), pt.category(), 0)});
  CHECK(is_sectionwise_weak_equivalence(f).holds);
  CHECK(is_local_weak_equivalence(f).holds);
}

TEST_CASE("empty site is vacuous") {
  FiniteSite site(FiniteCategory(), {});
  auto x = SitePresheaf(site, {}, {});
  auto id = PresheafMap::identity(x);
  CHECK(is_sectionwise_weak_equivalence(id).holds);
  CHECK(is_local_weak_equivalence(id).holds);
  CHECK(is_local_fibration(id).holds);
}

TEST_CASE("local fibrations") {
  auto site = two_opens();
  auto x = mixed(site);
  auto pt = SitePresheaf::constant(site, terminal_groupoid());
  std::vector<CatFunctor> to_pt;
  for (ObjectIndex u = 0; u < 2; ++u)
    to_pt.push_back(CatFunctor::constant(x.section(u).category(), terminal_groupoid().category(), 0));
  CHECK(is_local_fibration(PresheafMap(x, pt, to_pt)).holds);

  // discrete(2) -> codiscrete(2) is not a fibration; plant it at every section.
  auto d2 = discrete(2);
  auto c2 = codiscrete(2);
  auto inc = CatFunctor(d2.category(), c2.category(), {0, 1}, {0, 3});
  auto f = PresheafMap(SitePresheaf::constant(site, d2), SitePresheaf::constant(site, c2),
                       {inc, inc});
  auto r = is_local_fibration(f);
  CHECK_FALSE(r.holds);
  CHECK(r.failing_point == 0);
  REQUIRE(r.points[0].fibration.counterexample.has_value());
  CHECK_FALSE(oracle::is_fibration(inc));
}

TEST_CASE("presheaf holim is computed sectionwise") {
  auto site = two_opens();
  SUBCASE("constant point diagram") {
    auto pt = SitePresheaf::constant(site, terminal_groupoid());
    auto h = presheaf_holim(constant_diagram(chain_category(3), pt));
    for (ObjectIndex u = 0; u < 2; ++u) CHECK(h.presheaf.section(u).morphism_count() == 1);
  }
  SUBCASE("discrete index gives products") {
    auto x = mixed(site);
    auto h = presheaf_holim(constant_diagram(discrete(2).category(), x));
    CHECK(h.presheaf.section(0).morphism_count() == 4);
    CHECK(h.presheaf.section(1).object_count() == 9);
    CHECK(h.presheaf.section(1).morphism_count() == 81);
  }
  SUBCASE("inversion on BZ3 matches the cocycle groupoid open by open") {
    auto h = presheaf_holim(inversion_diagram(site));
    auto a = ActionOnGroup::inversion(FiniteGroup::cyclic(2), {false, true}, FiniteGroup::cyclic(3));
    auto z = cocycle_groupoid(a);
    auto coh = h1(a);
    for (ObjectIndex u = 0; u < 2; ++u) {
      const auto& s = h.presheaf.section(u);
      CHECK(s.object_count() == z.groupoid().object_count());
      CHECK(oracle::class_count(s) == coh.classes.size());
      CHECK(oracle::automorphism_orders(s) == oracle::automorphism_orders(z.groupoid()));
    }
    CHECK(h.presheaf.restriction(1).is_identity());  // induced by identities
    CHECK(is_isomorphism(h.presheaf.restriction(1)));
  }
}

TEST_CASE("stalk of holim is holim of stalks") {
  auto site = two_opens();
  auto d = inversion_diagram(site);
  for (const auto& p : site.points()) CHECK(stalk_holim_compare(d, p).is_isomorphism);

  auto x = mixed(site);
  for (const auto& G : {pullback_shape(), chain_category(2), delooping(FiniteGroup::cyclic(2)).category()}) {
    auto cd = constant_diagram(G, x);
    for (const auto& p : site.points()) {
      auto r = stalk_holim_compare(cd, p);
      CHECK(r.is_isomorphism);
      CHECK(r.comparison.left.groupoid.validate().ok());
    }
  }
}

TEST_CASE("holim preserves local weak equivalences and local fibrations") {
  auto w = separation_witness();
  for (const auto& G : {pullback_shape(), chain_category(2), idempotent_category(),
                        delooping(FiniteGroup::cyclic(2)).category()}) {
    auto m = constant_map(G, w.f);
    auto hx = presheaf_holim(m.source);
    auto hy = presheaf_holim(m.target);
    auto hf = presheaf_holim_map(m, hx, hy);
    CHECK(is_local_weak_equivalence(hf).holds);
    CHECK_FALSE(is_sectionwise_weak_equivalence(hf).holds);
  }

  auto site = two_opens();
  auto x = mixed(site);
  auto pt = SitePresheaf::constant(site, terminal_groupoid());
  std::vector<CatFunctor> to_pt;
  for (ObjectIndex u = 0; u < 2; ++u)
    to_pt.push_back(CatFunctor::constant(x.section(u).category(), terminal_groupoid().category(), 0));
  auto p = PresheafMap(x, pt, to_pt);
  REQUIRE(is_local_fibration(p).holds);
  auto m = constant_map(pullback_shape(), p);
  auto hx = presheaf_holim(m.source);
  auto hy = presheaf_holim(m.target);
  CHECK(is_local_fibration(presheaf_holim_map(m, hx, hy)).holds);
}

TEST_CASE("sectionwise equivalences induce sectionwise equivalences on holim") {
  auto site = two_opens();
  auto x = mixed(site);
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto pt = terminal_groupoid();
  auto y = SitePresheaf(site, {bz2, pt},
                        {CatFunctor::identity(bz2.category()),
                         CatFunctor::constant(pt.category(), bz2.category(), 0),
                         CatFunctor::identity(pt.category())});
  auto f = PresheafMap(x, y, {CatFunctor::identity(bz2.category()),
                              CatFunctor::constant(codiscrete(3).category(), pt.category(), 0)});
  auto m = constant_map(pullback_shape(), f);
  auto hx = presheaf_holim(m.source);
  auto hy = presheaf_holim(m.target);
  CHECK(is_sectionwise_weak_equivalence(presheaf_holim_map(m, hx, hy)).holds);
}

TEST_CASE("presheaf Fubini") {
  auto site = two_opens();
  auto pc = product_category(chain_category(2), chain_category(2));
  auto r = presheaf_fubini(constant_diagram(pc.category, mixed(site)), pc);
  CHECK(r.holds);
  CHECK(r.sections.size() == 2);
  auto pb = product_category(chain_category(2), pullback_shape());
  CHECK(presheaf_fubini(constant_diagram(pb.category, separation_witness().x), pb).holds);
  auto pc2 = product_category(delooping(FiniteGroup::cyclic(2)).category(), chain_category(2));
  CHECK(presheaf_fubini(constant_diagram(pc2.category, separation_witness().y), pc2).holds);
}

TEST_CASE("presheaf diagrams check naturality") {
  auto site = two_opens();
  auto x = mixed(site);
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  // Swapping the codiscrete objects at V while fixing U is natural; a map
  // that disagrees between identity edges is not functorial.
  auto c3 = codiscrete(3);
  auto swap = CatFunctor(c3.category(), c3.category(), {1, 0, 2}, {4, 3, 5, 1, 0, 2, 7, 6, 8});
  auto s = PresheafMap(x, x, {CatFunctor::identity(bz2.category()), swap});
  CHECK_THROWS_AS(PresheafDiagram(terminal_category(), {x}, {s}), InvalidStructure);
  CHECK_NOTHROW(PresheafDiagram(delooping(FiniteGroup::cyclic(2)).category(), {x},
                                {PresheafMap::identity(x), s}));
}
