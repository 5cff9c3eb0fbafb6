#include "doctest.h"

#include "grpdlim/equiv.hpp"
#include "grpdlim/holim.hpp"
#include "grpdlim/models.hpp"
#include "oracles.hpp"

using namespace grpdlim;

namespace {

// The holim read off the literal equalizer, as a functor into holim().
CatFunctor literal_to_fused(const HolimByProducts& lit, const HomotopyLimit& h) {
  const auto& eq = lit.equalizer;
  const auto& g = eq.groupoid();
  std::vector<ObjectIndex> objects(g.object_count());
  std::vector<MorphismIndex> morphisms(g.morphism_count());
  for (ObjectIndex x = 0; x < objects.size(); ++x) {
    auto tuple = lit.source.keyed.object_key(eq.keyed.object_key(x)[0]);
    objects[x] = h.find_object(tuple);
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    auto comps = lit.source.keyed.components(eq.inclusion.morphism(m));
    morphisms[m] = h.find_morphism(objects[g.src(m)], comps);
  }
  return CatFunctor(g.category(), h.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

DiagramFunctor cospan(const Groupoid& x, const Groupoid& z, const Groupoid& y, CatFunctor f,
                      CatFunctor g) {
  return DiagramFunctor(pullback_shape(), {x, z, y},
                        {CatFunctor::identity(x.category()), CatFunctor::identity(z.category()),
                         CatFunctor::identity(y.category()), std::move(f), std::move(g)});
}

}  // namespace

TEST_CASE("products and equalizers") {
  auto a = codiscrete(2);
  auto b = delooping(FiniteGroup::cyclic(3));
  auto p = product_groupoid({a, b});
  CHECK(p.groupoid().object_count() == 2);
  CHECK(p.groupoid().morphism_count() == 12);
  CHECK(p.groupoid().validate().ok());
  auto empty = product_groupoid({});
  CHECK(empty.groupoid().object_count() == 1);

  auto s = CatFunctor(a.category(), a.category(), {1, 0}, {3, 2, 1, 0});
  auto e = equalizer(s, CatFunctor::identity(a.category()));
  CHECK(e.groupoid().object_count() == 0);
  auto e2 = equalizer(s, s);
  CHECK(e2.groupoid().object_count() == 2);
}

TEST_CASE("strict limit of a cospan is the strict pullback") {
  auto point = terminal_groupoid();
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto f = CatFunctor::constant(point.category(), bz2.category(), 0);
  auto l = strict_limit(cospan(point, bz2, point, f, f));
  CHECK(l.groupoid().object_count() == 1);
  CHECK(l.groupoid().morphism_count() == 1);
}

TEST_CASE("holim of constant diagrams") {
  auto point = terminal_groupoid();
  for (const auto& gamma : {chain_category(3), pullback_shape(), idempotent_category(),
                            delooping(FiniteGroup::cyclic(3)).category()}) {
    auto h = holim(DiagramFunctor::constant(gamma, point));
    CHECK(h.groupoid().object_count() == 1);
    CHECK(h.groupoid().morphism_count() == 1);
  }
  auto g = delooping(FiniteGroup::cyclic(2));
  auto h = codiscrete(2);
  auto d = DiagramFunctor(discrete(2).category(), {g, h},
                          {CatFunctor::identity(g.category()), CatFunctor::identity(h.category())});
  auto l = holim(d);
  CHECK(l.groupoid().object_count() == 2);
  CHECK(l.groupoid().morphism_count() == 2 * 4);
}

TEST_CASE("holim agrees with the literal product-equalizer construction") {
  auto point = terminal_groupoid();
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto c2 = codiscrete(2);
  std::vector<DiagramFunctor> diagrams{
      action_diagram(GroupAction::translation(FiniteGroup::cyclic(2))),
      cospan(point, bz2, point, CatFunctor::constant(point.category(), bz2.category(), 0),
             CatFunctor::constant(point.category(), bz2.category(), 0)),
      cospan(c2, bz2, point, CatFunctor::constant(c2.category(), bz2.category(), 0),
             CatFunctor::constant(point.category(), bz2.category(), 0)),
      DiagramFunctor::constant(idempotent_category(), bz2),
      DiagramFunctor::constant(chain_category(2), c2),
  };
  for (const auto& d : diagrams) {
    auto h = holim(d);
    auto lit = holim_by_products(d);
    auto iso = literal_to_fused(lit, h);
    CHECK(is_isomorphism(iso));
    CHECK(h.groupoid().validate().ok());
  }
}

TEST_CASE("induced maps respect identities and composition") {
  auto g = GroupAction::translation(FiniteGroup::cyclic(2));
  auto d = action_diagram(g);
  auto h = holim(d);
  CHECK(induced_map(DiagramMap::identity(d), h, h).is_identity());

  auto point = terminal_groupoid();
  auto p = DiagramFunctor::constant(delooping(FiniteGroup::cyclic(2)).category(), point);
  auto hp = holim(p);
  auto collapse = DiagramMap(
      d, p, {CatFunctor::constant(g.space().category(), point.category(), 0)});
  auto f = induced_map(collapse, h, hp);
  // EZ2 -> * is an acyclic fibration, hence so is the induced map.
  CHECK(is_equivalence(f).equivalence);
  CHECK(is_fibration(f).fibration);
  auto twice = then(DiagramMap::identity(d), collapse);
  CHECK(induced_map(twice, h, hp) == then(induced_map(DiagramMap::identity(d), h, h), f));
}

TEST_CASE("strict limit maps into holim by constant functors") {
  auto contractible = action_diagram(GroupAction::trivial(FiniteGroup::cyclic(2), codiscrete(2)));
  auto hc = holim(contractible);
  CHECK(is_equivalence(lim_to_holim(strict_limit(contractible), hc)).equivalence);

  // Trivial Z2 action on BZ2: lim = BZ2 but holim sees both maps Z2 -> Z2.
  auto d = action_diagram(
      GroupAction::trivial(FiniteGroup::cyclic(2), delooping(FiniteGroup::cyclic(2))));
  auto lim = strict_limit(d);
  auto h = holim(d);
  auto c = lim_to_holim(lim, h);
  CHECK(lim.groupoid().object_count() == 1);
  CHECK(oracle::class_count(h.groupoid()) == 2);
  CHECK(is_equivalence(c).violation == EquivalenceViolation::NotEssentiallySurjective);
}

TEST_CASE("Fubini: both comparisons are isomorphisms") {
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto c2 = codiscrete(2);

  SUBCASE("terminal × terminal") {
    auto pc = product_category(terminal_category(), terminal_category());
    auto r = fubini(DiagramFunctor::constant(pc.category, bz2), pc);
    CHECK(r.first_is_isomorphism);
    CHECK(r.second_is_isomorphism);
    CHECK(r.total.groupoid().object_count() == 1);
  }
  SUBCASE("discrete(2) × discrete(2) constant at BZ2 gives BZ2^4") {
    auto d2 = discrete(2).category();
    auto pc = product_category(d2, d2);
    auto r = fubini(DiagramFunctor::constant(pc.category, bz2), pc);
    CHECK(r.first_is_isomorphism);
    CHECK(r.second_is_isomorphism);
    CHECK(r.total.groupoid().morphism_count() == 16);
  }
  SUBCASE("BZ2 × pullback shape, equivariant cospan") {
    auto bz2c = bz2.category();
    auto pc = product_category(bz2c, pullback_shape());
    auto swap = CatFunctor(c2.category(), c2.category(), {1, 0}, {3, 2, 1, 0});
    auto point = terminal_groupoid();
    auto to_point = CatFunctor::constant(c2.category(), point.category(), 0);
    // Z2 acts on the left leg by swapping, trivially elsewhere.
    std::vector<Groupoid> vertices(pc.category.object_count());
    for (ObjectIndex x = 0; x < vertices.size(); ++x)
      vertices[x] = pc.second_object(x) == 1 ? point : c2;
    std::vector<CatFunctor> edges(pc.category.morphism_count());
    for (MorphismIndex m = 0; m < edges.size(); ++m) {
      const auto g = pc.first_morphism(m);
      const auto s = pc.second_morphism(m);
      CatFunctor act = g == 0 ? CatFunctor::identity(c2.category()) : swap;
      if (s >= 3)
        edges[m] = then(act, to_point);
      else if (s == 1)
        edges[m] = CatFunctor::identity(point.category());
      else
        edges[m] = act;
    }
    auto d = DiagramFunctor(pc.category, vertices, edges);
    auto r = fubini(d, pc);
    CHECK(r.first_is_isomorphism);
    CHECK(r.second_is_isomorphism);
  }
}
