#include "doctest.h"

#include "grpdlim/colim.hpp"
#include "grpdlim/equiv.hpp"
#include "grpdlim/models.hpp"
#include "oracles.hpp"

using namespace grpdlim;

namespace {

FiniteCategory right_zero_monoid() {  // x;y = y
  return monoid_category({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
}
FiniteCategory left_zero_monoid() {  // x;y = x
  return monoid_category({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

// Idempotent index, discrete(2) with e sending object 1 onto object 0.
DiagramFunctor discrete_collapse() {
  auto d2 = discrete(2);
  auto e = CatFunctor(d2.category(), d2.category(), {0, 0}, {0, 0});
  return DiagramFunctor(idempotent_category(), {d2}, {CatFunctor::identity(d2.category()), e});
}

// Idempotent index on BZ2 ⊔ codiscrete(2): e folds the codiscrete part onto
// one object and fixes BZ2.
DiagramFunctor folding() {
  auto u = disjoint_union({delooping(FiniteGroup::cyclic(2)), codiscrete(2)});
  const auto& g = u.groupoid;
  // objects: 0 (BZ2), 1, 2; morphisms: 0, 1 (BZ2), 2..5 codiscrete.
  auto e = CatFunctor(g.category(), g.category(), {0, 1, 1}, {0, 1, 2, 2, 2, 2});
  return DiagramFunctor(idempotent_category(), {g}, {CatFunctor::identity(g.category()), e});
}

// Brute-force partition: (i, x) ~ (j, y) iff some k receives both at one element.
std::size_t brute_object_classes(const DiagramFunctor& d) {
  const auto& I = d.index();
  std::vector<std::pair<ObjectIndex, ObjectIndex>> all;
  for (ObjectIndex i = 0; i < I.object_count(); ++i)
    for (ObjectIndex x = 0; x < d.vertex(i).object_count(); ++x) all.push_back({i, x});
  auto related = [&](std::pair<ObjectIndex, ObjectIndex> a, std::pair<ObjectIndex, ObjectIndex> b) {
    for (ObjectIndex k = 0; k < I.object_count(); ++k)
      for (MorphismIndex u : I.hom(a.first, k))
        for (MorphismIndex v : I.hom(b.first, k))
          if (d.edge(u).object(a.second) == d.edge(v).object(b.second)) return true;
    return false;
  };
  std::vector<int> cls(all.size(), -1);
  std::size_t count = 0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = static_cast<int>(count);
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (related(all[a], all[b])) cls[b] = static_cast<int>(count);
    ++count;
  }
  // The relation is an equivalence on filtered indices: check transitivity.
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      if ((cls[a] == cls[b]) != related(all[a], all[b])) return npos;
  return count;
}

}  // namespace

TEST_CASE("filteredness") {
  CHECK(is_filtered(terminal_category()).filtered);
  auto d = is_filtered(discrete(2).category());
  CHECK(d.failure == FilteredFailure::NoCocone);
  CHECK(d.indices == std::vector<std::uint64_t>{0, 1});
  CHECK(is_filtered(idempotent_category()).filtered);
  CHECK(is_filtered(right_zero_monoid()).filtered);
  auto l = is_filtered(left_zero_monoid());
  CHECK(l.failure == FilteredFailure::NoCoequalizer);
  CHECK(is_filtered(FiniteCategory()).failure == FilteredFailure::Empty);
  CHECK_FALSE(is_filtered(delooping(FiniteGroup::cyclic(2)).category()).filtered);
  CHECK(is_filtered(chain_category(3)).filtered);
  CHECK(is_filtered(pullback_shape()).filtered);  // 1 is terminal
  CHECK(is_filtered(opposite(pullback_shape())).failure == FilteredFailure::NoCocone);
  CHECK(is_filtered(poset_category(3, {{0, 2}, {1, 2}})).filtered);
  auto pc = product_category(idempotent_category(), chain_category(2));
  CHECK(is_filtered(pc.category).filtered);
}

TEST_CASE("filtered colimits of the basic shapes") {
  auto c = filtered_colimit(discrete_collapse());
  CHECK(c.groupoid.object_count() == 1);
  CHECK(c.groupoid.morphism_count() == 1);

  auto f = filtered_colimit(folding());
  CHECK(f.groupoid.object_count() == 2);
  CHECK(f.groupoid.morphism_count() == 3);

  auto bs3 = delooping(FiniteGroup::symmetric(3));
  for (const auto& I : {terminal_category(), idempotent_category(), right_zero_monoid(),
                        chain_category(3)}) {
    auto k = filtered_colimit(DiagramFunctor::constant(I, bs3));
    CHECK(k.groupoid.object_count() == 1);
    CHECK(k.groupoid.morphism_count() == 6);
  }

  // Index with a top element: the colimit is the top vertex.
  auto x0 = codiscrete(3);
  auto x1 = delooping(FiniteGroup::cyclic(2));
  auto d = DiagramFunctor(chain_category(2), {x0, x1},
                          {CatFunctor::identity(x0.category()),
                           CatFunctor::constant(x0.category(), x1.category(), 0),
                           CatFunctor::identity(x1.category())});
  auto t = filtered_colimit(d);
  CHECK(is_isomorphism(t.cocone[1]));
  CHECK(t.groupoid.validate().ok());

  CHECK_THROWS_AS(filtered_colimit(DiagramFunctor::constant(discrete(2).category(), bs3)),
                  InvalidStructure);
}

TEST_CASE("colimit classes agree with the direct relation") {
  for (const auto& d : {discrete_collapse(), folding(),
                        DiagramFunctor::constant(right_zero_monoid(), codiscrete(2))}) {
    auto c = filtered_colimit(d);
    CHECK(brute_object_classes(d) == c.groupoid.object_count());
    CHECK(c.groupoid.validate().ok());
  }
}

TEST_CASE("cocone is universal among cocones into small targets") {
  for (const auto& d : {discrete_collapse(), folding()}) {
    auto c = filtered_colimit(d);
    for (const auto& t : {codiscrete(2), delooping(FiniteGroup::cyclic(2)), discrete(2)}) {
      // Cocones: one functor X(i) -> T per i, compatible with the edges.
      const auto& I = d.index();
      std::vector<std::vector<std::vector<std::uint32_t>>> legs;
      for (ObjectIndex i = 0; i < I.object_count(); ++i)
        legs.push_back(oracle::functors(d.vertex(i).category(), t.category()));
      std::size_t cocones = 0;
      REQUIRE(I.object_count() == 1);
      for (const auto& leg : legs[0]) {
        CatFunctor f(d.vertex(0).category(), t.category(),
                     {leg.begin(), leg.begin() + d.vertex(0).object_count()},
                     {leg.begin() + d.vertex(0).object_count(), leg.end()});
        bool ok = true;
        for (MorphismIndex u = 0; u < I.morphism_count(); ++u) ok = ok && then(d.edge(u), f) == f;
        cocones += ok;
      }
      auto from_colim = oracle::functors(c.groupoid.category(), t.category());
      CHECK(from_colim.size() == cocones);
    }
  }
}

TEST_CASE("colim_map is functorial") {
  auto d = folding();
  auto c = filtered_colimit(d);
  CHECK(colim_map(DiagramMap::identity(d), c, c).is_identity());
}

TEST_CASE("Map(K, -) commutes with filtered colimits") {
  std::vector<FiniteCategory> ks{terminal_category(), discrete(2).category(),
                                 delooping(FiniteGroup::cyclic(2)).category(), chain_category(2),
                                 idempotent_category()};
  for (const auto& k : ks)
    for (const auto& d : {discrete_collapse(), folding()}) {
      auto r = map_colim_compare(k, d);
      CHECK(r.is_isomorphism);
    }
  auto r = map_colim_compare(discrete(2).category(), discrete_collapse());
  CHECK(r.left.groupoid.object_count() == 1);
  CHECK(r.right.functor_count() == 1);
}

TEST_CASE("filtered colimits commute with finite products") {
  auto single = colim_product_compare({folding()});
  CHECK(single.is_isomorphism);
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto two = colim_product_compare({DiagramFunctor::constant(idempotent_category(), bz2),
                                    DiagramFunctor::constant(idempotent_category(), codiscrete(2))});
  CHECK(two.is_isomorphism);
  auto mixed = colim_product_compare(
      {discrete_collapse(), DiagramFunctor::constant(idempotent_category(), bz2), folding()});
  CHECK(mixed.is_isomorphism);
}

TEST_CASE("filtered colimits commute with finite homotopy limits") {
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  SUBCASE("I terminal") {
    auto pc = product_category(terminal_category(), pullback_shape());
    auto r = colim_holim_compare(DiagramFunctor::constant(pc.category, bz2), pc);
    CHECK(r.is_isomorphism);
  }
  SUBCASE("Γ terminal") {
    auto pc = product_category(idempotent_category(), terminal_category());
    auto f = folding();
    std::vector<CatFunctor> edges(f.edges());
    auto d = DiagramFunctor(pc.category, f.vertices(), edges);
    auto r = colim_holim_compare(d, pc);
    CHECK(r.is_isomorphism);
  }
  SUBCASE("idempotent × pullback shape") {
    // At every Γ-vertex the folding diagram; legs constant onto the BZ2 object.
    auto f = folding();
    const auto& g = f.vertex(0);
    auto pc = product_category(idempotent_category(), pullback_shape());
    auto point = terminal_groupoid();
    std::vector<Groupoid> vertices(pc.category.object_count());
    for (ObjectIndex x = 0; x < vertices.size(); ++x)
      vertices[x] = pc.second_object(x) == 1 ? bz2 : g;
    // g -> BZ2: collapse the codiscrete part to the base point, keep BZ2.
    auto leg = CatFunctor(g.category(), bz2.category(), {0, 0, 0}, {0, 1, 0, 0, 0, 0});
    std::vector<CatFunctor> edges(pc.category.morphism_count());
    for (MorphismIndex m = 0; m < edges.size(); ++m) {
      const auto i = pc.first_morphism(m);
      const auto s = pc.second_morphism(m);
      const auto& e = f.edge(i);
      if (s == 1)
        edges[m] = CatFunctor::identity(bz2.category());
      else if (s >= 3)
        edges[m] = then(e, leg);
      else
        edges[m] = e;
    }
    auto d = DiagramFunctor(pc.category, vertices, edges);
    auto r = colim_holim_compare(d, pc);
    CHECK(r.is_isomorphism);
    CHECK(r.right.groupoid().validate().ok());
  }
}

TEST_CASE("the nerve of BZ2 is infinite, yet Map(BZ2, -) still commutes") {
  // A finite groupoid index K whose nerve is not a finite simplicial set.
  auto k = delooping(FiniteGroup::cyclic(2)).category();
  auto r = map_colim_compare(k, folding());
  CHECK(r.is_isomorphism);
  CHECK(r.right.functor_count() == 3);  // two maps Z2 -> Z2 plus the point
}
