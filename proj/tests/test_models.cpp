#include "doctest.h"

#include "grpdlim/models.hpp"
#include "oracles.hpp"

using namespace grpdlim;

namespace {

// A group acting on 𝔹G through automorphisms auts[γ] of G.
GroupAction on_delooping(const FiniteGroup& gamma, const FiniteGroup& g,
                         const std::vector<std::vector<ElementIndex>>& auts) {
  auto b = delooping(g);
  std::vector<CatFunctor> act;
  for (const auto& a : auts)
    act.emplace_back(b.category(), b.category(), std::vector<ObjectIndex>{0},
                     std::vector<MorphismIndex>(a.begin(), a.end()));
  return GroupAction(gamma, b, std::move(act));
}

GroupAction inversion_on_bz3() {
  return on_delooping(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 2, 1}});
}

// Counts (x, φ) and compatible α by the classical formulas.
std::pair<std::size_t, std::size_t> brute_hfp(const GroupAction& a) {
  const auto& x = a.space().category();
  const auto& group = a.group();
  const auto n = group.order();
  std::vector<std::vector<MorphismIndex>> objects;
  std::vector<ObjectIndex> bases;
  for (ObjectIndex o = 0; o < x.object_count(); ++o) {
    std::vector<std::vector<MorphismIndex>> choices(n);
    std::vector<std::size_t> sizes(n), d(n, 0);
    bool empty = false;
    for (ElementIndex g = 0; g < n; ++g) {
      choices[g] = x.hom(o, a.object(g, o));
      sizes[g] = choices[g].size();
      empty = empty || sizes[g] == 0;
    }
    if (empty) continue;
    do {
      std::vector<MorphismIndex> phi(n);
      for (ElementIndex g = 0; g < n; ++g) phi[g] = choices[g][d[g]];
      bool ok = phi[group.identity()] == x.identity(o);
      for (ElementIndex g = 0; g < n && ok; ++g)
        for (ElementIndex h = 0; h < n && ok; ++h)
          ok = phi[group.multiply(g, h)] == oracle::circ(x, a.morphism(g, phi[h]), phi[g]);
      if (ok) {
        objects.push_back(phi);
        bases.push_back(o);
      }
    } while (oracle::advance(d, sizes));
  }
  std::size_t morphisms = 0;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      for (MorphismIndex alpha : x.hom(bases[i], bases[j])) {
        bool ok = true;
        for (ElementIndex g = 0; g < n && ok; ++g)
          ok = oracle::circ(x, objects[j][g], alpha) ==
               oracle::circ(x, a.morphism(g, alpha), objects[i][g]);
        morphisms += ok;
      }
  return {objects.size(), morphisms};
}

std::vector<GroupAction> action_corpus() {
  std::vector<GroupAction> out;
  out.push_back(inversion_on_bz3());
  out.push_back(GroupAction::translation(FiniteGroup::cyclic(2)));
  out.push_back(GroupAction::translation(FiniteGroup::cyclic(3)));
  out.push_back(GroupAction::trivial(FiniteGroup::cyclic(2), delooping(FiniteGroup::cyclic(2))));
  out.push_back(GroupAction::trivial(FiniteGroup::cyclic(3), delooping(FiniteGroup::symmetric(3))));
  out.push_back(GroupAction::trivial(FiniteGroup::klein(), codiscrete(2)));
  out.push_back(GroupAction::trivial(FiniteGroup::trivial(), delooping(FiniteGroup::cyclic(3))));
  // Z2 swapping the two points of codiscrete(2).
  auto c = codiscrete(2);
  out.push_back(GroupAction(FiniteGroup::cyclic(2), c,
                            {CatFunctor::identity(c.category()),
                             CatFunctor(c.category(), c.category(), {1, 0}, {3, 2, 1, 0})}));
  // Klein acting on 𝔹Z2 × ... by the trivial automorphism of Z2, and on 𝔹(Z2×Z2) by swap.
  auto k = FiniteGroup::klein();
  out.push_back(on_delooping(FiniteGroup::cyclic(2), k, {{0, 1, 2, 3}, {0, 2, 1, 3}}));
  return out;
}

}  // namespace

TEST_CASE("group actions are validated") {
  auto b = delooping(FiniteGroup::cyclic(3));
  auto id = CatFunctor::identity(b.category());
  auto inv = CatFunctor(b.category(), b.category(), {0}, {0, 2, 1});
  CHECK_NOTHROW(GroupAction(FiniteGroup::cyclic(2), b, {id, inv}));
  CHECK_THROWS_AS(GroupAction(FiniteGroup::cyclic(2), b, {inv, inv}), InvalidStructure);
  CHECK_THROWS_AS(GroupAction(FiniteGroup::cyclic(3), b, {id, inv, inv}), InvalidStructure);
}

TEST_CASE("homotopy fixed points match the brute-force cocycle count") {
  for (const auto& a : action_corpus()) {
    auto h = homotopy_fixed_points(a);
    auto [objects, morphisms] = brute_hfp(a);
    CHECK(h.groupoid().object_count() == objects);
    CHECK(h.groupoid().morphism_count() == morphisms);
    CHECK(h.groupoid().validate().ok());
  }
}

TEST_CASE("Z2 inverting BZ3: three fixed points, one class, trivial automorphisms") {
  auto h = homotopy_fixed_points(inversion_on_bz3());
  CHECK(h.groupoid().object_count() == 3);
  CHECK(oracle::class_count(h.groupoid()) == 1);
  CHECK(oracle::automorphism_orders(h.groupoid()) == std::vector<std::size_t>{1});
}

TEST_CASE("trivial group: fixed points are the space itself") {
  auto x = codiscrete(3);
  auto h = homotopy_fixed_points(GroupAction::trivial(FiniteGroup::trivial(), x));
  CHECK(h.groupoid().object_count() == 3);
  CHECK(h.groupoid().morphism_count() == 9);
}

TEST_CASE("holim over BΓ is isomorphic to the explicit fixed points") {
  for (const auto& a : action_corpus()) {
    auto r = hfp_via_holim(a);
    CHECK(r.is_isomorphism);
    CHECK(r.holim.groupoid().validate().ok());
  }
}

TEST_CASE("free Z2 action on EZ2: holim is equivalent to a point") {
  auto r = hfp_via_holim(GroupAction::translation(FiniteGroup::cyclic(2)));
  const auto& g = r.holim.groupoid();
  CHECK(oracle::class_count(g) == 1);
  CHECK(oracle::automorphism_orders(g) == std::vector<std::size_t>{1});
}

TEST_CASE("pullback models over a point and over BZ2") {
  auto point = terminal_groupoid();
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto to_bz2 = CatFunctor::constant(point.category(), bz2.category(), 0);

  SUBCASE("Z = point gives X × Y") {
    auto x = codiscrete(2);
    auto y = delooping(FiniteGroup::cyclic(3));
    auto f = CatFunctor::constant(x.category(), point.category(), 0);
    auto g = CatFunctor::constant(y.category(), point.category(), 0);
    auto r = compare_pullback_models(f, g);
    CHECK(r.reduced.groupoid().object_count() == 2);
    CHECK(r.reduced.groupoid().morphism_count() == 4 * 3);
    CHECK(r.full.groupoid().object_count() == 2);
    CHECK(r.certificate.equivalence);
  }
  SUBCASE("point ×h_{BZ2} point is discrete on Z2") {
    auto r = compare_pullback_models(to_bz2, to_bz2);
    CHECK(r.reduced.groupoid().object_count() == 2);
    CHECK(r.reduced.groupoid().morphism_count() == 2);
    CHECK(r.full.groupoid().object_count() == 4);
    CHECK(r.certificate.equivalence);
    CHECK(oracle::is_equivalence(r.comparison));
  }
  SUBCASE("identity on BG against itself") {
    auto bs3 = delooping(FiniteGroup::symmetric(3));
    auto id = CatFunctor::identity(bs3.category());
    auto r = compare_pullback_models(id, id);
    CHECK(r.certificate.equivalence);
    CHECK(oracle::class_count(r.full.groupoid()) == oracle::class_count(r.reduced.groupoid()));
    CHECK(oracle::class_count(r.reduced.groupoid()) == 1);
  }
}

TEST_CASE("pullback via holim matches the 5-tuple model") {
  auto point = terminal_groupoid();
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto x = codiscrete(2);
  std::vector<std::pair<CatFunctor, CatFunctor>> cases{
      {CatFunctor::constant(point.category(), bz2.category(), 0),
       CatFunctor::constant(point.category(), bz2.category(), 0)},
      {CatFunctor::constant(x.category(), point.category(), 0),
       CatFunctor::constant(bz2.category(), point.category(), 0)},
      {CatFunctor::identity(bz2.category()), CatFunctor::identity(bz2.category())},
      {CatFunctor::constant(x.category(), bz2.category(), 0),
       CatFunctor::identity(bz2.category())},
  };
  for (const auto& [f, g] : cases) {
    auto r = homotopy_pullback_via_holim(f, g);
    CHECK(r.certificate.equivalence);
    CHECK(r.is_isomorphism);
    CHECK(oracle::is_equivalence(r.comparison));
  }
}

TEST_CASE("pullback class count is invariant under naturally isomorphic legs") {
  // Two functors codiscrete(2) -> codiscrete(2) are naturally isomorphic.
  auto c = codiscrete(2);
  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto f0 = CatFunctor::constant(c.category(), c.category(), 0);
  auto f1 = CatFunctor::identity(c.category());
  auto g = CatFunctor::constant(bz2.category(), c.category(), 1);
  CHECK(oracle::class_count(homotopy_pullback(f0, g).groupoid()) ==
        oracle::class_count(homotopy_pullback(f1, g).groupoid()));
}

TEST_CASE("loop groupoid of BS3: conjugacy classes and centralizers") {
  auto l = loop_groupoid(delooping(FiniteGroup::symmetric(3)));
  const auto& g = l.groupoid();
  CHECK(g.object_count() == 6);
  auto s = skeleton(g);
  REQUIRE(s.classes.size() == 3);
  std::vector<std::size_t> orders;
  for (const auto& a : s.automorphism_groups) orders.push_back(a.group.order());
  CHECK(orders == std::vector<std::size_t>{6, 2, 3});
  CHECK(s.certificate.equivalence);
}

TEST_CASE("loop groupoid of a discrete groupoid and of BZ2") {
  auto d = discrete(3);
  auto ld = loop_groupoid(d);
  CHECK(ld.groupoid().object_count() == 3);
  CHECK(ld.groupoid().morphism_count() == 3);
  auto lb = loop_groupoid(delooping(FiniteGroup::cyclic(2)));
  CHECK(oracle::class_count(lb.groupoid()) == 2);
  CHECK(oracle::automorphism_orders(lb.groupoid()) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("loop groupoid agrees with fixed points of a trivial action of exponent order") {
  // S3 has exponent 6, so φ ↦ φ(1) identifies hfp(trivial Z6) with L(BS3).
  auto bs3 = delooping(FiniteGroup::symmetric(3));
  auto h = homotopy_fixed_points(GroupAction::trivial(FiniteGroup::cyclic(6), bs3));
  auto l = loop_groupoid(bs3);
  CHECK(h.groupoid().object_count() == l.groupoid().object_count());
  CHECK(h.groupoid().morphism_count() == l.groupoid().morphism_count());
  for (ObjectIndex p = 0; p < h.groupoid().object_count(); ++p) {
    const std::uint32_t key[2] = {h.base(p), h.phi(p, 1)};
    CHECK(l.keyed.find_object(key) != npos);
  }
}

TEST_CASE("loop groupoid is equivalent to the self-pullback over the diagonal") {
  for (const auto& x : {discrete(2), delooping(FiniteGroup::cyclic(2)),
                        delooping(FiniteGroup::symmetric(3)), codiscrete(2)}) {
    auto r = loop_vs_pullback(x);
    CHECK(r.certificate.equivalence);
    CHECK(oracle::is_equivalence(r.comparison));
  }
}
