#include "doctest.h"

#include "grpdlim/functor_cat.hpp"
#include "oracles.hpp"

using namespace grpdlim;

namespace {

std::vector<FiniteCategory> small_sources() {
  return {terminal_category(),
          discrete(2).category(),
          codiscrete(2).category(),
          chain_category(3),
          pullback_shape(),
          idempotent_category(),
          delooping(FiniteGroup::cyclic(2)).category(),
          delooping(FiniteGroup::cyclic(3)).category(),
          poset_category(3, {{0, 1}, {0, 2}})};
}

std::vector<Groupoid> small_targets() {
  return {terminal_groupoid(),
          discrete(2),
          codiscrete(2),
          delooping(FiniteGroup::cyclic(2)),
          delooping(FiniteGroup::cyclic(3)),
          disjoint_union({delooping(FiniteGroup::cyclic(2)), codiscrete(2)}).groupoid,
          translation_groupoid(FiniteGroup::cyclic(2))};
}

}  // namespace

TEST_CASE("map_category agrees with brute-force enumeration") {
  for (const auto& k : small_sources())
    for (const auto& g : small_targets()) {
      auto expected = oracle::functors(k, g);
      auto keys = enumerate_functor_keys(k, g);
      CHECK(keys == expected);
      auto m = map_category(k, g);
      CHECK(m.functor_count() == expected.size());
      CHECK(m.groupoid().morphism_count() == oracle::transformation_count(k, g, expected));
      CHECK(m.groupoid().validate().ok());
    }
}

TEST_CASE("Map(K, G) entries are functors and transformations") {
  auto k = pullback_shape();
  auto g = codiscrete(2);
  auto m = map_category(k, g);
  for (ObjectIndex f = 0; f < m.functor_count(); ++f) {
    auto functor = m.functor(f);
    CHECK(m.find_functor(functor) == f);
  }
  for (MorphismIndex t = 0; t < m.groupoid().morphism_count(); ++t) {
    auto eta = m.transformation(t);
    CHECK(NatTransformation::check(eta.from(), eta.to(), eta.components()).ok());
  }
}

TEST_CASE("empty source and empty target") {
  auto empty = empty_groupoid();
  auto m = map_category(empty.category(), delooping(FiniteGroup::cyclic(2)));
  CHECK(m.functor_count() == 1);
  auto n = map_category(terminal_category(), empty);
  CHECK(n.functor_count() == 0);
}

TEST_CASE("budget exceeded reports the stage") {
  auto k = codiscrete(3).category();
  auto g = delooping(FiniteGroup::symmetric(3));
  try {
    map_category(k, g, Budget{50});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.limit() == 50);
    CHECK(!e.stage().empty());
  }
}

TEST_CASE("precompose and postcompose are functors and respect composition") {
  auto g = delooping(FiniteGroup::cyclic(2));
  auto c3 = chain_category(3);
  auto c2 = chain_category(2);
  // 0 -> 1 of chain(2) goes to 0 -> 2 of chain(3).
  auto inc = CatFunctor(c2, c3, {0, 2}, {c3.identity(0), c3.hom(0, 2)[0], c3.identity(2)});
  auto from = map_category(c3, g);
  auto to = map_category(c2, g);
  auto pre = precompose(inc, from, to);
  CHECK(pre.source().same_tables(from.groupoid().category()));

  auto h = delooping(FiniteGroup::cyclic(4));
  auto doubling = CatFunctor(g.category(), h.category(), {0}, {0, 2});
  auto to_h = map_category(c3, h);
  auto post = postcompose(doubling, from, to_h);
  auto to_h2 = map_category(c2, h);
  // Both routes around the square agree.
  auto a = then(pre, postcompose(doubling, to, to_h2));
  auto b = then(post, precompose(inc, to_h, to_h2));
  CHECK(a == b);
}

TEST_CASE("exponential law: both directions are inverse isomorphisms") {
  auto g = delooping(FiniteGroup::cyclic(2));
  for (const auto& [k, h] : std::vector<std::pair<FiniteCategory, FiniteCategory>>{
           {chain_category(2), chain_category(2)},
           {delooping(FiniteGroup::cyclic(2)).category(), chain_category(2)},
           {idempotent_category(), discrete(2).category()}}) {
    auto e = exponential_iso(k, h, g);
    CHECK(is_isomorphism(e.forward));
    CHECK(then(e.forward, e.backward).is_identity());
    CHECK(then(e.backward, e.forward).is_identity());
  }
}
