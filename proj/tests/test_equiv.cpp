#include "doctest.h"

#include "grpdlim/equiv.hpp"
#include "oracles.hpp"

using namespace grpdlim;

TEST_CASE("collapse BZ2 -> point is not an equivalence") {
  auto b = delooping(FiniteGroup::cyclic(2));
  auto point = terminal_groupoid();
  auto c = is_equivalence(CatFunctor::constant(b.category(), point.category(), 0));
  CHECK_FALSE(c.equivalence);
  CHECK(c.violation == EquivalenceViolation::NotFaithful);
  CHECK(c.violation_indices == std::vector<std::uint64_t>{0, 0, 0, 1});
  CHECK(c.describe().find("not faithful") != std::string::npos);
}

TEST_CASE("inclusion of a point into codiscrete(3) is an equivalence, not a fibration") {
  auto point = terminal_groupoid();
  auto c = codiscrete(3);
  auto f = CatFunctor::constant(point.category(), c.category(), 1);
  auto e = is_equivalence(f);
  CHECK(e.equivalence);
  REQUIRE(e.witnesses.size() == 3);
  CHECK(e.witnesses[1].iso == c.identity(1));
  CHECK(c.src(e.witnesses[2].iso) == 1);
  auto fib = is_fibration(f);
  CHECK_FALSE(fib.fibration);
  CHECK(fib.counterexample->first == 0);
}

TEST_CASE("projection codiscrete(3) -> point is an acyclic fibration") {
  auto c = codiscrete(3);
  auto point = terminal_groupoid();
  auto r = is_acyclic_fibration(CatFunctor::constant(c.category(), point.category(), 0));
  CHECK(r.holds());
}

TEST_CASE("not essentially surjective and not full") {
  auto d2 = discrete(2);
  auto c2 = codiscrete(2);
  auto into = CatFunctor::constant(terminal_groupoid().category(), d2.category(), 0);
  auto e = is_equivalence(into);
  CHECK(e.violation == EquivalenceViolation::NotEssentiallySurjective);
  CHECK(e.violation_indices == std::vector<std::uint64_t>{1});

  auto incl = CatFunctor(d2.category(), c2.category(), {0, 1}, {0, 3});
  auto n = is_equivalence(incl);
  CHECK(n.violation == EquivalenceViolation::NotFull);
  CHECK(n.violation_indices == std::vector<std::uint64_t>{0, 1, 1});
}

TEST_CASE("is_equivalence agrees with the definition on all functors between small groupoids") {
  std::vector<Groupoid> gs{terminal_groupoid(), discrete(2), codiscrete(2),
                           delooping(FiniteGroup::cyclic(2)),
                           disjoint_union({delooping(FiniteGroup::cyclic(2)), codiscrete(2)})
                               .groupoid,
                           translation_groupoid(FiniteGroup::cyclic(2))};
  for (const auto& a : gs)
    for (const auto& b : gs)
      for (const auto& key : oracle::functors(a.category(), b.category())) {
        std::vector<ObjectIndex> obj(key.begin(), key.begin() + a.object_count());
        std::vector<MorphismIndex> mor(key.begin() + a.object_count(), key.end());
        CatFunctor f(a.category(), b.category(), obj, mor);
        CHECK(is_equivalence(f).equivalence == oracle::is_equivalence(f));
        CHECK(is_fibration(f).fibration == oracle::is_fibration(f));
      }
}

TEST_CASE("skeleton of a disjoint union") {
  auto u = disjoint_union({translation_groupoid(FiniteGroup::cyclic(3)),
                           delooping(FiniteGroup::symmetric(3)), codiscrete(2)});
  auto s = skeleton(u.groupoid);
  REQUIRE(s.classes.size() == 3);
  CHECK(s.representatives == std::vector<ObjectIndex>{0, 3, 4});
  CHECK(s.automorphism_groups[0].group.order() == 1);
  CHECK(s.automorphism_groups[1].group.order() == 6);
  CHECK_FALSE(s.automorphism_groups[1].group.is_abelian());
  CHECK(s.certificate.equivalence);
  CHECK(s.model.groupoid.object_count() == 3);
}

TEST_CASE("are_equivalent compares skeleta") {
  auto a = disjoint_union({codiscrete(3), delooping(FiniteGroup::cyclic(4))}).groupoid;
  auto b = disjoint_union({delooping(FiniteGroup::cyclic(4)), terminal_groupoid()}).groupoid;
  auto c = disjoint_union({delooping(FiniteGroup::klein()), terminal_groupoid()}).groupoid;
  CHECK(are_equivalent(a, b).equivalent);
  CHECK(are_equivalent(a, b).matching == std::vector<std::size_t>{1, 0});
  CHECK_FALSE(are_equivalent(b, c).equivalent);
  CHECK_FALSE(are_equivalent(a, discrete(1)).equivalent);
}

TEST_CASE("automorphism group multiplies as classical composition") {
  auto b = delooping(FiniteGroup::symmetric(3));
  auto a = automorphism_group(b, 0);
  auto s3 = FiniteGroup::symmetric(3);
  for (ElementIndex x = 0; x < 6; ++x)
    for (ElementIndex y = 0; y < 6; ++y) CHECK(a.group.multiply(x, y) == s3.multiply(x, y));
}
