#include "doctest.h"

#include <set>

#include "grpdlim/cohomology.hpp"
#include "oracles.hpp"

using namespace grpdlim;

namespace {

ActionOnGroup galois_demo() {
  return ActionOnGroup::inversion(FiniteGroup::cyclic(2), {false, true}, FiniteGroup::cyclic(3));
}

ActionOnGroup conjugation_on_s3() {
  auto s3 = FiniteGroup::symmetric(3);
  const ElementIndex t = 1;  // the transposition swapping 1 and 2
  std::vector<std::vector<ElementIndex>> act(2, std::vector<ElementIndex>(6));
  for (ElementIndex x = 0; x < 6; ++x) {
    act[0][x] = x;
    act[1][x] = s3.multiply(s3.multiply(t, x), s3.inverse(t));
  }
  return ActionOnGroup(FiniteGroup::cyclic(2), s3, act);
}

ActionOnGroup rotation_on_klein() {
  return ActionOnGroup(FiniteGroup::cyclic(3), FiniteGroup::klein(),
                       {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
}

std::vector<ActionOnGroup> corpus() {
  return {ActionOnGroup::trivial(FiniteGroup::trivial(), FiniteGroup::cyclic(3)),
          ActionOnGroup::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
          galois_demo(),
          ActionOnGroup::trivial(FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)),
          conjugation_on_s3(),
          rotation_on_klein(),
          ActionOnGroup::inversion(FiniteGroup::cyclic(4), {false, true, false, true},
                                   FiniteGroup::cyclic(5)),
          ActionOnGroup::trivial(FiniteGroup::klein(), FiniteGroup::cyclic(2))};
}

// Every function Γ -> G checked against the classical identity.
std::vector<Cocycle> brute_cocycles(const ActionOnGroup& a) {
  const auto& gamma = a.gamma();
  const auto& g = a.group();
  std::vector<Cocycle> out;
  std::vector<std::size_t> digits(gamma.order(), 0), sizes(gamma.order(), g.order());
  do {
    Cocycle s(digits.begin(), digits.end());
    bool ok = true;
    for (ElementIndex x = 0; x < gamma.order() && ok; ++x)
      for (ElementIndex y = 0; y < gamma.order() && ok; ++y)
        ok = s[gamma.multiply(x, y)] == g.multiply(s[x], a.apply(x, s[y]));
    if (ok) out.push_back(s);
  } while (oracle::advance(digits, sizes));
  return out;
}

}  // namespace

TEST_CASE("actions on groups are validated") {
  CHECK_THROWS_AS(ActionOnGroup(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                {{0, 1, 2}, {0, 1, 1}}),
                  InvalidStructure);
  // Not a homomorphism Γ -> Aut(G): the generator of Z3 cannot act by inversion.
  CHECK_THROWS_AS(ActionOnGroup(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3),
                                {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}}),
                  InvalidStructure);
}

TEST_CASE("cocycles match brute force and satisfy the identity") {
  for (const auto& a : corpus()) {
    auto z = cocycles(a);
    CHECK(z == brute_cocycles(a));
    for (const auto& s : z) {
      CHECK(is_cocycle(a, s));
      CHECK(s[a.gamma().identity()] == a.group().identity());
    }
  }
}

TEST_CASE("cocycle counts of the basic instances") {
  CHECK(cocycles(ActionOnGroup::trivial(FiniteGroup::trivial(), FiniteGroup::cyclic(3))).size() ==
        1);
  CHECK(cocycles(ActionOnGroup::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))).size() ==
        2);
  CHECK(cocycles(galois_demo()).size() == 3);
}

TEST_CASE("cocycle groupoids") {
  auto t = cocycle_groupoid(ActionOnGroup::trivial(FiniteGroup::trivial(), FiniteGroup::cyclic(3)));
  CHECK(t.groupoid().object_count() == 1);
  CHECK(t.groupoid().morphism_count() == 3);
  auto z2 = cocycle_groupoid(ActionOnGroup::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  CHECK(z2.groupoid().object_count() == 2);
  auto g = cocycle_groupoid(galois_demo());
  CHECK(g.groupoid().object_count() == 3);
  CHECK(g.groupoid().morphism_count() == 9);
  CHECK(oracle::class_count(g.groupoid()) == 1);
  CHECK(oracle::automorphism_orders(g.groupoid()) == std::vector<std::size_t>{1});
  for (const auto& a : corpus()) CHECK(cocycle_groupoid(a).groupoid().validate().ok());
}

TEST_CASE("H1 and stabilizers") {
  auto trivial = h1(ActionOnGroup::trivial(FiniteGroup::trivial(), FiniteGroup::cyclic(3)));
  REQUIRE(trivial.classes.size() == 1);
  CHECK(trivial.classes[0].stabilizer.group.order() == 3);

  auto z2 = h1(ActionOnGroup::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  REQUIRE(z2.classes.size() == 2);
  for (const auto& c : z2.classes) CHECK(c.stabilizer.group.order() == 2);

  auto demo = h1(galois_demo());
  REQUIRE(demo.classes.size() == 1);
  CHECK(demo.classes[0].stabilizer.group.order() == 1);
  CHECK(demo.classes[0].representative == Cocycle{0, 0});

  // Trivial action on S3: Hom(Z2, S3) up to conjugacy.
  auto s3 = h1(ActionOnGroup::trivial(FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)));
  REQUIRE(s3.classes.size() == 2);
  CHECK(s3.classes[0].stabilizer.group.order() == 6);
  CHECK(s3.classes[1].stabilizer.group.order() == 2);
  CHECK(s3.classes[1].size == 3);
}

TEST_CASE("orbit-stabilizer: |Z1| is the sum of [G : K]") {
  for (const auto& a : corpus()) {
    auto r = h1(a);
    std::size_t total = 0;
    for (const auto& c : r.classes) {
      CHECK(c.size * c.stabilizer.group.order() == a.group().order());
      total += a.group().order() / c.stabilizer.group.order();
      // Representatives are the least cocycles of their classes.
      for (ObjectIndex x : r.skeleton.classes[&c - r.classes.data()]) {
        auto s = r.groupoid.cocycle(x);
        CHECK_FALSE(std::lexicographical_compare(s.begin(), s.end(), c.representative.begin(),
                                                 c.representative.end()));
      }
    }
    CHECK(total == cocycles(a).size());
  }
}

TEST_CASE("stabilizer rejects non-cocycles and matches automorphisms") {
  auto a = galois_demo();
  CHECK_THROWS_AS(stabilizer(a, Cocycle{1, 0}), InvalidStructure);
  for (const auto& act : corpus()) {
    auto r = h1(act);
    for (std::size_t c = 0; c < r.classes.size(); ++c)
      CHECK(r.classes[c].stabilizer.group.order() ==
            r.skeleton.automorphism_groups[c].group.order());
  }
}

TEST_CASE("hfp of the induced action on BG is isomorphic to the cocycle groupoid") {
  for (const auto& a : corpus()) {
    auto r = hfp_to_cocycles(a);
    CHECK(r.is_isomorphism);
    // σ_φ is a cocycle for every fixed point (tested rather than assumed).
    for (ObjectIndex p = 0; p < r.hfp.groupoid().object_count(); ++p) {
      Cocycle s(a.gamma().order());
      for (ElementIndex g = 0; g < s.size(); ++g) s[g] = a.group().inverse(r.hfp.phi(p, g));
      CHECK(is_cocycle(a, s));
    }
  }
}

TEST_CASE("decomposition into deloopings of stabilizers") {
  auto z2 = decompose_hfp(ActionOnGroup::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  CHECK(z2.certificate.equivalence);
  CHECK(z2.cohomology.skeleton.model.groupoid.object_count() == 2);
  CHECK(z2.cohomology.skeleton.model.groupoid.morphism_count() == 4);

  auto demo = decompose_hfp(galois_demo());
  CHECK(demo.certificate.equivalence);
  CHECK(demo.cohomology.skeleton.model.groupoid.morphism_count() == 1);

  auto t = decompose_hfp(ActionOnGroup::trivial(FiniteGroup::trivial(), FiniteGroup::symmetric(3)));
  CHECK(t.certificate.equivalence);
  CHECK(t.cohomology.skeleton.model.groupoid.morphism_count() == 6);

  for (const auto& a : corpus()) CHECK(decompose_hfp(a).certificate.equivalence);
}
