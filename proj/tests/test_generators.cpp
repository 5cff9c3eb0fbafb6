#include "doctest.h"

#include "grpdlim/equiv.hpp"
#include "grpdlim/generators.hpp"
#include "oracles.hpp"

using namespace grpdlim;

TEST_CASE("random diagrams are valid and within bounds") {
  gen::Rng rng(7);
  for (int round = 0; round < 20; ++round)
    for (auto s : gen::all_shapes()) {
      auto d = gen::random_diagram(rng, s);
      CHECK(d.index() == gen::shape_category(s));
      for (const auto& v : d.vertices()) {
        CHECK(v.object_count() >= 1);
        CHECK(v.object_count() <= 6);
        CHECK(v.morphism_count() <= 24);
      }
      // Re-validate from scratch.
      CHECK(DiagramFunctor::check(d.index(), d.vertices(), d.edges()).ok());
    }
}

TEST_CASE("filtered shapes are filtered, the others are not") {
  for (auto s : gen::all_shapes()) {
    bool listed = false;
    for (auto f : gen::filtered_shapes()) listed = listed || f == s;
    CHECK_MESSAGE(is_filtered(gen::shape_category(s)).filtered == listed, gen::to_string(s));
  }
}

TEST_CASE("subgroups and coset spaces") {
  CHECK(gen::subgroups(FiniteGroup::symmetric(3)).size() == 6);
  CHECK(gen::subgroups(FiniteGroup::klein()).size() == 5);
  CHECK(gen::subgroups(FiniteGroup::cyclic(4)).size() == 3);
  auto s3 = FiniteGroup::symmetric(3);
  for (const auto& h : gen::subgroups(s3)) {
    auto x = gen::coset_space(s3, h);
    CHECK(x.check().ok());
    CHECK(x.points * h.size() == 6);
  }
}

TEST_CASE("componentwise maps have the claimed property") {
  gen::Rng rng(11);
  for (int round = 0; round < 10; ++round)
    for (auto s : gen::all_shapes()) {
      auto c = gen::random_componentwise_map(rng, s);
      for (const auto& f : c.map.components()) {
        if (c.equivalence) CHECK_MESSAGE(oracle::is_equivalence(f), c.label);
        if (c.fibration) CHECK_MESSAGE(oracle::is_fibration(f), c.label);
      }
    }
}

TEST_CASE("random product diagrams") {
  gen::Rng rng(3);
  const std::vector<std::pair<gen::Shape, gen::Shape>> pairs{
      {gen::Shape::Chain2, gen::Shape::Cospan},
      {gen::Shape::BZ2, gen::Shape::BZ2},
      {gen::Shape::Idempotent, gen::Shape::Idempotent},
      {gen::Shape::Discrete2, gen::Shape::BZ3}};
  for (const auto& [a, b] : pairs) {
    auto pc = product_category(gen::shape_category(a), gen::shape_category(b));
    for (int round = 0; round < 5; ++round) {
      auto d = gen::random_product_diagram(rng, a, b, pc);
      CHECK(d.index() == pc.category);
    }
  }
}

TEST_CASE("random presheaf maps are stalkwise as claimed") {
  gen::Rng rng(5);
  for (const auto& site : {gen::two_open_site(), gen::three_open_site(), separation_witness().site})
    for (auto s : {gen::Shape::Chain2, gen::Shape::BZ2, gen::Shape::Cospan}) {
      auto c = gen::random_presheaf_map(rng, site, s);
      for (const auto& f : c.map.components) {
        if (c.local_equivalence) CHECK_MESSAGE(is_local_weak_equivalence(f).holds, c.label);
        if (c.local_fibration) CHECK_MESSAGE(is_local_fibration(f).holds, c.label);
      }
    }
}
