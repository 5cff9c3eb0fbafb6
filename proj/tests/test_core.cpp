#include "doctest.h"

#include "grpdlim/constructions.hpp"
#include "grpdlim/functor_cat.hpp"

using namespace grpdlim;

TEST_CASE("smoke: Map(BZ2, BZ2)") {
  auto b = delooping(FiniteGroup::cyclic(2));
  auto m = map_category(b.category(), b);
  CHECK(m.functor_count() == 2);
  CHECK(m.groupoid().morphism_count() == 4);
  CHECK(m.groupoid().validate().ok());
}
