#include <doctest.h>

#include "springer/counting.hpp"
#include "springer/partitions.hpp"

using namespace springer;
using counting::Family;

TEST_CASE("census of type A outer components") {
  CHECK(counting::census_a(3).formula_count == 3);
  CHECK(counting::census_a(0).formula_count == 1);
  CHECK(counting::census_a(5).formula_count == 7);
  auto r = counting::census_a(8);
  CHECK(r.enumeration_count == r.formula_count);
  CHECK(r.agree);
  CHECK_FALSE(counting::census_a(40, 10).enumeration_count.has_value());
  CHECK(counting::census_a(40).formula_count == count_p(40));
}

TEST_CASE("census of the orthogonal outer component") {
  CHECK(counting::census_d(1).formula_count == 1);
  CHECK(counting::census_d(2).formula_count == 2);
  CHECK(counting::census_d(9).formula_count == count_p2(8) + count_p2(0));
  auto r = counting::census_d(6);
  CHECK(r.enumeration_count == r.formula_count);
  CHECK(r.agree);
}

TEST_CASE("sporadic constants") {
  auto s = counting::sporadic_checks();
  REQUIRE(s.size() == 2);
  CHECK(s[0].family == Family::d4_triality);
  CHECK(s[0].formula_count == 7);
  CHECK(s[0].enumeration_count == 1 + 6);
  CHECK(s[1].family == Family::e6_outer);
  CHECK(s[1].formula_count == 28);
  CHECK(s[1].enumeration_count == 1 + 2 + 25);
  CHECK(s[0].agree);
  CHECK(s[1].agree);
}

TEST_CASE("cuspidal predicate") {
  CHECK(counting::cuspidal_predicate(Family::a, 6) == 1);
  CHECK(counting::cuspidal_predicate(Family::a, 4) == 0);
  CHECK(counting::cuspidal_predicate(Family::a, 3) == 1);
  CHECK(counting::cuspidal_predicate(Family::d, 9) == 1);
  CHECK(counting::cuspidal_predicate(Family::d, 25) == 1);
  CHECK(counting::cuspidal_predicate(Family::d, 16) == 0);
  CHECK(counting::cuspidal_predicate(Family::e6_outer, 6) == 1);
}
