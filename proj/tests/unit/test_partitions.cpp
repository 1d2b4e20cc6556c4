#include <doctest.h>

#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "springer/partitions.hpp"

using namespace springer;

TEST_CASE("partition text and normalization") {
  auto p = Partition::parse("1,3");
  CHECK(p.parts() == std::vector<int>{1, 3});
  CHECK(p.size() == 4);
  CHECK(p.to_string() == "1,3");
  CHECK(Partition::from_parts({3, 0, 1}).parts() == std::vector<int>{1, 3});
  CHECK(Partition::parse("").empty());
  CHECK_ERRC(Partition::parse("1,x"), Errc::parse_error);
  CHECK_THROWS_AS(Partition::from_parts({-1}), Error);
}

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(-1).empty());
  auto three = enumerate_partitions(3);
  std::set<std::string> got;
  for (const auto& p : three) got.insert(p.to_string());
  CHECK(got == std::set<std::string>{"1,1,1", "1,2", "3"});
}

TEST_CASE("bipartition enumeration") {
  REQUIRE(enumerate_bipartitions(0).size() == 1);
  CHECK(enumerate_bipartitions(0)[0].to_string() == "|");
  auto one = enumerate_bipartitions(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].to_string() == "1|");
  CHECK(one[1].to_string() == "|1");
  CHECK(enumerate_bipartitions(-2).empty());
  auto bp = Bipartition::parse("1,2|3");
  CHECK(bp.alpha.parts() == std::vector<int>{1, 2});
  CHECK(bp.beta.parts() == std::vector<int>{3});
  CHECK(bp.size() == 6);
}

TEST_CASE("partition counts") {
  CHECK(count_p(3) == 3);
  CHECK(count_p2(1) == 2);
  CHECK(count_p2(0) == 1);
  CHECK(count_p(-1) == 0);
  CHECK(count_p(40) == 37338);
  CHECK(count_p(100) == 190569292);
  for (int n = 0; n <= 12; ++n) {
    CHECK(count_p(n) == static_cast<std::int64_t>(enumerate_partitions(n).size()));
    CHECK(count_p2(n) == static_cast<std::int64_t>(enumerate_bipartitions(n).size()));
  }
  CHECK_THROWS_AS(count_p(100000), std::out_of_range);
}
