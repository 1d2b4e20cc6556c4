#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "springer/gf2.hpp"

using namespace springer;
using gf2::BitVector;
using gf2::PresentedSpace;

namespace {

PresentedSpace space(std::size_t g, std::vector<PresentedSpace::Identification> ids,
                     std::vector<std::size_t> kills, bool quotient) {
  return gf2::build_space(g, ids, kills, quotient);
}

std::vector<std::string> strings(const std::vector<BitVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST_CASE("bit vectors") {
  auto v = BitVector::parse("101");
  CHECK(v.size() == 3);
  CHECK(v[0]);
  CHECK_FALSE(v[1]);
  v += BitVector::parse("111");
  CHECK(v.to_string() == "010");
  CHECK(BitVector::zeros(4).is_zero());
  CHECK(BitVector::parse("").empty());
  CHECK(BitVector::parse("01") < BitVector::parse("10"));
  CHECK_ERRC(BitVector::parse("012"), Errc::parse_error);
  auto w = BitVector::parse("01");
  CHECK_ERRC(w += BitVector::parse("1"), Errc::length_mismatch);
}

TEST_CASE("presented spaces") {
  // generators 0,1 identified, 0 killed: only the class {2} survives
  auto s = space(3, {{0, 1}}, {0}, false);
  CHECK(s.dimension() == 1);
  REQUIRE(s.basis().size() == 1);
  CHECK(s.basis()[0] == std::vector<std::size_t>{2});
  CHECK(s.basis_index(0) == -1);
  CHECK(s.basis_index(2) == 0);

  CHECK(space(0, {}, {}, false).dimension() == 0);
  CHECK(space(0, {}, {}, true).dimension() == 0);

  auto q = space(2, {{0, 1}}, {}, true);
  CHECK(q.basis_size() == 1);
  CHECK(q.dimension() == 0);

  // basis ordered by least generator, whatever the relation order
  auto t = space(4, {{3, 1}}, {}, false);
  REQUIRE(t.basis().size() == 3);
  CHECK(t.basis()[1] == std::vector<std::size_t>{1, 3});
  CHECK(t.basis_index(3) == 1);
}

TEST_CASE("characters") {
  CHECK(strings(gf2::characters(space(0, {}, {}, false))) == std::vector<std::string>{""});
  CHECK(strings(gf2::characters(space(1, {}, {}, false))) == std::vector<std::string>{"0", "1"});
  CHECK(strings(gf2::characters(space(2, {}, {}, false))) ==
        std::vector<std::string>{"00", "01", "10", "11"});
  // quotient: representatives with a leading zero
  CHECK(strings(gf2::characters(space(2, {}, {}, true))) == std::vector<std::string>{"00", "01"});
  CHECK(strings(gf2::characters(space(1, {}, {}, true))) == std::vector<std::string>{"0"});
}

TEST_CASE("coset canonicalization") {
  CHECK(gf2::canonicalize_coset(BitVector::parse("10"), true).to_string() == "01");
  CHECK(gf2::canonicalize_coset(BitVector::parse("00"), true).to_string() == "00");
  CHECK(gf2::canonicalize_coset(BitVector::parse("101"), false).to_string() == "101");
  CHECK(gf2::canonicalize_coset(BitVector::parse("11"), true).to_string() == "00");
}
