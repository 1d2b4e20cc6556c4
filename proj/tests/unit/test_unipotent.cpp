#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "springer/unipotent.hpp"

using namespace springer;

namespace {

MarkedPartition mp(const char* text) { return MarkedPartition::parse(text); }

std::set<std::string> texts(const std::vector<MarkedPartition>& v) {
  std::set<std::string> out;
  for (const auto& x : v) out.insert(x.to_string());
  return out;
}

}  // namespace

TEST_CASE("marked partition text") {
  auto x = mp("(11)(2)(44)");
  CHECK(x.parts() == std::vector<int>{1, 1, 2, 4, 4});
  CHECK(x.block_sizes() == std::vector<int>{2, 1, 2});
  CHECK(x.is_singleton(2));
  CHECK_FALSE(x.is_singleton(0));
  CHECK(x.total() == 12);
  CHECK(x.to_string() == "(11)(2)(44)");
  CHECK(mp("(0)(11)").parts() == std::vector<int>{0, 1, 1});
  CHECK(mp("(10,10)(12)").parts() == std::vector<int>{10, 10, 12});
  CHECK(mp("(10,10)(12)").to_string() == "(10,10)(12)");
  CHECK(mp("(11,)").parts() == std::vector<int>{11});
  CHECK(mp("(11,)").to_string() == "(11,)");
  CHECK_ERRC(mp("(12"), Errc::parse_error);
  CHECK_ERRC(mp("1(2)"), Errc::parse_error);
  CHECK_ERRC(mp("(1,2)"), Errc::pair_mismatch);
  CHECK_ERRC(mp("(2)(1)"), Errc::bad_block_shape);
  CHECK_ERRC(MarkedPartition({1, 1, 1}, {3}), Errc::bad_block_shape);
}

TEST_CASE("marked partition conditions") {
  CHECK_FALSE(check_marked(MarkedKind::v, 2, mp("(2)")).has_value());
  CHECK_FALSE(check_marked(MarkedKind::v, 2, mp("(0)(11)")).has_value());
  CHECK_ERRC(validate_marked(MarkedKind::v_prime, 2, mp("(0)(11)")), Errc::zero_count);
  CHECK_ERRC(validate_marked(MarkedKind::v, 4, mp("(2)(2)")), Errc::part_count_parity);
  CHECK_ERRC(validate_marked(MarkedKind::v, 4, mp("(1)(3)(0)")), Errc::bad_block_shape);
  CHECK_ERRC(validate_marked(MarkedKind::v, 4, mp("(0)(1)(3)")), Errc::parity_violation);
  CHECK_ERRC(validate_marked(MarkedKind::v_double_prime, 2, mp("(2)")), Errc::parity_violation);
  CHECK_ERRC(validate_marked(MarkedKind::v, 6, mp("(2)(22)")), Errc::singleton_pair_clash);
  CHECK_ERRC(validate_marked(MarkedKind::v, 4, mp("(2)")), Errc::invalid_argument);
}

TEST_CASE("marked partition enumeration") {
  CHECK(texts(enumerate_marked(MarkedKind::v, 2)) == std::set<std::string>{"(2)", "(0)(11)"});
  CHECK(texts(enumerate_marked(MarkedKind::v_double_prime, 1)) == std::set<std::string>{"(1)"});
  CHECK(texts(enumerate_marked(MarkedKind::v_prime, 4)) == std::set<std::string>{"(4)", "(11)(2)"});
}

TEST_CASE("c-sequences") {
  CHECK(c_sequence(MarkedKind::v, mp("(0)(11)")) == std::vector<int>{0, 3, 4});
  CHECK(c_sequence(MarkedKind::v, mp("(11)(2)")) == std::vector<int>{1, 2, 5});
  CHECK(c_sequence(MarkedKind::v_prime, mp("(11)(2)")) == std::vector<int>{0, 1, 4});
  CHECK(c_sequence(MarkedKind::v_double_prime, mp("(1)")) == std::vector<int>{0});
}

TEST_CASE("A-spaces") {
  CHECK(a_space(MarkedKind::v, mp("(2)")).space.dimension() == 0);
  CHECK(a_space(MarkedKind::v, mp("(0)(11)")).space.dimension() == 0);
  auto prime = a_space(MarkedKind::v_prime, mp("(11)(2)"));
  CHECK(prime.space.basis_size() == 1);
  CHECK(prime.space.dimension() == 0);
  // two odd singletons far apart survive independently
  auto two = a_space(MarkedKind::v_double_prime, mp("(1)(5)"));
  CHECK(two.space.dimension() == 1);
}
