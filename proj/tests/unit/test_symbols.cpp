#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "springer/symbols.hpp"

using namespace springer;

namespace {

const SymbolParams s1_even{4, 1, DefectSet::even};
const SymbolParams s1_odd{4, 1, DefectSet::odd};
const SymbolParams s2_odd{4, 2, DefectSet::odd};
const SymbolParams s0_pos{4, 0, DefectSet::positive_odd};

Symbol sym(const char* text) { return Symbol::parse(text); }

std::set<std::string> texts(const std::vector<Symbol>& v) {
  std::set<std::string> out;
  for (const auto& x : v) out.insert(x.to_string());
  return out;
}

}  // namespace

TEST_CASE("symbol text") {
  CHECK(sym("(0,4;2)").row_a() == std::vector<int>{0, 4});
  CHECK(sym("(0,4;2)").row_b() == std::vector<int>{2});
  CHECK(sym("(1;)").to_string() == "(1;)");
  CHECK(sym("(1;∅)") == sym("(1;)"));
  CHECK(sym("(\\em;1)") == sym("(;1)"));
  CHECK(sym("( 0 , 4 ; 2 )").to_string() == "(0,4;2)");
  CHECK(sym("(0,4;2)").defect() == 1);
  CHECK_ERRC(sym("0,4;2"), Errc::parse_error);
  CHECK_ERRC(sym("(0,4)"), Errc::parse_error);
  CHECK(parse_defect_set("odd-positive") == DefectSet::positive_odd);
  CHECK_ERRC(parse_defect_set("positive"), Errc::parse_error);
}

TEST_CASE("rank and defect") {
  CHECK(validate(s1_odd, sym("(0,4;2)")) == RankDefect{1, 1});
  CHECK(validate(s1_even, sym("(1,5;1,5)")) == RankDefect{2, 0});
  CHECK(validate(s1_even, sym("(;)")) == RankDefect{0, 0});
  CHECK(validate(s0_pos, sym("(;)")) == RankDefect{0, 0});
  CHECK(rank_offset(4, 1, 3) == 7);
  CHECK(rank_offset(4, 0, 1) == 0);
  CHECK(rank_offset(4, 2, -1) == 2);

  CHECK_ERRC(validate(s1_odd, sym("(0,3;2)")), Errc::gap_violation);
  CHECK_ERRC(validate(s1_odd, sym("(1;0)")), Errc::bound_violation);
  CHECK_ERRC(validate(s1_odd, sym("(-1;)")), Errc::bound_violation);
}

TEST_CASE("shift and normal form") {
  CHECK(shift(s1_odd, sym("(1;)")) == sym("(0,5;1)"));
  CHECK(normal_form(s1_odd, sym("(0,5;1)")) == sym("(1;)"));
  CHECK_FALSE(unshift(s2_odd, sym("(1;)")).has_value());
  CHECK(unshift(s1_odd, sym("(0,5;1)")) == sym("(1;)"));
}

TEST_CASE("staircase bijection") {
  CHECK(staircase_to_symbol(s2_odd, 1, Bipartition::parse("1|")) == sym("(1;)"));
  CHECK(staircase_to_symbol(s0_pos, 1, Bipartition{}) == sym("(0;)"));
  auto label = staircase_from_symbol(s2_odd, sym("(0,4;3)"));
  CHECK(label.d == 1);
  CHECK(label.bp.to_string() == "|1");
  CHECK_ERRC(staircase_from_symbol(s2_odd, sym("(0,3;3)")), Errc::gap_violation);
}

TEST_CASE("enumeration") {
  CHECK(texts(enumerate(s1_odd, 1, 1)) == std::set<std::string>{"(1;)", "(0,4;2)"});
  CHECK(texts(enumerate(s2_odd, 1, 1)) == std::set<std::string>{"(1;)", "(0,4;3)"});
  CHECK(enumerate(s1_odd, 1, 3).empty());
  CHECK(texts(enumerate_family(s2_odd, 0)) == std::set<std::string>{"(0;)"});
  CHECK(enumerate_family(s1_even, 2).size() == 5);
  CHECK(enumerate_family(s0_pos, 3).size() == 10);
  CHECK_ERRC(enumerate_family(SymbolParams{0, 1, DefectSet::odd}, 1), Errc::invalid_argument);
}

TEST_CASE("similarity") {
  CHECK(similar(s1_odd, sym("(1;)"), sym("(;1)")));
  CHECK_FALSE(similar(s1_even, sym("(0;3)"), sym("(1;2)")));
  CHECK(similar(s1_even, sym("(1,5;1,5)"), sym("(1,5;1,5)")));
  CHECK(similar(s1_odd, sym("(1;)"), sym("(0,5;1)")));
}

TEST_CASE("similarity classes") {
  auto classes = similarity_classes(s1_even, 2);
  std::set<std::set<std::string>> got;
  for (const auto& c : classes) got.insert(texts(c.members()));
  CHECK(got == std::set<std::set<std::string>>{
                   {"(0;3)"}, {"(1;2)", "(2;1)"}, {"(0,4;2,6)"}, {"(1,5;1,5)"}});

  std::multiset<std::size_t> sizes;
  for (const auto& c : similarity_classes(s1_odd, 2)) sizes.insert(c.members().size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 2, 2});

  auto two = similarity_classes(s2_odd, 1);
  REQUIRE(two.size() == 2);
  for (const auto& c : two) {
    CHECK(c.members().size() == 1);
    CHECK(c.dimension() == 0);
  }
}

TEST_CASE("class vectors") {
  auto cls = SimilarityClass::of(s1_even, sym("(1;2)"));
  REQUIRE(cls.intervals().size() == 1);
  CHECK(cls.intervals()[0].entries == std::vector<int>{1, 2});
  CHECK(cls.intervals()[0].proper);
  CHECK(class_vector(cls, sym("(1;2)")).to_string() == "0");
  CHECK(class_vector(cls, sym("(2;1)")).to_string() == "1");
  CHECK(class_member(cls, gf2::BitVector::parse("1")) == sym("(2;1)"));
  CHECK_ERRC(class_vector(cls, sym("(0;3)")), Errc::not_in_class);
  CHECK_ERRC(class_member(cls, gf2::BitVector::parse("10")), Errc::length_mismatch);

  auto single = SimilarityClass::of(s1_odd, sym("(0,4;2)"));
  CHECK(class_vector(single, sym("(0,4;2)")).empty());
  CHECK_FALSE(single.intervals()[0].proper);

  // s = 0: vectors are taken modulo the all-ones vector
  auto pair = SimilarityClass::of(s0_pos, sym("(0,6;1)"));
  CHECK(pair.members().size() == 2);
  CHECK(pair.dimension() == 1);
  CHECK(pair.contains(sym("(1,6;0)")));
}
