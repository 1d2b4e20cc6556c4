#include <doctest.h>

#include "helpers.hpp"
#include "springer/char2.hpp"

using namespace springer;

namespace {

MarkedPartition mp(const char* text) { return MarkedPartition::parse(text); }
const gf2::BitVector kEmpty;

}  // namespace

TEST_CASE("case configuration") {
  auto sp = configure(GroupCase::sp, 3);
  CHECK(sp.kind == MarkedKind::v);
  CHECK(sp.total == 6);
  CHECK(sp.params == SymbolParams{4, 2, DefectSet::odd});
  CHECK(sp.symbol_rank == 3);
  auto o = configure(GroupCase::o_outer, 3);
  CHECK(o.params == SymbolParams{4, 0, DefectSet::positive_odd});
  CHECK(o.symbol_rank == 2);
  CHECK(configure(GroupCase::a_odd_outer, 2).total == 5);
  CHECK(configure(GroupCase::a_even_outer, 2).params.defects == DefectSet::even);
  CHECK(parse_group_case("a-even") == GroupCase::a_even_outer);
  CHECK_ERRC(parse_group_case("so"), Errc::parse_error);
}

TEST_CASE("unipotent data to symbols") {
  CHECK(to_symbol(configure(GroupCase::sp, 1), mp("(2)"), kEmpty) == Symbol::parse("(1;)"));
  CHECK(to_symbol(configure(GroupCase::sp, 1), mp("(0)(11)"), kEmpty) == Symbol::parse("(0,4;3)"));
  CHECK(to_symbol(configure(GroupCase::o_outer, 2), mp("(11)(2)"), gf2::BitVector::parse("0")) ==
        Symbol::parse("(0,4;1)"));
  CHECK_ERRC(to_symbol(configure(GroupCase::sp, 1), mp("(2)"), gf2::BitVector::parse("1")),
             Errc::invalid_character);
  CHECK_ERRC(to_symbol(configure(GroupCase::sp, 2), mp("(2)"), kEmpty), Errc::invalid_argument);
}

TEST_CASE("springer map and inverse") {
  auto sp = configure(GroupCase::sp, 1);
  auto a = springer_map(sp, mp("(2)"), kEmpty);
  CHECK(a.d == 1);
  CHECK(a.bp.to_string() == "1|");
  auto b = springer_map(sp, mp("(0)(11)"), kEmpty);
  CHECK(b.d == 1);
  CHECK(b.bp.to_string() == "|1");
  auto o = springer_map(configure(GroupCase::o_outer, 1), mp("(2)"), kEmpty);
  CHECK(o.d == 1);
  CHECK(o.bp.size() == 0);

  Correspondence corr(GroupCase::sp, 1);
  CHECK(corr.entries().size() == 2);
  CHECK(corr.from_symbol(Symbol::parse("(1;)")).mp == mp("(2)"));
  CHECK(corr.from_symbol(Symbol::parse("(0,4;3)")).mp == mp("(0)(11)"));
  CHECK(corr.inverse(b).mp == mp("(0)(11)"));
  CHECK_ERRC(corr.from_symbol(Symbol::parse("(2;)")), Errc::not_in_image);
  CHECK_ERRC(corr.inverse(SpringerLabel{3, {}}), Errc::not_in_image);

  Correspondence o1(GroupCase::o_outer, 1);
  CHECK(o1.from_symbol(Symbol::parse("(0;)")).mp == mp("(2)"));
}

TEST_CASE("cuspidal data") {
  auto a3 = cuspidal_datum(GroupCase::a_odd_outer, 1);
  REQUIRE(a3.has_value());
  CHECK(a3->mp.parts() == std::vector<int>{3});
  auto a6 = cuspidal_datum(GroupCase::a_even_outer, 3);
  REQUIRE(a6.has_value());
  CHECK(a6->mp.parts() == std::vector<int>{1, 5});
  auto o9 = cuspidal_datum(GroupCase::o_outer, 9);
  REQUIRE(o9.has_value());
  CHECK(o9->mp.parts() == std::vector<int>{2, 6, 10});
  CHECK_FALSE(cuspidal_datum(GroupCase::o_outer, 4).has_value());
  CHECK_FALSE(cuspidal_datum(GroupCase::a_odd_outer, 2).has_value());
  // d^2 - d = 2 at d = -1 and d = 2; only the odd one is admissible
  auto sp2 = cuspidal_datum(GroupCase::sp, 2);
  REQUIRE(sp2.has_value());
  CHECK(springer_map(configure(GroupCase::sp, 2), sp2->mp, sp2->chi) == SpringerLabel{-1, {}});
  CHECK_FALSE(cuspidal_datum(GroupCase::sp, 3).has_value());
}
