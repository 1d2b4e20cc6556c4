#include "springer_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "springer/char2.hpp"
#include "springer/checks.hpp"
#include "springer/counting.hpp"
#include "springer/error.hpp"
#include "springer/spin.hpp"
#include "springer/symbols.hpp"
#include "springer/unipotent.hpp"

namespace springer::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json };

struct Options {
  // symbols enumerate
  int rho = 4;
  int s = 0;
  int n = 0;
  std::string defects = "even";
  bool classes = false;
  // springer / spin
  std::string group = "sp";
  std::string marked;
  std::string chi;
  std::string partition;
  std::string symbol;
  // count
  std::string family = "a";
  int m = 0;
  // selftest
  int max_n = 6;
  Format format = Format::text;
};

json params_json(const SymbolParams& p) {
  return {{"rho", p.rho}, {"s", p.s}, {"defects", std::string(to_string(p.defects))}};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

std::string join_symbols(const std::vector<Symbol>& symbols) {
  std::string line;
  for (const auto& sym : symbols) {
    if (!line.empty()) line += ',';
    line += sym.to_string();
  }
  return line;
}

int symbols_enumerate(const Options& o, std::ostream& out) {
  SymbolParams params{o.rho, o.s, parse_defect_set(o.defects)};
  params.check_family();
  if (o.classes) {
    for (const auto& cls : similarity_classes(params, o.n)) {
      if (o.format == Format::text) {
        out << join_symbols(cls.members()) << '\n';
        continue;
      }
      json members = json::array();
      for (const auto& sym : cls.members()) members.push_back(sym.to_string());
      json ivs = json::array();
      for (const auto& iv : cls.intervals()) ivs.push_back({{"entries", iv.entries}, {"proper", iv.proper}});
      emit(out, {{"params", params_json(params)},
                 {"n", o.n},
                 {"members", members},
                 {"intervals", ivs},
                 {"dim", cls.dimension()}});
    }
    return kOk;
  }
  for (const auto& sym : enumerate_family(params, o.n)) {
    if (o.format == Format::text) {
      out << sym.to_string() << '\n';
      continue;
    }
    auto label = staircase_from_symbol(params, sym);
    emit(out, {{"params", params_json(params)},
               {"n", o.n},
               {"symbol", sym.to_string()},
               {"defect", label.d},
               {"bipartition", label.bp.to_string()}});
  }
  return kOk;
}

void emit_mapping(const Options& o, std::ostream& out, const MarkedPartition& mp, const gf2::BitVector& chi,
                  const Symbol& sym, const SpringerLabel& label) {
  if (o.format == Format::text) {
    out << mp.to_string() << ' ' << (chi.size() == 0 ? "-" : chi.to_string()) << " -> " << sym.to_string()
        << " d=" << label.d << ' ' << label.bp.to_string() << '\n';
    return;
  }
  emit(out, {{"case", o.group},
             {"n", o.n},
             {"class", mp.to_string()},
             {"char", chi.to_string()},
             {"symbol", sym.to_string()},
             {"defect", label.d},
             {"bipartition", label.bp.to_string()}});
}

int springer_map_cmd(const Options& o, std::ostream& out) {
  auto config = configure(parse_group_case(o.group), o.n);
  auto mp = MarkedPartition::parse(o.marked);
  auto chi = gf2::BitVector::parse(o.chi);
  auto sym = to_symbol(config, mp, chi);
  auto label = staircase_from_symbol(config.params, sym);
  emit_mapping(o, out, mp, normalize_character(a_space(config.kind, mp).space, chi), sym, label);
  return kOk;
}

int springer_table_cmd(const Options& o, std::ostream& out) {
  Correspondence corr(parse_group_case(o.group), o.n);
  for (const auto& e : corr.entries()) emit_mapping(o, out, e.datum.mp, e.datum.chi, e.symbol, e.label);
  return kOk;
}

int springer_inverse_cmd(const Options& o, std::ostream& out) {
  Correspondence corr(parse_group_case(o.group), o.n);
  auto datum = corr.from_symbol(Symbol::parse(o.symbol));
  auto sym = corr.to_symbol(datum.mp, datum.chi);
  emit_mapping(o, out, datum.mp, datum.chi, sym, staircase_from_symbol(corr.config().params, sym));
  return kOk;
}

void emit_spin(const Options& o, std::ostream& out, int n, const Partition& lambda) {
  auto label = spin::spin_springer(lambda);
  if (o.format == Format::text) {
    out << lambda.to_string() << " -> t=" << label.t << ' ' << label.bp.to_string() << '\n';
    return;
  }
  emit(out, {{"n", n},
             {"partition", lambda.to_string()},
             {"t", label.t},
             {"alpha", label.bp.alpha.to_string()},
             {"beta", label.bp.beta.to_string()},
             {"weyl_rank", label.bp.size()},
             {"bipartition", label.bp.to_string()}});
}

int spin_map_cmd(const Options& o, std::ostream& out) {
  auto lambda = Partition::parse(o.partition);
  if (lambda.size() != o.n) {
    throw Error(Errc::invalid_argument, "partition " + lambda.to_string() + " has size " +
                                            std::to_string(lambda.size()) + ", not " + std::to_string(o.n));
  }
  emit_spin(o, out, o.n, lambda);
  return kOk;
}

int spin_table_cmd(const Options& o, std::ostream& out) {
  for (const auto& lambda : spin::enumerate_xn(o.n)) emit_spin(o, out, o.n, lambda);
  return kOk;
}

int count_cmd(const Options& o, std::ostream& out) {
  std::vector<counting::CensusReport> reports;
  if (o.family == "a") {
    reports.push_back(counting::census_a(o.m));
  } else if (o.family == "d") {
    reports.push_back(counting::census_d(o.m));
  } else if (o.family == "sporadic") {
    reports = counting::sporadic_checks();
  } else {
    throw Error(Errc::invalid_argument, "unknown family \"" + o.family + "\" (expected a, d or sporadic)");
  }
  bool all_agree = true;
  for (const auto& r : reports) {
    json j = {{"family", std::string(counting::to_string(r.family))},
              {"m", r.m},
              {"formula_count", r.formula_count},
              {"enumeration_count", nullptr},
              {"agree", r.agree}};
    if (r.enumeration_count) j["enumeration_count"] = *r.enumeration_count;
    emit(out, j);
    all_agree = all_agree && r.agree;
  }
  return all_agree ? kOk : kLogicalFailure;
}

int selftest_cmd(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const auto& r : checks::run_all(o.max_n)) {
    if (o.format == Format::json) {
      emit(out, {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
    ok = ok && r.passed;
  }
  return ok ? kOk : kLogicalFailure;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial generalized Springer correspondence"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* symbols = app.add_subcommand("symbols", "Symbol families and similarity classes");
  symbols->require_subcommand(1);
  auto* enumerate_cmd = symbols->add_subcommand("enumerate", "List a symbol family or its similarity classes");
  enumerate_cmd->add_option("--rho", o.rho, "Gap parameter")->required();
  enumerate_cmd->add_option("--s", o.s, "Lower bound for the second row")->required();
  enumerate_cmd->add_option("--n", o.n, "Rank")->required();
  enumerate_cmd->add_option("--defects", o.defects, "Admissible defects")
      ->required()
      ->check(CLI::IsMember({"even", "odd", "odd-positive"}));
  enumerate_cmd->add_flag("--classes", o.classes, "Group the family into similarity classes");
  add_format(enumerate_cmd, o);
  enumerate_cmd->callback([&] { action = [&] { return symbols_enumerate(o, out); }; });

  auto* springer_cmd = app.add_subcommand("springer", "The correspondence for disconnected groups in characteristic 2");
  springer_cmd->require_subcommand(1);
  const std::vector<std::string> cases{"sp", "o-outer", "a-odd", "a-even"};
  auto* map_cmd = springer_cmd->add_subcommand("map", "Map one unipotent datum");
  map_cmd->add_option("--case", o.group, "Group case")->required()->check(CLI::IsMember(cases));
  map_cmd->add_option("--n", o.n, "Rank parameter")->required();
  map_cmd->add_option("--class", o.marked, "Marked partition, e.g. \"(11)(2)(44)\"")->required();
  map_cmd->add_option("--char", o.chi, "Character as a bit-string over the canonical basis");
  add_format(map_cmd, o);
  map_cmd->callback([&] { action = [&] { return springer_map_cmd(o, out); }; });
  auto* table_cmd = springer_cmd->add_subcommand("table", "The full bijection");
  table_cmd->add_option("--case", o.group, "Group case")->required()->check(CLI::IsMember(cases));
  table_cmd->add_option("--n", o.n, "Rank parameter")->required();
  add_format(table_cmd, o);
  table_cmd->callback([&] { action = [&] { return springer_table_cmd(o, out); }; });

  auto* inverse_cmd = springer_cmd->add_subcommand("inverse", "Find the unipotent datum of a symbol");
  inverse_cmd->add_option("--case", o.group, "Group case")->required()->check(CLI::IsMember(cases));
  inverse_cmd->add_option("--n", o.n, "Rank parameter")->required();
  inverse_cmd->add_option("--symbol", o.symbol, "Symbol, e.g. \"(0,4;3)\"")->required();
  add_format(inverse_cmd, o);
  inverse_cmd->callback([&] { action = [&] { return springer_inverse_cmd(o, out); }; });

  auto* spin_cmd = app.add_subcommand("spin", "The correspondence for Spin groups");
  spin_cmd->require_subcommand(1);
  auto* spin_map = spin_cmd->add_subcommand("map", "Map one partition");
  spin_map->add_option("--n", o.n, "Size")->required();
  spin_map->add_option("--partition", o.partition, "Increasing parts, e.g. \"1,3\"")->required();
  add_format(spin_map, o);
  spin_map->callback([&] { action = [&] { return spin_map_cmd(o, out); }; });
  auto* spin_table = spin_cmd->add_subcommand("table", "Map every partition in X_n");
  spin_table->add_option("--n", o.n, "Size")->required();
  add_format(spin_table, o);
  spin_table->callback([&] { action = [&] { return spin_table_cmd(o, out); }; });

  auto* count = app.add_subcommand("count", "Census identities as JSON lines");
  count->add_option("--family", o.family, "a, d or sporadic")
      ->required()
      ->check(CLI::IsMember({"a", "d", "sporadic"}));
  count->add_option("--m", o.m, "Size parameter");
  count->callback([&] { action = [&] { return count_cmd(o, out); }; });

  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");
  selftest->add_option("--max-n", o.max_n, "Largest rank to check")->check(CLI::Range(0, 12));
  add_format(selftest, o);
  selftest->callback([&] { action = [&] { return selftest_cmd(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.is_logical() ? kLogicalFailure : kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: out of range: " << e.what() << '\n';
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"springer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace springer::cli
