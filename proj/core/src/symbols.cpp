#include "springer/symbols.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <utility>

#include "springer/error.hpp"
#include "text_util.hpp"

namespace springer {

std::string_view to_string(DefectSet set) noexcept {
  switch (set) {
    case DefectSet::even: return "even";
    case DefectSet::odd: return "odd";
    case DefectSet::positive_odd: return "odd-positive";
  }
  return "?";
}

DefectSet parse_defect_set(std::string_view text) {
  if (text == "even") return DefectSet::even;
  if (text == "odd") return DefectSet::odd;
  if (text == "odd-positive") return DefectSet::positive_odd;
  throw Error(Errc::parse_error,
              "defect set must be even, odd or odd-positive: \"" + std::string(text) + "\"");
}

bool SymbolParams::admits(int defect) const noexcept {
  switch (defects) {
    case DefectSet::even: return defect % 2 == 0;
    case DefectSet::odd: return defect % 2 != 0;
    case DefectSet::positive_odd: return defect > 0 && defect % 2 != 0;
  }
  return false;
}

void SymbolParams::check_family() const {
  if (rho < 0 || s < 0) {
    throw Error(Errc::invalid_argument, "rho and s must be natural numbers");
  }
  if (s == 0 && defects != DefectSet::positive_odd) {
    throw Error(Errc::invalid_argument,
                "for s = 0 the defect set must be the positive odd integers");
  }
  if (s > 0 && defects == DefectSet::positive_odd) {
    throw Error(Errc::invalid_argument,
                "for s > 0 the defect set must be all even or all odd integers");
  }
}

// ---------------------------------------------------------------------------
// Symbol text

namespace {

std::vector<int> parse_row(std::string_view text) {
  text = detail::trim(text);
  if (text == "∅" || text == "\\em") return {};
  return detail::parse_int_list(text, ',');
}

}  // namespace

Symbol Symbol::parse(std::string_view text) {
  auto t = detail::trim(text);
  if (t.size() < 3 || t.front() != '(' || t.back() != ')') {
    throw Error(Errc::parse_error,
                "symbol must have the form (a1,a2,...;b1,...): \"" + std::string(text) + "\"");
  }
  t = t.substr(1, t.size() - 2);
  auto semi = t.find(';');
  if (semi == std::string_view::npos || t.find(';', semi + 1) != std::string_view::npos) {
    throw Error(Errc::parse_error,
                "symbol rows must be separated by exactly one ';': \"" + std::string(text) + "\"");
  }
  return Symbol(parse_row(t.substr(0, semi)), parse_row(t.substr(semi + 1)));
}

std::string Symbol::to_string() const {
  return "(" + detail::join_ints(a_, ",") + ";" + detail::join_ints(b_, ",") + ")";
}

// ---------------------------------------------------------------------------
// Rank and validation

namespace {

int exact_quarter(long long numerator, const char* what) {
  if (numerator % 4 != 0) {
    throw Error(Errc::non_integral_rank, std::string(what) + " is not an integer");
  }
  return static_cast<int>(numerator / 4);
}

}  // namespace

int rank_offset(int rho, int s, int d) {
  long long r = rho, ss = s, dd = d;
  if (d % 2 == 0) return exact_quarter(r * dd * dd - 2 * ss * dd, "n_{rho,s,d}");
  return exact_quarter(r * (dd - 1) * (dd + 1) - 2 * ss * (dd - 1), "n_{rho,s,d}");
}

RankDefect validate(const SymbolParams& params, const Symbol& sym) {
  const auto& a = sym.row_a();
  const auto& b = sym.row_b();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) {
      throw Error(Errc::bound_violation, "entries of A must be natural numbers in " + sym.to_string());
    }
    if (i > 0 && a[i] - a[i - 1] < params.rho) {
      throw Error(Errc::gap_violation,
                  "consecutive entries of A must differ by at least rho = " +
                      std::to_string(params.rho) + " in " + sym.to_string());
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < params.s) {
      throw Error(Errc::bound_violation,
                  "entries of B must be at least s = " + std::to_string(params.s) + " in " +
                      sym.to_string());
    }
    if (i > 0 && b[i] - b[i - 1] < params.rho) {
      throw Error(Errc::gap_violation,
                  "consecutive entries of B must differ by at least rho = " +
                      std::to_string(params.rho) + " in " + sym.to_string());
    }
  }
  long long total = std::accumulate(a.begin(), a.end(), 0LL) + std::accumulate(b.begin(), b.end(), 0LL);
  long long len = sym.total_size();
  int d = sym.defect();
  long long rho = params.rho, s = params.s;
  long long numerator = 0;
  if (d % 2 == 0) {
    numerator = 4 * total - rho * len * (len - 2) - 2 * s * len;
  } else {
    numerator = 4 * total - rho * (len - 1) * (len - 1) - 2 * s * (len - 1);
  }
  if (numerator % 4 != 0) {
    throw Error(Errc::non_integral_rank,
                "the entry sum of " + sym.to_string() + " does not determine an integral rank");
  }
  return {static_cast<int>(numerator / 4), d};
}

// ---------------------------------------------------------------------------
// Shift equivalence

Symbol shift(const SymbolParams& params, const Symbol& sym) {
  std::vector<int> a{0};
  std::vector<int> b{params.s};
  for (int x : sym.row_a()) a.push_back(x + params.rho);
  for (int x : sym.row_b()) b.push_back(x + params.rho);
  return Symbol(std::move(a), std::move(b));
}

std::optional<Symbol> unshift(const SymbolParams& params, const Symbol& sym) {
  const auto& a = sym.row_a();
  const auto& b = sym.row_b();
  if (a.empty() || b.empty() || a.front() != 0 || b.front() != params.s) return std::nullopt;
  std::vector<int> na, nb;
  for (std::size_t i = 1; i < a.size(); ++i) na.push_back(a[i] - params.rho);
  for (std::size_t i = 1; i < b.size(); ++i) nb.push_back(b[i] - params.rho);
  return Symbol(std::move(na), std::move(nb));
}

Symbol normal_form(const SymbolParams& params, const Symbol& sym) {
  Symbol current = sym;
  while (auto smaller = unshift(params, current)) current = std::move(*smaller);
  return current;
}

// ---------------------------------------------------------------------------
// Staircase bijection

Symbol staircase_to_symbol(const SymbolParams& params, int d, const Bipartition& bp) {
  const auto& alpha = bp.alpha.parts();
  const auto& beta = bp.beta.parts();
  int m = std::max({static_cast<int>(alpha.size()), static_cast<int>(beta.size()) + d, 0});
  int m_prime = m - d;
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  std::vector<int> b(static_cast<std::size_t>(m_prime), 0);
  std::copy(alpha.begin(), alpha.end(), a.end() - static_cast<std::ptrdiff_t>(alpha.size()));
  std::copy(beta.begin(), beta.end(), b.end() - static_cast<std::ptrdiff_t>(beta.size()));
  for (int i = 0; i < m; ++i) a[i] += i * params.rho;
  for (int i = 0; i < m_prime; ++i) b[i] += params.s + i * params.rho;
  return Symbol(std::move(a), std::move(b));
}

StaircaseLabel staircase_from_symbol(const SymbolParams& params, const Symbol& sym) {
  validate(params, sym);
  std::vector<int> alpha, beta;
  const auto& a = sym.row_a();
  const auto& b = sym.row_b();
  for (std::size_t i = 0; i < a.size(); ++i) alpha.push_back(a[i] - static_cast<int>(i) * params.rho);
  for (std::size_t i = 0; i < b.size(); ++i) {
    beta.push_back(b[i] - params.s - static_cast<int>(i) * params.rho);
  }
  return {sym.defect(), {Partition::from_parts(std::move(alpha)), Partition::from_parts(std::move(beta))}};
}

std::vector<Symbol> enumerate(const SymbolParams& params, int n, int d) {
  std::vector<Symbol> out;
  int weyl_rank = n - rank_offset(params.rho, params.s, d);
  for (const auto& bp : enumerate_bipartitions(weyl_rank)) {
    out.push_back(staircase_to_symbol(params, d, bp));
  }
  return out;
}

std::vector<Symbol> enumerate_family(const SymbolParams& params, int n) {
  params.check_family();
  if (params.rho < 1) {
    throw Error(Errc::invalid_argument, "a symbol family needs rho >= 1 to be finite");
  }
  std::vector<Symbol> out;
  const int bound = 2 * (params.s + std::max(n, 0)) + 6;
  for (int d = -bound; d <= bound; ++d) {
    if (!params.admits(d)) continue;
    auto part = enumerate(params, n, d);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Similarity

namespace {

struct Key {
  std::vector<int> union_entries;  // multiset, sorted
  std::vector<int> intersection;   // set, sorted
  friend bool operator==(const Key&, const Key&) = default;
};

Key key_of(const Symbol& sym) {
  Key key;
  std::merge(sym.row_a().begin(), sym.row_a().end(), sym.row_b().begin(), sym.row_b().end(),
             std::back_inserter(key.union_entries));
  std::set_intersection(sym.row_a().begin(), sym.row_a().end(), sym.row_b().begin(),
                        sym.row_b().end(), std::back_inserter(key.intersection));
  return key;
}

Key key_shift(const SymbolParams& params, const Key& key) {
  Key out;
  out.union_entries = {0, params.s};
  for (int x : key.union_entries) out.union_entries.push_back(x + params.rho);
  std::sort(out.union_entries.begin(), out.union_entries.end());
  if (params.s == 0) out.intersection.push_back(0);
  for (int x : key.intersection) out.intersection.push_back(x + params.rho);
  return out;
}

std::optional<Key> key_unshift(const SymbolParams& params, const Key& key) {
  auto rest = key.union_entries;
  for (int removed : {0, params.s}) {
    auto it = std::find(rest.begin(), rest.end(), removed);
    if (it == rest.end()) return std::nullopt;
    rest.erase(it);
  }
  if (std::any_of(rest.begin(), rest.end(), [&](int x) { return x < params.rho; })) {
    return std::nullopt;
  }
  Key out;
  for (int x : rest) out.union_entries.push_back(x - params.rho);
  for (int x : key.intersection) {
    if (params.s == 0 && x == 0) continue;
    out.intersection.push_back(x - params.rho);
  }
  return out;
}

Key reduced_key(const SymbolParams& params, Key key) {
  while (auto smaller = key_unshift(params, key)) key = std::move(*smaller);
  return key;
}

std::vector<Interval> intervals_of(const SymbolParams& params, const Key& key) {
  std::vector<int> singles;
  std::set_difference(key.union_entries.begin(), key.union_entries.end(),
                      key.intersection.begin(), key.intersection.end(),
                      std::back_inserter(singles));
  // the multiset difference leaves one copy of each intersection entry
  std::vector<int> sym_diff;
  std::set_difference(singles.begin(), singles.end(), key.intersection.begin(),
                      key.intersection.end(), std::back_inserter(sym_diff));
  std::vector<Interval> out;
  for (int x : sym_diff) {
    if (out.empty() || x - out.back().entries.back() >= params.rho) {
      out.push_back({{}, true});
    }
    out.back().entries.push_back(x);
  }
  for (auto& interval : out) interval.proper = interval.entries.front() >= params.s;
  return out;
}

gf2::BitVector raw_bits(const SymbolParams& params, const Symbol& sym) {
  auto ivs = intervals_of(params, key_of(sym));
  std::vector<bool> bits;
  for (const auto& iv : ivs) {
    if (!iv.proper) continue;
    bits.push_back(std::binary_search(sym.row_b().begin(), sym.row_b().end(), iv.entries.front()));
  }
  gf2::BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i]);
  return v;
}

}  // namespace

bool similar(const SymbolParams& params, const Symbol& x, const Symbol& y) {
  if ((x.total_size() - y.total_size()) % 2 != 0) {
    throw Error(Errc::parity_mismatch,
                "symbols " + x.to_string() + " and " + y.to_string() +
                    " cannot be shifted to a common size");
  }
  Symbol xs = x, ys = y;
  while (xs.total_size() < ys.total_size()) xs = shift(params, xs);
  while (ys.total_size() < xs.total_size()) ys = shift(params, ys);
  return key_of(xs) == key_of(ys);
}

std::vector<Interval> intervals(const SymbolParams& params, const Symbol& sym) {
  return intervals_of(params, key_of(sym));
}

SimilarityClass SimilarityClass::of(const SymbolParams& params, const Symbol& sym) {
  if (params.rho <= params.s) {
    throw Error(Errc::invalid_argument, "similarity classes need rho > s");
  }
  SimilarityClass cls;
  cls.params_ = params;
  cls.n_ = validate(params, sym).n;
  Key key = reduced_key(params, key_of(sym));
  cls.union_ = key.union_entries;
  cls.intersection_ = key.intersection;
  cls.intervals_ = intervals_of(params, key);
  cls.space_ = gf2::PresentedSpace(cls.proper_count(), {}, {}, params.s == 0);
  for (const auto& v : gf2::characters(cls.space_)) cls.members_.push_back(cls.member(v));
  if (!cls.contains(sym)) {
    throw Error(Errc::not_in_class, "internal: " + sym.to_string() + " missing from its own class");
  }
  return cls;
}

std::size_t SimilarityClass::proper_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(intervals_.begin(), intervals_.end(), [](const Interval& iv) { return iv.proper; }));
}

bool SimilarityClass::contains(const Symbol& sym) const {
  try {
    if (validate(params_, sym).n != n_) return false;
  } catch (const Error&) {
    return false;
  }
  Key key = reduced_key(params_, key_of(sym));
  return key.union_entries == union_ && key.intersection == intersection_;
}

gf2::BitVector SimilarityClass::vector_of(const Symbol& member) const {
  if (!contains(member)) {
    throw Error(Errc::not_in_class, member.to_string() + " is not in this similarity class");
  }
  return gf2::canonicalize_coset(raw_bits(params_, member), space_.quotient_by_all_ones());
}

std::optional<Symbol> SimilarityClass::assemble(std::vector<int> union_entries,
                                                std::vector<int> intersection_entries,
                                                const gf2::BitVector& bits) const {
  Key key{std::move(union_entries), std::move(intersection_entries)};
  std::vector<int> a = key.intersection;
  std::vector<int> b = key.intersection;
  std::size_t next_bit = 0;
  for (const auto& iv : intervals_of(params_, key)) {
    // proper intervals start in the row named by their bit; improper ones
    // start in A, since entries below s cannot lie in B
    bool in_b = iv.proper ? bits[next_bit++] : false;
    for (int x : iv.entries) {
      (in_b ? b : a).push_back(x);
      in_b = !in_b;
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Symbol sym(std::move(a), std::move(b));
  try {
    if (validate(params_, sym).n != n_) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return sym;
}

Symbol SimilarityClass::member(const gf2::BitVector& v) const {
  if (v.size() != proper_count()) {
    throw Error(Errc::length_mismatch,
                "vector \"" + v.to_string() + "\" has length " + std::to_string(v.size()) +
                    ", expected " + std::to_string(proper_count()));
  }
  std::vector<gf2::BitVector> candidates{v};
  if (params_.s == 0) candidates.push_back(v + gf2::BitVector::ones(v.size()));

  Key key{union_, intersection_};
  const std::size_t attempts = union_.size() + 4;
  for (std::size_t step = 0; step <= attempts; ++step) {
    for (const auto& bits : candidates) {
      auto sym = assemble(key.union_entries, key.intersection, bits);
      if (!sym) continue;
      // for s = 0 the coset {v, v + 1} is resolved by the sign of the defect
      if (params_.s == 0 && sym->defect() < 0) continue;
      return normal_form(params_, *sym);
    }
    key = key_shift(params_, key);
  }
  throw Error(Errc::not_in_class, "no member of the class has vector \"" + v.to_string() + "\"");
}

std::vector<SimilarityClass> similarity_classes(const SymbolParams& params, int n) {
  std::vector<SimilarityClass> out;
  for (const auto& sym : enumerate_family(params, n)) {
    auto found = std::find_if(out.begin(), out.end(),
                              [&](const SimilarityClass& c) { return c.contains(sym); });
    if (found == out.end()) out.push_back(SimilarityClass::of(params, sym));
  }
  return out;
}

gf2::BitVector class_vector(const SimilarityClass& cls, const Symbol& member) {
  return cls.vector_of(member);
}

Symbol class_member(const SimilarityClass& cls, const gf2::BitVector& v) {
  return cls.member(v);
}

}  // namespace springer
