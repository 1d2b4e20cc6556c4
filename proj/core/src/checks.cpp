#include "springer/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "springer/counting.hpp"
#include "springer/error.hpp"
#include "springer/partitions.hpp"
#include "springer/spin.hpp"
#include "springer/unipotent.hpp"

namespace springer::checks {

// ---------------------------------------------------------------------------
// Direct enumeration oracle

namespace {

// Rows of length `len`, entries >= lo, gaps >= rho, with sum in [min_sum, max_sum].
void rows(int len, int lo, int rho, int min_sum, int max_sum, std::vector<int>& current,
          std::vector<std::vector<int>>& out) {
  const int sum = std::accumulate(current.begin(), current.end(), 0);
  if (static_cast<int>(current.size()) == len) {
    if (sum >= min_sum && sum <= max_sum) out.push_back(current);
    return;
  }
  const int left = len - static_cast<int>(current.size());
  const int start = current.empty() ? lo : current.back() + rho;
  for (int x = start;; ++x) {
    // cheapest completion: x, x+rho, x+2rho, ...
    const int cheapest = left * x + rho * left * (left - 1) / 2;
    if (sum + cheapest > max_sum) break;
    current.push_back(x);
    rows(len, lo, rho, min_sum, max_sum, current, out);
    current.pop_back();
  }
}

int min_row_sum(int len, int lo, int rho) { return len * lo + rho * len * (len - 1) / 2; }

}  // namespace

std::vector<Symbol> direct_enumerate(const SymbolParams& params, int n, int d) {
  const int rho = params.rho;
  const int s = params.s;
  // Staircase excess of a normal form is n - offset; it bounds the number
  // of parts, hence the row lengths.
  const int offset4 = (d % 2 == 0) ? rho * d * d - 2 * s * d : rho * (d - 1) * (d + 1) - 2 * s * (d - 1);
  const int excess = n - offset4 / 4;
  std::vector<Symbol> out;
  if (offset4 % 4 != 0 || excess < 0) return out;
  const int extra = excess + 1;
  for (int m_prime = std::max(0, -d); m_prime <= std::max(0, -d) + extra; ++m_prime) {
    const int m = m_prime + d;
    if (m < 0) continue;
    const int len = m + m_prime;
    const int base4 = (d % 2 == 0) ? rho * len * (len - 2) + 2 * s * len
                                   : rho * (len - 1) * (len - 1) + 2 * s * (len - 1);
    if (base4 % 4 != 0) continue;
    const int target = n + base4 / 4;
    const int b_min = min_row_sum(m_prime, s, rho);
    std::vector<std::vector<int>> a_rows;
    std::vector<int> current;
    rows(m, 0, rho, 0, target - b_min, current, a_rows);
    for (const auto& a : a_rows) {
      const int rest = target - std::accumulate(a.begin(), a.end(), 0);
      std::vector<std::vector<int>> b_rows;
      rows(m_prime, s, rho, rest, rest, current, b_rows);
      for (auto& b : b_rows) {
        const bool reducible = !a.empty() && !b.empty() && a.front() == 0 && b.front() == s;
        if (!reducible) out.emplace_back(a, std::move(b));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int target_weyl_rank(GroupCase group, int n, int d) {
  switch (group) {
    case GroupCase::sp: return n - (d * d - d);
    case GroupCase::o_outer: return n - d * d;
    case GroupCase::a_odd_outer: return n - (d * d - 1 - (d - 1) / 2);
    case GroupCase::a_even_outer: return n - (d * d - d / 2);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Failed {
  std::string detail;
};

template <typename Body>
CheckResult run_check(std::string name, Body&& body) {
  try {
    std::ostringstream summary;
    body(summary);
    return {std::move(name), true, summary.str()};
  } catch (const Failed& f) {
    return {std::move(name), false, f.detail};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

void expect(bool condition, const std::string& detail) {
  if (!condition) throw Failed{detail};
}

std::vector<SymbolParams> similarity_params() {
  return {{4, 0, DefectSet::positive_odd}, {4, 1, DefectSet::even}, {4, 1, DefectSet::odd},
          {4, 2, DefectSet::even}, {4, 2, DefectSet::odd}};
}

std::string params_text(const SymbolParams& p) {
  return "rho=" + std::to_string(p.rho) + " s=" + std::to_string(p.s) + " E=" +
         std::string(to_string(p.defects));
}

// Generator classes by repeated relabelling, independent of union-find.
std::vector<int> naive_labels(std::size_t g, const std::vector<std::pair<std::size_t, std::size_t>>& ids) {
  std::vector<int> label(g);
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [i, j] : ids) {
      int lo = std::min(label[i], label[j]);
      if (label[i] != lo || label[j] != lo) {
        int hi = std::max(label[i], label[j]);
        for (auto& l : label) if (l == hi) l = lo;
        changed = true;
      }
    }
  }
  return label;
}

}  // namespace

CheckResult check_gf2() {
  return run_check("gf2 spaces", [](std::ostream& summary) {
    std::size_t spaces = 0;
    for (std::size_t g = 0; g <= 4; ++g) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) pairs.emplace_back(i, j);
      for (unsigned id_mask = 0; id_mask < (1U << pairs.size()); ++id_mask) {
        std::vector<std::pair<std::size_t, std::size_t>> ids;
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if (id_mask & (1U << p)) ids.push_back(pairs[p]);
        auto label = naive_labels(g, ids);
        for (unsigned kill_mask = 0; kill_mask < (1U << g); ++kill_mask) {
          std::vector<std::size_t> kills;
          std::set<int> killed_labels;
          for (std::size_t i = 0; i < g; ++i)
            if (kill_mask & (1U << i)) {
              kills.push_back(i);
              killed_labels.insert(label[i]);
            }
          std::set<int> surviving;
          for (std::size_t i = 0; i < g; ++i)
            if (!killed_labels.count(label[i])) surviving.insert(label[i]);
          for (bool quotient : {false, true}) {
            ++spaces;
            gf2::PresentedSpace space(g, ids, kills, quotient);
            std::size_t expected_dim = surviving.size();
            if (quotient && expected_dim > 0) --expected_dim;
            expect(space.basis_size() == surviving.size() && space.dimension() == expected_dim,
                   "dimension mismatch for g=" + std::to_string(g));
            auto chars = gf2::characters(space);
            expect(chars.size() == (std::size_t{1} << expected_dim), "character count");
            expect(std::is_sorted(chars.begin(), chars.end()) &&
                       std::adjacent_find(chars.begin(), chars.end()) == chars.end(),
                   "characters not strictly increasing");
            for (const auto& v : chars) {
              auto c = gf2::canonicalize_coset(v, quotient);
              expect(c == v, "character " + v.to_string() + " is not coset-canonical");
              expect(gf2::canonicalize_coset(c, quotient) == c, "canonicalize not idempotent");
              if (quotient && !v.empty()) {
                auto other = v + gf2::BitVector::ones(v.size());
                expect(gf2::canonicalize_coset(other, true) == c, "canonicalize not constant on cosets");
                expect(!std::binary_search(chars.begin(), chars.end(), other),
                       "two characters differ by the all-ones vector");
              }
            }
          }
        }
      }
    }
    summary << spaces << " presented spaces";
  });
}

CheckResult check_partition_counts(int max_n) {
  return run_check("partition counts", [max_n](std::ostream& summary) {
    for (int n = -2; n <= std::min(max_n, 25); ++n) {
      expect(count_p(n) == static_cast<std::int64_t>(enumerate_partitions(n).size()),
             "p(" + std::to_string(n) + ") disagrees with enumeration");
    }
    for (int n = -2; n <= std::min(max_n, 14); ++n) {
      auto bps = enumerate_bipartitions(n);
      expect(count_p2(n) == static_cast<std::int64_t>(bps.size()),
             "p2(" + std::to_string(n) + ") disagrees with enumeration");
      expect(std::set<Bipartition>(bps.begin(), bps.end()).size() == bps.size(),
             "duplicate bipartitions at " + std::to_string(n));
    }
    for (int n = 0; n <= 40; ++n) {
      std::int64_t convolution = 0;
      for (int k = 0; k <= n; ++k) convolution += count_p(k) * count_p(n - k);
      expect(count_p2(n) == convolution, "p2 convolution identity at " + std::to_string(n));
    }
    summary << "p, p2 against enumeration and convolution";
  });
}

CheckResult check_enumeration_oracle(int max_n, int max_abs_d) {
  return run_check("staircase enumeration = direct enumeration", [=](std::ostream& summary) {
    std::size_t cases = 0, symbols = 0;
    for (int rho : {0, 4})
      for (int s : {0, 1, 2})
        for (int n = 0; n <= max_n; ++n)
          for (int d = -max_abs_d; d <= max_abs_d; ++d) {
            SymbolParams p{rho, s, s == 0 ? DefectSet::positive_odd : DefectSet::even};
            auto staircase = enumerate(p, n, d);
            std::sort(staircase.begin(), staircase.end());
            auto direct = direct_enumerate(p, n, d);
            expect(staircase == direct, "mismatch at rho=" + std::to_string(rho) + " s=" + std::to_string(s) +
                                            " n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " +
                                            std::to_string(staircase.size()) + " vs " +
                                            std::to_string(direct.size()));
            ++cases;
            symbols += direct.size();
          }
    summary << cases << " (rho,s,n,d) cases, " << symbols << " symbols";
  });
}

CheckResult check_symbol_cardinalities(int max_n, int max_abs_d) {
  return run_check("|X_{n,d}| = p2(n - n_{rho,s,d})", [=](std::ostream& summary) {
    std::size_t cases = 0;
    for (int rho : {0, 4})
      for (int s : {0, 1, 2})
        for (int n = 0; n <= max_n; ++n)
          for (int d = -max_abs_d; d <= max_abs_d; ++d) {
            SymbolParams p{rho, s, DefectSet::even};
            auto syms = enumerate(p, n, d);
            expect(static_cast<std::int64_t>(syms.size()) == count_p2(n - rank_offset(rho, s, d)),
                   "cardinality at rho=" + std::to_string(rho) + " s=" + std::to_string(s) +
                       " n=" + std::to_string(n) + " d=" + std::to_string(d));
            for (const auto& sym : syms) {
              expect(validate(p, sym) == RankDefect{n, d}, "rank/defect of " + sym.to_string());
              expect(normal_form(p, sym) == sym, sym.to_string() + " is not a normal form");
              auto label = staircase_from_symbol(p, sym);
              expect(staircase_to_symbol(p, label.d, label.bp) == sym, "staircase round trip " + sym.to_string());
            }
            ++cases;
          }
    summary << cases << " cases";
  });
}

CheckResult check_shift_and_similarity(int max_n) {
  return run_check("shift and similarity", [=](std::ostream& summary) {
    std::size_t pairs = 0;
    for (const auto& p : similarity_params()) {
      for (int n = 0; n <= max_n; ++n) {
        auto family = enumerate_family(p, n);
        for (const auto& sym : family) {
          auto shifted = shift(p, sym);
          expect(validate(p, shifted) == validate(p, sym), "shift changes (n,d) of " + sym.to_string());
          expect(unshift(p, shifted) == sym, "unshift does not invert shift on " + sym.to_string());
          expect(normal_form(p, shift(p, shifted)) == sym, "normal form of a double shift");
          expect(normal_form(p, normal_form(p, sym)) == normal_form(p, sym), "normal form not idempotent");
        }
        if (n > std::min(max_n, 6)) continue;
        auto classes = similarity_classes(p, n);
        auto class_index = [&](const Symbol& x) {
          for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].contains(x)) return i;
          throw Failed{"symbol " + x.to_string() + " in no class"};
        };
        for (const auto& x : family) {
          for (const auto& y : family) {
            bool sim = similar(p, x, y);
            expect(sim == similar(p, y, x), "similarity not symmetric");
            expect(sim == (class_index(x) == class_index(y)),
                   "similarity disagrees with the class partition on " + x.to_string() + ", " + y.to_string());
            ++pairs;
          }
          expect(similar(p, x, x), "similarity not reflexive");
        }
      }
    }
    summary << pairs << " ordered pairs";
  });
}

CheckResult check_class_structure(int max_n) {
  return run_check("similarity classes and V_c", [=](std::ostream& summary) {
    std::size_t class_count = 0;
    for (const auto& p : similarity_params()) {
      for (int n = 0; n <= max_n; ++n) {
        auto family = enumerate_family(p, n);
        auto classes = similarity_classes(p, n);
        std::size_t total = 0;
        std::set<Symbol> seen;
        for (const auto& cls : classes) {
          ++class_count;
          const auto& members = cls.members();
          total += members.size();
          expect(members.size() == (std::size_t{1} << cls.dimension()),
                 "class size is not 2^dim at " + params_text(p) + " n=" + std::to_string(n));
          std::size_t proper = 0;
          const auto& ivs = cls.intervals();
          for (std::size_t i = 0; i < ivs.size(); ++i) {
            const auto& e = ivs[i].entries;
            for (std::size_t j = 1; j < e.size(); ++j) expect(e[j] - e[j - 1] < p.rho, "gap inside interval");
            if (i > 0) expect(e.front() - ivs[i - 1].entries.back() >= p.rho, "intervals not maximal");
            expect(ivs[i].proper == (e.front() >= p.s), "proper flag");
            proper += ivs[i].proper;
          }
          std::size_t expected_dim = p.s > 0 ? proper : (proper == 0 ? 0 : proper - 1);
          expect(cls.dimension() == expected_dim, "dim V_c");
          auto chars = gf2::characters(cls.space());
          for (std::size_t i = 0; i < members.size(); ++i) {
            const auto& x = members[i];
            expect(seen.insert(x).second, x.to_string() + " lies in two classes");
            expect(validate(p, x).n == n, "rank not constant on class");
            expect(p.admits(x.defect()), "member defect outside E");
            expect(cls.vector_of(x) == chars[i], "members not in vector order");
            expect(cls.member(chars[i]) == x, "class_member does not invert class_vector");
            if (p.s == 0) {
              Symbol flipped(x.row_b(), x.row_a());
              expect(validate(p, flipped) == RankDefect{n, -x.defect()}, "flip does not negate defect");
              expect(similar(p, x, flipped), "flip leaves the class");
            }
          }
        }
        expect(total == family.size(), "classes do not partition the family at " + params_text(p));
        for (const auto& x : family) expect(seen.count(x) == 1, x.to_string() + " missing from classes");
      }
    }
    summary << class_count << " classes";
  });
}

CheckResult check_c_sequences(int max_n) {
  return run_check("c-sequences", [=](std::ostream& summary) {
    std::size_t count = 0;
    for (int n = 0; n <= max_n; ++n) {
      for (auto [kind, total] : {std::pair{MarkedKind::v, 2 * n}, std::pair{MarkedKind::v_prime, 2 * n},
                                 std::pair{MarkedKind::v_double_prime, 2 * n},
                                 std::pair{MarkedKind::v_double_prime, 2 * n + 1}}) {
        for (const auto& mp : enumerate_marked(kind, total)) {
          auto c = c_sequence(kind, mp);
          expect(std::is_sorted(c.begin(), c.end()), "c-sequence of " + mp.to_string() + " not increasing");
          expect(std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }), "negative c entry");
          // every halving in the formulas must be exact
          const int lower = kind == MarkedKind::v_double_prime ? 1 : 0;
          for (const auto& block : mp.blocks()) {
            int lam = mp.parts()[block.first] - lower;
            if (block.size == 1) expect(lam % 2 == 0, "inexact halving in " + mp.to_string());
          }
          if (kind == MarkedKind::v_prime) {
            auto full = c_sequence(MarkedKind::v, mp);
            for (std::size_t i = 0; i < c.size(); ++i) expect(c[i] == full[i] - 1, "c' != c - 1");
          }
          ++count;
        }
      }
    }
    summary << count << " marked partitions";
  });
}

CheckResult check_bijectivity(GroupCase group, int max_n) {
  return run_check("bijectivity " + std::string(to_string(group)), [=](std::ostream& summary) {
    std::size_t data = 0;
    for (int n = 0; n <= max_n; ++n) {
      Correspondence corr(group, n);
      const auto& cfg = corr.config();
      std::set<Symbol> image;
      std::set<SpringerLabel> labels;
      for (const auto& e : corr.entries()) {
        image.insert(e.symbol);
        labels.insert(e.label);
        expect(corr.inverse(e.label) == e.datum, "inverse(map) != id at " + e.datum.mp.to_string());
        expect(corr.from_symbol(e.symbol) == e.datum, "from_symbol(to_symbol) != id");
        auto again = corr.map(e.datum.mp, e.datum.chi);
        expect(again == e.label, "map not deterministic");
      }
      expect(image.size() == corr.entries().size() && labels.size() == corr.entries().size(),
             "map not injective at n=" + std::to_string(n));
      auto family = enumerate_family(cfg.params, cfg.symbol_rank);
      expect(image == std::set<Symbol>(family.begin(), family.end()),
             "image is not the symbol family at n=" + std::to_string(n));
      // target blocks written from the per-case rank formulas
      std::set<SpringerLabel> target;
      for (int d = -2 * n - 6; d <= 2 * n + 6; ++d) {
        if (!cfg.params.admits(d)) continue;
        for (auto& bp : enumerate_bipartitions(target_weyl_rank(group, n, d))) target.insert({d, bp});
      }
      expect(labels == target, "labels are not the target decomposition at n=" + std::to_string(n) + " (" +
                                   std::to_string(labels.size()) + " vs " + std::to_string(target.size()) + ")");
      for (const auto& label : target) {
        auto datum = corr.inverse(label);
        expect(corr.map(datum.mp, datum.chi) == label, "map(inverse) != id");
      }
      data += corr.entries().size();
    }
    summary << data << " unipotent data";
  });
}

CheckResult check_basis_coherence(GroupCase group, int max_n) {
  return run_check("basis coherence " + std::string(to_string(group)), [=](std::ostream& summary) {
    std::size_t count = 0;
    for (int n = 0; n <= max_n; ++n) {
      auto cfg = configure(group, n);
      for (const auto& mp : enumerate_marked(cfg.kind, cfg.total)) {
        auto c = c_sequence(cfg.kind, mp);
        std::vector<int> a, b;
        for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? a : b).push_back(c[i]);
        Symbol sym(a, b);
        expect(validate(cfg.params, sym).n == cfg.symbol_rank, "interleaved rank for " + mp.to_string());
        auto cls = SimilarityClass::of(cfg.params, sym);
        auto space = a_space(cfg.kind, mp).space;
        expect(space.basis_size() == cls.proper_count(),
               "basis size " + std::to_string(space.basis_size()) + " vs " + std::to_string(cls.proper_count()) +
                   " proper intervals for " + mp.to_string());
        expect(space.dimension() == cls.dimension(), "dimension after quotient for " + mp.to_string());
        ++count;
      }
    }
    summary << count << " marked partitions";
  });
}

CheckResult check_cardinality_identity(GroupCase group, int max_n) {
  return run_check("cardinality identity " + std::string(to_string(group)), [=](std::ostream& summary) {
    for (int n = 0; n <= max_n; ++n) {
      auto cfg = configure(group, n);
      std::int64_t lhs = 0;
      for (const auto& mp : enumerate_marked(cfg.kind, cfg.total)) {
        lhs += std::int64_t{1} << a_space(cfg.kind, mp).space.dimension();
      }
      std::int64_t rhs = 0;
      for (int d = -2 * n - 6; d <= 2 * n + 6; ++d) {
        if (cfg.params.admits(d)) rhs += count_p2(cfg.symbol_rank - rank_offset(4, cfg.params.s, d));
      }
      expect(lhs == rhs, "n=" + std::to_string(n) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
    }
    summary << "n <= " << max_n;
  });
}

namespace {

// Parts 3,7,11,... or 1,5,9,... (A) / 2,6,10,... with an odd count (D).
bool progression_from(const std::vector<int>& parts, int first) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] != first + 4 * static_cast<int>(i)) return false;
  return true;
}

}  // namespace

CheckResult check_cuspidal(int max_size) {
  return run_check("cuspidal data", [=](std::ostream& summary) {
    std::size_t found = 0;
    for (int m = 3; m <= max_size; ++m) {
      auto group = m % 2 == 1 ? GroupCase::a_odd_outer : GroupCase::a_even_outer;
      auto datum = cuspidal_datum(group, m / 2);
      expect(datum.has_value() == (counting::cuspidal_predicate(counting::Family::a, m) == 1),
             "A-family existence at m=" + std::to_string(m));
      if (datum) {
        const auto& parts = datum->mp.parts();
        expect(progression_from(parts, 3) || progression_from(parts, 1),
               "A-family shape " + datum->mp.to_string() + " at m=" + std::to_string(m));
        ++found;
      }
    }
    for (int m = 4; m <= max_size; ++m) {
      auto datum = cuspidal_datum(GroupCase::o_outer, m);
      expect(datum.has_value() == (counting::cuspidal_predicate(counting::Family::d, m) == 1),
             "D-family existence at m=" + std::to_string(m));
      if (datum) {
        const auto& parts = datum->mp.parts();
        expect(progression_from(parts, 2) && parts.size() % 2 == 1,
               "D-family shape " + datum->mp.to_string() + " at m=" + std::to_string(m));
        ++found;
      }
    }
    summary << found << " cuspidal data up to size " << max_size;
  });
}

CheckResult check_spin(int max_n) {
  return run_check("spin correspondence", [=](std::ostream& summary) {
    std::size_t count = 0;
    for (int n = 0; n <= max_n; ++n) {
      auto xn = spin::enumerate_xn(n);
      std::set<spin::SpinLabel> image;
      for (const auto& lambda : xn) {
        auto entries = spin::modify(lambda);
        int last_a = 0, last_b = 0, sum = 0;
        for (const auto& e : entries) {
          expect(e.value >= 0, "negative modified entry for " + lambda.to_string());
          int& last = e.mark == spin::Mark::a ? last_a : last_b;
          expect(e.value >= last, "marked entries not increasing for " + lambda.to_string());
          last = e.value;
          sum += e.value;
        }
        auto label = spin::spin_springer(lambda);
        expect(((label.t - n) % 4 + 4) % 4 == 0, "t not congruent to n mod 4 for " + lambda.to_string());
        expect(4 * sum == n - 2 * label.t * label.t + label.t, "sum identity for " + lambda.to_string());
        expect(label.bp.size() == sum, "label size for " + lambda.to_string());
        expect(image.insert(label).second, "spin map not injective at " + lambda.to_string());
        expect(spin::spin_springer_inverse(n, label) == lambda, "inverse for " + lambda.to_string());
        ++count;
      }
      std::set<spin::SpinLabel> target;
      std::int64_t expected = 0;
      for (int t = -n - 4; t <= n + 4; ++t) {
        if (((t - n) % 4 + 4) % 4 != 0) continue;
        int rank = spin::weyl_rank(n, t);
        if (rank < 0) continue;
        expected += count_p2(rank);
        for (auto& bp : enumerate_bipartitions(rank)) target.insert({t, bp});
      }
      expect(static_cast<std::int64_t>(xn.size()) == expected, "|X_n| at n=" + std::to_string(n));
      expect(image == target, "spin image is not the target at n=" + std::to_string(n));
    }
    summary << count << " partitions";
  });
}

CheckResult check_census(int max_formula_m, int max_enumeration_m) {
  return run_check("census identities", [=](std::ostream& summary) {
    for (int m = 0; m <= max_formula_m; ++m) {
      auto a = counting::census_a(m, max_enumeration_m);
      expect(a.formula_count == count_p(m), "A formula != p(m) at m=" + std::to_string(m));
      expect(a.agree, "A enumeration disagrees at m=" + std::to_string(m));
    }
    for (int m = 0; m <= max_enumeration_m; ++m) {
      auto d = counting::census_d(m, max_enumeration_m);
      expect(d.enumeration_count.has_value() && d.agree, "D enumeration disagrees at m=" + std::to_string(m));
    }
    summary << "A up to " << max_formula_m << ", enumeration up to " << max_enumeration_m;
  });
}

CheckResult check_sporadic() {
  return run_check("sporadic constants", [](std::ostream& summary) {
    for (const auto& r : counting::sporadic_checks()) {
      expect(r.agree, std::string(counting::to_string(r.family)) + " constants disagree");
      summary << counting::to_string(r.family) << "=" << r.formula_count << " ";
    }
  });
}

std::vector<CheckResult> run_all(int max_n) {
  std::vector<CheckResult> out;
  out.push_back(check_gf2());
  out.push_back(check_partition_counts(std::max(max_n, 10)));
  out.push_back(check_enumeration_oracle(max_n, 7));
  out.push_back(check_symbol_cardinalities(max_n, 7));
  out.push_back(check_shift_and_similarity(max_n));
  out.push_back(check_class_structure(max_n));
  out.push_back(check_c_sequences(max_n));
  for (auto g : {GroupCase::sp, GroupCase::o_outer, GroupCase::a_odd_outer, GroupCase::a_even_outer}) {
    out.push_back(check_bijectivity(g, max_n));
    out.push_back(check_basis_coherence(g, max_n));
    out.push_back(check_cardinality_identity(g, max_n));
  }
  out.push_back(check_cuspidal(max_n + 3));
  out.push_back(check_spin(2 * max_n));
  out.push_back(check_census(40, max_n));
  out.push_back(check_sporadic());
  return out;
}

}  // namespace springer::checks
