#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/gf2.hpp"
#include "springer/partitions.hpp"

namespace springer {

/// The admissible defects of a symbol family.
enum class DefectSet {
  even,          // 2Z
  odd,           // 2Z+1
  positive_odd,  // 2N+1, the only choice when s = 0
};

std::string_view to_string(DefectSet set) noexcept;
/// Accepts "even", "odd" and "odd-positive".
DefectSet parse_defect_set(std::string_view text);

struct SymbolParams {
  int rho = 4;
  int s = 0;
  DefectSet defects = DefectSet::positive_odd;

  bool admits(int defect) const noexcept;
  /// Throws Error(invalid_argument) unless the defect set matches s
  /// (positive-odd exactly when s = 0) and rho, s >= 0.
  void check_family() const;

  friend bool operator==(const SymbolParams&, const SymbolParams&) = default;
};

/// An ordered pair of rows (A;B). Rows are kept as given; validate() checks
/// them against a parameter set.
class Symbol {
 public:
  Symbol() = default;
  Symbol(std::vector<int> row_a, std::vector<int> row_b)
      : a_(std::move(row_a)), b_(std::move(row_b)) {}

  /// "(0,4;2)", "(1;)", "(;1)"; an empty row may also be written as "∅".
  static Symbol parse(std::string_view text);

  const std::vector<int>& row_a() const noexcept { return a_; }
  const std::vector<int>& row_b() const noexcept { return b_; }
  int defect() const noexcept {
    return static_cast<int>(a_.size()) - static_cast<int>(b_.size());
  }
  int total_size() const noexcept { return static_cast<int>(a_.size() + b_.size()); }

  std::string to_string() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::vector<int> a_;
  std::vector<int> b_;
};

struct RankDefect {
  int n;
  int d;
  friend bool operator==(const RankDefect&, const RankDefect&) = default;
};

/// n_{rho,s,d}: the rank carried by the pure staircase of defect d.
int rank_offset(int rho, int s, int d);

/// Checks the gap, bound and sum conditions and recovers (n, d). Does not
/// require d to lie in the defect set.
RankDefect validate(const SymbolParams& params, const Symbol& sym);

/// Prepends 0 to A and s to B and adds rho to every old entry.
Symbol shift(const SymbolParams& params, const Symbol& sym);
/// Inverse of shift; absent when A or B is empty, a_1 != 0 or b_1 != s.
std::optional<Symbol> unshift(const SymbolParams& params, const Symbol& sym);
/// Maximally unshifted representative of the shift class.
Symbol normal_form(const SymbolParams& params, const Symbol& sym);

struct StaircaseLabel {
  int d;
  Bipartition bp;
  friend bool operator==(const StaircaseLabel&, const StaircaseLabel&) = default;
  friend auto operator<=>(const StaircaseLabel&, const StaircaseLabel&) = default;
};

/// Pads bp with the fewest leading zeros giving row lengths m, m' with
/// m - m' = d, then adds the staircase. The result is a normal form of rank
/// |bp| + rank_offset(rho, s, d).
Symbol staircase_to_symbol(const SymbolParams& params, int d, const Bipartition& bp);
StaircaseLabel staircase_from_symbol(const SymbolParams& params, const Symbol& sym);

/// Normal forms of rank n and defect d, in bipartition order.
std::vector<Symbol> enumerate(const SymbolParams& params, int n, int d);

/// Union over the admissible defects (ascending) of enumerate(). Requires
/// rho >= 1 so that only finitely many defects contribute.
std::vector<Symbol> enumerate_family(const SymbolParams& params, int n);

/// Similarity: after shifting to a common size, equal union multisets and
/// equal intersections. Throws ParityMismatch if the sizes differ in parity.
bool similar(const SymbolParams& params, const Symbol& x, const Symbol& y);

struct Interval {
  std::vector<int> entries;
  bool proper;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Maximal runs of (A u B) - (A n B) with consecutive gaps < rho, each
/// flagged proper when it avoids [0, s-1].
std::vector<Interval> intervals(const SymbolParams& params, const Symbol& sym);

/// A similarity class together with its F2 structure V_c.
///
/// The class is keyed by the union multiset and the intersection of any
/// member, reduced to the smallest size the shift rule allows. The bijection
/// with V_c sends a member to the vector whose i-th bit is 1 iff the least
/// entry of the i-th proper interval lies in row B; for s = 0 the vector is
/// read modulo the all-ones vector.
class SimilarityClass {
 public:
  /// The class of a valid symbol. Requires rho > s.
  static SimilarityClass of(const SymbolParams& params, const Symbol& sym);

  const SymbolParams& params() const noexcept { return params_; }
  int rank() const noexcept { return n_; }

  const std::vector<int>& union_entries() const noexcept { return union_; }
  const std::vector<int>& intersection_entries() const noexcept { return intersection_; }
  /// Intervals at the reduced key size.
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t proper_count() const noexcept;

  /// V_c: one generator per proper interval, divided by the all-ones vector
  /// when s = 0.
  const gf2::PresentedSpace& space() const noexcept { return space_; }
  std::size_t dimension() const noexcept { return space_.dimension(); }

  /// Normal forms of all members, ordered by their vectors.
  const std::vector<Symbol>& members() const noexcept { return members_; }

  bool contains(const Symbol& sym) const;
  /// class_vector. Throws NotInClass.
  gf2::BitVector vector_of(const Symbol& member) const;
  /// class_member. Throws LengthMismatch or NotInClass.
  Symbol member(const gf2::BitVector& v) const;

  /// Same key, same class.
  friend bool operator==(const SimilarityClass& x, const SimilarityClass& y) {
    return x.params_ == y.params_ && x.union_ == y.union_ &&
           x.intersection_ == y.intersection_;
  }

 private:
  SimilarityClass() = default;
  std::optional<Symbol> assemble(std::vector<int> union_entries,
                                 std::vector<int> intersection_entries,
                                 const gf2::BitVector& bits) const;

  SymbolParams params_;
  int n_ = 0;
  std::vector<int> union_;
  std::vector<int> intersection_;
  std::vector<Interval> intervals_;
  gf2::PresentedSpace space_;
  std::vector<Symbol> members_;
};

/// Partitions enumerate_family(params, n) into similarity classes, ordered by
/// first appearance in the family.
std::vector<SimilarityClass> similarity_classes(const SymbolParams& params, int n);

/// Free-function spellings of SimilarityClass::vector_of / member.
gf2::BitVector class_vector(const SimilarityClass& cls, const Symbol& member);
Symbol class_member(const SimilarityClass& cls, const gf2::BitVector& v);

}  // namespace springer
