#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// A partition stored with weakly increasing parts, all >= 1.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts and drops zeros. Throws on negative parts.
  static Partition from_parts(std::vector<int> parts);
  /// "1,3" or "" for the empty partition. Parts may be given in any order.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// An ordered pair of partitions; labels an irreducible representation of
/// the Weyl group of type B_{|alpha|+|beta|}.
struct Bipartition {
  Partition alpha;
  Partition beta;

  int size() const noexcept { return alpha.size() + beta.size(); }
  /// "alpha|beta", e.g. "1|" or "1,2|3".
  std::string to_string() const;
  static Bipartition parse(std::string_view text);

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Partitions of n in lexicographic order of their increasing part
/// sequences: 3 -> (1,1,1), (1,2), (3). Empty for n < 0.
std::vector<Partition> enumerate_partitions(int n);

/// Bipartitions of n ordered by |alpha| descending, then alpha, then beta.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// Number of partitions of n (0 for n < 0). Throws std::out_of_range when
/// the value would overflow 64 bits.
std::int64_t count_p(int n);

/// Number of bipartitions of n, i.e. |Irr W(B_n)|, with count_p2(0) = 1.
std::int64_t count_p2(int n);

}  // namespace springer
