#pragma once

#include <vector>

#include "springer/partitions.hpp"

namespace springer::spin {

/// 0 for even s, (-1)^((s-1)/2) for odd s.
int d_of(int s) noexcept;

/// Membership in X_n: even values occur with even multiplicity, odd values
/// at most once.
bool in_xn(const Partition& lambda);

/// X_n in enumerate_partitions order.
std::vector<Partition> enumerate_xn(int n);

enum class Mark { a, b };

struct MarkedEntry {
  int value;
  Mark mark;
  int source_index;  // 1-based position of the part it came from
  friend bool operator==(const MarkedEntry&, const MarkedEntry&) = default;
};

/// The entry-modification rules, with t_i the signed count of the odd parts
/// before position i. Runs of equal even parts are rewritten as alternating
/// a,b pairs. Throws NotInXn.
std::vector<MarkedEntry> modify(const Partition& lambda);

struct SpinLabel {
  int t;
  Bipartition bp;
  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;
  friend auto operator<=>(const SpinLabel&, const SpinLabel&) = default;
};

/// t = sum of d(lambda_i); the label is (alpha, beta) for t >= 1 and
/// (beta, alpha) for t <= 0, zeros dropped. |label| = (n - 2t^2 + t) / 4.
SpinLabel spin_springer(const Partition& lambda);

/// The Weyl rank (n - 2t^2 + t) / 4, or -1 when it is not a natural number.
int weyl_rank(int n, int t) noexcept;

/// The unique lambda in X_n with the given label. Throws NotInImage.
Partition spin_springer_inverse(int n, const SpinLabel& label);

}  // namespace springer::spin
