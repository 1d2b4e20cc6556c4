#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/error.hpp"
#include "springer/gf2.hpp"

namespace springer {

/// The three marked-partition parametrizations of unipotent classes.
enum class MarkedKind {
  v,               // V_{2n}: odd part count, at most one zero, even singletons
  v_prime,         // V'_{2n}: V_{2n} with all parts positive
  v_double_prime,  // V''_N: positive parts, odd singletons
};

std::string_view to_string(MarkedKind kind) noexcept;

/// A weakly increasing sequence of naturals with a block structure of
/// singletons and adjacent pairs.
///
/// Text form: one bracket per block, e.g. "(11)(2)(44)" for parts 1,1,2,4,4
/// with blocks {1,2},{3},{4,5}. Parts >= 10 are written with commas inside
/// their bracket, "(10,10)"; a singleton whose digits would read as a
/// one-digit pair gets a trailing comma, "(11,)".
class MarkedPartition {
 public:
  struct Block {
    std::size_t first;
    std::size_t size;  // 1 or 2
  };

  MarkedPartition() = default;
  /// Throws BadBlockShape unless block sizes are 1 or 2 and tile the parts,
  /// and the parts are weakly increasing naturals.
  MarkedPartition(std::vector<int> parts, std::vector<int> block_sizes);

  static MarkedPartition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const noexcept { return parts_; }
  const std::vector<int>& block_sizes() const noexcept { return blocks_; }
  std::vector<Block> blocks() const;
  bool is_singleton(std::size_t position) const;
  int total() const noexcept;

  friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;
  friend auto operator<=>(const MarkedPartition&, const MarkedPartition&) = default;

 private:
  std::vector<int> parts_;
  std::vector<int> blocks_;
  std::vector<bool> singleton_;
};

/// The first violated condition, if any.
std::optional<Error> check_marked(MarkedKind kind, int total, const MarkedPartition& mp);
/// Throws the first violated condition.
void validate_marked(MarkedKind kind, int total, const MarkedPartition& mp);

/// All valid marked partitions, ordered by partition then by block structure
/// (singleton before pair at the first position where they differ).
std::vector<MarkedPartition> enumerate_marked(MarkedKind kind, int total);

/// The c, c' or c'' sequence attached to a valid marked partition.
std::vector<int> c_sequence(MarkedKind kind, const MarkedPartition& mp);

/// A_{lambda,delta}, the dual model of A'_{lambda,delta}, or A''_{lambda,delta}.
/// Generator g of `space` sits at part position generator_positions[g].
struct ASpace {
  gf2::PresentedSpace space;
  std::vector<std::size_t> generator_positions;
};

ASpace a_space(MarkedKind kind, const MarkedPartition& mp);

}  // namespace springer
