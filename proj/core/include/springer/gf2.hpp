#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace springer::gf2 {

/// A vector over the two-element field. Coordinate 0 is printed first.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : bits_(length, 0) {}

  static BitVector zeros(std::size_t length) { return BitVector(length); }
  static BitVector ones(std::size_t length);
  /// Parses "0101"; throws Error(parse_error) on any other character.
  static BitVector parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  bool is_zero() const noexcept;

  BitVector& operator+=(const BitVector& other);
  friend BitVector operator+(BitVector lhs, const BitVector& rhs) {
    lhs += rhs;
    return lhs;
  }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// An F2 space presented by generators s_0..s_{g-1} subject to relations of
/// the two shapes s_i = s_j and s_i = 0, optionally divided by the sum of
/// its surviving basis vectors.
///
/// Surviving classes (identification classes containing no killed generator)
/// form the canonical basis, ordered by their least generator index.
class PresentedSpace {
 public:
  using Identification = std::pair<std::size_t, std::size_t>;

  PresentedSpace() = default;
  PresentedSpace(std::size_t generator_count,
                 std::span<const Identification> identifications,
                 std::span<const std::size_t> kills,
                 bool quotient_by_all_ones);

  std::size_t generator_count() const noexcept { return class_of_.size(); }
  bool quotient_by_all_ones() const noexcept { return quotient_; }

  /// Canonical basis: each entry lists the generators of one surviving class.
  const std::vector<std::vector<std::size_t>>& basis() const noexcept {
    return basis_;
  }
  std::size_t basis_size() const noexcept { return basis_.size(); }
  std::size_t dimension() const noexcept;

  /// Basis position of generator i, or -1 when its class is killed.
  std::ptrdiff_t basis_index(std::size_t generator) const {
    return class_of_.at(generator);
  }

 private:
  std::vector<std::ptrdiff_t> class_of_;
  std::vector<std::vector<std::size_t>> basis_;
  bool quotient_ = false;
};

/// Convenience constructor mirroring the relation description.
PresentedSpace build_space(std::size_t generator_count,
                           std::span<const PresentedSpace::Identification> identifications,
                           std::span<const std::size_t> kills,
                           bool quotient_by_all_ones);

/// For a quotient space, returns the lexicographically smaller of v and
/// v + (1,...,1); otherwise returns v unchanged.
BitVector canonicalize_coset(BitVector v, bool quotient_by_all_ones);

/// All elements of the dual, as vectors over the canonical basis in
/// lexicographic order. Quotient spaces yield canonical coset representatives
/// of full basis length.
std::vector<BitVector> characters(const PresentedSpace& space);

}  // namespace springer::gf2
