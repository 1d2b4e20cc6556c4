#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace springer {

enum class Errc {
  // symbols
  gap_violation,
  bound_violation,
  non_integral_rank,
  parity_mismatch,
  not_in_class,
  length_mismatch,
  // marked partitions
  bad_block_shape,
  parity_violation,
  pair_mismatch,
  singleton_pair_clash,
  zero_count,
  part_count_parity,
  // correspondences
  basis_count_mismatch,
  invalid_character,
  not_in_image,
  not_in_xn,
  // plumbing
  parse_error,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// The message names the violated condition in plain words.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for failures that mean "the mathematics did not close up"
  /// (as opposed to bad input).
  bool is_logical() const noexcept {
    return code_ == Errc::not_in_image || code_ == Errc::basis_count_mismatch;
  }

 private:
  Errc code_;
};

}  // namespace springer
