#include "springer/error.hpp"

namespace springer {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::gap_violation: return "GapViolation";
    case Errc::bound_violation: return "BoundViolation";
    case Errc::non_integral_rank: return "NonIntegralRank";
    case Errc::parity_mismatch: return "ParityMismatch";
    case Errc::not_in_class: return "NotInClass";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::bad_block_shape: return "BadBlockShape";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::pair_mismatch: return "PairMismatch";
    case Errc::singleton_pair_clash: return "SingletonPairClash";
    case Errc::zero_count: return "ZeroCount";
    case Errc::part_count_parity: return "PartCountParity";
    case Errc::basis_count_mismatch: return "BasisCountMismatch";
    case Errc::invalid_character: return "InvalidCharacter";
    case Errc::not_in_image: return "NotInImage";
    case Errc::not_in_xn: return "NotInXn";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace springer
