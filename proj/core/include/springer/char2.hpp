#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "springer/gf2.hpp"
#include "springer/symbols.hpp"
#include "springer/unipotent.hpp"

namespace springer {

/// The four disconnected-or-symplectic groups in characteristic 2 whose
/// generalized Springer correspondence is computed here.
enum class GroupCase {
  sp,            // Sp_{2n}
  o_outer,       // O_{2n} - SO_{2n}
  a_odd_outer,   // outer component of GL_{2n+1} extended by transpose-inverse
  a_even_outer,  // outer component of GL_{2n} extended by transpose-inverse
};

std::string_view to_string(GroupCase group) noexcept;
/// Accepts "sp", "o-outer", "a-odd", "a-even".
GroupCase parse_group_case(std::string_view text);

struct CaseConfig {
  GroupCase group;
  int n;              // group size parameter
  MarkedKind kind;    // which marked partitions parametrize the classes
  int total;          // their sum: 2n, 2n, 2n+1 or 2n
  SymbolParams params;
  int symbol_rank;    // n, or n-1 for o_outer
};

CaseConfig configure(GroupCase group, int n);

/// A pair (class, local system): a marked partition and a character of its
/// component-group space.
struct UnipotentDatum {
  MarkedPartition mp;
  gf2::BitVector chi;
  friend bool operator==(const UnipotentDatum&, const UnipotentDatum&) = default;
  friend auto operator<=>(const UnipotentDatum&, const UnipotentDatum&) = default;
};

/// Output label: the defect (block index) and a bipartition naming an
/// irreducible representation of the Weyl group of that block.
using SpringerLabel = StaircaseLabel;

/// Brings a character to the canonical representation used by the A-space:
/// full basis length, coset-canonical for quotient spaces. For quotient
/// spaces a vector one bit shorter is read with an implicit leading 0.
/// Throws InvalidCharacter.
gf2::BitVector normalize_character(const gf2::PresentedSpace& space, const gf2::BitVector& chi);

/// Sends (mp, chi) to a symbol: interleave the c-sequence into (c1,c3,..;c2,..),
/// take its similarity class and map chi across the order-preserving
/// identification of the A-space basis with the proper intervals.
Symbol to_symbol(const CaseConfig& config, const MarkedPartition& mp, const gf2::BitVector& chi);

/// The whole correspondence for one (group, n), tabulated once. Immutable
/// after construction and safe for concurrent lookups.
class Correspondence {
 public:
  struct Entry {
    UnipotentDatum datum;
    Symbol symbol;
    SpringerLabel label;
  };

  /// Throws Error(not_in_image) if two data share a symbol.
  Correspondence(GroupCase group, int n);

  const CaseConfig& config() const noexcept { return config_; }
  /// In enumerate_marked order, characters in lexicographic order.
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  Symbol to_symbol(const MarkedPartition& mp, const gf2::BitVector& chi) const;
  /// Throws NotInImage.
  UnipotentDatum from_symbol(const Symbol& sym) const;
  SpringerLabel map(const MarkedPartition& mp, const gf2::BitVector& chi) const;
  /// Throws NotInImage.
  UnipotentDatum inverse(const SpringerLabel& label) const;

 private:
  CaseConfig config_;
  std::vector<Entry> entries_;
  std::map<Symbol, std::size_t> by_symbol_;
  std::map<SpringerLabel, std::size_t> by_label_;
};

SpringerLabel springer_map(const CaseConfig& config, const MarkedPartition& mp,
                           const gf2::BitVector& chi);

/// The datum landing in a Weyl-rank-0 block, if the case has one.
std::optional<UnipotentDatum> cuspidal_datum(GroupCase group, int n);

}  // namespace springer
