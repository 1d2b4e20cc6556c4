#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace springer::counting {

enum class Family {
  a,              // outer component over type A_{m-1}
  d,              // O_{2m} - SO_{2m}
  d4_triality,    // D_4 with triality, p = 3
  e6_outer,       // E_6 outer component, p = 2
};

std::string_view to_string(Family family) noexcept;

/// One count of unipotent classes (with local systems) on an outer
/// component, by closed formula and, where available, by enumeration.
struct CensusReport {
  Family family;
  int m;
  std::int64_t formula_count;
  std::optional<std::int64_t> enumeration_count;
  bool agree;
};

/// Sum over s(s+1)/2 + 2k = m of p2(k), enumerated as the sum of
/// 2^dim A''_{lambda,delta} over V''_m when m <= enumeration_limit.
CensusReport census_a(int m, int enumeration_limit = 20);

/// Sum over odd s with s^2 + k = m of p2(k), enumerated as the sum of
/// 2^dim A'* over V'_{2m} when m <= enumeration_limit.
CensusReport census_d(int m, int enumeration_limit = 16);

/// Stored constants for the two exceptional outer components:
/// 7 = 1 + 6 (D_4 triality) and 28 = 1 + 2 + 25 (E_6).
std::vector<CensusReport> sporadic_checks();

/// Whether the outer component carries a cuspidal pair: for A, m a triangular
/// number >= 3; for D, m an odd square >= 9; the exceptional families always.
/// Meaningful for m >= 3 (A) and m >= 4 (D).
int cuspidal_predicate(Family family, int m);

}  // namespace springer::counting
