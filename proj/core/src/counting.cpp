#include "springer/counting.hpp"

#include "springer/partitions.hpp"
#include "springer/unipotent.hpp"

namespace springer::counting {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::a: return "a";
    case Family::d: return "d";
    case Family::d4_triality: return "d4-triality";
    case Family::e6_outer: return "e6-outer";
  }
  return "?";
}

namespace {

std::int64_t sum_of_dual_sizes(MarkedKind kind, int total) {
  std::int64_t sum = 0;
  for (const auto& mp : enumerate_marked(kind, total)) {
    sum += std::int64_t{1} << a_space(kind, mp).space.dimension();
  }
  return sum;
}

CensusReport finish(Family family, int m, std::int64_t formula, std::optional<std::int64_t> enumerated) {
  return {family, m, formula, enumerated, !enumerated || *enumerated == formula};
}

}  // namespace

CensusReport census_a(int m, int enumeration_limit) {
  std::int64_t formula = 0;
  for (int s = 0; s * (s + 1) / 2 <= m; ++s) {
    int rest = m - s * (s + 1) / 2;
    if (rest % 2 == 0) formula += count_p2(rest / 2);
  }
  std::optional<std::int64_t> enumerated;
  if (m >= 0 && m <= enumeration_limit) enumerated = sum_of_dual_sizes(MarkedKind::v_double_prime, m);
  return finish(Family::a, m, formula, enumerated);
}

CensusReport census_d(int m, int enumeration_limit) {
  std::int64_t formula = 0;
  for (int s = 1; s * s <= m; s += 2) formula += count_p2(m - s * s);
  std::optional<std::int64_t> enumerated;
  if (m >= 0 && m <= enumeration_limit) enumerated = sum_of_dual_sizes(MarkedKind::v_prime, 2 * m);
  return finish(Family::d, m, formula, enumerated);
}

std::vector<CensusReport> sporadic_checks() {
  // Irreducible characters of the relative Weyl groups: G2 has 6, A1 has 2,
  // F4 has 25; the leading 1 is the cuspidal pair itself.
  constexpr std::int64_t kD4TrialityClasses = 7;
  constexpr std::int64_t kE6OuterClasses = 28;
  constexpr std::int64_t kIrrG2 = 6, kIrrA1 = 2, kIrrF4 = 25;
  return {
      finish(Family::d4_triality, 4, kD4TrialityClasses, 1 + kIrrG2),
      finish(Family::e6_outer, 6, kE6OuterClasses, 1 + kIrrA1 + kIrrF4),
  };
}

int cuspidal_predicate(Family family, int m) {
  switch (family) {
    case Family::a:
      for (int s = 2; s * (s + 1) / 2 <= m; ++s) {
        if (s * (s + 1) / 2 == m) return 1;
      }
      return 0;
    case Family::d:
      for (int s = 3; s * s <= m; s += 2) {
        if (s * s == m) return 1;
      }
      return 0;
    case Family::d4_triality:
    case Family::e6_outer:
      return 1;
  }
  return 0;
}

}  // namespace springer::counting
