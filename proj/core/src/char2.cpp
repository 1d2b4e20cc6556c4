#include "springer/char2.hpp"

#include <algorithm>

#include "springer/error.hpp"

namespace springer {

std::string_view to_string(GroupCase group) noexcept {
  switch (group) {
    case GroupCase::sp: return "sp";
    case GroupCase::o_outer: return "o-outer";
    case GroupCase::a_odd_outer: return "a-odd";
    case GroupCase::a_even_outer: return "a-even";
  }
  return "?";
}

GroupCase parse_group_case(std::string_view text) {
  if (text == "sp") return GroupCase::sp;
  if (text == "o-outer") return GroupCase::o_outer;
  if (text == "a-odd") return GroupCase::a_odd_outer;
  if (text == "a-even") return GroupCase::a_even_outer;
  throw Error(Errc::parse_error,
              "case must be sp, o-outer, a-odd or a-even: \"" + std::string(text) + "\"");
}

CaseConfig configure(GroupCase group, int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "group size parameter must be >= 0");
  switch (group) {
    case GroupCase::sp:
      return {group, n, MarkedKind::v, 2 * n, {4, 2, DefectSet::odd}, n};
    case GroupCase::o_outer:
      return {group, n, MarkedKind::v_prime, 2 * n, {4, 0, DefectSet::positive_odd}, n - 1};
    case GroupCase::a_odd_outer:
      return {group, n, MarkedKind::v_double_prime, 2 * n + 1, {4, 1, DefectSet::odd}, n};
    case GroupCase::a_even_outer:
      return {group, n, MarkedKind::v_double_prime, 2 * n, {4, 1, DefectSet::even}, n};
  }
  throw Error(Errc::invalid_argument, "unknown group case");
}

gf2::BitVector normalize_character(const gf2::PresentedSpace& space, const gf2::BitVector& chi) {
  const std::size_t length = space.basis_size();
  gf2::BitVector full;
  if (chi.size() == length) {
    full = chi;
  } else if (space.quotient_by_all_ones() && length > 0 && chi.size() + 1 == length) {
    full = gf2::BitVector(length);
    for (std::size_t i = 0; i < chi.size(); ++i) full.set(i + 1, chi[i]);
  } else {
    throw Error(Errc::invalid_character,
                "character \"" + chi.to_string() + "\" does not match a basis of size " +
                    std::to_string(length));
  }
  return gf2::canonicalize_coset(std::move(full), space.quotient_by_all_ones());
}

Symbol to_symbol(const CaseConfig& config, const MarkedPartition& mp, const gf2::BitVector& chi) {
  validate_marked(config.kind, config.total, mp);
  auto c = c_sequence(config.kind, mp);
  std::vector<int> a, b;
  for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? a : b).push_back(c[i]);
  Symbol interleaved(std::move(a), std::move(b));

  auto rank = validate(config.params, interleaved);
  if (rank.n != config.symbol_rank || !config.params.admits(rank.d)) {
    throw Error(Errc::not_in_image, "interleaved symbol " + interleaved.to_string() +
                                        " has rank " + std::to_string(rank.n) + " and defect " +
                                        std::to_string(rank.d) + ", outside the target family");
  }
  auto cls = SimilarityClass::of(config.params, interleaved);
  auto aspace = a_space(config.kind, mp);
  if (aspace.space.basis_size() != cls.proper_count()) {
    throw Error(Errc::basis_count_mismatch,
                "A-space of " + mp.to_string() + " has " + std::to_string(aspace.space.basis_size()) +
                    " basis vectors but the class of " + interleaved.to_string() + " has " +
                    std::to_string(cls.proper_count()) + " proper intervals");
  }
  // both bases are ordered, so chi carries over bit for bit
  return cls.member(normalize_character(aspace.space, chi));
}

SpringerLabel springer_map(const CaseConfig& config, const MarkedPartition& mp,
                           const gf2::BitVector& chi) {
  return staircase_from_symbol(config.params, to_symbol(config, mp, chi));
}

Correspondence::Correspondence(GroupCase group, int n) : config_(configure(group, n)) {
  for (const auto& mp : enumerate_marked(config_.kind, config_.total)) {
    auto aspace = a_space(config_.kind, mp);
    for (const auto& chi : gf2::characters(aspace.space)) {
      auto sym = springer::to_symbol(config_, mp, chi);
      auto label = staircase_from_symbol(config_.params, sym);
      const std::size_t index = entries_.size();
      if (!by_symbol_.emplace(sym, index).second || !by_label_.emplace(label, index).second) {
        throw Error(Errc::not_in_image, "two unipotent data map to " + sym.to_string());
      }
      entries_.push_back({{mp, chi}, std::move(sym), std::move(label)});
    }
  }
}

Symbol Correspondence::to_symbol(const MarkedPartition& mp, const gf2::BitVector& chi) const {
  return springer::to_symbol(config_, mp, chi);
}

UnipotentDatum Correspondence::from_symbol(const Symbol& sym) const {
  auto it = by_symbol_.find(normal_form(config_.params, sym));
  if (it == by_symbol_.end()) {
    throw Error(Errc::not_in_image, sym.to_string() + " is not the image of any unipotent datum");
  }
  return entries_[it->second].datum;
}

SpringerLabel Correspondence::map(const MarkedPartition& mp, const gf2::BitVector& chi) const {
  return springer_map(config_, mp, chi);
}

UnipotentDatum Correspondence::inverse(const SpringerLabel& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) {
    throw Error(Errc::not_in_image, "label d=" + std::to_string(label.d) + ", " +
                                        label.bp.to_string() + " is not in the image");
  }
  return entries_[it->second].datum;
}

std::optional<UnipotentDatum> cuspidal_datum(GroupCase group, int n) {
  auto config = configure(group, n);
  const auto& p = config.params;
  const int bound = 2 * (p.s + std::max(config.symbol_rank, 0)) + 6;
  for (int d = -bound; d <= bound; ++d) {
    if (!p.admits(d) || config.symbol_rank != rank_offset(p.rho, p.s, d)) continue;
    Symbol target = staircase_to_symbol(p, d, Bipartition{});
    for (const auto& mp : enumerate_marked(config.kind, config.total)) {
      auto aspace = a_space(config.kind, mp);
      for (const auto& chi : gf2::characters(aspace.space)) {
        if (to_symbol(config, mp, chi) == target) return UnipotentDatum{mp, chi};
      }
    }
    throw Error(Errc::not_in_image, "no unipotent datum reaches the rank-0 block d=" + std::to_string(d));
  }
  return std::nullopt;
}

}  // namespace springer
