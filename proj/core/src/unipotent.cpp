#include "springer/unipotent.hpp"

#include <algorithm>
#include <numeric>

#include "springer/partitions.hpp"
#include "text_util.hpp"

namespace springer {

std::string_view to_string(MarkedKind kind) noexcept {
  switch (kind) {
    case MarkedKind::v: return "V";
    case MarkedKind::v_prime: return "V'";
    case MarkedKind::v_double_prime: return "V''";
  }
  return "?";
}

MarkedPartition::MarkedPartition(std::vector<int> parts, std::vector<int> block_sizes)
    : parts_(std::move(parts)), blocks_(std::move(block_sizes)), singleton_(parts_.size(), false) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] < parts_[i - 1])) {
      throw Error(Errc::bad_block_shape, "parts must be weakly increasing naturals");
    }
  }
  std::size_t pos = 0;
  for (int size : blocks_) {
    if (size != 1 && size != 2) {
      throw Error(Errc::bad_block_shape, "blocks must have one or two elements");
    }
    if (pos + static_cast<std::size_t>(size) > parts_.size()) {
      throw Error(Errc::bad_block_shape, "blocks run past the last part");
    }
    if (size == 1) singleton_[pos] = true;
    pos += static_cast<std::size_t>(size);
  }
  if (pos != parts_.size()) {
    throw Error(Errc::bad_block_shape, "blocks must cover every part exactly once");
  }
}

std::vector<MarkedPartition::Block> MarkedPartition::blocks() const {
  std::vector<Block> out;
  std::size_t pos = 0;
  for (int size : blocks_) {
    out.push_back({pos, static_cast<std::size_t>(size)});
    pos += static_cast<std::size_t>(size);
  }
  return out;
}

bool MarkedPartition::is_singleton(std::size_t position) const {
  return singleton_.at(position);
}

int MarkedPartition::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

bool ambiguous_as_pair(const std::string& digits) {
  return digits.size() == 2 && digits[0] == digits[1];
}

}  // namespace

std::string MarkedPartition::to_string() const {
  std::string out;
  for (const auto& block : blocks()) {
    std::string v = std::to_string(parts_[block.first]);
    out += '(';
    if (block.size == 2) {
      out += parts_[block.first] <= 9 ? v + v : v + "," + v;
    } else {
      out += ambiguous_as_pair(v) ? v + "," : v;
    }
    out += ')';
  }
  return out;
}

MarkedPartition MarkedPartition::parse(std::string_view text) {
  std::vector<int> parts;
  std::vector<int> sizes;
  auto t = detail::trim(text);
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '(') {
      throw Error(Errc::parse_error,
                  "marked partition must be a sequence of bracketed blocks: \"" + std::string(text) + "\"");
    }
    auto close = t.find(')', pos);
    if (close == std::string_view::npos) {
      throw Error(Errc::parse_error, "unterminated block in \"" + std::string(text) + "\"");
    }
    auto content = detail::trim(t.substr(pos + 1, close - pos - 1));
    std::vector<int> values;
    if (content.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        auto comma = content.find(',', start);
        auto token = detail::trim(content.substr(start, comma - start));
        if (!token.empty()) values.push_back(detail::parse_int(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else if (content.size() == 2 && content[0] == content[1]) {
      int v = detail::parse_int(content.substr(0, 1));
      values = {v, v};
    } else {
      values.push_back(detail::parse_int(content));
    }
    if (values.empty() || values.size() > 2) {
      throw Error(Errc::bad_block_shape,
                  "each block holds one or two parts: \"(" + std::string(content) + ")\"");
    }
    if (values.size() == 2 && values[0] != values[1]) {
      throw Error(Errc::pair_mismatch,
                  "the two parts of a block must be equal: \"(" + std::string(content) + ")\"");
    }
    parts.insert(parts.end(), values.begin(), values.end());
    sizes.push_back(static_cast<int>(values.size()));
    pos = close + 1;
    while (pos < t.size() && t[pos] == ' ') ++pos;
  }
  return MarkedPartition(std::move(parts), std::move(sizes));
}

std::optional<Error> check_marked(MarkedKind kind, int total, const MarkedPartition& mp) {
  const auto& parts = mp.parts();
  const bool double_prime = kind == MarkedKind::v_double_prime;

  if (mp.total() != total) {
    return Error(Errc::invalid_argument, "parts sum to " + std::to_string(mp.total()) +
                                             ", expected " + std::to_string(total));
  }
  if (!double_prime && parts.size() % 2 == 0) {
    return Error(Errc::part_count_parity, "the number of parts must be odd");
  }
  auto zeros = std::count(parts.begin(), parts.end(), 0);
  if (kind == MarkedKind::v && zeros > 1) {
    return Error(Errc::zero_count, "at most one part may be 0");
  }
  if (kind != MarkedKind::v && zeros > 0) {
    return Error(Errc::zero_count, "every part must be positive");
  }
  std::vector<int> singleton_values, pair_values;
  for (const auto& block : mp.blocks()) {
    int value = parts[block.first];
    if (block.size == 1) {
      bool want_odd = double_prime;
      if ((value % 2 != 0) != want_odd) {
        return Error(Errc::parity_violation,
                     std::string("a singleton block needs an ") + (want_odd ? "odd" : "even") +
                         " part, got " + std::to_string(value));
      }
      singleton_values.push_back(value);
    } else {
      if (parts[block.first + 1] != value) {
        return Error(Errc::pair_mismatch, "the two parts of a pair block must be equal");
      }
      pair_values.push_back(value);
    }
  }
  for (int v : singleton_values) {
    if (std::find(pair_values.begin(), pair_values.end(), v) != pair_values.end()) {
      return Error(Errc::singleton_pair_clash,
                   "the value " + std::to_string(v) + " occurs both as a singleton and as a pair");
    }
  }
  return std::nullopt;
}

void validate_marked(MarkedKind kind, int total, const MarkedPartition& mp) {
  if (auto err = check_marked(kind, total, mp)) throw *err;
}

namespace {

void block_structures(const std::vector<int>& parts, std::size_t pos, std::vector<int>& sizes,
                      std::vector<std::vector<int>>& out) {
  if (pos == parts.size()) {
    out.push_back(sizes);
    return;
  }
  sizes.push_back(1);
  block_structures(parts, pos + 1, sizes, out);
  sizes.back() = 2;
  if (pos + 1 < parts.size() && parts[pos] == parts[pos + 1]) {
    block_structures(parts, pos + 2, sizes, out);
  }
  sizes.pop_back();
}

}  // namespace

std::vector<MarkedPartition> enumerate_marked(MarkedKind kind, int total) {
  std::vector<MarkedPartition> out;
  for (const auto& mu : enumerate_partitions(total)) {
    std::vector<int> parts = mu.parts();
    if (kind == MarkedKind::v && parts.size() % 2 == 0) parts.insert(parts.begin(), 0);
    std::vector<std::vector<int>> structures;
    std::vector<int> sizes;
    block_structures(parts, 0, sizes, structures);
    for (auto& s : structures) {
      MarkedPartition mp(parts, std::move(s));
      if (!check_marked(kind, total, mp)) out.push_back(std::move(mp));
    }
  }
  return out;
}

std::vector<int> c_sequence(MarkedKind kind, const MarkedPartition& mp) {
  const auto& parts = mp.parts();
  std::vector<int> c(parts.size());
  // V'' uses the V formulas with every part lowered by one
  const int lower = kind == MarkedKind::v_double_prime ? 1 : 0;
  for (const auto& block : mp.blocks()) {
    const std::size_t i = block.first;
    const int lam = parts[i] - lower;
    const int stair = 2 * static_cast<int>(i);
    if (block.size == 1) {
      c[i] = lam / 2 + stair;
    } else if (lam % 2 != 0) {
      c[i] = (lam + 1) / 2 + stair;
      c[i + 1] = c[i] + 1;
    } else {
      c[i] = (lam + 2) / 2 + stair;
      c[i + 1] = c[i];
    }
  }
  if (kind == MarkedKind::v_prime) {
    for (int& x : c) x -= 1;
  }
  return c;
}

ASpace a_space(MarkedKind kind, const MarkedPartition& mp) {
  const auto& parts = mp.parts();
  const bool double_prime = kind == MarkedKind::v_double_prime;
  ASpace out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool odd = parts[i] % 2 != 0;
    // V, V': singletons and odd parts; V'': singletons and even parts
    if (mp.is_singleton(i) || (double_prime ? !odd : odd)) out.generator_positions.push_back(i);
  }
  const auto& gens = out.generator_positions;
  std::vector<gf2::PresentedSpace::Identification> identify;
  std::vector<std::size_t> kill;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int li = parts[gens[g]];
    for (std::size_t h = g + 1; h < gens.size(); ++h) {
      const int lj = parts[gens[h]];
      const int gap = lj - li;  // parts are sorted, so gap >= 0
      const bool same_parity_step = (double_prime ? li % 2 != 0 : li % 2 == 0) && gap == 2;
      if (gap == 0 || gap == 1 || same_parity_step) identify.emplace_back(g, h);
    }
    if (kind == MarkedKind::v && li <= 2) kill.push_back(g);
    if (double_prime && li == 1) kill.push_back(g);
  }
  out.space = gf2::PresentedSpace(gens.size(), identify, kill, kind == MarkedKind::v_prime);
  return out;
}

}  // namespace springer
