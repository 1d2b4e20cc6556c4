#include "springer/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "springer/error.hpp"
#include "text_util.hpp"

namespace springer {

Partition Partition::from_parts(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw Error(Errc::invalid_argument, "partition parts must be non-negative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end());
  Partition out;
  out.parts_ = std::move(parts);
  return out;
}

Partition Partition::parse(std::string_view text) {
  return from_parts(detail::parse_int_list(text, ','));
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  return detail::join_ints(parts_, ",");
}

std::string Bipartition::to_string() const {
  return alpha.to_string() + "|" + beta.to_string();
}

Bipartition Bipartition::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw Error(Errc::parse_error,
                "bipartition must have the form alpha|beta: \"" + std::string(text) + "\"");
  }
  return {Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
}

namespace {

void partitions_rec(int remaining, int min_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(current));
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    // the rest must fit into parts >= part
    if (remaining - part != 0 && remaining - part < part) continue;
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

constexpr int kCountLimit = 400;
__extension__ typedef __int128 Wide;

// Euler's pentagonal recurrence for p(n), then the convolution for p2(n).
struct CountTables {
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> p2;

  CountTables() {
    p.push_back(1);
    for (int n = 1; n <= kCountLimit; ++n) {
      Wide acc = 0;
      for (int k = 1;; ++k) {
        int g1 = k * (3 * k - 1) / 2;
        if (g1 > n) break;
        int sign = (k % 2 == 1) ? 1 : -1;
        acc += sign * static_cast<Wide>(p[n - g1]);
        int g2 = k * (3 * k + 1) / 2;
        if (g2 <= n) acc += sign * static_cast<Wide>(p[n - g2]);
      }
      if (acc > INT64_MAX) break;
      p.push_back(static_cast<std::int64_t>(acc));
    }
    for (int n = 0; n < static_cast<int>(p.size()); ++n) {
      Wide acc = 0;
      for (int k = 0; k <= n; ++k) acc += static_cast<Wide>(p[k]) * p[n - k];
      if (acc > INT64_MAX) break;
      p2.push_back(static_cast<std::int64_t>(acc));
    }
  }
};

const CountTables& tables() {
  static const CountTables t;
  return t;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_rec(n, 1, current, out);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a) {
    auto alphas = enumerate_partitions(a);
    auto betas = enumerate_partitions(n - a);
    for (const auto& alpha : alphas) {
      for (const auto& beta : betas) out.push_back({alpha, beta});
    }
  }
  return out;
}

std::int64_t count_p(int n) {
  if (n < 0) return 0;
  const auto& t = tables();
  if (n >= static_cast<int>(t.p.size())) throw std::out_of_range("count_p: n too large");
  return t.p[n];
}

std::int64_t count_p2(int n) {
  if (n < 0) return 0;
  const auto& t = tables();
  if (n >= static_cast<int>(t.p2.size())) throw std::out_of_range("count_p2: n too large");
  return t.p2[n];
}

}  // namespace springer
