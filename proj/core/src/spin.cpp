#include "springer/spin.hpp"

#include <map>
#include <string>

#include "springer/error.hpp"

namespace springer::spin {

int d_of(int s) noexcept {
  if (s % 2 == 0) return 0;
  return ((s - 1) / 2) % 2 == 0 ? 1 : -1;
}

bool in_xn(const Partition& lambda) {
  std::map<int, int> multiplicity;
  for (int p : lambda.parts()) ++multiplicity[p];
  for (auto [value, count] : multiplicity) {
    if (value % 2 == 0 && count % 2 != 0) return false;
    if (value % 2 != 0 && count > 1) return false;
  }
  return true;
}

std::vector<Partition> enumerate_xn(int n) {
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(n)) {
    if (in_xn(lambda)) out.push_back(std::move(lambda));
  }
  return out;
}

namespace {

void require_xn(const Partition& lambda) {
  if (!in_xn(lambda)) {
    throw Error(Errc::not_in_xn,
                "partition " + lambda.to_string() +
                    " must have even parts of even multiplicity and distinct odd parts");
  }
}

int mod4(int e) { return ((e % 4) + 4) % 4; }

}  // namespace

std::vector<MarkedEntry> modify(const Partition& lambda) {
  require_xn(lambda);
  const auto& parts = lambda.parts();
  std::vector<MarkedEntry> out;
  int t = 0;  // t_i for the current position
  std::size_t i = 0;
  while (i < parts.size()) {
    const int e = parts[i];
    const int index = static_cast<int>(i) + 1;
    switch (mod4(e)) {
      case 1:
        out.push_back({(e - 1) / 4 - t, Mark::a, index});
        t += d_of(e);
        ++i;
        break;
      case 3:
        out.push_back({(e - 3) / 4 + t, Mark::b, index});
        t += d_of(e);
        ++i;
        break;
      default: {
        // a maximal run of an even value; d = 0 keeps t fixed across it
        std::size_t end = i;
        while (end < parts.size() && parts[end] == e) ++end;
        const int a_value = mod4(e) == 0 ? e / 4 - t : (e + 2) / 4 - t;
        const int b_value = mod4(e) == 0 ? e / 4 + t : (e - 2) / 4 + t;
        for (std::size_t j = i; j < end; ++j) {
          const bool is_a = (j - i) % 2 == 0;
          out.push_back({is_a ? a_value : b_value, is_a ? Mark::a : Mark::b, static_cast<int>(j) + 1});
        }
        i = end;
        break;
      }
    }
  }
  return out;
}

SpinLabel spin_springer(const Partition& lambda) {
  std::vector<int> alpha, beta;
  for (const auto& entry : modify(lambda)) {
    (entry.mark == Mark::a ? alpha : beta).push_back(entry.value);
  }
  int t = 0;
  for (int p : lambda.parts()) t += d_of(p);
  auto a = Partition::from_parts(std::move(alpha));
  auto b = Partition::from_parts(std::move(beta));
  if (t >= 1) return {t, {std::move(a), std::move(b)}};
  return {t, {std::move(b), std::move(a)}};
}

int weyl_rank(int n, int t) noexcept {
  const int numerator = n - 2 * t * t + t;
  if (numerator < 0 || numerator % 4 != 0) return -1;
  return numerator / 4;
}

Partition spin_springer_inverse(int n, const SpinLabel& label) {
  for (const auto& lambda : enumerate_xn(n)) {
    if (spin_springer(lambda) == label) return lambda;
  }
  throw Error(Errc::not_in_image, "no partition in X_" + std::to_string(n) + " has label t=" +
                                      std::to_string(label.t) + ", " + label.bp.to_string());
}

}  // namespace springer::spin
