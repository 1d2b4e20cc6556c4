#include "springer/gf2.hpp"

#include <algorithm>
#include <numeric>

#include "springer/error.hpp"

namespace springer::gf2 {

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) v.set(i, true);
  return v;
}

BitVector BitVector::parse(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i, true);
    } else if (text[i] != '0') {
      throw Error(Errc::parse_error,
                  "character bit-string may contain only '0' and '1': \"" +
                      std::string(text) + "\"");
    }
  }
  return v;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

BitVector& BitVector::operator+=(const BitVector& other) {
  if (other.size() != size()) {
    throw Error(Errc::length_mismatch, "adding bit-vectors of different lengths");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // root = least member, so a class is named by its least generator
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

PresentedSpace::PresentedSpace(std::size_t generator_count,
                               std::span<const Identification> identifications,
                               std::span<const std::size_t> kills,
                               bool quotient_by_all_ones)
    : class_of_(generator_count, -1), quotient_(quotient_by_all_ones) {
  UnionFind uf(generator_count);
  for (auto [i, j] : identifications) {
    if (i >= generator_count || j >= generator_count) {
      throw Error(Errc::invalid_argument, "identification index out of range");
    }
    uf.unite(i, j);
  }
  std::vector<bool> killed_root(generator_count, false);
  for (auto k : kills) {
    if (k >= generator_count) {
      throw Error(Errc::invalid_argument, "kill index out of range");
    }
    killed_root[uf.find(k)] = true;
  }
  // Roots are least members, so scanning in index order lists classes by
  // least generator.
  std::vector<std::ptrdiff_t> root_slot(generator_count, -1);
  for (std::size_t i = 0; i < generator_count; ++i) {
    auto root = uf.find(i);
    if (killed_root[root]) continue;
    if (root_slot[root] < 0) {
      root_slot[root] = static_cast<std::ptrdiff_t>(basis_.size());
      basis_.emplace_back();
    }
    basis_[static_cast<std::size_t>(root_slot[root])].push_back(i);
    class_of_[i] = root_slot[root];
  }
}

std::size_t PresentedSpace::dimension() const noexcept {
  if (quotient_ && !basis_.empty()) return basis_.size() - 1;
  return basis_.size();
}

PresentedSpace build_space(std::size_t generator_count,
                           std::span<const PresentedSpace::Identification> identifications,
                           std::span<const std::size_t> kills,
                           bool quotient_by_all_ones) {
  return PresentedSpace(generator_count, identifications, kills, quotient_by_all_ones);
}

BitVector canonicalize_coset(BitVector v, bool quotient_by_all_ones) {
  if (!quotient_by_all_ones || v.empty()) return v;
  auto other = v + BitVector::ones(v.size());
  return std::min(v, other);
}

std::vector<BitVector> characters(const PresentedSpace& space) {
  const std::size_t length = space.basis_size();
  const std::size_t free_bits = space.dimension();
  // In the quotient case the representative has a leading 0 and the
  // remaining length-1 bits run freely.
  const std::size_t offset = length - free_bits;
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << free_bits);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_bits); ++code) {
    BitVector v(length);
    for (std::size_t i = 0; i < free_bits; ++i) {
      v.set(offset + i, ((code >> (free_bits - 1 - i)) & 1U) != 0);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace springer::gf2
