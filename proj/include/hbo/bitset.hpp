#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hbo/kernels/bitops.hpp"

namespace hbo {

// Fixed-size dynamic bitset. Bulk operations go through the runtime-selected
// bit kernels.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static Bitset from_indices(std::size_t bits, const std::vector<int>& indices) {
    Bitset b(bits);
    for (int i : indices) b.set(static_cast<std::size_t>(i));
    return b;
  }

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const { return kernels::active().popcount(words_.data(), words_.size()); }
  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator|=(const Bitset& o) {
    kernels::active().or_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    kernels::active().and_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  // set difference
  Bitset& operator-=(const Bitset& o) {
    kernels::active().andnot_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool is_subset_of(const Bitset& o) const {
    return kernels::active().is_subset(words_.data(), o.words_.data(), words_.size());
  }
  bool intersects(const Bitset& o) const {
    return kernels::active().intersects(words_.data(), o.words_.data(), words_.size());
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int bit = __builtin_ctzll(word);
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bitset&) const = default;
  // Orders by cardinality first, then by the sorted index list.
  bool operator<(const Bitset& o) const {
    std::size_t a = count(), b = o.count();
    if (a != b) return a < b;
    return indices() < o.indices();
  }

  std::size_t hash() const {
    std::size_t h = bits_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace hbo
