#pragma once

// Affine permutations of rank n in window notation, group arithmetic,
// 2-inversion sets and the weak order.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hbo {

// Residue of x in {0, ..., n-1}.
inline std::int64_t mod_n(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// Representative of x's residue class in {1, ..., n}.
inline std::int64_t window_slot(std::int64_t x, std::int64_t n) { return mod_n(x - 1, n) + 1; }

// An n-periodic bijection of Z with window sum n(n+1)/2.
class AffinePermutation {
 public:
  // Validates and returns the element with window (values[0], ..., values[n-1]).
  static AffinePermutation from_window(int n, std::vector<std::int64_t> values);
  static AffinePermutation identity(int n);
  // s_i for i taken modulo n; requires n >= 2.
  static AffinePermutation simple(int n, int i);

  int rank() const { return n_; }
  const std::vector<std::int64_t>& window() const { return window_; }

  std::int64_t operator()(std::int64_t x) const {
    std::int64_t slot = window_slot(x, n_);
    return window_[static_cast<std::size_t>(slot - 1)] + (x - slot);
  }

  AffinePermutation inverse() const;
  // w s_i: swaps the values at positions i and i+1 (mod n).
  AffinePermutation times_simple(int i) const;
  // True iff w restricts to a permutation of {1, ..., n}.
  bool is_finite() const;
  bool is_identity() const;
  // l(w s_i) < l(w), i.e. w(i) > w(i+1).
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

  bool operator==(const AffinePermutation&) const = default;
  auto operator<=>(const AffinePermutation&) const = default;

 private:
  AffinePermutation(int n, std::vector<std::int64_t> window) : n_(n), window_(std::move(window)) {}

  int n_ = 1;
  std::vector<std::int64_t> window_;
};

// (w o v)(x) = w(v(x)). Both must have the same rank.
AffinePermutation compose(const AffinePermutation& w, const AffinePermutation& v);

// Canonical inversion [x, y]: 1 <= x <= n, x < y, y != x (mod n).
struct InversionPair {
  std::int64_t x = 0;
  std::int64_t y = 0;

  // Shifts an arbitrary pair a < b so that its first entry lies in [1, n].
  static InversionPair canonical(std::int64_t a, std::int64_t b, int n);

  bool operator==(const InversionPair&) const = default;
  auto operator<=>(const InversionPair&) const = default;
};

// Inv(w), sorted. Its size is l(w).
std::vector<InversionPair> inv2(const AffinePermutation& w);
std::size_t length(const AffinePermutation& w);

class FinitePoset;

struct WeakInterval {
  // Sorted by length, then window.
  std::vector<AffinePermutation> elements;
  // Covers v < v s_i; labels are window strings.
  std::vector<std::pair<int, int>> covers;
  int index_of(const AffinePermutation& v) const;
};

// The interval [id, w] of the right weak order.
WeakInterval weak_interval(const AffinePermutation& w);
FinitePoset weak_interval_poset(const WeakInterval& interval);

// All elements of length at most max_length, sorted by length then window.
std::vector<AffinePermutation> enumerate_up_to_length(int n, int max_length);

// All elements of the finite symmetric group of rank n.
std::vector<AffinePermutation> enumerate_finite(int n);

// "(w1,w2,...,wn)"; parentheses optional, whitespace ignored.
AffinePermutation parse_window(std::string_view text);
std::string format_window(const AffinePermutation& w);

}  // namespace hbo
