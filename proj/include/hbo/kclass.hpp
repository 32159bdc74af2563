#pragma once

// Shift classes of k-subsets of Z with distinct residues mod n, packets,
// k-inversions and quasi-inversions.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbo/perm.hpp"

namespace hbo {

// Canonical representative x_1 < ... < x_k of a class. For k >= 2 the
// representative has x_1 in [1, n]; 1-element classes are never shifted.
class KClass {
 public:
  static constexpr std::size_t kCapacity = 16;

  KClass() = default;

  int rank() const { return n_; }
  std::size_t size() const { return size_; }
  std::int32_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int32_t> elements() const { return {values_.data(), size_}; }
  std::vector<std::int64_t> raw() const { return {values_.begin(), values_.begin() + size_}; }

  // X_i for i in 1..k: drop the i-th entry, canonicalized.
  KClass omit(std::size_t i) const;
  // X + v where v has `zeros` leading zeros and n in the remaining slots.
  KClass plus_congruence(std::size_t zeros) const;

  bool operator==(const KClass& o) const {
    return n_ == o.n_ && size_ == o.size_ &&
           std::equal(values_.begin(), values_.begin() + size_, o.values_.begin());
  }
  std::strong_ordering operator<=>(const KClass& o) const;

  std::size_t hash() const;

 private:
  friend KClass canonicalize(std::span<const std::int64_t> raw, int n);

  std::int32_t n_ = 1;
  std::uint8_t size_ = 0;
  std::array<std::int32_t, kCapacity> values_{};
};

struct KClassHash {
  std::size_t operator()(const KClass& x) const { return x.hash(); }
};

// Requires strictly increasing entries with distinct residues mod n.
KClass canonicalize(std::span<const std::int64_t> raw, int n);
KClass canonicalize(std::initializer_list<std::int64_t> raw, int n);
KClass from_pair(const InversionPair& p, int n);

// "[x1,x2,...]"; also the compact digit form "1256" when every entry is a
// single digit.
KClass parse_kclass(int n, std::string_view text);
std::string format_kclass(const KClass& x);
// Compact digit form used in tables ("1256"); falls back to format_kclass.
std::string format_kclass_compact(const KClass& x);
// "([1,3,4], [2,7,8])"
std::string format_kclass_list(const std::vector<KClass>& xs);

// Members X_1..X_k of P(X) in index order. Lex order is (X_k, ..., X_1);
// antilex is (X_1, ..., X_k).
struct Packet {
  KClass parent;
  std::vector<KClass> members;

  std::vector<KClass> lex() const { return {members.rbegin(), members.rend()}; }
  std::vector<KClass> antilex() const { return members; }
};
Packet packet(const KClass& x);

// Empty and full intersections count as both prefix and suffix.
bool is_prefix(const std::set<KClass>& subset, const Packet& p);
bool is_suffix(const std::set<KClass>& subset, const Packet& p);
// Same predicates on membership flags in member order X_1..X_m.
bool flags_are_prefix(const std::vector<bool>& in_set);
bool flags_are_suffix(const std::vector<bool>& in_set);

enum class PacketShape { empty, singleton, adjacent_pair, full };

struct PacketIntersection {
  PacketShape shape = PacketShape::empty;
  // 1-based: Singleton(i) is {X_i}; AdjacentPair(i) is {X_i, X_{i+1}}.
  std::size_t index = 0;
};

std::string describe(const PacketIntersection& c);

// Per-permutation tables for inversion queries.
class InversionTable {
 public:
  explicit InversionTable(const AffinePermutation& w);

  const AffinePermutation& perm() const { return w_; }
  int rank() const { return w_.rank(); }
  std::int64_t position(std::int64_t value) const { return winv_(value); }
  // Requires a < b.
  bool is_pair_inversion(std::int64_t a, std::int64_t b) const { return winv_(a) > winv_(b); }
  bool is_k_inversion(const KClass& x) const;
  bool is_quasi_inversion(const KClass& x) const;

  // y > x with [x, y] an inversion, ascending.
  std::vector<std::int64_t> partners_above(std::int64_t x) const;
  // y < x with [y, x] an inversion, ascending.
  std::vector<std::int64_t> partners_below(std::int64_t x) const;

  // Sorted. k = 1 is only available for finite permutations.
  std::vector<KClass> inv_k(int k) const;
  // Quasi-inversions with `size` entries, sorted. size = 2 only for finite
  // permutations.
  std::vector<KClass> quasi_inversions(int size) const;

  // P(X) ∩ Inv_k(w) for |X| = k+1; throws InvariantViolation when the
  // intersection has none of the four admissible shapes.
  PacketIntersection classify(const KClass& x) const;

  // Canonical classes Y ∪ {z} (Y in `members`, all of one size) whose packet
  // can meet Inv_|Y|(w) in anything other than {Y} at an end of the packet:
  // z is an inversion partner of some entry of Y or lies strictly between
  // min Y and max Y. Sorted.
  std::vector<KClass> enclosing_classes(const std::vector<KClass>& members) const;

 private:
  AffinePermutation w_;
  AffinePermutation winv_;
  std::vector<std::vector<std::int64_t>> above_;  // by residue of x: offsets y - x
  std::vector<std::vector<std::int64_t>> below_;  // by residue of x: offsets x - y
};

bool is_k_inversion(const AffinePermutation& w, const KClass& x);
std::vector<KClass> inv_k(const AffinePermutation& w, int k);
bool is_quasi_inversion(const AffinePermutation& w, const KClass& x);
PacketIntersection classify_packet_intersection(const AffinePermutation& w, const KClass& x);

}  // namespace hbo

template <>
struct std::hash<hbo::KClass> {
  std::size_t operator()(const hbo::KClass& x) const { return x.hash(); }
};
