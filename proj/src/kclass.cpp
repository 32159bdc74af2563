#include "hbo/kclass.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "hbo/error.hpp"

namespace hbo {

KClass canonicalize(std::span<const std::int64_t> raw, int n) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  if (raw.size() > KClass::kCapacity) throw InvalidArgument("class has too many entries");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i && raw[i - 1] >= raw[i]) throw InvalidArgument("class entries must be strictly increasing");
    for (std::size_t j = 0; j < i; ++j) {
      if (mod_n(raw[i] - raw[j], n) == 0) {
        throw InvalidArgument("class entries " + std::to_string(raw[j]) + " and " + std::to_string(raw[i]) +
                              " repeat a residue modulo " + std::to_string(n));
      }
    }
  }
  KClass x;
  x.n_ = n;
  x.size_ = static_cast<std::uint8_t>(raw.size());
  std::int64_t shift = raw.size() >= 2 ? window_slot(raw[0], n) - raw[0] : 0;
  for (std::size_t i = 0; i < raw.size(); ++i) x.values_[i] = static_cast<std::int32_t>(raw[i] + shift);
  return x;
}

KClass canonicalize(std::initializer_list<std::int64_t> raw, int n) {
  return canonicalize(std::span<const std::int64_t>(raw.begin(), raw.size()), n);
}

KClass from_pair(const InversionPair& p, int n) { return canonicalize({p.x, p.y}, n); }

KClass KClass::omit(std::size_t i) const {
  if (i < 1 || i > size_) throw InvalidArgument("packet index out of range");
  std::array<std::int64_t, kCapacity> buf{};
  std::size_t m = 0;
  for (std::size_t j = 0; j < size_; ++j) {
    if (j + 1 != i) buf[m++] = values_[j];
  }
  return canonicalize(std::span<const std::int64_t>(buf.data(), m), n_);
}

KClass KClass::plus_congruence(std::size_t zeros) const {
  std::array<std::int64_t, kCapacity> buf{};
  for (std::size_t j = 0; j < size_; ++j) buf[j] = values_[j] + (j >= zeros ? n_ : 0);
  return canonicalize(std::span<const std::int64_t>(buf.data(), size_), n_);
}

std::strong_ordering KClass::operator<=>(const KClass& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (std::size_t i = 0; i < std::min(size_, o.size_); ++i) {
    if (auto c = values_[i] <=> o.values_[i]; c != 0) return c;
  }
  return size_ <=> o.size_;
}

std::size_t KClass::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 1000003u + size_;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(values_[i])) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

KClass parse_kclass(int n, std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '[' && c != ']') cleaned.push_back(c);
  }
  std::vector<std::int64_t> values;
  if (cleaned.find(',') == std::string::npos && cleaned.size() > 1 &&
      std::all_of(cleaned.begin(), cleaned.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    for (char c : cleaned) values.push_back(c - '0');
  } else if (!cleaned.empty()) {
    std::size_t start = 0;
    while (start <= cleaned.size()) {
      std::size_t end = cleaned.find(',', start);
      if (end == std::string::npos) end = cleaned.size();
      std::string item = cleaned.substr(start, end - start);
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InvalidArgument("class entry '" + item + "' is not an integer");
      }
      start = end + 1;
    }
  }
  return canonicalize(values, n);
}

std::string format_kclass(const KClass& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out + "]";
}

std::string format_kclass_list(const std::vector<KClass>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + format_kclass(xs[i]);
  return out + ")";
}

std::string format_kclass_compact(const KClass& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > 9) return format_kclass(x);
    out += std::to_string(x[i]);
  }
  return out;
}

Packet packet(const KClass& x) {
  if (x.size() < 2) throw InvalidArgument("packets need a class with at least two entries");
  Packet p{x, {}};
  for (std::size_t i = 1; i <= x.size(); ++i) p.members.push_back(x.omit(i));
  return p;
}

bool flags_are_prefix(const std::vector<bool>& in_set) {
  // {X_m, ..., X_t}: membership is monotone increasing in the index.
  for (std::size_t i = 1; i < in_set.size(); ++i) {
    if (in_set[i - 1] && !in_set[i]) return false;
  }
  return true;
}

bool flags_are_suffix(const std::vector<bool>& in_set) {
  for (std::size_t i = 1; i < in_set.size(); ++i) {
    if (!in_set[i - 1] && in_set[i]) return false;
  }
  return true;
}

namespace {

std::vector<bool> member_flags(const std::set<KClass>& subset, const Packet& p) {
  std::size_t hits = 0;
  std::vector<bool> flags;
  for (const auto& m : p.members) {
    flags.push_back(subset.count(m) > 0);
    hits += flags.back();
  }
  if (hits != subset.size()) throw InvalidArgument("subset contains classes outside the packet");
  return flags;
}

}  // namespace

bool is_prefix(const std::set<KClass>& subset, const Packet& p) {
  return flags_are_prefix(member_flags(subset, p));
}

bool is_suffix(const std::set<KClass>& subset, const Packet& p) {
  return flags_are_suffix(member_flags(subset, p));
}

std::string describe(const PacketIntersection& c) {
  switch (c.shape) {
    case PacketShape::empty:
      return "Empty";
    case PacketShape::singleton:
      return "Singleton(" + std::to_string(c.index) + ")";
    case PacketShape::adjacent_pair:
      return "AdjacentPair(" + std::to_string(c.index) + ")";
    case PacketShape::full:
      return "Full";
  }
  return "?";
}

InversionTable::InversionTable(const AffinePermutation& w)
    : w_(w), winv_(w.inverse()), above_(static_cast<std::size_t>(w.rank())), below_(static_cast<std::size_t>(w.rank())) {
  const int n = w.rank();
  for (const auto& [x, y] : inv2(w)) {
    above_[static_cast<std::size_t>(mod_n(x, n))].push_back(y - x);
    below_[static_cast<std::size_t>(mod_n(y, n))].push_back(y - x);
  }
  for (auto& v : above_) std::sort(v.begin(), v.end());
  for (auto& v : below_) std::sort(v.begin(), v.end(), std::greater<>());
}

bool InversionTable::is_k_inversion(const KClass& x) const {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (winv_(x[i - 1]) <= winv_(x[i])) return false;
  }
  return true;
}

bool InversionTable::is_quasi_inversion(const KClass& x) const {
  if (x.size() < 2) return false;
  int failures = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (!is_pair_inversion(x[i], x[j]) && ++failures > 1) return false;
    }
  }
  return failures == 1;
}

std::vector<std::int64_t> InversionTable::partners_above(std::int64_t x) const {
  std::vector<std::int64_t> out;
  for (auto d : above_[static_cast<std::size_t>(mod_n(x, rank()))]) out.push_back(x + d);
  return out;
}

std::vector<std::int64_t> InversionTable::partners_below(std::int64_t x) const {
  std::vector<std::int64_t> out;
  for (auto d : below_[static_cast<std::size_t>(mod_n(x, rank()))]) out.push_back(x - d);
  return out;
}

std::vector<KClass> InversionTable::inv_k(int k) const {
  const int n = rank();
  if (k < 1) throw InvalidArgument("k must be at least 1");
  std::vector<KClass> out;
  if (k == 1) {
    if (!w_.is_finite()) {
      throw UnsupportedCase("Inv_1 of an affine permutation is infinite; use the weak interval or C_w(n,2)");
    }
    for (std::int64_t x = 1; x <= n; ++x) out.push_back(canonicalize({x}, n));
    return out;
  }
  if (k > n || static_cast<std::size_t>(k) > KClass::kCapacity) return out;
  std::vector<std::int64_t> chain;
  // Extending by a partner above the last entry keeps the w^{-1} values
  // strictly decreasing, which also forces distinct residues.
  std::function<void()> extend = [&]() {
    if (chain.size() == static_cast<std::size_t>(k)) {
      out.push_back(canonicalize(chain, n));
      return;
    }
    for (auto y : partners_above(chain.back())) {
      chain.push_back(y);
      extend();
      chain.pop_back();
    }
  };
  for (std::int64_t x = 1; x <= n; ++x) {
    chain.assign(1, x);
    extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KClass> InversionTable::enclosing_classes(const std::vector<KClass>& members) const {
  const int n = rank();
  std::set<KClass> found;
  for (const auto& y : members) {
    if (y.size() + 1 > KClass::kCapacity || static_cast<int>(y.size()) >= n) continue;
    std::vector<std::int64_t> candidates;
    for (std::size_t i = 0; i < y.size(); ++i) {
      auto above = partners_above(y[i]);
      auto below = partners_below(y[i]);
      candidates.insert(candidates.end(), above.begin(), above.end());
      candidates.insert(candidates.end(), below.begin(), below.end());
    }
    for (std::int64_t z = y[0] + 1; z < y[y.size() - 1]; ++z) candidates.push_back(z);
    if (w_.is_finite()) {
      for (std::int64_t z = 1; z <= n; ++z) candidates.push_back(z);
    }
    for (auto z : candidates) {
      bool clash = false;
      for (std::size_t j = 0; j < y.size(); ++j) clash = clash || mod_n(z - y[j], n) == 0;
      if (clash) continue;
      std::vector<std::int64_t> raw = y.raw();
      raw.insert(std::upper_bound(raw.begin(), raw.end(), z), z);
      found.insert(canonicalize(raw, n));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<KClass> InversionTable::quasi_inversions(int size) const {
  const int n = rank();
  if (size < 2) throw InvalidArgument("quasi-inversions have at least two entries");
  std::vector<KClass> out;
  if (size == 2) {
    if (!w_.is_finite()) throw UnsupportedCase("2-quasi-inversions of an affine permutation are infinite");
    for (std::int64_t a = 1; a <= n; ++a) {
      for (std::int64_t b = a + 1; b <= n; ++b) {
        if (!is_pair_inversion(a, b)) out.push_back(canonicalize({a, b}, n));
      }
    }
    return out;
  }
  if (size > n) return out;
  // A quasi-inversion X with failing pair (x_p, x_q) has X_p ∈ Inv_{size-1}
  // and x_p a 2-inversion partner of some entry of X_p.
  std::unordered_set<KClass, KClassHash> found;
  for (const auto& y : inv_k(size - 1)) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      auto candidates = partners_above(y[i]);
      auto below = partners_below(y[i]);
      candidates.insert(candidates.end(), below.begin(), below.end());
      for (auto z : candidates) {
        bool clash = false;
        for (std::size_t j = 0; j < y.size(); ++j) clash = clash || mod_n(z - y[j], n) == 0;
        if (clash) continue;
        std::vector<std::int64_t> raw = y.raw();
        raw.insert(std::upper_bound(raw.begin(), raw.end(), z), z);
        KClass x = canonicalize(raw, n);
        if (is_quasi_inversion(x)) found.insert(x);
      }
    }
  }
  out.assign(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

PacketIntersection InversionTable::classify(const KClass& x) const {
  if (x.size() < 2) throw InvalidArgument("packets need a class with at least two entries");
  const std::size_t m = x.size();
  std::vector<std::size_t> hits;
  for (std::size_t i = 1; i <= m; ++i) {
    KClass member = x.omit(i);
    // every single entry is a 1-inversion
    bool in = member.size() == 1 || is_k_inversion(member);
    if (in) hits.push_back(i);
  }
  if (hits.empty()) return {PacketShape::empty, 0};
  if (hits.size() == m) return {PacketShape::full, 0};
  if (hits.size() == 1) return {PacketShape::singleton, hits[0]};
  if (hits.size() == 2 && hits[1] == hits[0] + 1) return {PacketShape::adjacent_pair, hits[0]};
  std::string list;
  for (auto i : hits) list += (list.empty() ? "X_" : ", X_") + std::to_string(i);
  throw InvariantViolation("packet intersection of " + format_kclass(x) + " for w=" + format_window(w_) +
                           " is {" + list + "}, which is not empty, a singleton, an adjacent pair or full");
}

bool is_k_inversion(const AffinePermutation& w, const KClass& x) { return InversionTable(w).is_k_inversion(x); }
std::vector<KClass> inv_k(const AffinePermutation& w, int k) { return InversionTable(w).inv_k(k); }
bool is_quasi_inversion(const AffinePermutation& w, const KClass& x) { return InversionTable(w).is_quasi_inversion(x); }
PacketIntersection classify_packet_intersection(const AffinePermutation& w, const KClass& x) {
  return InversionTable(w).classify(x);
}

}  // namespace hbo
