#include "hbo/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "hbo/error.hpp"
#include "hbo/poset.hpp"

namespace hbo {

AffinePermutation AffinePermutation::from_window(int n, std::vector<std::int64_t> values) {
  if (n < 1) throw InvalidArgument("rank must be positive, got " + std::to_string(n));
  if (values.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("window has " + std::to_string(values.size()) + " entries, expected " +
                          std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto r = static_cast<std::size_t>(mod_n(values[i], n));
    if (seen[r]) {
      throw InvalidArgument("window entries repeat a residue modulo " + std::to_string(n) +
                            " (entry " + std::to_string(values[i]) + " at position " +
                            std::to_string(i + 1) + ")");
    }
    seen[r] = true;
  }
  std::int64_t sum = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  std::int64_t expected = static_cast<std::int64_t>(n) * (n + 1) / 2;
  if (sum != expected) {
    throw InvalidArgument("window sum is " + std::to_string(sum) + ", expected n(n+1)/2 = " +
                          std::to_string(expected));
  }
  return AffinePermutation(n, std::move(values));
}

AffinePermutation AffinePermutation::identity(int n) {
  if (n < 1) throw InvalidArgument("rank must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  return AffinePermutation(n, std::move(window));
}

AffinePermutation AffinePermutation::simple(int n, int i) {
  if (n < 2) throw InvalidArgument("simple transpositions need rank at least 2");
  return identity(n).times_simple(i);
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<std::int64_t> inv(window_.size());
  for (int i = 1; i <= n_; ++i) {
    std::int64_t value = window_[static_cast<std::size_t>(i - 1)];
    std::int64_t slot = window_slot(value, n_);
    inv[static_cast<std::size_t>(slot - 1)] = i - (value - slot);
  }
  return AffinePermutation(n_, std::move(inv));
}

AffinePermutation AffinePermutation::times_simple(int i) const {
  int r = static_cast<int>(mod_n(i, n_));
  std::vector<std::int64_t> out = window_;
  if (r == 0) {
    // positions 0 and 1: w(0) = w(n) - n and w(n+1) = w(1) + n
    out[0] = window_[static_cast<std::size_t>(n_ - 1)] - n_;
    out[static_cast<std::size_t>(n_ - 1)] = window_[0] + n_;
  } else {
    std::swap(out[static_cast<std::size_t>(r - 1)], out[static_cast<std::size_t>(r)]);
  }
  return AffinePermutation(n_, std::move(out));
}

bool AffinePermutation::is_finite() const {
  return std::all_of(window_.begin(), window_.end(),
                     [this](std::int64_t v) { return v >= 1 && v <= n_; });
}

bool AffinePermutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (window_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

AffinePermutation compose(const AffinePermutation& w, const AffinePermutation& v) {
  if (w.rank() != v.rank()) throw InvalidArgument("cannot compose permutations of different rank");
  std::vector<std::int64_t> out(static_cast<std::size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) out[static_cast<std::size_t>(i - 1)] = w(v(i));
  return AffinePermutation::from_window(w.rank(), std::move(out));
}

InversionPair InversionPair::canonical(std::int64_t a, std::int64_t b, int n) {
  std::int64_t shift = window_slot(a, n) - a;
  return InversionPair{a + shift, b + shift};
}

std::vector<InversionPair> inv2(const AffinePermutation& w) {
  const int n = w.rank();
  const AffinePermutation winv = w.inverse();
  std::vector<InversionPair> out;
  for (std::int64_t x = 1; x <= n; ++x) {
    for (std::int64_t r = 1; r <= n; ++r) {
      if (r == x) continue;
      // Inversions with first entry x are downward closed within each
      // residue class, so the scan stops at the first failure.
      for (std::int64_t y = x + mod_n(r - x, n); winv(x) > winv(y); y += n) {
        out.push_back({x, y});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t length(const AffinePermutation& w) { return inv2(w).size(); }

int WeakInterval::index_of(const AffinePermutation& v) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), v,
                             [](const AffinePermutation& a, const AffinePermutation& b) {
                               std::size_t la = length(a), lb = length(b);
                               return la != lb ? la < lb : a < b;
                             });
  if (it == elements.end() || *it != v) return -1;
  return static_cast<int>(it - elements.begin());
}

WeakInterval weak_interval(const AffinePermutation& w) {
  const int n = w.rank();
  const auto target = inv2(w);
  const std::set<InversionPair> allowed(target.begin(), target.end());

  // BFS by length; each level is generated from the previous one.
  std::vector<std::vector<AffinePermutation>> levels{{AffinePermutation::identity(n)}};
  std::vector<std::pair<AffinePermutation, AffinePermutation>> raw_covers;
  while (true) {
    std::set<AffinePermutation> next;
    for (const auto& v : levels.back()) {
      for (int i = 0; i < n; ++i) {
        std::int64_t a = v(i), b = v(i + 1);
        if (a >= b) continue;
        if (!allowed.count(InversionPair::canonical(a, b, n))) continue;
        AffinePermutation u = v.times_simple(i);
        raw_covers.emplace_back(v, u);
        next.insert(u);
      }
    }
    if (next.empty()) break;
    levels.emplace_back(next.begin(), next.end());
  }

  WeakInterval out;
  std::map<AffinePermutation, int> index;
  for (const auto& level : levels) {
    for (const auto& v : level) {
      index.emplace(v, static_cast<int>(out.elements.size()));
      out.elements.push_back(v);
    }
  }
  std::set<std::pair<int, int>> covers;
  for (const auto& [a, b] : raw_covers) covers.emplace(index.at(a), index.at(b));
  out.covers.assign(covers.begin(), covers.end());
  return out;
}

FinitePoset weak_interval_poset(const WeakInterval& interval) {
  RelationSet r;
  for (const auto& v : interval.elements) r.labels.push_back(format_window(v));
  r.pairs = interval.covers;
  return close_to_poset(r);
}

std::vector<AffinePermutation> enumerate_up_to_length(int n, int max_length) {
  if (max_length < 0) throw InvalidArgument("length bound must be nonnegative");
  std::vector<AffinePermutation> out{AffinePermutation::identity(n)};
  if (n < 2) return out;
  std::vector<AffinePermutation> frontier = out;
  for (int len = 1; len <= max_length; ++len) {
    std::set<AffinePermutation> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < n; ++i) {
        if (v(i) < v(i + 1)) next.insert(v.times_simple(i));
      }
    }
    frontier.assign(next.begin(), next.end());
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  return out;
}

std::vector<AffinePermutation> enumerate_finite(int n) {
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  std::vector<AffinePermutation> out;
  do {
    out.push_back(AffinePermutation::from_window(n, window));
  } while (std::next_permutation(window.begin(), window.end()));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return length(a) < length(b);
  });
  return out;
}

AffinePermutation parse_window(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ' || c == '\t') continue;
    cleaned.push_back(c);
  }
  if (cleaned.empty()) throw InvalidArgument("empty window");
  std::vector<std::int64_t> values;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("window entry '" + item + "' is not an integer");
    }
  }
  const int n = static_cast<int>(values.size());
  return AffinePermutation::from_window(n, std::move(values));
}

std::string format_window(const AffinePermutation& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.window().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.window()[i]);
  }
  return out + ")";
}

}  // namespace hbo
