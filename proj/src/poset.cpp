#include "hbo/poset.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hbo/error.hpp"

namespace hbo {
namespace {

std::vector<std::vector<int>> adjacency(std::size_t nodes, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(nodes);
  for (auto [a, b] : arcs) out[static_cast<std::size_t>(a)].push_back(b);
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(std::size_t nodes, const std::vector<std::pair<int, int>>& arcs) {
  const auto succ = adjacency(nodes, arcs);
  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> color(nodes, white);
  std::vector<int> parent(nodes, -1);
  // Iterative DFS; stack holds (node, next successor slot).
  std::vector<std::pair<int, std::size_t>> stack;
  for (std::size_t root = 0; root < nodes; ++root) {
    if (color[root] != white) continue;
    stack.emplace_back(static_cast<int>(root), 0);
    color[root] = grey;
    while (!stack.empty()) {
      auto& [u, slot] = stack.back();
      const auto& out = succ[static_cast<std::size_t>(u)];
      if (slot == out.size()) {
        color[static_cast<std::size_t>(u)] = black;
        stack.pop_back();
        continue;
      }
      int v = out[slot++];
      if (color[static_cast<std::size_t>(v)] == grey) {
        std::vector<int> cycle;
        for (int x = u; x != v; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
        cycle.push_back(v);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[static_cast<std::size_t>(v)] == white) {
        color[static_cast<std::size_t>(v)] = grey;
        parent[static_cast<std::size_t>(v)] = u;
        stack.emplace_back(v, 0);
      }
    }
  }
  return std::nullopt;
}

FinitePoset close_to_poset(const RelationSet& relations) {
  const std::size_t n = relations.size();
  for (auto [a, b] : relations.pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw InvalidArgument("relation refers to an element outside the label set");
    }
  }
  if (auto cycle = find_cycle(n, relations.pairs)) {
    std::vector<std::string> named;
    std::string text;
    for (int v : *cycle) {
      named.push_back(relations.labels[static_cast<std::size_t>(v)]);
      text += named.back() + " < ";
    }
    text += named.front();
    throw CycleError("relations are not antisymmetric: " + text, std::move(named));
  }

  const auto succ = adjacency(n, relations.pairs);
  // Kahn order, smallest index first.
  std::vector<int> indegree(n, 0);
  for (const auto& out : succ) {
    for (int v : out) ++indegree[static_cast<std::size_t>(v)];
  }
  std::set<int> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(static_cast<int>(i));
  }
  std::vector<int> topo;
  while (!ready.empty()) {
    int u = *ready.begin();
    ready.erase(ready.begin());
    topo.push_back(u);
    for (int v : succ[static_cast<std::size_t>(u)]) {
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.insert(v);
    }
  }

  FinitePoset p;
  p.labels_ = relations.labels;
  p.above_.assign(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    auto& reach = p.above_[static_cast<std::size_t>(*it)];
    for (int v : succ[static_cast<std::size_t>(*it)]) {
      reach.set(static_cast<std::size_t>(v));
      reach |= p.above_[static_cast<std::size_t>(v)];
    }
  }
  p.below_.assign(n, Bitset(n));
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) {
    Bitset cover = p.above_[u];
    p.above_[u].for_each([&](int v) { cover -= p.above_[static_cast<std::size_t>(v)]; });
    cover.for_each([&](int v) {
      p.covers_.emplace_back(static_cast<int>(u), v);
      p.upper_[u].push_back(v);
      p.lower_[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    });
    p.above_[u].for_each([&](int v) { p.below_[static_cast<std::size_t>(v)].set(u); });
  }
  for (auto& list : p.lower_) std::sort(list.begin(), list.end());
  return p;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (lower_[i].empty()) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (upper_[i].empty()) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool FinitePoset::is_order_ideal(const Bitset& set) const {
  bool ok = true;
  set.for_each([&](int x) {
    if (ok && !below_[static_cast<std::size_t>(x)].is_subset_of(set)) ok = false;
  });
  return ok;
}

void for_each_linear_extension(const FinitePoset& p, const OrderVisitor& visit) {
  const std::size_t n = p.size();
  std::vector<int> pending(n);
  for (std::size_t i = 0; i < n; ++i) pending[i] = static_cast<int>(p.lower_covers(static_cast<int>(i)).size());
  std::vector<int> order;
  std::vector<bool> used(n, false);
  order.reserve(n);
  bool stop = false;
  std::function<void()> recurse = [&]() {
    if (order.size() == n) {
      if (!visit(order)) stop = true;
      return;
    }
    for (std::size_t x = 0; x < n && !stop; ++x) {
      if (used[x] || pending[x] != 0) continue;
      used[x] = true;
      order.push_back(static_cast<int>(x));
      for (int y : p.upper_covers(static_cast<int>(x))) --pending[static_cast<std::size_t>(y)];
      recurse();
      for (int y : p.upper_covers(static_cast<int>(x))) ++pending[static_cast<std::size_t>(y)];
      order.pop_back();
      used[x] = false;
    }
  };
  recurse();
}

std::vector<std::vector<int>> linear_extensions(const FinitePoset& p) {
  std::vector<std::vector<int>> out;
  for_each_linear_extension(p, [&](const std::vector<int>& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

std::optional<std::uint64_t> count_linear_extensions(const FinitePoset& p, std::size_t ideal_cap) {
  const std::size_t n = p.size();
  std::unordered_map<Bitset, std::uint64_t, BitsetHash> memo;
  bool overflow = false;
  std::function<std::uint64_t(const Bitset&)> count = [&](const Bitset& ideal) -> std::uint64_t {
    if (overflow) return 0;
    if (ideal.count() == n) return 1;
    if (auto it = memo.find(ideal); it != memo.end()) return it->second;
    if (memo.size() >= ideal_cap) {
      overflow = true;
      return 0;
    }
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (ideal.test(x)) continue;
      if (!p.below(static_cast<int>(x)).is_subset_of(ideal)) continue;
      Bitset next = ideal;
      next.set(x);
      total += count(next);
    }
    memo.emplace(ideal, total);
    return total;
  };
  std::uint64_t total = count(Bitset(n));
  if (overflow) return std::nullopt;
  return total;
}

void for_each_order_ideal(const FinitePoset& p, const SetVisitor& visit) {
  const std::size_t n = p.size();
  std::vector<int> topo;
  for_each_linear_extension(p, [&](const std::vector<int>& o) {
    topo = o;
    return false;
  });
  Bitset current(n);
  bool stop = false;
  // Deciding elements in a linear-extension order means every lower cover
  // of the element at hand has already been decided.
  std::function<void(std::size_t)> recurse = [&](std::size_t pos) {
    if (stop) return;
    if (pos == n) {
      if (!visit(current)) stop = true;
      return;
    }
    int x = topo[pos];
    recurse(pos + 1);
    bool allowed = true;
    for (int y : p.lower_covers(x)) {
      if (!current.test(static_cast<std::size_t>(y))) {
        allowed = false;
        break;
      }
    }
    if (!allowed || stop) return;
    current.set(static_cast<std::size_t>(x));
    recurse(pos + 1);
    current.reset(static_cast<std::size_t>(x));
  };
  recurse(0);
}

std::vector<Bitset> order_ideals(const FinitePoset& p) {
  std::vector<Bitset> out;
  for_each_order_ideal(p, [&](const Bitset& b) {
    out.push_back(b);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_antichains(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<int> chosen;
  std::function<std::size_t(std::size_t)> recurse = [&](std::size_t start) -> std::size_t {
    std::size_t total = 1;
    for (std::size_t x = start; x < n; ++x) {
      bool free = std::all_of(chosen.begin(), chosen.end(),
                              [&](int y) { return !p.comparable(static_cast<int>(x), y); });
      if (!free) continue;
      chosen.push_back(static_cast<int>(x));
      total += recurse(x + 1);
      chosen.pop_back();
    }
    return total;
  };
  return recurse(0);
}

void for_each_maximal_chain(const FinitePoset& p, const OrderVisitor& visit) {
  std::vector<int> chain;
  bool stop = false;
  std::function<void(int)> recurse = [&](int x) {
    chain.push_back(x);
    const auto& up = p.upper_covers(x);
    if (up.empty()) {
      if (!visit(chain)) stop = true;
    } else {
      for (int y : up) {
        if (stop) break;
        recurse(y);
      }
    }
    chain.pop_back();
  };
  for (int m : p.minimal_elements()) {
    if (stop) break;
    recurse(m);
  }
}

std::vector<std::vector<int>> maximal_chains(const FinitePoset& p) {
  std::vector<std::vector<int>> out;
  for_each_maximal_chain(p, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

RankReport ranked_check(const FinitePoset& p) {
  RankReport report;
  const std::size_t n = p.size();
  report.unique_min = p.minimal_elements().size() == 1;
  report.unique_max = p.maximal_elements().size() == 1;
  if (n == 0) return report;
  std::vector<int> rank(n, -1);
  std::vector<int> order;
  for_each_linear_extension(p, [&](const std::vector<int>& o) {
    order = o;
    return false;
  });
  for (int x : order) {
    int r = 0;
    for (int y : p.lower_covers(x)) r = std::max(r, rank[static_cast<std::size_t>(y)] + 1);
    rank[static_cast<std::size_t>(x)] = r;
  }
  bool ok = true;
  for (auto [a, b] : p.covers()) {
    if (rank[static_cast<std::size_t>(b)] != rank[static_cast<std::size_t>(a)] + 1) ok = false;
  }
  report.ranked = ok;
  if (ok) report.rank = std::move(rank);
  return report;
}

namespace {

bool hint_is_bijection(std::size_t n, const std::vector<int>& hint) {
  if (hint.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : hint) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool arcs_match(const std::set<std::pair<int, int>>& a, const std::set<std::pair<int, int>>& b,
                const std::vector<int>& map) {
  if (a.size() != b.size()) return false;
  for (auto [x, y] : a) {
    if (!b.count({map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]})) return false;
  }
  return true;
}

}  // namespace

bool arcs_isomorphic(std::size_t nodes_a, const std::vector<std::pair<int, int>>& arcs_a,
                     std::size_t nodes_b, const std::vector<std::pair<int, int>>& arcs_b,
                     const std::optional<std::vector<int>>& hint) {
  if (nodes_a != nodes_b) return false;
  const std::set<std::pair<int, int>> a(arcs_a.begin(), arcs_a.end());
  const std::set<std::pair<int, int>> b(arcs_b.begin(), arcs_b.end());
  if (a.size() != b.size()) return false;
  if (hint) return hint_is_bijection(nodes_a, *hint) && arcs_match(a, b, *hint);

  constexpr std::size_t kHintFreeLimit = 12;
  if (nodes_a > kHintFreeLimit) {
    throw InvalidArgument("isomorphism search without a hint is limited to " +
                          std::to_string(kHintFreeLimit) + " nodes");
  }
  const std::size_t n = nodes_a;
  auto degrees = [n](const std::set<std::pair<int, int>>& arcs) {
    std::vector<std::pair<int, int>> deg(n, {0, 0});
    for (auto [x, y] : arcs) {
      ++deg[static_cast<std::size_t>(x)].first;
      ++deg[static_cast<std::size_t>(y)].second;
    }
    return deg;
  };
  const auto deg_a = degrees(a), deg_b = degrees(b);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t x) -> bool {
    if (x == n) return arcs_match(a, b, map);
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || deg_a[x] != deg_b[y]) continue;
      // Arcs among already-mapped nodes must agree.
      bool consistent = true;
      for (std::size_t z = 0; z < x && consistent; ++z) {
        int mz = map[z];
        bool fwd_a = a.count({static_cast<int>(x), static_cast<int>(z)}) > 0;
        bool fwd_b = b.count({static_cast<int>(y), mz}) > 0;
        bool back_a = a.count({static_cast<int>(z), static_cast<int>(x)}) > 0;
        bool back_b = b.count({mz, static_cast<int>(y)}) > 0;
        consistent = fwd_a == fwd_b && back_a == back_b;
      }
      if (!consistent) continue;
      map[x] = static_cast<int>(y);
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  return extend(0);
}

bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q, const std::optional<std::vector<int>>& hint) {
  return arcs_isomorphic(p.size(), p.covers(), q.size(), q.covers(), hint);
}

}  // namespace hbo
