#include "hbo/digraph.hpp"

#include <algorithm>
#include <deque>

#include "hbo/error.hpp"
#include "hbo/poset.hpp"

namespace hbo {

int Digraph::add_node(std::string label) {
  labels_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  return static_cast<int>(labels_.size() - 1);
}

bool Digraph::add_arc(int from, int to) {
  if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= size() || static_cast<std::size_t>(to) >= size()) {
    throw InvalidArgument("arc refers to a missing node");
  }
  auto& list = out_[static_cast<std::size_t>(from)];
  auto it = std::lower_bound(list.begin(), list.end(), to);
  if (it != list.end() && *it == to) return false;
  list.insert(it, to);
  auto& back = in_[static_cast<std::size_t>(to)];
  back.insert(std::lower_bound(back.begin(), back.end(), from), from);
  return true;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (int v : out_[u]) out.emplace_back(static_cast<int>(u), v);
  }
  return out;
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& list : out_) total += list.size();
  return total;
}

bool Digraph::has_arc(int from, int to) const {
  const auto& list = out_[static_cast<std::size_t>(from)];
  return std::binary_search(list.begin(), list.end(), to);
}

bool is_acyclic(const Digraph& g) { return !find_cycle(g.size(), g.arcs()).has_value(); }

int undirected_diameter(const Digraph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw InvalidArgument("diameter of an empty graph is undefined");
  int diameter = 0;
  std::vector<int> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      auto visit = [&](int v) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      };
      for (int v : g.out(u)) visit(v);
      for (int v : g.in(u)) visit(v);
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] < 0) {
        throw InvalidArgument("graph is disconnected: no undirected path between '" + g.label(static_cast<int>(s)) +
                              "' and '" + g.label(static_cast<int>(t)) + "'");
      }
      diameter = std::max(diameter, dist[t]);
    }
  }
  return diameter;
}

DigraphReport digraph_checks(const Digraph& g) {
  DigraphReport report;
  report.cycle = find_cycle(g.size(), g.arcs());
  report.acyclic = !report.cycle.has_value();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.in(static_cast<int>(v)).empty()) report.sources.push_back(static_cast<int>(v));
    if (g.out(static_cast<int>(v)).empty()) report.sinks.push_back(static_cast<int>(v));
  }
  report.undirected_diameter = undirected_diameter(g);
  return report;
}

}  // namespace hbo
