#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hbo {

// Simple directed graph over labelled nodes 0..size()-1. Duplicate arcs are
// dropped on insertion.
class Digraph {
 public:
  int add_node(std::string label);
  // Returns false if the arc was already present.
  bool add_arc(int from, int to);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  // Sorted (from, to) pairs.
  std::vector<std::pair<int, int>> arcs() const;
  std::size_t arc_count() const;
  bool has_arc(int from, int to) const;
  const std::vector<int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in(int v) const { return in_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct DigraphReport {
  bool acyclic = true;
  std::vector<int> sources;
  std::vector<int> sinks;
  int undirected_diameter = 0;
  // Present when acyclic is false.
  std::optional<std::vector<int>> cycle;
};

// Acyclicity by topological sort, sources and sinks, and the diameter of the
// underlying undirected graph by BFS from every node. Throws InvalidArgument
// on an empty graph and when the undirected graph is disconnected (the
// message names two nodes in different components).
DigraphReport digraph_checks(const Digraph& g);

int undirected_diameter(const Digraph& g);

bool is_acyclic(const Digraph& g);

}  // namespace hbo
