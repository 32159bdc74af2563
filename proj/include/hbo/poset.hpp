#pragma once

// Finite posets given by cover relations, relation closure, and the
// enumeration primitives used throughout: order ideals, maximal chains and
// linear extensions.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbo/bitset.hpp"

namespace hbo {

// Generating pairs (a, b) meaning a < b over elements 0..labels.size()-1.
// Duplicates are allowed; antisymmetry is not assumed.
struct RelationSet {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const { return labels.size(); }
};

class FinitePoset {
 public:
  FinitePoset() = default;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Sorted, transitively reduced.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int a) const { return upper_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& lower_covers(int a) const { return lower_[static_cast<std::size_t>(a)]; }

  // Strict order a < b.
  bool less(int a, int b) const { return above_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
  // Elements strictly above / below a.
  const Bitset& above(int a) const { return above_[static_cast<std::size_t>(a)]; }
  const Bitset& below(int a) const { return below_[static_cast<std::size_t>(a)]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  bool is_order_ideal(const Bitset& set) const;

 private:
  friend FinitePoset close_to_poset(const RelationSet& relations);

  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  std::vector<Bitset> above_;
  std::vector<Bitset> below_;
};

// Transitive closure, antisymmetry check, cover reduction. Throws CycleError
// with a witness cycle when the relations are not antisymmetric.
FinitePoset close_to_poset(const RelationSet& relations);

// A directed cycle in the relation graph, if any (node indices, the last
// pointing back to the first).
std::optional<std::vector<int>> find_cycle(std::size_t nodes, const std::vector<std::pair<int, int>>& arcs);

// Visitors return false to stop the enumeration early.
using OrderVisitor = std::function<bool(const std::vector<int>&)>;
using SetVisitor = std::function<bool(const Bitset&)>;

// Minimal elements are tried in increasing index order, so the sequence of
// extensions is deterministic.
void for_each_linear_extension(const FinitePoset& p, const OrderVisitor& visit);
std::vector<std::vector<int>> linear_extensions(const FinitePoset& p);

// Memoized count over the lattice of order ideals. Returns nullopt when more
// than `ideal_cap` distinct ideals would have to be visited.
std::optional<std::uint64_t> count_linear_extensions(const FinitePoset& p,
                                                     std::size_t ideal_cap = std::size_t{1} << 22);

void for_each_order_ideal(const FinitePoset& p, const SetVisitor& visit);
std::vector<Bitset> order_ideals(const FinitePoset& p);
std::size_t count_antichains(const FinitePoset& p);

// Chains from a minimal to a maximal element along covers.
void for_each_maximal_chain(const FinitePoset& p, const OrderVisitor& visit);
std::vector<std::vector<int>> maximal_chains(const FinitePoset& p);

struct RankReport {
  bool ranked = false;
  bool unique_min = false;
  bool unique_max = false;
  // rank[i] is defined when ranked: minimal elements sit at 0 and every
  // cover raises the rank by one.
  std::vector<int> rank;
};
RankReport ranked_check(const FinitePoset& p);

// Hint maps element i of p to hint[i] of q. Returns true iff the hint is a
// bijection carrying covers of p exactly onto covers of q. Without a hint a
// backtracking search is used, limited to 12 elements (InvalidArgument
// beyond that).
bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q,
                      const std::optional<std::vector<int>>& hint = std::nullopt);

// Same check over plain arc lists.
bool arcs_isomorphic(std::size_t nodes_a, const std::vector<std::pair<int, int>>& arcs_a,
                     std::size_t nodes_b, const std::vector<std::pair<int, int>>& arcs_b,
                     const std::optional<std::vector<int>>& hint = std::nullopt);

}  // namespace hbo
