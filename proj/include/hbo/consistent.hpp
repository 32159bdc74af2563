#pragma once

// Consistent sets, the poset C_w(n,k), the digraph G_R and the checks that
// tie C_w(n,k+1) to B_w(n,k).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hbo/admissible.hpp"
#include "hbo/bitset.hpp"
#include "hbo/digraph.hpp"
#include "hbo/permanent.hpp"
#include "hbo/report.hpp"

namespace hbo {

struct ConsistencyReport {
  bool consistent = true;
  std::string diagnostic;  // names the violating cover or packet
};

// Packets of the canonical (k+1)-classes outside Inv_{k+1}(w) whose packet
// meets Inv_k(w). Entries are level indices, -1 for members outside Inv_k.
struct StrictPackets {
  std::vector<KClass> parents;
  std::vector<std::vector<int>> members;
};
StrictPackets strict_packets(const LevelContext& ctx);

// R is a subset of ctx.level(). With `strict`, the prefix/suffix condition
// is also imposed on `extra` packets.
ConsistencyReport check_consistent(const LevelContext& ctx, const Bitset& r,
                                   const StrictPackets* extra = nullptr);

// Throws InvalidArgument unless R ⊆ Inv_k(w).
ConsistencyReport is_consistent(const AffinePermutation& w, int k, const std::vector<KClass>& r,
                                bool strict = false);

Bitset to_subset(const InversionLevel& level, const std::vector<KClass>& r, const std::string& what);
std::vector<KClass> to_classes(const InversionLevel& level, const Bitset& r);

// Order ideals of P_w(n,k) passing the prefix/suffix test, sorted by size
// and then by element indices.
std::vector<Bitset> enumerate_consistent(const LevelContext& ctx, bool strict = false);

struct ConsistentPoset {
  std::shared_ptr<const LevelContext> ctx;
  std::vector<Bitset> sets;
  FinitePoset poset;  // covers R < R ∪ {x}

  int find(const Bitset& r) const;
};

ConsistentPoset consistent_poset(const AffinePermutation& w, int k);
ConsistentPoset consistent_poset(std::shared_ptr<const LevelContext> ctx);

enum class ArcTag { quasi, reversal, complement, congruence };
std::string tag_name(ArcTag tag);

struct TaggedArc {
  int from = 0;
  int to = 0;
  ArcTag tag = ArcTag::quasi;
};

// G_R on Inv_k(w) for R ⊆ Inv_{k+1}(w). Only generating relations are used.
struct GRGraph {
  std::vector<KClass> elements;
  Digraph graph;
  std::vector<TaggedArc> arcs;  // one per arc of graph; first tag wins

  std::size_t count(ArcTag tag) const;
};

GRGraph build_gr(const LevelContext& ctx, const Bitset& r);
GRGraph build_gr(const AffinePermutation& w, int k, const std::vector<KClass>& r);

// Present when G_R has a directed cycle.
std::optional<std::vector<int>> gr_cycle(const GRGraph& g);

// Linear extensions of the closure of G_R, as orders of ctx.level().
// Throws CycleError when G_R is cyclic. `limit` stops the enumeration early.
std::vector<Order> rev_inverse(const LevelContext& ctx, const Bitset& r,
                               std::size_t limit = static_cast<std::size_t>(-1));

// {Y ∈ Inv_{k+1}(w) : Y_1 ∈ R}, as a subset of ctx.upper().
Bitset suffix_set(const LevelContext& ctx, const Bitset& r);

// Rev: B_w(n,k) -> C_w(n,k+1) is a well-defined poset isomorphism, and
// Rev^{-1}(R) is exactly the commutation class with reversal set R.
CheckReport rev_isomorphism_check(const BruhatOrder& bruhat, const AdmissibleSpace& space,
                                  const ConsistentPoset& upper);
CheckReport rev_isomorphism_check(const AffinePermutation& w, int k);

// Maximal chains of C_w(n,k+1) <-> A_w(n,k+1) via successive differences.
CheckReport chain_order_bijection_check(const ConsistentPoset& c, const AdmissibleSpace& space);
CheckReport chain_order_bijection_check(const AffinePermutation& w, int k);

}  // namespace hbo
