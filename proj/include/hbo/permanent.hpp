#pragma once

// The permanent poset P_w(n,k): the order on Inv_k(w) generated by
// quasi-inversion relations and, for affine w, congruence relations.

#include <memory>
#include <unordered_map>
#include <vector>

#include "hbo/kclass.hpp"
#include "hbo/poset.hpp"

namespace hbo {

// Inv_k(w) with a stable index (lexicographic order of representatives).
struct InversionLevel {
  int k = 0;
  std::vector<KClass> elements;
  std::unordered_map<KClass, int, KClassHash> index;

  std::size_t size() const { return elements.size(); }
  int find(const KClass& x) const {
    auto it = index.find(x);
    return it == index.end() ? -1 : it->second;
  }
  std::vector<std::string> labels() const;
};

InversionLevel make_level(const InversionTable& table, int k);

enum class RelationKind { quasi, congruence };

// lower < upper, both indices into an InversionLevel.
struct TaggedRelation {
  int lower = 0;
  int upper = 0;
  RelationKind kind = RelationKind::quasi;
  bool operator==(const TaggedRelation&) const = default;
};

// For every quasi-inversion X with P(X) ∩ Inv_k = {X_i, X_{i+1}}:
// X_i < X_{i+1} when k - i is odd, X_{i+1} < X_i when k - i is even.
std::vector<TaggedRelation> quasi_relations(const InversionTable& table, const InversionLevel& level);

// (0, ..., 0, n, ..., n) with `zeros` leading zeros and length k.
std::vector<std::int64_t> congruence_vector(int n, int k, int zeros);

// For X and X + v_i both in Inv_k (0 <= i < k, distinct classes):
// X < X + v_i when k - i is odd, X + v_i < X when k - i is even.
std::vector<TaggedRelation> congruence_relations(const InversionTable& table, const InversionLevel& level);

RelationSet quasi_inversion_relations(const AffinePermutation& w, int k);
RelationSet congruence_relations(const AffinePermutation& w, int k);

// Everything attached to one (w, k): Inv_k, Inv_{k+1} with packet member
// indices, generating relations and the closed poset P_w(n,k).
class LevelContext {
 public:
  // Throws UnsupportedCase for affine w with k = 1, CycleError if the
  // generating relations are not antisymmetric.
  LevelContext(const AffinePermutation& w, int k);

  const AffinePermutation& perm() const { return table_.perm(); }
  int rank() const { return table_.rank(); }
  int k() const { return k_; }
  const InversionTable& table() const { return table_; }
  const InversionLevel& level() const { return level_; }
  const InversionLevel& upper() const { return upper_; }

  // packets()[z][i-1] is the index in level() of X_i for X = upper().elements[z].
  const std::vector<std::vector<int>>& packets() const { return packets_; }
  // For each element of level(): (packet z, 1-based member position).
  const std::vector<std::vector<std::pair<int, int>>>& packets_of() const { return packets_of_; }

  const std::vector<TaggedRelation>& relations() const { return relations_; }
  const FinitePoset& poset() const { return poset_; }

 private:
  InversionTable table_;
  int k_;
  InversionLevel level_;
  InversionLevel upper_;
  std::vector<std::vector<int>> packets_;
  std::vector<std::vector<std::pair<int, int>>> packets_of_;
  std::vector<TaggedRelation> relations_;
  FinitePoset poset_;
};

struct PermanentPoset {
  std::vector<KClass> elements;
  FinitePoset poset;
};

PermanentPoset permanent_poset(const AffinePermutation& w, int k);

}  // namespace hbo
