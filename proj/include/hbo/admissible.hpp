#pragma once

// Admissible orders of Inv_k(w), reversal sets, commutation classes,
// packet flips, the higher Bruhat order B_w(n,k) and reflection orders.

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hbo/bitset.hpp"
#include "hbo/digraph.hpp"
#include "hbo/permanent.hpp"
#include "hbo/report.hpp"
#include "hbo/words.hpp"

namespace hbo {

// A total order of Inv_k(w) as indices into the level's element list.
using Order = std::vector<int>;

struct OrderHash {
  std::size_t operator()(const Order& o) const {
    std::size_t h = o.size();
    for (int v : o) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

struct AdmissibilityReport {
  bool admissible = true;
  std::string diagnostic;  // names the violated relation or packet
};

enum class FlipDirection { lex_to_antilex, antilex_to_lex };

class AdmissibleSpace {
 public:
  // Throws UnsupportedCase for affine w with k = 1.
  AdmissibleSpace(const AffinePermutation& w, int k);

  const LevelContext& context() const { return *ctx_; }
  const InversionLevel& level() const { return ctx_->level(); }
  const InversionLevel& upper() const { return ctx_->upper(); }
  int k() const { return ctx_->k(); }

  // Throws InvalidArgument unless `sequence` is a permutation of Inv_k(w).
  Order to_order(const std::vector<KClass>& sequence) const;
  std::vector<KClass> to_classes(const Order& order) const;

  AdmissibilityReport check(const Order& order) const;

  // Incomparable in P_w(n,k) and not members of a common packet P(Z) for
  // any (k+1)-class Z, inversion or not.
  bool commute(int a, int b) const { return commute_[static_cast<std::size_t>(a) * level().size() + static_cast<std::size_t>(b)]; }

  // All admissible orders, lexicographically sorted. Requires |Inv_k| <= 64.
  std::vector<Order> enumerate() const;

  // Subset of Inv_{k+1} whose packets appear in antilex order.
  Bitset reversal_set(const Order& order) const;

  // P(Z) occupies consecutive positions.
  bool flippable(const Order& order, int z) const;
  // Reverses P(Z); throws InvalidArgument when P(Z) is not saturated.
  Order apply_flip(const Order& order, int z) const;
  FlipDirection flip_direction(const Order& order, int z) const;

 private:
  std::shared_ptr<const LevelContext> ctx_;
  std::vector<bool> commute_;
};

// Every admissible order of one (w, k), partitioned into commutation
// classes. Each commutation and flip move between admissible orders is
// audited: the move must land on an admissible order, a commutation must
// keep the reversal set and a flip must change it by exactly one element.
struct OrderClasses {
  std::vector<Order> orders;                // sorted
  std::vector<Bitset> reversal;             // per order
  std::vector<int> class_of;                // per order
  std::vector<std::vector<int>> classes;    // order indices; classes ordered by least order
  CheckReport audit;

  int find(const Order& order) const;
};

OrderClasses commutation_classes_of_orders(const AdmissibleSpace& space);

struct FlipOption {
  int packet = 0;  // index into upper()
  FlipDirection direction = FlipDirection::lex_to_antilex;
  int representative = 0;  // order index in which P(Z) is saturated
};

// Packets flippable for the class, searched over every member order.
std::vector<FlipOption> flippable_packets(const AdmissibleSpace& space, const OrderClasses& classes, int class_id);

// B_w(n,k): commutation classes ordered by reachability through
// lex-to-antilex flips. Built from moves only, never from reversal sets.
struct BruhatOrder {
  OrderClasses classes;
  Digraph flip_graph;     // class -> class for every lex-to-antilex flip
  FinitePoset poset;      // closure of flip_graph
  std::vector<Bitset> class_reversal;  // reversal set of each class representative
};

// Throws InvariantViolation if flip reachability is not antisymmetric.
BruhatOrder build_bruhat(const AdmissibleSpace& space);

// The reflection order of a reduced word, as canonical pairs.
std::vector<KClass> reflection_order(const Word& word);

struct BijectionReport {
  CheckReport report;
  std::size_t words = 0;
  std::size_t orders = 0;
  std::size_t word_classes = 0;
  std::size_t order_classes = 0;
};

// Reduced words <-> A_w(n,2) via reflection orders; commutation classes
// match; braids i(i+1)i -> (i+1)i(i+1) match lex-to-antilex flips at the same
// positions; Hasse(B_w(n,2)) is G(w) under the induced class map.
BijectionReport word_order_bijection_check(const AffinePermutation& w);

}  // namespace hbo
