#include "hbo/permanent.hpp"

#include <algorithm>
#include <set>

#include "hbo/error.hpp"

namespace hbo {

std::vector<std::string> InversionLevel::labels() const {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (const auto& x : elements) out.push_back(format_kclass(x));
  return out;
}

InversionLevel make_level(const InversionTable& table, int k) {
  InversionLevel level;
  level.k = k;
  level.elements = table.inv_k(k);
  for (std::size_t i = 0; i < level.elements.size(); ++i) level.index.emplace(level.elements[i], static_cast<int>(i));
  return level;
}

std::vector<TaggedRelation> quasi_relations(const InversionTable& table, const InversionLevel& level) {
  const int k = level.k;
  std::vector<TaggedRelation> out;
  for (const auto& x : table.quasi_inversions(k + 1)) {
    std::size_t i = 1;
    if (x.size() > 2) {
      PacketIntersection c = table.classify(x);
      if (c.shape != PacketShape::adjacent_pair) {
        throw InvariantViolation("quasi-inversion " + format_kclass(x) + " meets Inv_k in " + describe(c) +
                                 " rather than an adjacent pair");
      }
      i = c.index;
    }
    int a = level.find(x.omit(i));
    int b = level.find(x.omit(i + 1));
    if (a < 0 || b < 0) throw InvariantViolation("quasi-inversion packet members missing from Inv_k");
    if ((k - static_cast<int>(i)) % 2 != 0) {
      out.push_back({a, b, RelationKind::quasi});
    } else {
      out.push_back({b, a, RelationKind::quasi});
    }
  }
  return out;
}

std::vector<std::int64_t> congruence_vector(int n, int k, int zeros) {
  if (zeros < 0 || zeros >= k) {
    throw InvalidArgument("congruence vector index " + std::to_string(zeros) + " outside [0, " + std::to_string(k) + ")");
  }
  std::vector<std::int64_t> v(static_cast<std::size_t>(k), n);
  std::fill(v.begin(), v.begin() + zeros, 0);
  return v;
}

std::vector<TaggedRelation> congruence_relations(const InversionTable& table, const InversionLevel& level) {
  (void)table;
  const int k = level.k;
  std::vector<TaggedRelation> out;
  for (std::size_t a = 0; a < level.size(); ++a) {
    const KClass& x = level.elements[a];
    for (int i = 0; i < k; ++i) {
      KClass y = x.plus_congruence(static_cast<std::size_t>(i));
      if (y == x) continue;  // i = 0 is a uniform shift for k >= 2
      int b = level.find(y);
      if (b < 0) continue;
      if ((k - i) % 2 != 0) {
        out.push_back({static_cast<int>(a), b, RelationKind::congruence});
      } else {
        out.push_back({b, static_cast<int>(a), RelationKind::congruence});
      }
    }
  }
  return out;
}

namespace {

RelationSet to_relation_set(const InversionLevel& level, const std::vector<TaggedRelation>& relations) {
  RelationSet r;
  r.labels = level.labels();
  for (const auto& rel : relations) r.pairs.emplace_back(rel.lower, rel.upper);
  return r;
}

}  // namespace

RelationSet quasi_inversion_relations(const AffinePermutation& w, int k) {
  InversionTable table(w);
  InversionLevel level = make_level(table, k);
  return to_relation_set(level, quasi_relations(table, level));
}

RelationSet congruence_relations(const AffinePermutation& w, int k) {
  if (k < 2) throw InvalidArgument("congruence relations need k >= 2");
  InversionTable table(w);
  InversionLevel level = make_level(table, k);
  return to_relation_set(level, congruence_relations(table, level));
}

LevelContext::LevelContext(const AffinePermutation& w, int k)
    : table_(w), k_(k), level_(make_level(table_, k)), upper_(make_level(table_, k + 1)) {
  packets_.reserve(upper_.size());
  packets_of_.assign(level_.size(), {});
  for (std::size_t z = 0; z < upper_.size(); ++z) {
    const KClass& x = upper_.elements[z];
    std::vector<int> members;
    for (std::size_t i = 1; i <= x.size(); ++i) {
      int idx = level_.find(x.omit(i));
      if (idx < 0) {
        throw InvariantViolation("member X_" + std::to_string(i) + " of inversion " + format_kclass(x) +
                                 " is not an inversion");
      }
      members.push_back(idx);
      packets_of_[static_cast<std::size_t>(idx)].emplace_back(static_cast<int>(z), static_cast<int>(i));
    }
    packets_.push_back(std::move(members));
  }
  relations_ = quasi_relations(table_, level_);
  if (k >= 2) {
    auto cong = congruence_relations(table_, level_);
    relations_.insert(relations_.end(), cong.begin(), cong.end());
  }
  poset_ = close_to_poset(to_relation_set(level_, relations_));
}

PermanentPoset permanent_poset(const AffinePermutation& w, int k) {
  LevelContext ctx(w, k);
  return {ctx.level().elements, ctx.poset()};
}

}  // namespace hbo
