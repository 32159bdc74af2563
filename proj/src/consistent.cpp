#include "hbo/consistent.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hbo/error.hpp"

namespace hbo {
namespace {

bool packet_ok(const std::vector<int>& members, const Bitset& r) {
  std::vector<bool> flags(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) flags[i] = members[i] >= 0 && r.test(static_cast<std::size_t>(members[i]));
  return flags_are_prefix(flags) || flags_are_suffix(flags);
}

std::string set_label(const InversionLevel& level, const Bitset& r) {
  std::string out = "{";
  bool first = true;
  r.for_each([&](int i) {
    if (!first) out += ",";
    first = false;
    out += format_kclass_compact(level.elements[static_cast<std::size_t>(i)]);
  });
  return out + "}";
}

}  // namespace

StrictPackets strict_packets(const LevelContext& ctx) {
  StrictPackets out;
  for (const auto& z : ctx.table().enclosing_classes(ctx.level().elements)) {
    if (ctx.upper().find(z) >= 0) continue;
    std::vector<int> members;
    bool meets = false;
    for (std::size_t i = 1; i <= z.size(); ++i) {
      int idx = ctx.level().find(z.omit(i));
      meets = meets || idx >= 0;
      members.push_back(idx);
    }
    if (!meets) continue;
    out.parents.push_back(z);
    out.members.push_back(std::move(members));
  }
  return out;
}

ConsistencyReport check_consistent(const LevelContext& ctx, const Bitset& r, const StrictPackets* extra) {
  const auto& level = ctx.level();
  const auto& poset = ctx.poset();
  ConsistencyReport out;
  r.for_each([&](int x) {
    if (!out.consistent) return;
    for (int y : poset.lower_covers(x)) {
      if (!r.test(static_cast<std::size_t>(y))) {
        out.consistent = false;
        out.diagnostic = "not an order ideal: " + format_kclass(level.elements[static_cast<std::size_t>(y)]) + " < " +
                         format_kclass(level.elements[static_cast<std::size_t>(x)]) + " but only the latter is in R";
        return;
      }
    }
  });
  if (!out.consistent) return out;
  for (std::size_t z = 0; z < ctx.upper().size(); ++z) {
    if (!packet_ok(ctx.packets()[z], r)) {
      return {false, "P(" + format_kclass(ctx.upper().elements[z]) + ") ∩ R is neither a prefix nor a suffix"};
    }
  }
  if (extra) {
    for (std::size_t z = 0; z < extra->parents.size(); ++z) {
      if (!packet_ok(extra->members[z], r)) {
        return {false, "P(" + format_kclass(extra->parents[z]) + ") ∩ R is neither a prefix nor a suffix (non-inversion)"};
      }
    }
  }
  return out;
}

Bitset to_subset(const InversionLevel& level, const std::vector<KClass>& r, const std::string& what) {
  Bitset out(level.size());
  for (const auto& x : r) {
    int idx = level.find(x);
    if (idx < 0) throw InvalidArgument(format_kclass(x) + " is not in " + what);
    out.set(static_cast<std::size_t>(idx));
  }
  return out;
}

std::vector<KClass> to_classes(const InversionLevel& level, const Bitset& r) {
  std::vector<KClass> out;
  r.for_each([&](int i) { out.push_back(level.elements[static_cast<std::size_t>(i)]); });
  return out;
}

ConsistencyReport is_consistent(const AffinePermutation& w, int k, const std::vector<KClass>& r, bool strict) {
  LevelContext ctx(w, k);
  Bitset subset = to_subset(ctx.level(), r, "Inv_" + std::to_string(k) + "(w)");
  if (!strict) return check_consistent(ctx, subset);
  StrictPackets extra = strict_packets(ctx);
  return check_consistent(ctx, subset, &extra);
}

std::vector<Bitset> enumerate_consistent(const LevelContext& ctx, bool strict) {
  std::optional<StrictPackets> extra;
  if (strict) extra = strict_packets(ctx);
  std::vector<Bitset> out;
  for_each_order_ideal(ctx.poset(), [&](const Bitset& ideal) {
    bool ok = true;
    for (std::size_t z = 0; z < ctx.upper().size() && ok; ++z) ok = packet_ok(ctx.packets()[z], ideal);
    if (extra) {
      for (std::size_t z = 0; z < extra->members.size() && ok; ++z) ok = packet_ok(extra->members[z], ideal);
    }
    if (ok) out.push_back(ideal);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

int ConsistentPoset::find(const Bitset& r) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), r);
  if (it == sets.end() || !(*it == r)) return -1;
  return static_cast<int>(it - sets.begin());
}

ConsistentPoset consistent_poset(std::shared_ptr<const LevelContext> ctx) {
  ConsistentPoset out;
  out.ctx = std::move(ctx);
  out.sets = enumerate_consistent(*out.ctx);
  std::unordered_map<Bitset, int, BitsetHash> index;
  RelationSet r;
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    index.emplace(out.sets[i], static_cast<int>(i));
    r.labels.push_back(set_label(out.ctx->level(), out.sets[i]));
  }
  const std::size_t n = out.ctx->level().size();
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (out.sets[i].test(x)) continue;
      Bitset next = out.sets[i];
      next.set(x);
      auto it = index.find(next);
      if (it != index.end()) r.pairs.emplace_back(static_cast<int>(i), it->second);
    }
  }
  out.poset = close_to_poset(r);
  return out;
}

ConsistentPoset consistent_poset(const AffinePermutation& w, int k) {
  return consistent_poset(std::make_shared<const LevelContext>(w, k));
}

std::string tag_name(ArcTag tag) {
  switch (tag) {
    case ArcTag::quasi: return "quasi";
    case ArcTag::reversal: return "reversal";
    case ArcTag::complement: return "complement";
    case ArcTag::congruence: return "congruence";
  }
  return "?";
}

std::size_t GRGraph::count(ArcTag tag) const {
  return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const TaggedArc& a) { return a.tag == tag; }));
}

GRGraph build_gr(const LevelContext& ctx, const Bitset& r) {
  GRGraph g;
  g.elements = ctx.level().elements;
  for (const auto& x : g.elements) g.graph.add_node(format_kclass(x));
  auto add = [&](int from, int to, ArcTag tag) {
    if (g.graph.add_arc(from, to)) g.arcs.push_back({from, to, tag});
  };
  for (const auto& rel : ctx.relations()) {
    add(rel.lower, rel.upper, rel.kind == RelationKind::quasi ? ArcTag::quasi : ArcTag::congruence);
  }
  for (std::size_t z = 0; z < ctx.upper().size(); ++z) {
    const auto& members = ctx.packets()[z];
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      if (r.test(z)) {
        add(members[i], members[i + 1], ArcTag::reversal);
      } else {
        add(members[i + 1], members[i], ArcTag::complement);
      }
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end(), [](const TaggedArc& a, const TaggedArc& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  return g;
}

GRGraph build_gr(const AffinePermutation& w, int k, const std::vector<KClass>& r) {
  LevelContext ctx(w, k);
  return build_gr(ctx, to_subset(ctx.upper(), r, "Inv_" + std::to_string(k + 1) + "(w)"));
}

std::optional<std::vector<int>> gr_cycle(const GRGraph& g) { return find_cycle(g.graph.size(), g.graph.arcs()); }

std::vector<Order> rev_inverse(const LevelContext& ctx, const Bitset& r, std::size_t limit) {
  GRGraph g = build_gr(ctx, r);
  RelationSet rel;
  rel.labels = g.graph.labels();
  rel.pairs = g.graph.arcs();
  FinitePoset closure = close_to_poset(rel);
  std::vector<Order> out;
  for_each_linear_extension(closure, [&](const std::vector<int>& o) {
    out.push_back(o);
    return out.size() < limit;
  });
  return out;
}

Bitset suffix_set(const LevelContext& ctx, const Bitset& r) {
  Bitset out(ctx.upper().size());
  for (std::size_t z = 0; z < ctx.upper().size(); ++z) {
    if (r.test(static_cast<std::size_t>(ctx.packets()[z].front()))) out.set(z);
  }
  return out;
}

CheckReport rev_isomorphism_check(const BruhatOrder& bruhat, const AdmissibleSpace& space, const ConsistentPoset& upper) {
  CheckReport report;
  report.merge(bruhat.classes.audit, "moves.");
  if (upper.ctx->level().elements != space.upper().elements) {
    report.fail("C_w(n,k+1) is not built over Inv_{k+1}(w)");
    return report;
  }
  const std::size_t classes = bruhat.classes.classes.size();
  report.count("classes", static_cast<std::int64_t>(classes));
  report.count("consistent_sets", static_cast<std::int64_t>(upper.sets.size()));
  std::vector<int> hint(classes, -1);
  std::vector<int> preimage(upper.sets.size(), -1);
  for (std::size_t c = 0; c < classes; ++c) {
    const Bitset& rev = bruhat.class_reversal[c];
    int idx = upper.find(rev);
    if (idx < 0) {
      report.fail("reversal set " + format_kclass_list(to_classes(space.upper(), rev)) + " is not consistent: " +
                  check_consistent(*upper.ctx, rev).diagnostic);
      continue;
    }
    if (preimage[static_cast<std::size_t>(idx)] >= 0) {
      report.fail("two commutation classes share the reversal set " + format_kclass_list(to_classes(space.upper(), rev)));
    }
    preimage[static_cast<std::size_t>(idx)] = static_cast<int>(c);
    hint[c] = idx;
  }
  report.require(classes == upper.sets.size(), std::to_string(classes) + " classes in B_w(n,k) but " +
                                                   std::to_string(upper.sets.size()) + " sets in C_w(n,k+1)");
  if (!report.pass) return report;
  report.require(poset_isomorphic(bruhat.poset, upper.poset, hint), "Rev does not preserve and reflect the order");

  // Rev^{-1}(R) computed from G_R is exactly the class with reversal set R.
  const auto& oc = bruhat.classes;
  for (std::size_t s = 0; s < upper.sets.size(); ++s) {
    const Bitset& r = upper.sets[s];
    const auto& members = oc.classes[static_cast<std::size_t>(preimage[s])];
    auto g = build_gr(space.context(), r);
    if (auto cycle = gr_cycle(g)) {
      report.fail("G_R is cyclic for R = " + format_kclass_list(to_classes(space.upper(), r)));
      continue;
    }
    auto orders = rev_inverse(space.context(), r, members.size() + 1);
    report.count("rev_inverse_orders", static_cast<std::int64_t>(orders.size()));
    bool ok = orders.size() == members.size();
    for (const auto& o : orders) {
      int idx = oc.find(o);
      ok = ok && idx >= 0 && oc.class_of[static_cast<std::size_t>(idx)] == preimage[s];
    }
    report.require(ok, "linear extensions of G_R differ from the class with reversal set " +
                           format_kclass_list(to_classes(space.upper(), r)));
  }
  return report;
}

CheckReport rev_isomorphism_check(const AffinePermutation& w, int k) {
  AdmissibleSpace space(w, k);
  BruhatOrder bruhat = build_bruhat(space);
  ConsistentPoset upper = consistent_poset(w, k + 1);
  return rev_isomorphism_check(bruhat, space, upper);
}

CheckReport chain_order_bijection_check(const ConsistentPoset& c, const AdmissibleSpace& space) {
  CheckReport report;
  const auto& level = c.ctx->level();
  if (level.elements != space.level().elements) {
    report.fail("C_w(n,k+1) and A_w(n,k+1) are built over different sets");
    return report;
  }
  const auto orders = space.enumerate();
  std::vector<bool> seen(orders.size(), false);
  std::size_t chains = 0;
  for_each_maximal_chain(c.poset, [&](const std::vector<int>& chain) {
    ++chains;
    const Bitset& first = c.sets[static_cast<std::size_t>(chain.front())];
    const Bitset& last = c.sets[static_cast<std::size_t>(chain.back())];
    if (first.any() || last.count() != level.size()) {
      report.fail("maximal chain does not run from the empty set to Inv_k(w)");
      return report.pass;
    }
    Order order;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      Bitset diff = c.sets[static_cast<std::size_t>(chain[i])] - c.sets[static_cast<std::size_t>(chain[i - 1])];
      if (diff.count() != 1) {
        report.fail("chain step adds more than one element");
        return report.pass;
      }
      order.push_back(diff.indices().front());
    }
    auto it = std::lower_bound(orders.begin(), orders.end(), order);
    if (it == orders.end() || *it != order) {
      report.fail("chain order " + format_kclass_list(space.to_classes(order)) + " is not admissible: " +
                  space.check(order).diagnostic);
      return report.pass;
    }
    std::size_t idx = static_cast<std::size_t>(it - orders.begin());
    report.require(!seen[idx], "two maximal chains give the same order");
    seen[idx] = true;
    return report.pass;
  });
  report.count("chains", static_cast<std::int64_t>(chains));
  report.count("orders", static_cast<std::int64_t>(orders.size()));
  if (report.pass) {
    report.require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }),
                   "some admissible order is not the difference sequence of a maximal chain");
  }
  return report;
}

CheckReport chain_order_bijection_check(const AffinePermutation& w, int k) {
  ConsistentPoset c = consistent_poset(w, k + 1);
  AdmissibleSpace space(w, k + 1);
  return chain_order_bijection_check(c, space);
}

}  // namespace hbo
