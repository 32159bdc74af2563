#include "hbo/verify/checks.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "hbo/admissible.hpp"
#include "hbo/consistent.hpp"
#include "hbo/error.hpp"

namespace hbo::verify {
namespace {

std::mutex fault_mutex;
std::string injected;

std::string current_fault() {
  std::lock_guard<std::mutex> lock(fault_mutex);
  return injected;
}

constexpr double kUnlimited = 1e300;

struct Skip {
  std::string reason;
};

struct Outcome {
  CheckReport report;
  json extra = json::object();  // merged into the witness on failure
};

using PairSet = std::set<std::pair<std::int64_t, std::int64_t>>;

PairSet pair_set(const AffinePermutation& w) {
  PairSet out;
  for (const auto& p : inv2(w)) out.emplace(p.x, p.y);
  return out;
}

bool has_pair(const PairSet& r, std::int64_t a, std::int64_t b, int n) {
  auto p = InversionPair::canonical(a, b, n);
  return r.count({p.x, p.y}) > 0;
}

void require_budget_inv(std::size_t size, int k, const Budget& budget) {
  if (size > budget.max_inv) {
    throw Skip{"|Inv_" + std::to_string(k) + "(w)| = " + std::to_string(size) + " exceeds the budget of " +
               std::to_string(budget.max_inv)};
  }
}

void require_budget_orders(const LevelContext& ctx, const Budget& budget) {
  require_budget_inv(ctx.level().size(), ctx.k(), budget);
  if (budget.max_ext >= kUnlimited) return;
  auto estimate = count_linear_extensions(ctx.poset());
  if (!estimate || static_cast<double>(*estimate) > budget.max_ext) {
    throw Skip{"estimated " + (estimate ? std::to_string(*estimate) : std::string("too many")) +
               " linear extensions of P_w(n," + std::to_string(ctx.k()) + ") exceed the budget"};
  }
}

void check_ranked(CheckReport& report, const ConsistentPoset& c, const std::string& name) {
  RankReport rr = ranked_check(c.poset);
  report.require(rr.ranked && rr.unique_min && rr.unique_max, name + " is not ranked with unique extremes");
  if (!report.pass) return;
  auto mins = c.poset.minimal_elements();
  auto maxs = c.poset.maximal_elements();
  report.require(c.sets[static_cast<std::size_t>(mins.front())].none(), name + " has a nonempty minimum");
  report.require(c.sets[static_cast<std::size_t>(maxs.front())].count() == c.ctx->level().size(),
                 name + " has a maximum other than Inv_k(w)");
  for (std::size_t i = 0; i < c.sets.size(); ++i) {
    if (static_cast<std::size_t>(rr.rank[i]) != c.sets[i].count()) {
      report.fail(name + ": rank of a set differs from its size");
      break;
    }
  }
  report.count("consistent_sets", static_cast<std::int64_t>(c.sets.size()));
}

Outcome run_thm13(const AffinePermutation& w, const Budget& budget) {
  Outcome out;
  auto& report = out.report;
  auto ctx2 = std::make_shared<const LevelContext>(w, 2);
  require_budget_orders(*ctx2, budget);
  BraidGraph g = braid_graph(w);
  DigraphReport d = digraph_checks(g.graph);
  report.require(d.acyclic, "G(w) has a directed cycle");
  report.require(d.sources.size() == 1, "G(w) has " + std::to_string(d.sources.size()) + " sources");
  report.require(d.sinks.size() == 1, "G(w) has " + std::to_string(d.sinks.size()) + " sinks");
  const std::size_t inv3 = InversionTable(w).inv_k(3).size();
  report.require(static_cast<std::size_t>(d.undirected_diameter) == inv3,
                 "undirected diameter " + std::to_string(d.undirected_diameter) + " of G(w) differs from |Inv_3(w)| = " +
                     std::to_string(inv3));
  report.count("classes", static_cast<std::int64_t>(g.graph.size()));

  BijectionReport bij = word_order_bijection_check(w);
  report.merge(bij.report, "lemma44.");
  report.count("words", static_cast<std::int64_t>(bij.words));

  AdmissibleSpace space(w, 2);
  BruhatOrder bruhat = build_bruhat(space);
  ConsistentPoset c3 = consistent_poset(w, 3);
  report.merge(rev_isomorphism_check(bruhat, space, c3), "rev.");
  check_ranked(report, c3, "C_w(n,3)");
  RankReport rr3 = ranked_check(c3.poset);
  int c3_rank = rr3.rank.empty() ? 0 : *std::max_element(rr3.rank.begin(), rr3.rank.end());
  report.require(static_cast<std::size_t>(c3_rank) == inv3 && c3_rank == d.undirected_diameter,
                 "rank of C_w(n,3), |Inv_3(w)| and the diameter of G(w) disagree");

  ConsistentPoset c2(consistent_poset(ctx2));
  CheckReport chains = chain_order_bijection_check(c2, space);
  report.merge(chains, "chains.");
  report.require(chains.counters["chains"] == static_cast<std::int64_t>(bij.words),
                 "maximal chains of C_w(n,2) and reduced words differ in number");
  std::size_t weak_chains = maximal_chains(weak_interval_poset(weak_interval(w))).size();
  report.require(weak_chains == bij.words, "maximal chains of [id,w] and reduced words differ in number");
  return out;
}

Outcome run_rev(const AffinePermutation& w, int k, const Budget& budget, bool ranked, bool chains) {
  Outcome out;
  AdmissibleSpace space(w, k);
  require_budget_orders(space.context(), budget);
  BruhatOrder bruhat = build_bruhat(space);
  auto upper_ctx = std::make_shared<const LevelContext>(w, k + 1);
  ConsistentPoset upper = consistent_poset(upper_ctx);
  out.report.merge(rev_isomorphism_check(bruhat, space, upper));
  out.report.count("orders", static_cast<std::int64_t>(bruhat.classes.orders.size()));
  if (ranked) check_ranked(out.report, upper, "C_w(n,k+1)");
  if (chains) {
    AdmissibleSpace next(w, k + 1);
    require_budget_orders(next.context(), budget);
    out.report.merge(chain_order_bijection_check(upper, next), "chains.");
  }
  return out;
}

Outcome run_conj_gr(const AffinePermutation& w, int k, const Budget& budget) {
  Outcome out;
  LevelContext ctx(w, k);
  LevelContext upper(w, k + 1);
  require_budget_inv(ctx.level().size(), k, budget);
  require_budget_inv(upper.level().size(), k + 1, budget);
  auto sets = enumerate_consistent(upper);
  out.report.count("sets", static_cast<std::int64_t>(sets.size()));
  for (const auto& r : sets) {
    GRGraph g = build_gr(ctx, r);
    out.report.count("arcs", static_cast<std::int64_t>(g.arcs.size()));
    if (auto cycle = gr_cycle(g)) {
      json labels = json::array();
      for (int v : *cycle) labels.push_back(to_json(g.elements[static_cast<std::size_t>(v)]));
      out.report.fail("G_R has a directed cycle for R = " + format_kclass_list(to_classes(upper.level(), r)));
      if (!out.extra.contains("R")) {
        out.extra["R"] = to_json(to_classes(upper.level(), r));
        out.extra["cycle"] = labels;
      }
    }
  }
  return out;
}

Outcome run_lemma32(const AffinePermutation& w, int k, const Budget& budget) {
  Outcome out;
  auto& report = out.report;
  InversionTable table(w);
  auto level = table.inv_k(k);
  require_budget_inv(level.size(), k, budget);
  std::set<KClass> candidates;
  for (const auto& z : table.enclosing_classes(level)) candidates.insert(z);
  for (const auto& z : table.inv_k(k + 1)) candidates.insert(z);
  if (k + 1 >= 3 || w.is_finite()) {
    for (const auto& z : table.quasi_inversions(k + 1)) candidates.insert(z);
  }
  const PairSet pairs = pair_set(w);
  const int n = w.rank();
  for (const auto& z : candidates) {
    report.count("classes");
    try {
      PacketIntersection c = table.classify(z);
      report.count("shape." + describe(c).substr(0, describe(c).find('(')));
      if (table.is_quasi_inversion(z)) {
        // For two-element packets the adjacent pair is the whole packet.
        bool adjacent = c.shape == PacketShape::adjacent_pair || (z.size() == 2 && c.shape == PacketShape::full);
        report.require(adjacent,
                       "quasi-inversion " + format_kclass(z) + " meets Inv_k(w) in " + describe(c));
      }
    } catch (const InvariantViolation& e) {
      report.fail(e.what());
    }
    bool all_pairs = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = i + 1; j < z.size(); ++j) all_pairs = all_pairs && has_pair(pairs, z[i], z[j], n);
    }
    report.require(table.is_k_inversion(z) == all_pairs,
                   "k-inversion test and pairwise inversion test disagree on " + format_kclass(z));
  }
  return out;
}

Outcome run_lemma34(const AffinePermutation& w, int k, const Budget& budget) {
  Outcome out;
  std::unique_ptr<LevelContext> ctx;
  try {
    ctx = std::make_unique<LevelContext>(w, k);
  } catch (const CycleError& e) {
    out.report.fail(std::string("permanent relations are cyclic: ") + e.what());
    return out;
  }
  require_budget_inv(ctx->level().size(), k, budget);
  for (std::size_t z = 0; z < ctx->upper().size(); ++z) {
    const auto& members = ctx->packets()[z];
    out.report.count("packets");
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        out.report.require(!ctx->poset().comparable(members[i], members[j]),
                           "P(" + format_kclass(ctx->upper().elements[z]) + ") is not an antichain");
      }
    }
  }
  return out;
}

Outcome run_lemma37(const AffinePermutation& w, int k, const Budget& budget) {
  Outcome out;
  auto& report = out.report;
  AdmissibleSpace space(w, k);
  require_budget_orders(space.context(), budget);
  BruhatOrder bruhat = build_bruhat(space);
  report.merge(bruhat.classes.audit);
  LevelContext upper(w, k + 1);
  StrictPackets extra = strict_packets(upper);
  std::set<Bitset> distinct;
  for (const auto& rev : bruhat.classes.reversal) {
    if (!distinct.insert(rev).second) continue;
    ConsistencyReport c = check_consistent(upper, rev);
    report.require(c.consistent, "reversal set " + format_kclass_list(to_classes(upper.level(), rev)) +
                                     " fails the Inv_{k+2} quantification: " + c.diagnostic);
    ConsistencyReport s = check_consistent(upper, rev, &extra);
    // Reported, not failed: the two quantifications are known to differ.
    if (c.consistent && !s.consistent) report.count("strict_disagreements");
  }
  report.count("reversal_sets", static_cast<std::int64_t>(distinct.size()));
  auto plain = enumerate_consistent(upper);
  auto strict = enumerate_consistent(upper, true);
  report.count("consistent_set_disagreements", static_cast<std::int64_t>(plain.size() - strict.size()));
  return out;
}

Outcome run_cor312(const AffinePermutation& w, int k, const Budget& budget) {
  Outcome out;
  auto ctx = std::make_shared<const LevelContext>(w, k);
  require_budget_inv(ctx->level().size(), k, budget);
  ConsistentPoset c = consistent_poset(ctx);
  check_ranked(out.report, c, "C_w(n,k)");
  LevelContext upper(w, k + 1);
  for (const auto& r : c.sets) {
    Bitset s = suffix_set(*ctx, r);
    ConsistencyReport rep = check_consistent(upper, s);
    out.report.require(rep.consistent, "suffix set of " + format_kclass_list(to_classes(ctx->level(), r)) +
                                           " is not consistent: " + rep.diagnostic);
  }
  return out;
}

Outcome run_thm41(const AffinePermutation& w, const Budget& budget) {
  Outcome out;
  auto& report = out.report;
  const auto inv = inv2(w);
  const std::size_t l = inv.size();
  if (l >= 63 || static_cast<double>(std::uint64_t{1} << l) > budget.max_ext) {
    throw Skip{"2^" + std::to_string(l) + " subsets exceed the budget"};
  }
  const int n = w.rank();
  std::set<PairSet> truth;
  for (const auto& v : weak_interval(w).elements) truth.insert(pair_set(v));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    PairSet r;
    for (std::size_t i = 0; i < l; ++i) {
      if (mask >> i & 1U) r.emplace(inv[i].x, inv[i].y);
    }
    bool ok = true;
    for (auto [x, z] : r) {
      // [x,z] in R: every y strictly between gives [x,y] or [y,z] in R.
      for (std::int64_t y = x + 1; y < z && ok; ++y) {
        if (mod_n(y - x, n) == 0 || mod_n(y - z, n) == 0) continue;
        ok = has_pair(r, x, y, n) || has_pair(r, y, z, n);
      }
      // [x,y-en] in R.
      for (std::int64_t y = z - n; y > x && ok; y -= n) ok = has_pair(r, x, y, n);
      // [x,y], [y,z'] in R gives [x,z'].
      for (auto [a, b] : r) {
        if (!ok) break;
        if (mod_n(a - z, n) != 0) continue;
        std::int64_t shift = z - a;
        std::int64_t end = b + shift;
        if (mod_n(end - x, n) == 0) continue;
        ok = has_pair(r, x, end, n);
      }
      if (!ok) break;
    }
    report.count("subsets");
    bool expected = truth.count(r) > 0;
    if (ok != expected) {
      report.fail(std::string("characterization ") + (ok ? "accepts" : "rejects") + " subset mask " +
                  std::to_string(mask) + (expected ? " which is" : " which is not") + " an inversion set");
    }
  }
  return out;
}

Outcome run_cor42(const AffinePermutation& w, const Budget& budget) {
  Outcome out;
  auto& report = out.report;
  InversionTable table(w);
  auto level = table.inv_k(2);
  const std::size_t l = level.size();
  double factorial = 1;
  for (std::size_t i = 2; i <= l; ++i) factorial *= static_cast<double>(i);
  if (factorial > budget.max_ext) throw Skip{std::to_string(l) + "! total orders exceed the budget"};
  std::unordered_map<KClass, int, KClassHash> index;
  for (std::size_t i = 0; i < l; ++i) index.emplace(level[i], static_cast<int>(i));
  struct Triple {
    std::vector<int> members;  // X_1, X_2, X_3 as level indices or -1
  };
  std::vector<Triple> triples;
  for (const auto& z : table.enclosing_classes(level)) {
    Triple t;
    for (std::size_t i = 1; i <= 3; ++i) {
      auto it = index.find(z.omit(i));
      t.members.push_back(it == index.end() ? -1 : it->second);
    }
    triples.push_back(t);
  }
  std::vector<std::pair<int, int>> shifted;
  for (std::size_t i = 0; i < l; ++i) {
    auto it = index.find(canonicalize({level[i][0], level[i][1] + w.rank()}, w.rank()));
    if (it != index.end()) shifted.emplace_back(static_cast<int>(i), it->second);
  }
  std::set<std::vector<int>> reflection;
  for (const auto& word : reduced_words(w)) {
    std::vector<int> o;
    for (const auto& x : reflection_order(word)) o.push_back(index.at(x));
    reflection.insert(o);
  }
  std::vector<int> order(l);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(l);
  std::size_t accepted = 0;
  do {
    for (std::size_t i = 0; i < l; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    bool ok = true;
    for (const auto& t : triples) {
      std::vector<bool> flags;
      std::vector<int> present;
      for (int m : t.members) {
        flags.push_back(m >= 0);
        if (m >= 0) present.push_back(pos[static_cast<std::size_t>(m)]);
      }
      bool increasing = std::is_sorted(present.begin(), present.end());
      bool decreasing = std::is_sorted(present.rbegin(), present.rend());
      // Prefix {X_3, ..., X_i} in lex order, or suffix {X_i, ..., X_1} in antilex order.
      ok = (flags_are_prefix(flags) && decreasing) || (flags_are_suffix(flags) && increasing);
      if (!ok) break;
    }
    for (std::size_t i = 0; i < shifted.size() && ok; ++i) {
      ok = pos[static_cast<std::size_t>(shifted[i].first)] < pos[static_cast<std::size_t>(shifted[i].second)];
    }
    report.count("orders");
    if (ok) ++accepted;
    if (ok != (reflection.count(order) > 0)) {
      report.fail(std::string("characterization ") + (ok ? "accepts" : "rejects") + " the order " +
                  [&] {
                    std::vector<KClass> xs;
                    for (int i : order) xs.push_back(level[static_cast<std::size_t>(i)]);
                    return format_kclass_list(xs);
                  }());
    }
  } while (std::next_permutation(order.begin(), order.end()));
  report.count("reflection_orders", static_cast<std::int64_t>(reflection.size()));
  report.require(accepted == reflection.size(), "accepted orders and reflection orders differ in number");
  return out;
}

Outcome run_weak(const AffinePermutation& w, const Budget& budget) {
  Outcome out;
  auto& report = out.report;
  auto ctx2 = std::make_shared<const LevelContext>(w, 2);
  require_budget_inv(ctx2->level().size(), 2, budget);
  WeakInterval interval = weak_interval(w);
  FinitePoset weak = weak_interval_poset(interval);
  ConsistentPoset c2 = consistent_poset(ctx2);
  std::vector<int> hint;
  for (const auto& v : interval.elements) {
    std::vector<KClass> pairs;
    for (const auto& p : inv2(v)) pairs.push_back(from_pair(p, w.rank()));
    int idx = c2.find(to_subset(ctx2->level(), pairs, "Inv_2(w)"));
    if (idx < 0) {
      report.fail("Inv(" + format_window(v) + ") is not consistent");
      return out;
    }
    hint.push_back(idx);
  }
  report.count("interval", static_cast<std::int64_t>(interval.elements.size()));
  report.require(interval.elements.size() == c2.sets.size(), "[id,w] and C_w(n,2) differ in size");
  if (report.pass) report.require(poset_isomorphic(weak, c2.poset, hint), "v -> Inv(v) is not an isomorphism [id,w] -> C_w(n,2)");
  if (w.is_finite()) {
    AdmissibleSpace space(w, 1);
    require_budget_orders(space.context(), budget);
    BruhatOrder b1 = build_bruhat(space);
    report.require(b1.classes.orders.size() == interval.elements.size(), "|A_w(n,1)| differs from |[id,w]|");
    report.merge(rev_isomorphism_check(b1, space, c2), "rev.");
  }
  return out;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

json to_json(const Record& r) {
  // "pass" is false only for failures; skips are told apart by "status".
  json j = {{"w", hbo::to_json(r.w)},           {"k", r.k},
            {"check", r.check},                 {"pass", r.status != Status::fail},
            {"status", status_name(r.status)}, {"counters", r.counters},
            {"messages", r.messages}};
  if (r.status == Status::fail) j["witness"] = r.witness;
  return j;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"thm13",  "thm14", "conj-gr", "lemma32", "lemma34",
                                                 "lemma37", "thm311", "cor312", "thm41",  "cor42",
                                                 "lemma44", "eq5",    "weak"};
  return names;
}

std::vector<std::string> checks_of_suite(const std::string& suite) {
  if (suite == "all") return check_names();
  if (suite == "property") return {"lemma32", "lemma34", "lemma37", "thm41", "cor42"};
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string known;
    for (const auto& s : names) known += " " + s;
    throw InvalidArgument("unknown suite '" + suite + "'; known suites: all property" + known);
  }
  return {suite};
}

std::vector<int> check_levels(const std::string& check, const AffinePermutation& w, int k_min, int k_max) {
  if (check == "thm13" || check == "lemma44" || check == "thm41" || check == "cor42") return {2};
  if (check == "weak") return {1};
  std::vector<int> out;
  for (int k = std::max(k_min, w.is_finite() ? 1 : 2); k <= k_max; ++k) out.push_back(k);
  return out;
}

Record run_check(const std::string& check, const AffinePermutation& w, int k, const Budget& budget) {
  Record rec;
  rec.w = w;
  rec.k = k;
  rec.check = check;
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), check) == names.end()) {
    throw InvalidArgument("unknown check '" + check + "'");
  }
  Outcome out;
  try {
    if (check == "thm13") {
      out = run_thm13(w, budget);
    } else if (check == "thm14") {
      out = run_rev(w, k, budget, true, true);
    } else if (check == "thm311") {
      out = run_rev(w, k, budget, false, false);
    } else if (check == "eq5") {
      auto ctx = std::make_shared<const LevelContext>(w, k + 1);
      AdmissibleSpace space(w, k + 1);
      require_budget_orders(space.context(), budget);
      out.report = chain_order_bijection_check(consistent_poset(ctx), space);
    } else if (check == "conj-gr") {
      out = run_conj_gr(w, k, budget);
    } else if (check == "lemma32") {
      out = run_lemma32(w, k, budget);
    } else if (check == "lemma34") {
      out = run_lemma34(w, k, budget);
    } else if (check == "lemma37") {
      out = run_lemma37(w, k, budget);
    } else if (check == "cor312") {
      out = run_cor312(w, k, budget);
    } else if (check == "thm41") {
      out = run_thm41(w, budget);
    } else if (check == "cor42") {
      out = run_cor42(w, budget);
    } else if (check == "lemma44") {
      AdmissibleSpace space(w, 2);
      require_budget_orders(space.context(), budget);
      BijectionReport b = word_order_bijection_check(w);
      out.report = b.report;
      out.report.count("words", static_cast<std::int64_t>(b.words));
      out.report.count("classes", static_cast<std::int64_t>(b.word_classes));
    } else if (check == "weak") {
      out = run_weak(w, budget);
    } else {
      throw InvalidArgument("unknown check '" + check + "'");
    }
  } catch (const Skip& s) {
    rec.status = Status::skip;
    rec.messages.push_back(s.reason);
    return rec;
  } catch (const UnsupportedCase& e) {
    rec.status = Status::skip;
    rec.messages.push_back(e.what());
    return rec;
  } catch (const std::exception& e) {
    out.report.fail(std::string("exception: ") + e.what());
  }
  if (current_fault() == check) out.report.fail("injected fault");
  rec.status = out.report.pass ? Status::pass : Status::fail;
  rec.counters = out.report.counters;
  rec.messages = out.report.failures;
  if (!out.report.pass) {
    rec.witness = {{"w", hbo::to_json(w)}, {"k", k}, {"check", check}, {"failures", out.report.failures}};
    for (auto& [key, value] : out.extra.items()) rec.witness[key] = value;
  }
  return rec;
}

Record replay_witness(const json& witness) {
  if (!witness.is_object() || !witness.contains("w") || !witness.contains("k") || !witness.contains("check")) {
    throw InvalidArgument("witness needs fields \"w\", \"k\" and \"check\"");
  }
  Budget unlimited;
  unlimited.max_inv = static_cast<std::size_t>(-1);
  unlimited.max_ext = kUnlimited;
  return run_check(witness.at("check").get<std::string>(), permutation_from_json(witness.at("w")),
                   witness.at("k").get<int>(), unlimited);
}

void inject_fault(const std::string& check) {
  std::lock_guard<std::mutex> lock(fault_mutex);
  injected = check;
}

void clear_fault() { inject_fault(""); }

}  // namespace hbo::verify
