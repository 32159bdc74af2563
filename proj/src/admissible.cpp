#include "hbo/admissible.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "hbo/error.hpp"

namespace hbo {
namespace {

// Some (k+1)-class Z, inversion or not, has both X and Y in P(Z).
bool share_packet(const KClass& x, const KClass& y, int n) {
  const std::size_t k = x.size();
  if (k == 1) return mod_n(x[0] - y[0], n) != 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (mod_n(x[i] - y[j], n) != 0) continue;
      std::int64_t shift = x[i] - y[j];
      std::vector<std::int64_t> merged = x.raw();
      std::size_t common = 0;
      for (std::size_t t = 0; t < k; ++t) {
        std::int64_t v = y[t] + shift;
        if (std::find(merged.begin(), merged.end(), v) != merged.end()) {
          ++common;
        } else {
          merged.push_back(v);
        }
      }
      if (common + 1 != k) continue;
      bool distinct = true;
      for (std::size_t a = 0; a < merged.size() && distinct; ++a) {
        for (std::size_t b = a + 1; b < merged.size() && distinct; ++b) distinct = mod_n(merged[a] - merged[b], n) != 0;
      }
      if (distinct) return true;
    }
  }
  return false;
}

std::vector<int> positions_of(const Order& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return pos;
}

}  // namespace

AdmissibleSpace::AdmissibleSpace(const AffinePermutation& w, int k)
    : ctx_(std::make_shared<LevelContext>(w, k)) {
  const std::size_t n = level().size();
  commute_.assign(n * n, false);
  const auto& poset = ctx_->poset();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      bool c = !poset.comparable(static_cast<int>(a), static_cast<int>(b)) &&
               !share_packet(level().elements[a], level().elements[b], ctx_->rank());
      commute_[a * n + b] = commute_[b * n + a] = c;
    }
  }
}

Order AdmissibleSpace::to_order(const std::vector<KClass>& sequence) const {
  Order order;
  std::vector<bool> seen(level().size(), false);
  for (const auto& x : sequence) {
    int idx = level().find(x);
    if (idx < 0) throw InvalidArgument(format_kclass(x) + " is not in Inv_" + std::to_string(k()) + "(w)");
    if (seen[static_cast<std::size_t>(idx)]) throw InvalidArgument(format_kclass(x) + " appears twice in the order");
    seen[static_cast<std::size_t>(idx)] = true;
    order.push_back(idx);
  }
  if (order.size() != level().size()) {
    throw InvalidArgument("order has " + std::to_string(order.size()) + " entries but Inv_" + std::to_string(k()) +
                          "(w) has " + std::to_string(level().size()));
  }
  return order;
}

std::vector<KClass> AdmissibleSpace::to_classes(const Order& order) const {
  std::vector<KClass> out;
  for (int i : order) out.push_back(level().elements[static_cast<std::size_t>(i)]);
  return out;
}

AdmissibilityReport AdmissibleSpace::check(const Order& order) const {
  if (order.size() != level().size()) throw InvalidArgument("order is not a permutation of Inv_k(w)");
  const auto pos = positions_of(order);
  const auto& label = [&](int i) { return format_kclass(level().elements[static_cast<std::size_t>(i)]); };
  for (auto [a, b] : ctx_->poset().covers()) {
    if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)]) {
      return {false, "relation " + label(a) + " < " + label(b) + " of the permanent poset is violated"};
    }
  }
  for (std::size_t z = 0; z < upper().size(); ++z) {
    const auto& members = ctx_->packets()[z];
    bool increasing = true, decreasing = true;
    for (std::size_t i = 1; i < members.size(); ++i) {
      int p0 = pos[static_cast<std::size_t>(members[i - 1])], p1 = pos[static_cast<std::size_t>(members[i])];
      increasing = increasing && p0 < p1;
      decreasing = decreasing && p0 > p1;
    }
    if (!increasing && !decreasing) {
      return {false, "packet of " + format_kclass(upper().elements[z]) + " is in neither lex nor antilex order"};
    }
  }
  return {};
}

std::vector<Order> AdmissibleSpace::enumerate() const {
  const std::size_t n = level().size();
  if (n > 64) throw UnsupportedCase("admissible-order enumeration supports at most 64 inversions");
  const int m = k() + 1;
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    ctx_->poset().below(static_cast<int>(x)).for_each([&](int y) { below[x] |= std::uint64_t{1} << y; });
  }
  const auto& packets_of = ctx_->packets_of();
  std::vector<int> placed_count(upper().size(), 0);
  std::vector<std::int8_t> direction(upper().size(), 0);  // 1 lex, 2 antilex
  std::vector<Order> out;
  Order current;
  current.reserve(n);
  std::uint64_t placed = 0;

  std::function<void()> recurse = [&]() {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((placed & bit) || (below[x] & ~placed)) continue;
      // Within every packet the members must appear as X_m, X_{m-1}, ...
      // (lex) or X_1, X_2, ... (antilex).
      bool ok = true;
      for (auto [z, j] : packets_of[x]) {
        int c = placed_count[static_cast<std::size_t>(z)];
        if (c == 0) {
          ok = j == m || j == 1;
        } else if (direction[static_cast<std::size_t>(z)] == 1) {
          ok = j == m - c;
        } else {
          ok = j == c + 1;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      for (auto [z, j] : packets_of[x]) {
        if (placed_count[static_cast<std::size_t>(z)]++ == 0) direction[static_cast<std::size_t>(z)] = j == m ? 1 : 2;
      }
      placed |= bit;
      current.push_back(static_cast<int>(x));
      recurse();
      current.pop_back();
      placed &= ~bit;
      for (auto [z, j] : packets_of[x]) {
        if (--placed_count[static_cast<std::size_t>(z)] == 0) direction[static_cast<std::size_t>(z)] = 0;
      }
    }
  };
  recurse();
  return out;
}

Bitset AdmissibleSpace::reversal_set(const Order& order) const {
  const auto pos = positions_of(order);
  Bitset rev(upper().size());
  for (std::size_t z = 0; z < upper().size(); ++z) {
    const auto& members = ctx_->packets()[z];
    if (pos[static_cast<std::size_t>(members.front())] < pos[static_cast<std::size_t>(members.back())]) rev.set(z);
  }
  return rev;
}

bool AdmissibleSpace::flippable(const Order& order, int z) const {
  const auto pos = positions_of(order);
  int lo = static_cast<int>(order.size()), hi = -1;
  for (int member : ctx_->packets()[static_cast<std::size_t>(z)]) {
    lo = std::min(lo, pos[static_cast<std::size_t>(member)]);
    hi = std::max(hi, pos[static_cast<std::size_t>(member)]);
  }
  return hi - lo == k();
}

Order AdmissibleSpace::apply_flip(const Order& order, int z) const {
  const auto pos = positions_of(order);
  int lo = static_cast<int>(order.size()), hi = -1;
  for (int member : ctx_->packets()[static_cast<std::size_t>(z)]) {
    lo = std::min(lo, pos[static_cast<std::size_t>(member)]);
    hi = std::max(hi, pos[static_cast<std::size_t>(member)]);
  }
  if (hi - lo != k()) {
    throw InvalidArgument("packet of " + format_kclass(upper().elements[static_cast<std::size_t>(z)]) +
                          " is not a saturated chain of the order");
  }
  Order out = order;
  std::reverse(out.begin() + lo, out.begin() + hi + 1);
  return out;
}

FlipDirection AdmissibleSpace::flip_direction(const Order& order, int z) const {
  const auto pos = positions_of(order);
  const auto& members = ctx_->packets()[static_cast<std::size_t>(z)];
  return pos[static_cast<std::size_t>(members.back())] < pos[static_cast<std::size_t>(members.front())]
             ? FlipDirection::lex_to_antilex
             : FlipDirection::antilex_to_lex;
}

int OrderClasses::find(const Order& order) const {
  auto it = std::lower_bound(orders.begin(), orders.end(), order);
  if (it == orders.end() || *it != order) return -1;
  return static_cast<int>(it - orders.begin());
}

OrderClasses commutation_classes_of_orders(const AdmissibleSpace& space) {
  OrderClasses out;
  out.orders = space.enumerate();
  out.reversal.reserve(out.orders.size());
  for (const auto& o : out.orders) out.reversal.push_back(space.reversal_set(o));
  out.class_of.assign(out.orders.size(), -1);
  const auto& level = space.level();
  for (std::size_t start = 0; start < out.orders.size(); ++start) {
    if (out.class_of[start] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    out.classes.emplace_back();
    out.class_of[start] = id;
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      out.classes.back().push_back(u);
      const Order& order = out.orders[static_cast<std::size_t>(u)];
      for (std::size_t p = 0; p + 1 < order.size(); ++p) {
        if (!space.commute(order[p], order[p + 1])) continue;
        out.audit.count("commutation_moves");
        Order next = order;
        std::swap(next[p], next[p + 1]);
        int v = out.find(next);
        if (v < 0) {
          out.audit.fail("commuting " + format_kclass(level.elements[static_cast<std::size_t>(order[p])]) + " and " +
                         format_kclass(level.elements[static_cast<std::size_t>(order[p + 1])]) +
                         " leaves the admissible orders");
          continue;
        }
        if (out.reversal[static_cast<std::size_t>(v)] != out.reversal[static_cast<std::size_t>(u)]) {
          out.audit.fail("a commutation changed the reversal set");
        }
        if (out.class_of[static_cast<std::size_t>(v)] < 0) {
          out.class_of[static_cast<std::size_t>(v)] = id;
          queue.push_back(v);
        }
      }
    }
    std::sort(out.classes.back().begin(), out.classes.back().end());
  }
  return out;
}

std::vector<FlipOption> flippable_packets(const AdmissibleSpace& space, const OrderClasses& classes, int class_id) {
  std::map<int, FlipOption> found;
  for (int idx : classes.classes[static_cast<std::size_t>(class_id)]) {
    const Order& order = classes.orders[static_cast<std::size_t>(idx)];
    for (std::size_t z = 0; z < space.upper().size(); ++z) {
      if (found.count(static_cast<int>(z)) || !space.flippable(order, static_cast<int>(z))) continue;
      found.emplace(static_cast<int>(z), FlipOption{static_cast<int>(z), space.flip_direction(order, static_cast<int>(z)), idx});
    }
  }
  std::vector<FlipOption> out;
  for (auto& [z, option] : found) out.push_back(option);
  return out;
}

BruhatOrder build_bruhat(const AdmissibleSpace& space) {
  BruhatOrder out;
  out.classes = commutation_classes_of_orders(space);
  auto& classes = out.classes;
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    out.flip_graph.add_node("class " + std::to_string(c));
    out.class_reversal.push_back(classes.reversal[static_cast<std::size_t>(classes.classes[c].front())]);
  }
  for (std::size_t i = 0; i < classes.orders.size(); ++i) {
    const Order& order = classes.orders[i];
    for (std::size_t z = 0; z < space.upper().size(); ++z) {
      if (!space.flippable(order, static_cast<int>(z))) continue;
      classes.audit.count("flip_moves");
      FlipDirection dir = space.flip_direction(order, static_cast<int>(z));
      Order next = space.apply_flip(order, static_cast<int>(z));
      int j = classes.find(next);
      const std::string name = format_kclass(space.upper().elements[z]);
      if (j < 0) {
        classes.audit.fail("flipping P(" + name + ") leaves the admissible orders");
        continue;
      }
      Bitset diff = (classes.reversal[i] - classes.reversal[static_cast<std::size_t>(j)]) |
                    (classes.reversal[static_cast<std::size_t>(j)] - classes.reversal[i]);
      if (diff.count() != 1 || !diff.test(z)) {
        classes.audit.fail("flipping P(" + name + ") changed the reversal set by more than {" + name + "}");
      }
      if (dir != FlipDirection::lex_to_antilex) continue;
      int a = classes.class_of[i], b = classes.class_of[static_cast<std::size_t>(j)];
      if (a == b) {
        classes.audit.fail("lex-to-antilex flip of P(" + name + ") stays inside one commutation class");
        continue;
      }
      out.flip_graph.add_arc(a, b);
    }
  }
  RelationSet r;
  r.labels = out.flip_graph.labels();
  r.pairs = out.flip_graph.arcs();
  try {
    out.poset = close_to_poset(r);
  } catch (const CycleError& e) {
    throw InvariantViolation(std::string("flip reachability between commutation classes is cyclic: ") + e.what());
  }
  return out;
}

std::vector<KClass> reflection_order(const Word& word) {
  const int n = word.n;
  AffinePermutation prefix = AffinePermutation::identity(n);
  std::vector<KClass> out;
  for (int letter : word.letters) {
    std::int64_t a = prefix(letter), b = prefix(letter + 1);
    if (a > b) throw InvalidArgument("word " + format_word(word) + " is not reduced");
    out.push_back(canonicalize({a, b}, n));
    prefix = prefix.times_simple(letter);
  }
  return out;
}

BijectionReport word_order_bijection_check(const AffinePermutation& w) {
  BijectionReport out;
  CheckReport& report = out.report;
  const BraidGraph g = braid_graph(w);
  const auto& words = g.classes.words;
  const AdmissibleSpace space(w, 2);
  const BruhatOrder bruhat = build_bruhat(space);
  const OrderClasses& classes = bruhat.classes;
  report.merge(classes.audit, "moves.");
  out.words = words.size();
  out.orders = classes.orders.size();
  out.word_classes = g.classes.classes.size();
  out.order_classes = classes.classes.size();

  std::vector<int> word_to_order(words.size(), -1);
  std::vector<int> order_to_word(classes.orders.size(), -1);
  for (std::size_t i = 0; i < words.size(); ++i) {
    Order order;
    try {
      order = space.to_order(reflection_order(words[i]));
    } catch (const std::exception& e) {
      report.fail("reflection order of " + format_word(words[i]) + " is not an order of Inv_2: " + e.what());
      continue;
    }
    int idx = classes.find(order);
    if (idx < 0) {
      report.fail("reflection order of " + format_word(words[i]) + " is not admissible: " + space.check(order).diagnostic);
      continue;
    }
    if (order_to_word[static_cast<std::size_t>(idx)] >= 0) {
      report.fail("words " + format_word(words[static_cast<std::size_t>(order_to_word[static_cast<std::size_t>(idx)])]) +
                  " and " + format_word(words[i]) + " share a reflection order");
    }
    word_to_order[i] = idx;
    order_to_word[static_cast<std::size_t>(idx)] = static_cast<int>(i);
  }
  report.require(words.size() == classes.orders.size(),
                 std::to_string(words.size()) + " reduced words but " + std::to_string(classes.orders.size()) +
                     " admissible orders");
  if (!report.pass) return out;

  // Commutation classes correspond.
  std::vector<int> class_map(g.classes.classes.size(), -1);
  for (std::size_t i = 0; i < words.size(); ++i) {
    int wc = g.classes.class_of[i];
    int oc = classes.class_of[static_cast<std::size_t>(word_to_order[i])];
    if (class_map[static_cast<std::size_t>(wc)] < 0) class_map[static_cast<std::size_t>(wc)] = oc;
    if (class_map[static_cast<std::size_t>(wc)] != oc) {
      report.fail("commutation class of " + format_word(words[i]) + " splits across order classes");
    }
  }
  std::set<int> image(class_map.begin(), class_map.end());
  report.require(image.size() == class_map.size() && class_map.size() == classes.classes.size(),
                 "word classes and order classes are not in bijection");

  // Braids correspond to lex-to-antilex flips at the same positions.
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Order& order = classes.orders[static_cast<std::size_t>(word_to_order[i])];
    for (std::size_t p : directed_braid_sites(words[i])) {
      report.count("braid_moves");
      Word braided = apply_braid(words[i], p);
      int j = static_cast<int>(std::lower_bound(words.begin(), words.end(), braided) - words.begin());
      const Order& target = classes.orders[static_cast<std::size_t>(word_to_order[static_cast<std::size_t>(j)])];
      bool matched = false;
      for (auto [z, pos] : space.context().packets_of()[static_cast<std::size_t>(order[p])]) {
        (void)pos;
        if (!space.flippable(order, z)) continue;
        Order flipped = space.apply_flip(order, z);
        if (flipped == target && space.flip_direction(order, z) == FlipDirection::lex_to_antilex) matched = true;
      }
      report.require(matched, "braid " + format_word(words[i]) + " -> " + format_word(braided) +
                                  " is not a lex-to-antilex packet flip");
    }
  }
  for (std::size_t idx = 0; idx < classes.orders.size(); ++idx) {
    const Order& order = classes.orders[idx];
    const Word& word = words[static_cast<std::size_t>(order_to_word[idx])];
    const auto sites = directed_braid_sites(word);
    for (std::size_t z = 0; z < space.upper().size(); ++z) {
      if (!space.flippable(order, static_cast<int>(z)) ||
          space.flip_direction(order, static_cast<int>(z)) != FlipDirection::lex_to_antilex) {
        continue;
      }
      report.count("lex_flips");
      Order flipped = space.apply_flip(order, static_cast<int>(z));
      std::size_t p = 0;
      while (p < order.size() && order[p] == flipped[p]) ++p;
      bool matched = std::find(sites.begin(), sites.end(), p) != sites.end() &&
                     order_to_word[static_cast<std::size_t>(classes.find(flipped))] ==
                         static_cast<int>(std::lower_bound(words.begin(), words.end(), apply_braid(word, p)) - words.begin());
      report.require(matched, "lex-to-antilex flip of P(" + format_kclass(space.upper().elements[z]) + ") in the order of " +
                                  format_word(word) + " is not a directed braid");
    }
  }

  // Hasse diagram of B_w(n,2) is G(w).
  if (report.pass) {
    report.require(arcs_isomorphic(g.graph.size(), g.graph.arcs(), bruhat.poset.size(), bruhat.poset.covers(), class_map),
                   "Hasse diagram of B_w(n,2) differs from G(w) under the word/order class map");
  }
  return out;
}

}  // namespace hbo
