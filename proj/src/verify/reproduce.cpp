#include "hbo/verify/reproduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hbo/admissible.hpp"
#include "hbo/consistent.hpp"
#include "hbo/error.hpp"

namespace hbo::verify {
namespace {

using StringSet = std::set<std::string>;

void diff_sets(ReproduceResult& r, const std::string& what, const StringSet& golden, const StringSet& built) {
  for (const auto& g : golden) {
    if (!built.count(g)) r.diffs.push_back("missing " + what + ": " + g);
  }
  for (const auto& b : built) {
    if (!golden.count(b)) r.diffs.push_back("extra " + what + ": " + b);
  }
}

void expect(ReproduceResult& r, const std::string& what, const std::string& golden, const std::string& built) {
  if (golden != built) r.diffs.push_back("mismatch " + what + ": expected " + golden + ", got " + built);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> tail(const std::vector<std::string>& v, std::size_t from) { return {v.begin() + static_cast<long>(from), v.end()}; }

// Compact class names from golden data ("1256", "-" for none), canonical text.
std::string set_key(int n, const std::vector<std::string>& tokens) {
  std::vector<KClass> xs;
  for (const auto& t : tokens) {
    if (t != "-") xs.push_back(parse_kclass(n, t));
  }
  std::sort(xs.begin(), xs.end());
  std::vector<std::string> names;
  for (const auto& x : xs) names.push_back(format_kclass_compact(x));
  return "{" + join(names, ",") + "}";
}

std::string set_key(const InversionLevel& level, const Bitset& r) {
  std::vector<std::string> names;
  for (const auto& x : to_classes(level, r)) names.push_back(format_kclass_compact(x));
  return "{" + join(names, ",") + "}";
}

std::string class_name(int n, const std::string& token) { return format_kclass_compact(parse_kclass(n, token)); }

struct Instance {
  GoldenFile golden;
  int n;
  AffinePermutation w;
};

Instance load(const std::string& name) {
  GoldenFile g = parse_golden(golden_text(name));
  int n = std::stoi(g.first("n").at(0));
  AffinePermutation w = parse_window(g.first("window").at(0));
  if (w.rank() != n) throw InvariantViolation("golden data " + name + " has inconsistent rank");
  return {std::move(g), n, w};
}

void finish(ReproduceResult& r) { r.pass = r.diffs.empty(); }

ReproduceResult fig1() {
  ReproduceResult r;
  r.target = "fig1";
  Instance in = load("fig1");
  BraidGraph g = braid_graph(in.w);
  const auto& words = g.classes.words;
  expect(r, "number of reduced words", in.golden.first("words").at(0), std::to_string(words.size()));

  auto class_key = [&](std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end());
    std::vector<std::string> names;
    for (const auto& w : ws) names.push_back(format_word(w));
    return "{" + join(names, " ") + "}";
  };
  std::map<std::string, std::string> golden_class;  // id -> key
  StringSet golden_classes, built_classes;
  for (const auto& line : in.golden.all("class")) {
    std::vector<Word> ws;
    for (const auto& t : tail(line, 1)) ws.push_back(parse_word(in.n, t));
    golden_class[line.at(0)] = class_key(ws);
    golden_classes.insert(class_key(ws));
  }
  std::vector<std::string> built_key;
  std::vector<std::string> sizes;
  for (const auto& c : g.classes.classes) {
    std::vector<Word> ws;
    for (int i : c) ws.push_back(words[static_cast<std::size_t>(i)]);
    built_key.push_back(class_key(ws));
    built_classes.insert(built_key.back());
    sizes.push_back(std::to_string(c.size()));
  }
  diff_sets(r, "class", golden_classes, built_classes);
  StringSet golden_arcs, built_arcs;
  for (const auto& line : in.golden.all("arc")) golden_arcs.insert(golden_class[line.at(0)] + " -> " + golden_class[line.at(1)]);
  for (auto [a, b] : g.graph.arcs()) {
    built_arcs.insert(built_key[static_cast<std::size_t>(a)] + " -> " + built_key[static_cast<std::size_t>(b)]);
  }
  diff_sets(r, "arc", golden_arcs, built_arcs);
  r.summary.push_back("w = " + format_window(in.w));
  r.summary.push_back(std::to_string(words.size()) + " reduced words, " + std::to_string(g.classes.classes.size()) +
                      " commutation classes (sizes " + join(sizes, ",") + "), " + std::to_string(g.graph.arc_count()) +
                      " arcs");
  finish(r);
  return r;
}

StringSet cover_keys(const std::vector<std::string>& labels, const std::vector<std::pair<int, int>>& covers) {
  StringSet out;
  for (auto [a, b] : covers) out.insert(labels[static_cast<std::size_t>(a)] + " < " + labels[static_cast<std::size_t>(b)]);
  return out;
}

ReproduceResult fig2() {
  ReproduceResult r;
  r.target = "fig2";
  Instance in = load("fig2");
  int k = std::stoi(in.golden.first("k").at(0));
  PermanentPoset p = permanent_poset(in.w, k);
  StringSet golden_elements, built_elements, golden_covers;
  for (const auto& line : in.golden.all("element")) {
    for (const auto& t : line) golden_elements.insert(class_name(in.n, t));
  }
  std::vector<std::string> labels;
  for (const auto& x : p.elements) {
    labels.push_back(format_kclass_compact(x));
    built_elements.insert(labels.back());
  }
  for (const auto& line : in.golden.all("cover")) golden_covers.insert(class_name(in.n, line.at(0)) + " < " + class_name(in.n, line.at(1)));
  diff_sets(r, "element", golden_elements, built_elements);
  diff_sets(r, "cover", golden_covers, cover_keys(labels, p.poset.covers()));
  r.summary.push_back("P_w(" + std::to_string(in.n) + "," + std::to_string(k) + ") for w = " + format_window(in.w) + ": " +
                      std::to_string(p.elements.size()) + " elements, " + std::to_string(p.poset.covers().size()) +
                      " covers");
  finish(r);
  return r;
}

ReproduceResult fig3() {
  ReproduceResult r;
  r.target = "fig3";
  Instance in = load("fig3");
  const int k = std::stoi(in.golden.first("k").at(0));

  // B_w(n,k), classes named by their reversal sets.
  AdmissibleSpace space(in.w, k);
  BruhatOrder b = build_bruhat(space);
  std::map<std::string, std::string> golden_class;
  StringSet golden_b, built_b;
  for (const auto& line : in.golden.all("class")) golden_class[line.at(0)] = set_key(in.n, tail(line, 1));
  for (const auto& line : in.golden.all("bruhat_cover")) golden_b.insert(golden_class[line.at(0)] + " < " + golden_class[line.at(1)]);
  std::vector<std::string> b_labels;
  for (const auto& rev : b.class_reversal) b_labels.push_back(set_key(space.upper(), rev));
  built_b = cover_keys(b_labels, b.poset.covers());
  diff_sets(r, "B_w cover", golden_b, built_b);
  expect(r, "number of classes", std::to_string(golden_class.size()), std::to_string(b_labels.size()));

  // P_w(n,k+1).
  PermanentPoset p = permanent_poset(in.w, k + 1);
  StringSet golden_pe, built_pe, golden_pc;
  for (const auto& t : in.golden.first("permanent_element")) golden_pe.insert(class_name(in.n, t));
  std::vector<std::string> p_labels;
  for (const auto& x : p.elements) {
    p_labels.push_back(format_kclass_compact(x));
    built_pe.insert(p_labels.back());
  }
  for (const auto& line : in.golden.all("permanent_cover")) golden_pc.insert(class_name(in.n, line.at(0)) + " < " + class_name(in.n, line.at(1)));
  diff_sets(r, "P_w element", golden_pe, built_pe);
  diff_sets(r, "P_w cover", golden_pc, cover_keys(p_labels, p.poset.covers()));

  // C_w(n,k+1).
  ConsistentPoset c = consistent_poset(in.w, k + 1);
  std::map<std::string, std::string> golden_set;
  StringSet golden_sets, built_sets, golden_sc;
  for (const auto& line : in.golden.all("set")) {
    golden_set[line.at(0)] = set_key(in.n, tail(line, 1));
    golden_sets.insert(golden_set[line.at(0)]);
  }
  std::vector<std::string> c_labels;
  for (const auto& s : c.sets) {
    c_labels.push_back(set_key(c.ctx->level(), s));
    built_sets.insert(c_labels.back());
  }
  for (const auto& line : in.golden.all("set_cover")) golden_sc.insert(golden_set[line.at(0)] + " < " + golden_set[line.at(1)]);
  diff_sets(r, "consistent set", golden_sets, built_sets);
  diff_sets(r, "C_w cover", golden_sc, cover_keys(c_labels, c.poset.covers()));

  r.summary.push_back("B_w(" + std::to_string(in.n) + "," + std::to_string(k) + "): " + std::to_string(b_labels.size()) +
                      " classes, " + std::to_string(b.poset.covers().size()) + " covers");
  r.summary.push_back("P_w(" + std::to_string(in.n) + "," + std::to_string(k + 1) + "): " +
                      std::to_string(p.elements.size()) + " elements, " + std::to_string(p.poset.covers().size()) + " covers");
  r.summary.push_back("C_w(" + std::to_string(in.n) + "," + std::to_string(k + 1) + "): " + join(c_labels, " "));
  finish(r);
  return r;
}

ReproduceResult fig4() {
  ReproduceResult r;
  r.target = "fig4";
  Instance in = load("fig4");
  const int k = std::stoi(in.golden.first("k").at(0));
  std::vector<KClass> rset;
  for (const auto& t : in.golden.first("R")) rset.push_back(parse_kclass(in.n, t));
  GRGraph g = build_gr(in.w, k, rset);
  StringSet golden, built;
  for (const std::string tag : {"quasi", "reversal", "complement", "congruence"}) {
    for (const auto& line : in.golden.all(tag)) {
      golden.insert(tag + " " + class_name(in.n, line.at(0)) + " -> " + class_name(in.n, line.at(1)));
    }
  }
  for (const auto& a : g.arcs) {
    built.insert(tag_name(a.tag) + " " + format_kclass_compact(g.elements[static_cast<std::size_t>(a.from)]) + " -> " +
                 format_kclass_compact(g.elements[static_cast<std::size_t>(a.to)]));
  }
  diff_sets(r, "arc", golden, built);
  r.summary.push_back("G_R for R = " + format_kclass_list(rset) + ": " + std::to_string(g.count(ArcTag::quasi)) +
                      " quasi, " + std::to_string(g.count(ArcTag::reversal)) + " reversal, " +
                      std::to_string(g.count(ArcTag::complement)) + " complement arcs; acyclic: " +
                      (gr_cycle(g) ? "no" : "yes"));
  finish(r);
  return r;
}

std::vector<KClass> parse_order(int n, const std::vector<std::string>& tokens) {
  std::vector<KClass> out;
  for (const auto& t : tokens) out.push_back(parse_kclass(n, t));
  return out;
}

ReproduceResult table1() {
  ReproduceResult r;
  r.target = "table1";
  Instance in = load("table1");
  const int k = std::stoi(in.golden.first("k").at(0));
  AdmissibleSpace space(in.w, k);
  OrderClasses classes = commutation_classes_of_orders(space);
  std::map<std::string, int> class_of_row;
  std::map<std::string, Order> orders;
  std::map<std::string, std::string> reversal;
  for (const auto& line : in.golden.all("reversal")) reversal[line.at(0)] = set_key(in.n, tail(line, 1));
  std::set<int> seen;
  for (const auto& line : in.golden.all("order")) {
    const std::string& row = line.at(0);
    Order o = space.to_order(parse_order(in.n, tail(line, 1)));
    orders[row] = o;
    AdmissibilityReport a = space.check(o);
    if (!a.admissible) r.diffs.push_back("mismatch order " + row + ": not admissible (" + a.diagnostic + ")");
    expect(r, "reversal set of order " + row, reversal[row], set_key(space.upper(), space.reversal_set(o)));
    int idx = classes.find(o);
    if (idx >= 0) {
      class_of_row[row] = classes.class_of[static_cast<std::size_t>(idx)];
      if (!seen.insert(class_of_row[row]).second) r.diffs.push_back("mismatch order " + row + ": shares a class");
    }
    r.summary.push_back("order " + row + ": reversal set " + set_key(space.upper(), space.reversal_set(o)));
  }
  expect(r, "classes covered by the rows", std::to_string(classes.classes.size()), std::to_string(seen.size()));

  Order sigma = space.to_order(parse_order(in.n, in.golden.first("sigma")));
  orders["sigma"] = sigma;
  int sigma_idx = classes.find(sigma);
  const std::string sigma_row = in.golden.first("sigma_class").at(0);
  if (sigma_idx < 0) {
    r.diffs.push_back("mismatch sigma: not admissible");
  } else {
    expect(r, "class of sigma", "order " + sigma_row,
           classes.class_of[static_cast<std::size_t>(sigma_idx)] == class_of_row[sigma_row] ? "order " + sigma_row
                                                                                           : "another class");
  }
  for (const auto& line : in.golden.all("flip")) {
    const Order& from = orders.at(line.at(0));
    int z = space.upper().find(parse_kclass(in.n, line.at(1)));
    const std::string what = "flip of P(" + line.at(1) + ") in " + line.at(0);
    if (z < 0 || !space.flippable(from, z)) {
      r.diffs.push_back("mismatch " + what + ": not flippable");
      continue;
    }
    std::string dir = space.flip_direction(from, z) == FlipDirection::lex_to_antilex ? "lex_to_antilex" : "antilex_to_lex";
    expect(r, "direction of " + what, line.at(2), dir);
    int to = classes.find(space.apply_flip(from, z));
    expect(r, "result of " + what, "class of order " + line.at(3),
           to >= 0 && classes.class_of[static_cast<std::size_t>(to)] == class_of_row[line.at(3)] ? "class of order " + line.at(3)
                                                                                                  : "another class");
  }
  finish(r);
  return r;
}

ReproduceResult count1228() {
  ReproduceResult r;
  r.target = "count1228";
  Instance in = load("table1");
  const int k = std::stoi(in.golden.first("k").at(0));
  AdmissibleSpace space(in.w, k);
  BruhatOrder b = build_bruhat(space);
  expect(r, "number of admissible orders", in.golden.first("count").at(0), std::to_string(b.classes.orders.size()));
  expect(r, "number of commutation classes", in.golden.first("classes").at(0), std::to_string(b.classes.classes.size()));
  StringSet golden, built;
  for (const auto& line : in.golden.all("reversal")) golden.insert(set_key(in.n, tail(line, 1)));
  for (const auto& rev : b.class_reversal) built.insert(set_key(space.upper(), rev));
  diff_sets(r, "class reversal set", golden, built);
  if (!b.classes.audit.pass) r.diffs.push_back("mismatch move audit: " + join(b.classes.audit.failures, "; "));
  r.summary.push_back(std::to_string(b.classes.orders.size()) + " admissible orders of Inv_" + std::to_string(k) +
                      "(w) for w = " + format_window(in.w) + " in " + std::to_string(b.classes.classes.size()) +
                      " commutation classes");
  finish(r);
  return r;
}

}  // namespace

std::vector<std::vector<std::string>> GoldenFile::all(const std::string& key) const {
  std::vector<std::vector<std::string>> out;
  for (const auto& [k, v] : lines) {
    if (k == key) out.push_back(v);
  }
  return out;
}

const std::vector<std::string>& GoldenFile::first(const std::string& key) const {
  for (const auto& [k, v] : lines) {
    if (k == key) return v;
  }
  throw InvalidArgument("golden data has no '" + key + "' line");
}

GoldenFile parse_golden(std::string_view text) {
  GoldenFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::string key, token;
    if (!(fields >> key)) continue;
    std::vector<std::string> values;
    while (fields >> token) values.push_back(token);
    out.lines.emplace_back(key, std::move(values));
  }
  return out;
}

json ReproduceResult::to_json() const {
  return {{"target", target}, {"pass", pass}, {"summary", summary}, {"diffs", diffs}};
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> targets = {"fig1", "fig2", "fig3", "fig4", "table1", "count1228"};
  return targets;
}

ReproduceResult reproduce(const std::string& target) {
  if (target == "fig1") return fig1();
  if (target == "fig2") return fig2();
  if (target == "fig3") return fig3();
  if (target == "fig4") return fig4();
  if (target == "table1") return table1();
  if (target == "count1228") return count1228();
  throw InvalidArgument("unknown target '" + target + "'; known: fig1 fig2 fig3 fig4 table1 count1228");
}

}  // namespace hbo::verify
