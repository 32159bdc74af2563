#include "hbo/export.hpp"

#include <sstream>

#include "hbo/error.hpp"

namespace hbo {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

json to_json(const AffinePermutation& w) { return {{"n", w.rank()}, {"window", w.window()}}; }

AffinePermutation permutation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("window")) {
    throw InvalidArgument("permutation JSON needs fields \"n\" and \"window\"");
  }
  return AffinePermutation::from_window(j.at("n").get<int>(), j.at("window").get<std::vector<std::int64_t>>());
}

json to_json(const KClass& x) { return x.raw(); }

json to_json(const std::vector<KClass>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

KClass kclass_from_json(int n, const json& j) { return canonicalize(j.get<std::vector<std::int64_t>>(), n); }

json to_json(const FinitePoset& p) { return {{"elements", p.labels()}, {"covers", pairs_json(p.covers())}}; }

json to_json(const BraidGraph& g) {
  json classes = json::array();
  for (const auto& c : g.classes.classes) {
    json words = json::array();
    for (int i : c) words.push_back(format_word(g.classes.words[static_cast<std::size_t>(i)]));
    classes.push_back(words);
  }
  return {{"classes", classes}, {"arcs", pairs_json(g.graph.arcs())}};
}

json orders_json(const AdmissibleSpace& space, const std::vector<Order>& orders) {
  json out = json::array();
  for (const auto& o : orders) out.push_back(to_json(space.to_classes(o)));
  return out;
}

json bruhat_json(const AdmissibleSpace& space, const BruhatOrder& b) {
  json elements = json::array();
  for (std::size_t c = 0; c < b.classes.classes.size(); ++c) {
    const Order& rep = b.classes.orders[static_cast<std::size_t>(b.classes.classes[c].front())];
    elements.push_back({{"id", c},
                        {"size", b.classes.classes[c].size()},
                        {"representative", to_json(space.to_classes(rep))},
                        {"reversal", to_json(to_classes(space.upper(), b.class_reversal[c]))}});
  }
  return {{"elements", elements}, {"covers", pairs_json(b.poset.covers())}};
}

json consistent_json(const ConsistentPoset& c) {
  json sets = json::array();
  for (const auto& s : c.sets) sets.push_back(to_json(to_classes(c.ctx->level(), s)));
  return {{"elements", sets}, {"covers", pairs_json(c.poset.covers())}};
}

json to_json(const GRGraph& g) {
  json arcs = json::array();
  for (const auto& a : g.arcs) {
    arcs.push_back({{"from", to_json(g.elements[static_cast<std::size_t>(a.from)])},
                    {"to", to_json(g.elements[static_cast<std::size_t>(a.to)])},
                    {"tag", tag_name(a.tag)}});
  }
  return {{"elements", to_json(g.elements)}, {"arcs", arcs}};
}

std::string dot_reduced_word_graph(const ReducedWordGraph& g) {
  std::ostringstream out;
  out << "graph R {\n";
  for (std::size_t i = 0; i < g.words.size(); ++i) out << "  n" << i << " [label=" << quote(format_word(g.words[i])) << "];\n";
  for (auto [a, b] : g.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_digraph(const Digraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << "  n" << i << " [label=" << quote(g.labels()[i]) << "];\n";
  for (auto [a, b] : g.arcs()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_hasse(const FinitePoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  n" << i << " [label=" << quote(p.labels()[i]) << "];\n";
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string dot_gr(const GRGraph& g) {
  std::ostringstream out;
  out << "digraph G_R {\n";
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    out << "  n" << i << " [label=" << quote(format_kclass(g.elements[i])) << "];\n";
  }
  for (const auto& a : g.arcs) {
    out << "  n" << a.from << " -> n" << a.to;
    switch (a.tag) {
      case ArcTag::quasi: out << " [color=black]"; break;
      case ArcTag::reversal: out << " [color=red]"; break;
      case ArcTag::complement: out << " [color=blue]"; break;
      case ArcTag::congruence: out << " [style=dashed]"; break;
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hbo
