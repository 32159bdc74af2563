#include "doctest.h"
#include "hbo/consistent.hpp"
#include "hbo/export.hpp"
#include "hbo/words.hpp"

using namespace hbo;

TEST_CASE("permutations and classes round-trip through json") {
  auto w = parse_window("(-3,-2,8,7)");
  CHECK(permutation_from_json(to_json(w)) == w);
  auto x = parse_kclass(4, "[1,7,8]");
  CHECK(kclass_from_json(4, to_json(x)) == x);
}

TEST_CASE("posets export covers by label") {
  auto c = consistent_poset(parse_window("(6,4,5,2,3,1)"), 4);
  auto j = consistent_json(c);
  CHECK(j["elements"].size() == 6);
  CHECK(j["covers"].size() == 6);
}

TEST_CASE("G_R dot output carries the colour convention") {
  auto g = build_gr(parse_window("(6,4,5,2,3,1)"), 3, {parse_kclass(6, "1256"), parse_kclass(6, "1356")});
  auto dot = dot_gr(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("color=blue") != std::string::npos);
  auto j = to_json(g);
  CHECK(j["arcs"].size() == 22);
}

TEST_CASE("braid graph dot output is deterministic") {
  auto w = parse_window("(1,7,2,0)");
  CHECK(dot_digraph(braid_graph(w).graph, "G") == dot_digraph(braid_graph(w).graph, "G"));
  auto words = dot_reduced_word_graph(reduced_word_graph(w));
  CHECK(words.find("0121032") != std::string::npos);
}
