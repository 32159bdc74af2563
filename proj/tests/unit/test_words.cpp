#include "doctest.h"
#include "hbo/error.hpp"
#include "hbo/words.hpp"

using namespace hbo;

TEST_CASE("word parsing normalizes the letter n to 0") {
  auto a = parse_word(4, "4121432");
  auto b = parse_word(4, "0121032");
  CHECK(a == b);
  CHECK(format_word(a) == "0121032");
  CHECK(is_reduced(a));
  CHECK(format_window(apply_word(a)) == "(1,7,2,0)");
  CHECK_FALSE(is_reduced(parse_word(4, "11")));
  CHECK_THROWS_AS(parse_word(4, "15"), InvalidArgument);
}

// Word and class counts from tests/oracles/frozen.json.
TEST_CASE("reduced words and commutation classes") {
  struct Row {
    const char* w;
    std::size_t words, classes;
  };
  for (auto row : {Row{"(4,3,2,1)", 16, 8}, Row{"(5,4,3,2,1)", 768, 62}, Row{"(1,7,2,0)", 10, 5},
                   Row{"(-3,-2,8,7)", 28, 5}}) {
    auto c = commutation_classes(parse_window(row.w));
    CHECK_MESSAGE(c.words.size() == row.words, row.w);
    CHECK_MESSAGE(c.classes.size() == row.classes, row.w);
    for (const auto& word : c.words) CHECK(apply_word(word) == parse_window(row.w));
  }
  CHECK(reduced_words(parse_window("(6,4,5,2,3,1)")).size() == 16016);
}

TEST_CASE("letters commute cyclically in the affine case") {
  CHECK(letters_commute(4, 0, 2));
  CHECK_FALSE(letters_commute(4, 0, 3));
  CHECK_FALSE(letters_commute(4, 1, 2));
  CHECK(letters_commute(5, 1, 3));
}

TEST_CASE("braid graph of (1,7,2,0)") {
  auto g = braid_graph(parse_window("(1,7,2,0)"));
  CHECK(g.graph.size() == 5);
  CHECK(g.graph.arc_count() == 5);
  std::vector<std::size_t> sizes;
  for (const auto& c : g.classes.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 4});
  auto rep = digraph_checks(g.graph);
  CHECK(rep.acyclic);
  CHECK(rep.sources.size() == 1);
  CHECK(rep.sinks.size() == 1);
}

TEST_CASE("directed braid moves") {
  auto w = parse_word(4, "232124134");
  auto sites = directed_braid_sites(w);
  REQUIRE(sites.size() == 1);
  CHECK(format_word(apply_braid(w, sites[0])) == "323120130");
}
