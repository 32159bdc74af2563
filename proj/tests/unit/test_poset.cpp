#include "doctest.h"
#include "hbo/digraph.hpp"
#include "hbo/error.hpp"
#include "hbo/poset.hpp"

using namespace hbo;

namespace {

// a < b, a < c, b < d, c < d
FinitePoset diamond() {
  RelationSet r;
  r.labels = {"a", "b", "c", "d"};
  r.pairs = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return close_to_poset(r);
}

FinitePoset antichain(int n) {
  RelationSet r;
  for (int i = 0; i < n; ++i) r.labels.push_back(std::to_string(i));
  return close_to_poset(r);
}

}  // namespace

TEST_CASE("closure and covers") {
  auto p = diamond();
  CHECK(p.less(0, 3));
  CHECK_FALSE(p.comparable(1, 2));
  CHECK(p.covers().size() == 4);
  CHECK(p.minimal_elements() == std::vector<int>{0});
  CHECK(p.maximal_elements() == std::vector<int>{3});
}

TEST_CASE("redundant relations are reduced away") {
  RelationSet r;
  r.labels = {"a", "b", "c"};
  r.pairs = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(close_to_poset(r).covers().size() == 2);
}

TEST_CASE("cyclic relations are rejected") {
  RelationSet r;
  r.labels = {"a", "b"};
  r.pairs = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(close_to_poset(r), CycleError);
  auto c = find_cycle(3, {{0, 1}, {1, 2}, {2, 0}});
  REQUIRE(c.has_value());
  CHECK(c->size() == 3);
  CHECK_FALSE(find_cycle(3, {{0, 1}, {1, 2}}).has_value());
}

TEST_CASE("linear extensions, ideals, chains") {
  auto p = diamond();
  CHECK(linear_extensions(p).size() == 2);
  CHECK(count_linear_extensions(p) == 2u);
  CHECK(order_ideals(p).size() == 6);
  CHECK(count_antichains(p) == 6);
  CHECK(maximal_chains(p).size() == 2);
  auto a = antichain(5);
  CHECK(count_linear_extensions(a) == 120u);
  CHECK(order_ideals(a).size() == 32);
  CHECK(ranked_check(p).ranked);
  CHECK(ranked_check(p).unique_min);
}

TEST_CASE("isomorphism") {
  auto p = diamond();
  RelationSet r;
  r.labels = {"x", "y", "z", "t"};
  r.pairs = {{3, 1}, {3, 2}, {1, 0}, {2, 0}};
  CHECK(poset_isomorphic(p, close_to_poset(r)));
  RelationSet chain;
  chain.labels = {"x", "y", "z", "t"};
  chain.pairs = {{0, 1}, {1, 2}, {2, 3}};
  CHECK_FALSE(poset_isomorphic(p, close_to_poset(chain)));
}

TEST_CASE("digraph checks") {
  Digraph g;
  for (auto s : {"a", "b", "c"}) g.add_node(s);
  CHECK(g.add_arc(0, 1));
  CHECK_FALSE(g.add_arc(0, 1));
  g.add_arc(1, 2);
  auto r = digraph_checks(g);
  CHECK(r.acyclic);
  CHECK(r.sources == std::vector<int>{0});
  CHECK(r.sinks == std::vector<int>{2});
  CHECK(r.undirected_diameter == 2);
  g.add_arc(2, 0);
  CHECK_FALSE(is_acyclic(g));
  Digraph split;
  split.add_node("a");
  split.add_node("b");
  CHECK_THROWS_AS(digraph_checks(split), InvalidArgument);
}
