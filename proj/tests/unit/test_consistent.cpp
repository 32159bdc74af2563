#include <set>

#include "doctest.h"
#include "hbo/consistent.hpp"
#include "hbo/error.hpp"
#include "hbo/verify/reproduce.hpp"

using namespace hbo;

namespace {

std::vector<KClass> classes(int n, std::initializer_list<const char*> xs) {
  std::vector<KClass> out;
  for (auto x : xs) out.push_back(parse_kclass(n, x));
  return out;
}

}  // namespace

TEST_CASE("figure 3: C_w(6,4) has six sets") {
  auto c = consistent_poset(parse_window("(6,4,5,2,3,1)"), 4);
  CHECK(c.sets.size() == 6);
  CHECK(c.poset.covers().size() == 6);
  CHECK(verify::reproduce("fig3").pass);
}

// Counts from tests/oracles/frozen.json.
TEST_CASE("consistent counts for the longest element") {
  struct Row {
    const char* w;
    int k;
    std::size_t sets;
  };
  for (auto row : {Row{"(4,3,2,1)", 2, 24}, Row{"(4,3,2,1)", 3, 8}, Row{"(5,4,3,2,1)", 2, 120},
                   Row{"(5,4,3,2,1)", 3, 62}, Row{"(5,4,3,2,1)", 4, 10}, Row{"(6,5,4,3,2,1)", 4, 148},
                   Row{"(6,5,4,3,2,1)", 5, 12}}) {
    CHECK_MESSAGE(consistent_poset(parse_window(row.w), row.k).sets.size() == row.sets, row.w);
  }
}

// C_w(n,2) is the weak interval [id,w]; sizes from the oracle.
TEST_CASE("C_w(n,2) has the size of the weak interval") {
  CHECK(consistent_poset(parse_window("(6,4,5,2,3,1)"), 2).sets.size() == 180);
  CHECK(consistent_poset(parse_window("(4,2,3,1)"), 2).sets.size() == 12);
  CHECK(consistent_poset(parse_window("(1,7,2,0)"), 2).sets.size() == 17);
  CHECK(consistent_poset(parse_window("(-3,-2,8,7)"), 2).sets.size() == 24);
}

TEST_CASE("is_consistent") {
  auto w = parse_window("(6,4,5,2,3,1)");
  CHECK(is_consistent(w, 4, classes(6, {"1256", "1356"})).consistent);
  CHECK(is_consistent(w, 4, {}).consistent);
  // 1356 alone is not an order ideal
  auto r = is_consistent(w, 4, classes(6, {"1356"}));
  CHECK_FALSE(r.consistent);
  CHECK_FALSE(r.diagnostic.empty());
  CHECK_THROWS_AS(is_consistent(w, 4, classes(6, {"1234"})), InvalidArgument);
}

TEST_CASE("the affine reversal set is consistent") {
  auto w = parse_window("(-3,-2,8,7)");
  auto r = classes(4, {"[1,3,4]", "[2,7,8]", "[1,7,8]"});
  CHECK(is_consistent(w, 3, r).consistent);
  LevelContext ctx(w, 3);
  CHECK(ctx.poset().is_order_ideal(to_subset(ctx.level(), r, "R")));
}

TEST_CASE("figure 4: tagged arcs of G_R") {
  auto g = build_gr(parse_window("(6,4,5,2,3,1)"), 3, classes(6, {"1256", "1356"}));
  CHECK(g.elements.size() == 12);
  CHECK(g.count(ArcTag::quasi) == 10);
  CHECK(g.count(ArcTag::reversal) == 6);
  CHECK(g.count(ArcTag::complement) == 6);
  CHECK(g.count(ArcTag::congruence) == 0);
  CHECK_FALSE(gr_cycle(g).has_value());
  CHECK(verify::reproduce("fig4").pass);
}

TEST_CASE("Rev inverse and suffix sets") {
  auto w = parse_window("(6,4,5,2,3,1)");
  LevelContext ctx(w, 3);
  auto up = to_subset(ctx.upper(), classes(6, {"1256", "1356"}), "R");
  auto orders = rev_inverse(ctx, up);
  CHECK_FALSE(orders.empty());
  AdmissibleSpace space(w, 3);
  for (const auto& o : orders) CHECK(space.reversal_set(o) == up);
  auto all = Bitset(ctx.level().size());
  for (std::size_t i = 0; i < all.size(); ++i) all.set(i);
  CHECK(suffix_set(ctx, all).count() == ctx.upper().size());
  CHECK(suffix_set(ctx, Bitset(ctx.level().size())).none());
}

TEST_CASE("Rev is an isomorphism and chains biject with orders") {
  for (auto [text, k] : {std::pair{"(6,4,5,2,3,1)", 3}, {"(6,4,5,2,3,1)", 2}, {"(-3,-2,8,7)", 2},
                         {"(1,7,2,0)", 2}, {"(4,3,2,1)", 1}}) {
    CHECK_MESSAGE(rev_isomorphism_check(parse_window(text), k).pass, text << " k=" << k);
    CHECK_MESSAGE(chain_order_bijection_check(parse_window(text), k).pass, text << " k=" << k);
  }
}
