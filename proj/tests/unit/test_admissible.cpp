#include <algorithm>
#include <set>

#include "doctest.h"
#include "hbo/admissible.hpp"
#include "hbo/consistent.hpp"
#include "hbo/error.hpp"
#include "hbo/verify/reproduce.hpp"

using namespace hbo;

namespace {

std::set<std::string> names(const std::vector<KClass>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(format_kclass(x));
  return out;
}

}  // namespace

TEST_CASE("1228 admissible orders in six classes") {
  AdmissibleSpace space(parse_window("(6,4,5,2,3,1)"), 3);
  auto orders = space.enumerate();
  CHECK(orders.size() == 1228);
  auto classes = commutation_classes_of_orders(space);
  CHECK(classes.classes.size() == 6);
  CHECK(classes.audit.pass);
  for (const auto& o : orders) CHECK(space.check(o).admissible);
  CHECK(verify::reproduce("table1").pass);
  CHECK(verify::reproduce("count1228").pass);
}

// Counts from tests/oracles/frozen.json.
TEST_CASE("admissible counts for the longest element") {
  struct Row {
    const char* w;
    int k;
    std::size_t orders;
  };
  for (auto row : {Row{"(4,3,2,1)", 1, 24}, Row{"(4,3,2,1)", 2, 16}, Row{"(5,4,3,2,1)", 2, 768},
                   Row{"(5,4,3,2,1)", 3, 112}, Row{"(6,5,4,3,2,1)", 4, 3084}}) {
    AdmissibleSpace space(parse_window(row.w), row.k);
    CHECK_MESSAGE(space.enumerate().size() == row.orders, row.w << " k=" << row.k);
  }
}

TEST_CASE("check names the violation") {
  AdmissibleSpace space(parse_window("(4,3,2,1)"), 2);
  // [1,2],[2,3],[1,3] meets P([1,2,3]) out of order
  auto bad = space.to_order(
      {parse_kclass(4, "12"), parse_kclass(4, "23"), parse_kclass(4, "13"), parse_kclass(4, "14"),
       parse_kclass(4, "24"), parse_kclass(4, "34")});
  auto r = space.check(bad);
  CHECK_FALSE(r.admissible);
  CHECK(r.diagnostic.find("[1,2,3]") != std::string::npos);
  CHECK_THROWS_AS(space.to_order({parse_kclass(4, "12")}), InvalidArgument);
}

TEST_CASE("flips reverse exactly one packet") {
  AdmissibleSpace space(parse_window("(6,4,5,2,3,1)"), 3);
  auto orders = space.enumerate();
  std::size_t flips = 0;
  for (const auto& o : orders) {
    for (int z = 0; z < static_cast<int>(space.upper().size()); ++z) {
      if (!space.flippable(o, z)) continue;
      ++flips;
      auto f = space.apply_flip(o, z);
      CHECK(space.check(f).admissible);
      auto diff = space.reversal_set(o);
      auto other = space.reversal_set(f);
      CHECK(((diff - other) | (other - diff)).indices() == std::vector<int>{z});
    }
  }
  CHECK(flips > 0);
}

TEST_CASE("B_w(6,3) is a poset on six classes") {
  AdmissibleSpace space(parse_window("(6,4,5,2,3,1)"), 3);
  auto b = build_bruhat(space);
  CHECK(b.poset.size() == 6);
  CHECK(b.poset.covers().size() == 6);
  auto r = ranked_check(b.poset);
  CHECK(r.unique_min);
  CHECK(r.unique_max);
}

TEST_CASE("reflection order of the affine example") {
  auto rho = reflection_order(parse_word(4, "232124134"));
  std::vector<std::string> listed;
  for (const auto& x : rho) listed.push_back(format_kclass(x));
  CHECK(listed == std::vector<std::string>{"[2,3]", "[2,4]", "[3,4]", "[1,4]", "[1,3]", "[2,8]", "[2,7]", "[1,8]",
                                           "[1,7]"});
  auto w = parse_window("(-3,-2,8,7)");
  AdmissibleSpace space(w, 2);
  auto order = space.to_order(rho);
  CHECK(space.check(order).admissible);
  auto rev = to_classes(space.upper(), space.reversal_set(order));
  CHECK(names(rev) == std::set<std::string>{"[1,3,4]", "[1,7,8]", "[2,7,8]"});
}

TEST_CASE("reflection order of the word 0121032") {
  std::vector<std::string> listed;
  for (const auto& x : reflection_order(parse_word(4, "0121032"))) listed.push_back(format_kclass(x));
  CHECK(listed == std::vector<std::string>{"[4,5]", "[4,6]", "[4,7]", "[2,3]", "[1,3]", "[4,11]", "[2,7]"});
  CHECK(reflection_order(parse_word(4, "")).empty());
  CHECK_THROWS_AS(reflection_order(parse_word(4, "11")), InvalidArgument);
}

TEST_CASE("reduced words biject with 2-admissible orders") {
  for (auto text : {"(1,7,2,0)", "(-3,-2,8,7)", "(4,3,2,1)", "(2,0,4)"}) {
    auto r = word_order_bijection_check(parse_window(text));
    CHECK_MESSAGE(r.report.pass, text);
    CHECK(r.words == r.orders);
    CHECK(r.word_classes == r.order_classes);
  }
}
