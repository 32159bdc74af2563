#include <algorithm>
#include <map>

#include "doctest.h"
#include "hbo/error.hpp"
#include "hbo/perm.hpp"
#include "hbo/poset.hpp"

using namespace hbo;

TEST_CASE("window parsing and printing") {
  auto w = parse_window("(-3,-2,8,7)");
  CHECK(w.rank() == 4);
  CHECK(format_window(w) == "(-3,-2,8,7)");
  CHECK(w(5) == 1);
  CHECK(w(0) == 3);
  CHECK_FALSE(w.is_finite());
  CHECK(parse_window("(6,4,5,2,3,1)").is_finite());
  CHECK_THROWS_AS(parse_window("(1,1,4)"), InvalidArgument);
  CHECK_THROWS_AS(parse_window("(1,2,4)"), InvalidArgument);  // window sum
  CHECK_THROWS_AS(parse_window("(1,x)"), InvalidArgument);
}

TEST_CASE("inverse, composition and simple reflections") {
  auto w = parse_window("(1,7,2,0)");
  CHECK(compose(w, w.inverse()).is_identity());
  CHECK(compose(w.inverse(), w).is_identity());
  auto s0 = AffinePermutation::simple(4, 0);
  CHECK(format_window(s0) == "(0,2,3,5)");
  CHECK(compose(s0, s0).is_identity());
  CHECK(w.times_simple(2) == compose(w, AffinePermutation::simple(4, 2)));
}

TEST_CASE("length and 2-inversions") {
  CHECK(length(parse_window("(1,7,2,0)")) == 7);
  CHECK(length(parse_window("(-3,-2,8,7)")) == 9);
  CHECK(length(parse_window("(6,4,5,2,3,1)")) == 13);
  auto w = parse_window("(4,2,3,1)");
  CHECK(inv2(w).size() == 5);
  for (const auto& p : inv2(parse_window("(1,7,2,0)"))) {
    CHECK(p.x < p.y);
    CHECK(p.x >= 1);
    CHECK(p.x <= 4);
  }
}

// Counts by length from tests/oracles/frozen.json.
TEST_CASE("enumerate_up_to_length matches the oracle counts") {
  auto by_length = [](int n, int L) {
    std::vector<int> counts(static_cast<std::size_t>(L + 1), 0);
    for (const auto& w : enumerate_up_to_length(n, L)) ++counts[length(w)];
    return counts;
  };
  CHECK(by_length(3, 8) == std::vector<int>{1, 3, 6, 9, 12, 15, 18, 21, 24});
  CHECK(by_length(4, 5) == std::vector<int>{1, 4, 10, 20, 34, 52});
  CHECK(by_length(5, 4) == std::vector<int>{1, 5, 15, 35, 70});
  CHECK(enumerate_finite(5).size() == 120);
}

TEST_CASE("weak intervals match the oracle sizes") {
  std::map<std::string, std::size_t> expected{
      {"(6,4,5,2,3,1)", 180}, {"(4,2,3,1)", 12}, {"(1,7,2,0)", 17}, {"(-3,-2,8,7)", 24}, {"(2,0,4)", 3}};
  for (const auto& [text, size] : expected) {
    auto iv = weak_interval(parse_window(text));
    CHECK_MESSAGE(iv.elements.size() == size, text);
    auto p = weak_interval_poset(iv);
    auto r = ranked_check(p);
    CHECK(r.ranked);
    CHECK(r.unique_min);
    CHECK(r.unique_max);
  }
}
