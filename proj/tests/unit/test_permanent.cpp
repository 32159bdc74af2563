#include <set>

#include "doctest.h"
#include "hbo/error.hpp"
#include "hbo/permanent.hpp"
#include "hbo/verify/reproduce.hpp"

using namespace hbo;

TEST_CASE("permanent poset of the running finite example") {
  auto p = permanent_poset(parse_window("(6,4,5,2,3,1)"), 3);
  CHECK(p.elements.size() == 12);
  CHECK(p.poset.covers().size() == 10);
}

TEST_CASE("figure 2 matches the golden file") {
  auto r = verify::reproduce("fig2");
  CHECK(r.pass);
  CHECK(r.diffs.empty());
}

TEST_CASE("the longest element has no relations") {
  auto p = permanent_poset(parse_window("(5,4,3,2,1)"), 2);
  CHECK(p.elements.size() == 10);
  CHECK(p.poset.covers().empty());
}

TEST_CASE("affine congruence relations") {
  auto w = parse_window("(-3,-2,8,7)");
  auto q = quasi_inversion_relations(w, 3);
  auto c = congruence_relations(w, 3);
  auto p = permanent_poset(w, 3);
  CHECK(p.elements.size() == 4);
  CHECK(q.size() == 4);
  CHECK(c.size() == 4);
  CHECK(congruence_vector(4, 3, 1) == std::vector<std::int64_t>{0, 4, 4});
}

TEST_CASE("levels are refused for affine k = 1") {
  CHECK_THROWS_AS(LevelContext(parse_window("(1,7,2,0)"), 1), UnsupportedCase);
  CHECK_NOTHROW(LevelContext(parse_window("(4,2,3,1)"), 1));
}
