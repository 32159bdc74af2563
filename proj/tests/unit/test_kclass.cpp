#include <set>

#include "doctest.h"
#include "hbo/error.hpp"
#include "hbo/kclass.hpp"

using namespace hbo;

TEST_CASE("canonical classes shift into the first window") {
  auto a = canonicalize({5, 11, 12}, 4);
  CHECK(format_kclass(a) == "[1,7,8]");
  CHECK(parse_kclass(4, "[1,7,8]") == a);
  CHECK(parse_kclass(4, "178") == a);
  CHECK(format_kclass_compact(parse_kclass(6, "[1,2,5,6]")) == "1256");
  CHECK_THROWS_AS(parse_kclass(4, "[3,3]"), InvalidArgument);
}

TEST_CASE("packets list members in antilex order") {
  auto p = packet(parse_kclass(6, "1256"));
  REQUIRE(p.members.size() == 4);
  CHECK(format_kclass_compact(p.members.front()) == "256");
  CHECK(format_kclass_compact(p.members.back()) == "125");
  CHECK(format_kclass_compact(p.lex().front()) == "125");
}

TEST_CASE("prefix and suffix flags") {
  // flags follow the stored member order
  CHECK(flags_are_prefix({false, true, true}));
  CHECK(flags_are_suffix({true, true, false}));
  CHECK_FALSE(flags_are_prefix({false, true, false}));
  CHECK_FALSE(flags_are_suffix({false, true, false}));
  // empty and full count as both
  CHECK(flags_are_prefix({false, false}));
  CHECK(flags_are_suffix({false, false}));
  CHECK(flags_are_prefix({true, true}));
  CHECK(flags_are_suffix({true, true}));
}

TEST_CASE("k-inversions of the running finite example") {
  auto w = parse_window("(6,4,5,2,3,1)");
  CHECK(inv_k(w, 2).size() == 13);
  CHECK(inv_k(w, 3).size() == 12);
  CHECK(inv_k(w, 4).size() == 4);
  CHECK(is_k_inversion(w, parse_kclass(6, "1256")));
  CHECK_FALSE(is_k_inversion(w, parse_kclass(6, "1234")));
  CHECK(inv_k(parse_window("(1,2,3,4)"), 2).empty());
}

TEST_CASE("k-inversions of affine examples") {
  auto w = parse_window("(-3,-2,8,7)");
  std::set<std::string> got;
  for (const auto& x : inv_k(w, 3)) got.insert(format_kclass(x));
  CHECK(got == std::set<std::string>{"[1,3,4]", "[1,7,8]", "[2,3,4]", "[2,7,8]"});
  CHECK(inv_k(parse_window("(1,7,2,0)"), 2).size() == 7);
  CHECK_THROWS_AS(inv_k(w, 1), UnsupportedCase);
}

TEST_CASE("packet intersections have one of the four shapes") {
  auto w = parse_window("(6,4,5,2,3,1)");
  InversionTable t(w);
  CHECK(t.classify(parse_kclass(6, "1256")).shape == PacketShape::full);
  for (const auto& z : t.quasi_inversions(4)) {
    auto c = t.classify(z);
    CHECK_MESSAGE(c.shape == PacketShape::adjacent_pair, format_kclass(z));
  }
  auto c = classify_packet_intersection(w, parse_kclass(6, "2345"));
  CHECK(c.shape != PacketShape::full);
}
