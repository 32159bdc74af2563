#include "doctest.h"
#include "hbo/error.hpp"
#include "hbo/verify/checks.hpp"
#include "hbo/verify/reproduce.hpp"
#include "hbo/verify/sweep.hpp"

using namespace hbo;
using namespace hbo::verify;

TEST_CASE("every reproduce target passes") {
  for (const auto& t : reproduce_targets()) {
    auto r = reproduce(t);
    CHECK_MESSAGE(r.pass, t);
  }
  CHECK_THROWS_AS(reproduce("fig9"), InvalidArgument);
}

TEST_CASE("golden files parse with provenance comments stripped") {
  auto g = parse_golden(golden_text("fig1"));
  CHECK(g.first("n") == std::vector<std::string>{"4"});
  CHECK_THROWS_AS(g.first("nope"), InvalidArgument);
  CHECK_THROWS_AS(golden_text("nope"), InvalidArgument);
}

TEST_CASE("every named check passes on small instances") {
  Budget b;
  for (const auto& check : check_names()) {
    for (auto text : {"(4,2,3,1)", "(2,0,4)", "(1,7,2,0)"}) {
      auto w = parse_window(text);
      for (int k : check_levels(check, w, 0, 0)) {
        auto r = run_check(check, w, k, b);
        CHECK_MESSAGE(r.status != Status::fail, check << " " << text << " k=" << k);
      }
    }
  }
  CHECK_THROWS_AS(run_check("nope", parse_window("(2,1)"), 1, b), InvalidArgument);
  CHECK_THROWS_AS(checks_of_suite("nope"), InvalidArgument);
}

TEST_CASE("an injected fault leaves a witness that replays to a failure") {
  inject_fault("thm13");
  auto r = run_check("thm13", parse_window("(1,7,2,0)"), 2, Budget{});
  REQUIRE(r.status == Status::fail);
  REQUIRE(r.witness.is_object());
  auto j = to_json(r);
  CHECK(j.contains("witness"));
  // through text, as a report file would carry it
  auto parsed = json::parse(j["witness"].dump());
  CHECK(replay_witness(parsed).status == Status::fail);
  clear_fault();
  CHECK(replay_witness(parsed).status == Status::pass);
  CHECK_THROWS_AS(replay_witness(json::object()), InvalidArgument);
}

TEST_CASE("budget overruns are skips") {
  Budget tiny;
  tiny.max_inv = 2;
  auto r = run_check("thm14", parse_window("(6,4,5,2,3,1)"), 3, tiny);
  CHECK(r.status == Status::skip);
}

TEST_CASE("sweeps are deterministic across worker counts") {
  SweepSpec s;
  s.n = 3;
  s.max_len = 6;
  s.suite = "all";
  auto one = run_sweep(s);
  s.workers = 3;
  auto three = run_sweep(s);
  CHECK(one.fail == 0);
  CHECK(one.pass == three.pass);
  CHECK(one.skip == three.skip);
  REQUIRE(one.records.size() == three.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(to_json(one.records[i]) == to_json(three.records[i]));
  }
  auto j = one.to_json();
  CHECK(j["summary"]["pass"] == one.pass);
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("sweep spec validation") {
  SweepSpec s;
  s.n = 3;
  s.max_len = 4;
  s.k_min = 1;
  CHECK_THROWS_AS(validate(s), InvalidArgument);
  s.k_min = 2;
  CHECK_NOTHROW(validate(s));
  s.workers = 0;
  CHECK_THROWS_AS(validate(s), InvalidArgument);
}
