#include "hbo/verify/sweep.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "hbo/error.hpp"

namespace hbo::verify {

json to_json(const SweepSpec& s) {
  json j = {{"n", s.n},
            {"suite", s.suite},
            {"k_min", s.k_min},
            {"k_max", s.k_max},
            {"workers", s.workers},
            {"budget_inv", s.budget.max_inv},
            {"budget_ext", s.budget.max_ext},
            {"strict", s.strict}};
  j["max_len"] = s.max_len ? json(*s.max_len) : json(nullptr);
  return j;
}

void validate(const SweepSpec& s) {
  if (s.n < 2) throw InvalidArgument("--n must be at least 2");
  if (s.max_len && *s.max_len < 0) throw InvalidArgument("--max-len must be nonnegative");
  if (s.workers < 1) throw InvalidArgument("--workers must be positive");
  if (s.k_min < 0 || s.k_max < 0 || (s.k_max && s.k_min > s.k_max)) throw InvalidArgument("bad k range");
  if (s.max_len && s.k_min == 1) {
    throw InvalidArgument("affine sweeps need k >= 2; k = 1 is covered by the weak suite through C_w(n,2)");
  }
  checks_of_suite(s.suite);
}

json SweepReport::to_json() const {
  json records_json = json::array();
  for (const auto& r : records) records_json.push_back(verify::to_json(r));
  return {{"spec", verify::to_json(spec)},
          {"records", records_json},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skip", skip}}},
          {"elapsed_ms", elapsed_ms}};
}

SweepReport run_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.spec = spec;
  const auto perms = spec.max_len ? enumerate_up_to_length(spec.n, *spec.max_len) : enumerate_finite(spec.n);
  const int k_min = spec.k_min ? spec.k_min : (spec.max_len ? 2 : 1);
  const int k_max = spec.k_max ? spec.k_max : spec.n;

  struct Task {
    std::size_t perm;
    std::string check;
    int k;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (const auto& check : checks_of_suite(spec.suite)) {
      for (int k : check_levels(check, perms[i], k_min, k_max)) tasks.push_back({i, check, k});
    }
  }
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      report.records[t] = run_check(tasks[t].check, perms[tasks[t].perm], tasks[t].k, spec.budget);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < spec.workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : report.records) {
    switch (r.status) {
      case Status::pass: ++report.pass; break;
      case Status::fail: ++report.fail; break;
      case Status::skip: ++report.skip; break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hbo::verify
