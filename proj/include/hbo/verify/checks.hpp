#pragma once

// Per-instance checks run by the verification sweeps. Each check name is
// also a suite name; "all" runs every check and "property" the lemma suites.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbo/export.hpp"
#include "hbo/perm.hpp"

namespace hbo::verify {

struct Budget {
  std::size_t max_inv = 24;   // |Inv_k(w)| above this is skipped
  double max_ext = 1e7;       // estimated enumeration size above this is skipped
};

enum class Status { pass, fail, skip };
std::string status_name(Status s);

struct Record {
  AffinePermutation w = AffinePermutation::identity(1);
  int k = 0;
  std::string check;
  Status status = Status::pass;
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> messages;
  // Present on failures: enough to rerun the check ({"w","k","check",...}).
  json witness;
};

json to_json(const Record& r);

const std::vector<std::string>& check_names();
// Throws InvalidArgument for an unknown suite.
std::vector<std::string> checks_of_suite(const std::string& suite);

// Levels k at which `check` runs for w, given the requested range.
std::vector<int> check_levels(const std::string& check, const AffinePermutation& w, int k_min, int k_max);

// Runs one check. Library exceptions other than UnsupportedCase become
// failures; UnsupportedCase and budget overruns become skips.
Record run_check(const std::string& check, const AffinePermutation& w, int k, const Budget& budget);

// Reruns the check named by a witness without any budget limit.
Record replay_witness(const json& witness);

// Test hook: while set, the named check reports an extra failure.
void inject_fault(const std::string& check);
void clear_fault();

}  // namespace hbo::verify
