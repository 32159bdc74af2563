#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hbo/verify/checks.hpp"

namespace hbo::verify {

struct SweepSpec {
  int n = 3;
  // Affine sweep over lengths <= max_len; without it, all of S_n.
  std::optional<int> max_len;
  // 0 means the default range: [1, n] for S_n, [2, n] for affine sweeps.
  int k_min = 0;
  int k_max = 0;
  std::string suite = "all";
  int workers = 1;
  Budget budget;
  bool strict = false;
  std::string out;
};

json to_json(const SweepSpec& s);

// Throws InvalidArgument for an unusable spec.
void validate(const SweepSpec& s);

struct SweepReport {
  SweepSpec spec;
  std::vector<Record> records;  // in instance order
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::int64_t elapsed_ms = 0;

  json to_json() const;
};

SweepReport run_sweep(const SweepSpec& spec);

}  // namespace hbo::verify
