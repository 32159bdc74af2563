#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hbo {

// Outcome of a structural check on one instance. Failures keep the first
// few messages; counters record what was examined.
struct CheckReport {
  bool pass = true;
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> failures;

  static constexpr std::size_t kMaxMessages = 8;

  void fail(std::string message) {
    pass = false;
    ++counters["failures"];
    if (failures.size() < kMaxMessages) failures.push_back(std::move(message));
  }
  void count(const std::string& key, std::int64_t delta = 1) { counters[key] += delta; }
  // require(cond, msg): records a failure when cond is false.
  bool require(bool condition, const std::string& message) {
    if (!condition) fail(message);
    return condition;
  }
  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& [k, v] : other.counters) counters[prefix + k] += v;
    for (const auto& f : other.failures) {
      if (failures.size() < kMaxMessages) failures.push_back(prefix + f);
    }
    pass = pass && other.pass;
  }
};

}  // namespace hbo
