#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbo/export.hpp"

namespace hbo::verify {

// Embedded copy of data/golden/<name>.txt. Throws InvalidArgument if absent.
std::string_view golden_text(const std::string& name);

// Line-oriented golden data: "key value value ...", '#' starts a comment.
struct GoldenFile {
  std::vector<std::pair<std::string, std::vector<std::string>>> lines;

  std::vector<std::vector<std::string>> all(const std::string& key) const;
  // Throws InvalidArgument when the key is missing.
  const std::vector<std::string>& first(const std::string& key) const;
};
GoldenFile parse_golden(std::string_view text);

struct ReproduceResult {
  std::string target;
  bool pass = true;
  std::vector<std::string> summary;
  std::vector<std::string> diffs;  // "missing: ..." / "extra: ..." / "mismatch: ..."

  json to_json() const;
};

const std::vector<std::string>& reproduce_targets();
// Throws InvalidArgument for an unknown target.
ReproduceResult reproduce(const std::string& target);

}  // namespace hbo::verify
