#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hbo {

// Malformed input: bad window, bad word, bad class, out-of-range index.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request the library deliberately refuses, e.g. Inv_1 of an affine
// permutation, which is infinite.
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generating relation closed into a cycle. `cycle` lists node labels in
// order; the last node points back to the first.
class CycleError : public std::runtime_error {
 public:
  CycleError(const std::string& what, std::vector<std::string> cycle)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

// A structural statement that should always hold turned out false on a
// concrete instance. The message carries the witness.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hbo
