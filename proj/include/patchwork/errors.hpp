#pragma once

#include <stdexcept>
#include <string>

namespace patchwork {

// Bad arguments to a library call: width mismatches, non-member masks,
// out-of-range parameters, oracle caps.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed instance or tree-spec text.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A family handed to a structure routine is not actually closed; the
// message names the offending set or pair.
class NotAPatchworkError : public std::runtime_error {
 public:
  explicit NotAPatchworkError(const std::string& what)
      : std::runtime_error("not a patchwork: " + what) {}
};

// An internal postcondition failed. Maps to exit code 2 in the CLI.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace patchwork
