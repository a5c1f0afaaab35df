#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "patchwork/setcore.hpp"

// Extremal constructions, size bounds, and desk-scale oracles backing the
// test and acceptance suites. Everything here is deliberately small and
// exhaustive; the caps keep the factorial and doubly-exponential paths at
// desk scale.

namespace patchwork {

// Largest possible closure of an n-set family: 2^(2^n - 1) + 1.
// Guarded against overflow for n > 6.
std::uint64_t max_patchwork_size(unsigned n);

// Largest possible closure of an orderable n-set family: 2n^2 - n + 2.
std::uint64_t max_convex_patchwork_size(unsigned n);

// Universe = all subsets of {1..n} (labels are sorted digit strings, ""
// for the empty subset); generator i is the set of points whose subset
// contains i. Its closure attains max_patchwork_size(n) for n != 2.
// Requires n <= 4.
SetFamily powerset_example(unsigned n);

// Universe = integers -n..n; generator i is the n-element run
// [-n+i, i-1]. Its closure attains max_convex_patchwork_size(n).
// Requires n >= 1.
SetFamily interval_example(unsigned n);

struct BruteForceResult {
  bool orderable = false;
  std::optional<std::vector<std::size_t>> order;  // first passing order
};

// Tries every permutation of the universe. Requires |universe| <= 8.
BruteForceResult brute_force_decide(const SetFamily& f);

// Deterministic, duplicate-free stream of all families of distinct
// subsets of a small universe (labels "a", "b", ...). Requires
// omega_size <= 4, and max_sets to be given when omega_size == 4.
class FamilyEnumerator {
 public:
  explicit FamilyEnumerator(std::size_t omega_size,
                            std::optional<std::size_t> max_sets = std::nullopt);
  std::optional<SetFamily> next();
  const GroundSet& ground() const { return ground_; }

 private:
  GroundSet ground_;
  std::vector<SubsetMask> all_masks_;
  std::optional<std::size_t> max_sets_;
  std::uint64_t cursor_ = 0;
  std::uint64_t end_ = 0;
};

enum class ExtremalKind { powerset, interval };

struct BoundReport {
  unsigned n = 0;
  std::uint64_t general_bound = 0;
  std::uint64_t convex_bound = 0;
  std::size_t achieved = 0;  // closure size of the generated example
};

// Closes the chosen extremal example and reports it against both bounds.
BoundReport bound_report(ExtremalKind kind, unsigned n);

}  // namespace patchwork
