#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "patchwork/closure.hpp"
#include "patchwork/structure.hpp"

// Deciding whether the universe admits a total ordering under which every
// set of a family is convex. The decision runs on the family's closure:
// an ordering exists exactly when no cohort's adjacency graph is complete,
// and the closure of an orderable n-set family can never outgrow
// 2n^2 - n + 2, which turns closure size into an early rejection test.

namespace patchwork {

// Partition of the universe by membership signature: two elements share a
// block iff they lie in exactly the same sets of the family. Orderability
// is invariant under collapsing blocks to their representatives.
struct QuotientMap {
  std::vector<SubsetMask> classes;           // blocks over the original universe
  std::vector<std::size_t> representatives;  // least element of each block
  std::vector<SubsetMask> signatures;        // per block, over the family's sets
};

struct QuotientResult {
  SetFamily reduced;
  QuotientMap map;
};

QuotientResult quotient(const SetFamily& f);

// Expands an ordering of the blocks to the full universe: blocks become
// consecutive runs in the given order, each run in ground-index order.
std::vector<std::size_t> lift_order(const std::vector<std::size_t>& reduced_order,
                                    const QuotientMap& map);

// Three nonempty pairwise-disjoint closure members whose pairwise unions
// are all members: no ordering can make all three convex.
struct AdjacentTriple {
  SubsetMask a, b, c;
};

// The bounded closure grew past the orderable-family bound.
struct ClosureBoundExceeded {
  std::size_t bound = 0;
  std::size_t reached = 0;
};

using Certificate = std::variant<AdjacentTriple, ClosureBoundExceeded>;

struct Verdict {
  std::optional<std::vector<std::size_t>> order;  // set iff orderable
  std::optional<Certificate> certificate;         // set iff not
  bool orderable() const { return order.has_value(); }
};

// Witness of a convexity failure: positions of p < q < r in the order,
// with p and r in the set and q outside it. Fields are element indices.
struct ConvexityWitness {
  SubsetMask set;
  std::size_t p = 0, q = 0, r = 0;
};

struct OrderCheck {
  bool ok = false;
  std::optional<ConvexityWitness> witness;
};

// True iff every set of f is convex under the order (which must be a
// permutation of the universe).
OrderCheck verify_order(const SetFamily& f, const std::vector<std::size_t>& order);

// Returns a triple iff some node is complete: the three canonically least
// cohort members of the canonically least such node.
std::optional<AdjacentTriple> find_adjacent_triple(const Patchwork& p,
                                                   const AutonomyTree& tree);

// Recursive assembly over the autonomy tree; requires that no node is
// complete. Path cohorts become successive runs in stored path order;
// edgeless cohorts are laid out canonically with non-cohort elements
// appended in ground-index order.
std::vector<std::size_t> construct_order(const Patchwork& p,
                                         const AutonomyTree& tree);

struct DecideOptions {
  bool use_quotient = true;   // collapse signature blocks when the universe is large
  bool find_triple = false;   // on bound exceedance, keep closing to exhibit a triple
  std::size_t closure_cap = 100000;  // size cap for that continuation
};

struct DecideResult {
  Verdict verdict;
  // The closure and tree actually analyzed, over the quotient universe
  // when the reduction fired; absent when the bounded closure overflowed.
  std::optional<Patchwork> closure;
  std::optional<AutonomyTree> tree;
  bool quotient_used = false;
};

// Full pipeline: dedupe, quotient (when the universe outgrows the possible
// signatures), bounded closure, tree classification, then either a witness
// ordering (verified before returning) or a certificate. Certificates are
// reported over the original universe.
DecideResult decide(const SetFamily& f, const DecideOptions& opts = {});

}  // namespace patchwork
