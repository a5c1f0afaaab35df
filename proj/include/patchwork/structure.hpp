#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patchwork/closure.hpp"
#include "patchwork/graph.hpp"

// Structure analysis of a finite patchwork.
//
// A member is *autonomous* when it is nonempty and overlaps no member of
// the family. Any two autonomous sets are disjoint or nested, so they form
// a containment tree rooted at the universe. The *cohort* under an
// autonomous set B is the set of maximal autonomous proper subsets of B;
// elements of B outside the cohort union are its *non-cohort* elements.
// Two disjoint nonempty members are *adjacent* when their union is again a
// member. The adjacency graph of each cohort is always one of: a complete
// graph on >= 3 vertices covering B, a path covering B, or edgeless.

namespace patchwork {

enum class CohortCase { complete, path, edgeless };

std::string_view to_string(CohortCase c);
std::optional<CohortCase> cohort_case_from_string(std::string_view s);

// Classification of one cohort. For `path`, `order` holds node ids in path
// order, starting from the endpoint with the canonically smaller mask.
struct CaseLabel {
  CohortCase kind = CohortCase::edgeless;
  std::vector<std::size_t> path_order;
};

// Equality of labels, treating a path and its reversal as the same.
bool same_case(const CaseLabel& a, const CaseLabel& b);

struct AutonomyNode {
  SubsetMask set;
  std::optional<std::size_t> parent;  // absent for the root
  std::vector<std::size_t> cohort;    // child node ids, canonical order
  SubsetMask non_cohort;
  CaseLabel label;
};

// Containment tree of the autonomous sets, nodes in canonical mask order
// (so the root, the universe, is last).
struct AutonomyTree {
  std::vector<AutonomyNode> nodes;
  std::size_t root = 0;
};

// All nonempty members overlapping no member, canonically sorted.
std::vector<SubsetMask> autonomous_sets(const Patchwork& p);

// Requires a nonempty universe. Every node arrives classified.
AutonomyTree autonomy_tree(const Patchwork& p);

// Both masks must be members of p.
bool adjacent(const Patchwork& p, const SubsetMask& a, const SubsetMask& b);

// Adjacency graph of the given node's cohort; vertex i is the i-th cohort
// member in the node's (canonical) child order.
Graph cohort_adjacency(const Patchwork& p, const AutonomyTree& tree,
                       std::size_t node);

// Exactly one of the three cases applies to every node of a genuine
// patchwork; anything else raises NotAPatchworkError.
CaseLabel classify_node(const Patchwork& p, const AutonomyTree& tree,
                        std::size_t node);

// The pairwise-disjoint maximal autonomous subsets of a; their union is a.
// Requires a to be a nonempty member of p.
std::vector<SubsetMask> maximal_autonomous_decomposition(const Patchwork& p,
                                                         const SubsetMask& a);

// Blueprint for building a patchwork with a prescribed autonomy tree.
// Constraints: complete nodes need >= 3 children, path nodes >= 2; only
// edgeless nodes may carry labels (their non-cohort elements); an edgeless
// node with <= 1 child must carry at least one label; labels are globally
// distinct.
struct TreeSpec {
  struct Node {
    CohortCase kind = CohortCase::edgeless;
    std::vector<std::string> labels;
    std::vector<Node> children;
  };
  Node root;
};

// Tree-spec format: {"node": {"kind": "complete"|"path"|"edgeless",
// "labels": [...], "children": [<node>, ...]}}; children use the same
// shape as the top-level "node" value.
TreeSpec parse_treespec(std::string_view text);
std::string serialize_treespec(const TreeSpec& spec);

struct SynthesisResult {
  GroundSet ground;
  Patchwork patchwork;
  AutonomyTree tree;
};

// Realizes the spec: the universe is the union of all labels (collected
// pre-order, a node's own labels before its children's); the family holds
// the empty set, every node's set, and the union of every connected
// subfamily of every cohort graph. The result is validated as a patchwork
// and returned with its derived autonomy tree.
SynthesisResult synthesize_patchwork(const TreeSpec& spec);

}  // namespace patchwork
