#pragma once

#include <cstddef>
#include <vector>

#include "patchwork/graph.hpp"
#include "patchwork/setcore.hpp"

// Cross-check route through intersection graphs: a family is orderable
// exactly when the intersection graph of its nonempty sets plus all
// singletons is an interval graph. The recognizer here is an exhaustive
// desk-scale oracle, not an efficient algorithm.

namespace patchwork {

// The family's nonempty sets together with every singleton of the
// universe, deduplicated.
SetFamily with_singletons(const SetFamily& f);

// One vertex per set, an edge wherever two sets meet.
Graph intersection_graph(const SetFamily& f);

// Integer interval per nonempty set: the hull of its elements' base
// intervals [2i, 2i+1], where i is the element's 1-based position in the
// order. Two convex sets meet exactly when their hulls do.
struct IntervalRep {
  struct Entry {
    SubsetMask set;
    long lo = 0;
    long hi = 0;
  };
  std::vector<Entry> intervals;  // canonical set order, empty sets skipped
};

// Every nonempty set of f must be convex under the order.
IntervalRep interval_representation(const std::vector<std::size_t>& order,
                                    const SetFamily& f);

// Exhaustive search for a vertex order where any edge {u,w} forces edges
// {u,v} for all v between them; such an order exists iff the graph is an
// interval graph. Factorial-time by design; refuses above the cap.
bool is_interval_graph_oracle(const Graph& g, std::size_t cap = 10);

// The intersection-graph route to orderability: equals decide(f) being
// orderable. Requires the augmented family to fit under the oracle cap.
bool orderable_via_intersection_graph(const SetFamily& f, std::size_t cap = 10);

}  // namespace patchwork
