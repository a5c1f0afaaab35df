#include "patchwork/intervalgraph.hpp"

#include <algorithm>

#include "patchwork/errors.hpp"

namespace patchwork {

SetFamily with_singletons(const SetFamily& f) {
  std::vector<SubsetMask> sets;
  for (const auto& s : f.sets())
    if (!s.empty()) sets.push_back(s);
  for (std::size_t i = 0; i < f.ground().size(); ++i)
    sets.push_back(SubsetMask::single(f.ground().size(), i));
  return SetFamily(f.ground(), std::move(sets));
}

Graph intersection_graph(const SetFamily& f) {
  std::vector<std::string> labels;
  for (const auto& s : f.sets()) labels.push_back(f.ground().set_notation(s));
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (f.sets()[i].intersects(f.sets()[j])) g.add_edge(i, j);
  return g;
}

IntervalRep interval_representation(const std::vector<std::size_t>& order,
                                    const SetFamily& f) {
  const std::size_t n = f.ground().size();
  if (order.size() != n)
    throw UsageError("order length does not match the universe");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n)
      throw UsageError("order is not a permutation");
    pos[order[i]] = i;
  }

  IntervalRep rep;
  for (const auto& set : f.sets()) {
    const auto members = set.elements();
    if (members.empty()) continue;
    std::size_t lo = n, hi = 0;
    for (auto e : members) {
      lo = std::min(lo, pos[e]);
      hi = std::max(hi, pos[e]);
    }
    if (hi - lo + 1 != members.size())
      throw ContractViolation("interval_representation: set " +
                              f.ground().set_notation(set) +
                              " is not convex under the order");
    rep.intervals.push_back(IntervalRep::Entry{
        set, static_cast<long>(2 * (lo + 1)), static_cast<long>(2 * (hi + 1) + 1)});
  }
  return rep;
}

namespace {

// Backtracking over partial orders: placing w only needs the new triples
// (u, v, w). Exhausts the same space as scanning all permutations.
bool extend_order(const Graph& g, std::vector<std::size_t>& placed,
                  std::vector<bool>& used) {
  const std::size_t n = g.vertex_count();
  if (placed.size() == n) return true;
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (std::size_t u = 0; ok && u + 1 < placed.size(); ++u) {
      if (!g.has_edge(placed[u], w)) continue;
      for (std::size_t v = u + 1; v < placed.size(); ++v) {
        if (!g.has_edge(placed[u], placed[v])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    placed.push_back(w);
    used[w] = true;
    if (extend_order(g, placed, used)) return true;
    used[w] = false;
    placed.pop_back();
  }
  return false;
}

}  // namespace

bool is_interval_graph_oracle(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap)
    throw UsageError("interval-graph oracle refuses " + std::to_string(n) +
                     " vertices (cap " + std::to_string(cap) + ")");
  if (n <= 2) return true;
  std::vector<std::size_t> placed;
  std::vector<bool> used(n, false);
  return extend_order(g, placed, used);
}

bool orderable_via_intersection_graph(const SetFamily& f, std::size_t cap) {
  return is_interval_graph_oracle(intersection_graph(with_singletons(f)), cap);
}

}  // namespace patchwork
