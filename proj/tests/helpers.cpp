#include "helpers.hpp"

#include <algorithm>

#include "patchwork/structure.hpp"

namespace testutil {

using namespace patchwork;

GroundSet ground(std::vector<std::string> labels) {
  return GroundSet(std::move(labels));
}

SetFamily family(const GroundSet& g,
                 const std::vector<std::vector<std::string>>& sets) {
  std::vector<SubsetMask> masks;
  for (const auto& labels : sets) masks.push_back(g.subset(labels));
  return SetFamily(g, std::move(masks));
}

SetFamily triangle() {
  auto g = ground({"x", "y", "z"});
  return family(g, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
}

SetFamily chain() {
  auto g = ground({"1", "2", "3"});
  return family(g, {{"1"}, {"1", "2"}, {"1", "2", "3"}});
}

std::vector<SubsetMask> naive_closure(const SetFamily& f) {
  std::vector<SubsetMask> members;
  auto add = [&](const SubsetMask& m) {
    if (std::find(members.begin(), members.end(), m) != members.end())
      return false;
    members.push_back(m);
    return true;
  };
  add(SubsetMask(f.ground().size()));
  add(SubsetMask::full(f.ground().size()));
  for (const auto& s : f.sets()) add(s);

  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t sz = members.size();
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = i + 1; j < sz; ++j) {
        const SubsetMask a = members[i];
        const SubsetMask b = members[j];
        if (!overlap(a, b)) continue;
        changed |= add(a | b);
        changed |= add(a & b);
        changed |= add(a - b);
        changed |= add(b - a);
      }
    }
  }
  std::sort(members.begin(), members.end(), canonical_less);
  return members;
}

SetFamily random_family(std::mt19937& rng, const GroundSet& g,
                        std::size_t max_sets) {
  const std::size_t k = rng() % (max_sets + 1);
  std::vector<SubsetMask> sets;
  for (std::size_t s = 0; s < k; ++s) {
    SubsetMask m(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (rng() & 1) m.set(i);
    sets.push_back(std::move(m));
  }
  return SetFamily(g, std::move(sets));
}

namespace {

std::vector<std::size_t> random_composition(std::mt19937& rng,
                                            std::size_t total,
                                            std::size_t parts) {
  std::vector<std::size_t> out(parts, 1);
  for (std::size_t extra = total - parts; extra > 0; --extra)
    out[rng() % parts] += 1;
  return out;
}

TreeSpec::Node random_spec_node(std::mt19937& rng, std::size_t budget,
                                std::size_t& next_label) {
  std::vector<CohortCase> kinds = {CohortCase::edgeless};
  if (budget >= 2) kinds.push_back(CohortCase::path);
  if (budget >= 3) kinds.push_back(CohortCase::complete);
  const CohortCase kind = kinds[rng() % kinds.size()];

  TreeSpec::Node node;
  node.kind = kind;
  if (kind != CohortCase::edgeless) {
    const std::size_t lo = kind == CohortCase::path ? 2 : 3;
    const std::size_t hi = std::min<std::size_t>(budget, lo + 2);
    const std::size_t k = lo + (hi > lo ? rng() % (hi - lo + 1) : 0);
    for (auto part : random_composition(rng, budget, k))
      node.children.push_back(random_spec_node(rng, part, next_label));
    return node;
  }

  // Edgeless: pick a child count, then labels. Fewer than three children
  // requires a label so the node cannot collapse into its cohort.
  std::vector<std::size_t> feasible;
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::size_t min_labels = k <= 2 ? 1 : 0;
    if (k + min_labels <= budget) feasible.push_back(k);
  }
  const std::size_t k = feasible[rng() % feasible.size()];
  const std::size_t min_labels = k <= 2 ? 1 : 0;
  const std::size_t max_labels = budget - k;
  const std::size_t m =
      min_labels +
      (max_labels > min_labels ? rng() % (max_labels - min_labels + 1) : 0);
  for (std::size_t i = 0; i < m; ++i)
    node.labels.push_back("e" + std::to_string(next_label++));
  if (k > 0)
    for (auto part : random_composition(rng, budget - m, k))
      node.children.push_back(random_spec_node(rng, part, next_label));
  return node;
}

}  // namespace

TreeSpec random_tree_spec(std::mt19937& rng, std::size_t labels) {
  std::size_t next_label = 1;
  return TreeSpec{random_spec_node(rng, labels, next_label)};
}

namespace {

SubsetMask spec_mask(const TreeSpec::Node& n, const GroundSet& g) {
  SubsetMask m = g.subset(n.labels);
  for (const auto& c : n.children) m |= spec_mask(c, g);
  return m;
}

std::size_t spec_node_count(const TreeSpec::Node& n) {
  std::size_t total = 1;
  for (const auto& c : n.children) total += spec_node_count(c);
  return total;
}

bool spec_node_matches(const TreeSpec::Node& sn, const SynthesisResult& r,
                       std::size_t node, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto& nd = r.tree.nodes[node];
  const auto& g = r.ground;
  const auto here = g.set_notation(nd.set);
  if (!(nd.set == spec_mask(sn, g))) return fail("mask mismatch at " + here);
  if (nd.label.kind != sn.kind) return fail("kind mismatch at " + here);
  if (!(nd.non_cohort == g.subset(sn.labels)))
    return fail("non-cohort mismatch at " + here);
  if (nd.cohort.size() != sn.children.size())
    return fail("child count mismatch at " + here);

  for (const auto& sc : sn.children) {
    const SubsetMask cm = spec_mask(sc, g);
    bool matched = false;
    for (auto c : nd.cohort) {
      if (r.tree.nodes[c].set == cm) {
        if (!spec_node_matches(sc, r, c, why)) return false;
        matched = true;
        break;
      }
    }
    if (!matched) return fail("missing child " + g.set_notation(cm));
  }

  if (sn.kind == CohortCase::path) {
    std::vector<SubsetMask> stored;
    for (auto c : nd.label.path_order) stored.push_back(r.tree.nodes[c].set);
    std::vector<SubsetMask> expected;
    for (const auto& sc : sn.children) expected.push_back(spec_mask(sc, g));
    auto reversed = expected;
    std::reverse(reversed.begin(), reversed.end());
    if (!(stored == expected || stored == reversed))
      return fail("path order mismatch at " + here);
  }
  return true;
}

}  // namespace

bool tree_matches_spec(const SynthesisResult& result, const TreeSpec& spec,
                       std::string* why) {
  if (result.tree.nodes.size() != spec_node_count(spec.root)) {
    if (why) *why = "node count mismatch";
    return false;
  }
  return spec_node_matches(spec.root, result, result.tree.root, why);
}

bool valid_triple(const SetFamily& f, const AdjacentTriple& t,
                  std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Patchwork p = close(f);
  const SubsetMask* masks[3] = {&t.a, &t.b, &t.c};
  for (const auto* m : masks) {
    if (m->empty()) return fail("triple member is empty");
    if (!p.contains(*m)) return fail("triple member is not in the closure");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (masks[i]->intersects(*masks[j]))
        return fail("triple members are not pairwise disjoint");
      if (!p.contains(*masks[i] | *masks[j]))
        return fail("a pairwise union is missing from the closure");
    }
  }
  return true;
}

namespace {

// Connected components of an adjacency relation on cohort positions.
std::vector<std::vector<std::size_t>> components(
    const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        if (!seen[u] && adj[v][u]) {
          seen[u] = true;
          comp.push_back(u);
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::string> structure_law_violations(const Patchwork& p) {
  std::vector<std::string> bad;
  const auto& g = p.ground();
  auto note = [&](const std::string& msg) { bad.push_back(msg); };

  const auto aut = autonomous_sets(p);

  // Laminarity: disjoint or nested.
  for (std::size_t i = 0; i < aut.size(); ++i) {
    for (std::size_t j = i + 1; j < aut.size(); ++j) {
      const bool ok = !aut[i].intersects(aut[j]) ||
                      aut[i].is_subset_of(aut[j]) ||
                      aut[j].is_subset_of(aut[i]);
      if (!ok)
        note("laminarity fails for " + g.set_notation(aut[i]) + " and " +
             g.set_notation(aut[j]));
    }
  }

  const AutonomyTree tree = autonomy_tree(p);

  // Decomposition identity and the forward connectivity direction.
  for (const auto& a : p.family().sets()) {
    if (a.empty()) continue;
    const auto parts = maximal_autonomous_decomposition(p, a);
    SubsetMask covered(g.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (parts[i].intersects(parts[j]))
          note("decomposition parts of " + g.set_notation(a) + " intersect");
      covered |= parts[i];
    }
    if (!(covered == a))
      note("decomposition of " + g.set_notation(a) + " does not cover it");

    if (parts.size() >= 2) {
      // Non-autonomous member: all parts must sit in one cohort and the
      // induced adjacency subgraph must be connected.
      std::vector<std::vector<bool>> adj(parts.size(),
                                         std::vector<bool>(parts.size()));
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          adj[i][j] = adj[j][i] = adjacent(p, parts[i], parts[j]);
      if (components(adj).size() != 1)
        note("decomposition of " + g.set_notation(a) + " is not connected");

      std::optional<std::size_t> parent_node;
      for (std::size_t n = 0; n < tree.nodes.size(); ++n)
        if (tree.nodes[n].set == parts[0])
          parent_node = tree.nodes[n].parent;
      if (!parent_node) {
        note("decomposition part is not a tree node");
      } else {
        for (const auto& part : parts) {
          bool in_cohort = false;
          for (auto c : tree.nodes[*parent_node].cohort)
            if (tree.nodes[c].set == part) in_cohort = true;
          if (!in_cohort)
            note("decomposition of " + g.set_notation(a) +
                 " crosses cohorts");
        }
      }
    }
  }

  // Per-cohort checks.
  for (std::size_t n = 0; n < tree.nodes.size(); ++n) {
    const auto& nd = tree.nodes[n];
    const std::size_t k = nd.cohort.size();
    const auto here = g.set_notation(nd.set);

    std::vector<SubsetMask> cohort;
    for (auto c : nd.cohort) cohort.push_back(tree.nodes[c].set);
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (adjacent(p, cohort[i], cohort[j])) {
          adj[i][j] = adj[j][i] = true;
          ++edges;
        }

    // Backward connectivity: connected subfamilies are members; proper
    // disconnected ones are not.
    if (k <= 16) {
      for (std::size_t bits = 1; bits < (std::size_t{1} << k); ++bits) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < k; ++i)
          if (bits & (std::size_t{1} << i)) chosen.push_back(i);
        std::vector<std::vector<bool>> sub(chosen.size(),
                                           std::vector<bool>(chosen.size()));
        for (std::size_t i = 0; i < chosen.size(); ++i)
          for (std::size_t j = 0; j < chosen.size(); ++j)
            sub[i][j] = adj[chosen[i]][chosen[j]];
        SubsetMask u(g.size());
        for (auto i : chosen) u |= cohort[i];
        const bool connected = components(sub).size() == 1;
        if (connected && !p.contains(u))
          note("connected subfamily union " + g.set_notation(u) +
               " missing under " + here);
        if (!connected && !(u == nd.set) && p.contains(u))
          note("disconnected subfamily union " + g.set_notation(u) +
               " is a member under " + here);
      }
    }

    // Degree/cycle laws: branching or a cycle forces the component to be
    // a clique.
    for (const auto& comp : components(adj)) {
      std::size_t comp_edges = 0;
      bool branching = false;
      for (auto v : comp) {
        std::size_t d = 0;
        for (auto u : comp)
          if (adj[v][u]) ++d;
        if (d >= 3) branching = true;
        comp_edges += d;
      }
      comp_edges /= 2;
      const bool has_cycle = comp.size() >= 3 && comp_edges >= comp.size();
      if (branching || has_cycle) {
        for (std::size_t i = 0; i < comp.size(); ++i)
          for (std::size_t j = i + 1; j < comp.size(); ++j)
            if (!adj[comp[i]][comp[j]])
              note("branching/cycle component under " + here +
                   " is not a clique");
      }
    }

    // Classification totality: the label must be the unique applicable
    // case, with its side conditions.
    SubsetMask cohort_union(g.size());
    for (const auto& m : cohort) cohort_union |= m;
    const bool covers = cohort_union == nd.set;
    const bool complete_pred =
        k >= 3 && edges == k * (k - 1) / 2 && covers;
    const bool edgeless_pred = edges == 0;
    bool path_pred = false;
    if (k >= 2 && edges == k - 1 && covers) {
      std::size_t endpoints = 0;
      bool branching = false;
      for (std::size_t v = 0; v < k; ++v) {
        std::size_t d = 0;
        for (std::size_t u = 0; u < k; ++u)
          if (adj[v][u]) ++d;
        if (d == 1) ++endpoints;
        if (d > 2) branching = true;
      }
      path_pred = !branching && endpoints == 2 &&
                  components(adj).size() == 1;
    }
    const int applicable = (complete_pred ? 1 : 0) + (path_pred ? 1 : 0) +
                           (edgeless_pred ? 1 : 0);
    if (applicable != 1)
      note("cohort under " + here + " fits " + std::to_string(applicable) +
           " cases");
    const CaseLabel recomputed = classify_node(p, tree, n);
    if (!same_case(recomputed, nd.label))
      note("stored label differs from reclassification under " + here);
    if (complete_pred && nd.label.kind != CohortCase::complete)
      note("complete cohort mislabeled under " + here);
    if (path_pred && nd.label.kind != CohortCase::path)
      note("path cohort mislabeled under " + here);
    if (edgeless_pred && nd.label.kind != CohortCase::edgeless)
      note("edgeless cohort mislabeled under " + here);
    if (nd.label.kind == CohortCase::path) {
      const auto& order = nd.label.path_order;
      for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (!adjacent(p, tree.nodes[order[i]].set, tree.nodes[order[i + 1]].set))
          note("stored path order breaks adjacency under " + here);
    }
    if (nd.label.kind != CohortCase::edgeless && !nd.non_cohort.empty())
      note("edged cohort leaves non-cohort elements under " + here);
  }

  // Every element belongs to exactly one node's non-cohort set.
  SubsetMask covered(g.size());
  for (const auto& nd : tree.nodes) {
    if (covered.intersects(nd.non_cohort))
      note("an element is a non-cohort element of two nodes");
    covered |= nd.non_cohort;
  }
  if (!covered.is_full()) note("an element is a non-cohort element of no node");

  return bad;
}

}  // namespace testutil
