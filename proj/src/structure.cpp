#include "patchwork/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"

namespace patchwork {

std::string_view to_string(CohortCase c) {
  switch (c) {
    case CohortCase::complete:
      return "complete";
    case CohortCase::path:
      return "path";
    case CohortCase::edgeless:
      return "edgeless";
  }
  return "?";
}

std::optional<CohortCase> cohort_case_from_string(std::string_view s) {
  if (s == "complete") return CohortCase::complete;
  if (s == "path") return CohortCase::path;
  if (s == "edgeless") return CohortCase::edgeless;
  return std::nullopt;
}

bool same_case(const CaseLabel& a, const CaseLabel& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != CohortCase::path) return true;
  if (a.path_order == b.path_order) return true;
  auto reversed = b.path_order;
  std::reverse(reversed.begin(), reversed.end());
  return a.path_order == reversed;
}

std::vector<SubsetMask> autonomous_sets(const Patchwork& p) {
  const auto& sets = p.family().sets();
  std::vector<SubsetMask> out;
  for (const auto& a : sets) {
    if (a.empty()) continue;
    bool autonomous = true;
    for (const auto& b : sets) {
      if (overlap(a, b)) {
        autonomous = false;
        break;
      }
    }
    if (autonomous) out.push_back(a);
  }
  return out;  // canonical: the family is canonically sorted
}

bool adjacent(const Patchwork& p, const SubsetMask& a, const SubsetMask& b) {
  if (!p.contains(a) || !p.contains(b))
    throw UsageError("adjacent: both masks must be members of the patchwork");
  if (a.empty() || b.empty()) return false;
  if (a.intersects(b)) return false;
  return p.contains(a | b);
}

Graph cohort_adjacency(const Patchwork& p, const AutonomyTree& tree,
                       std::size_t node) {
  if (node >= tree.nodes.size()) throw UsageError("node id out of range");
  const auto& nd = tree.nodes[node];
  std::vector<std::string> labels;
  for (auto c : nd.cohort)
    labels.push_back(p.ground().set_notation(tree.nodes[c].set));
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < nd.cohort.size(); ++i)
    for (std::size_t j = i + 1; j < nd.cohort.size(); ++j)
      if (adjacent(p, tree.nodes[nd.cohort[i]].set,
                   tree.nodes[nd.cohort[j]].set))
        g.add_edge(i, j);
  return g;
}

CaseLabel classify_node(const Patchwork& p, const AutonomyTree& tree,
                        std::size_t node) {
  if (node >= tree.nodes.size()) throw UsageError("node id out of range");
  const auto& nd = tree.nodes[node];
  const std::size_t k = nd.cohort.size();
  const Graph g = cohort_adjacency(p, tree, node);
  const std::size_t e = g.edge_count();
  if (e == 0) return CaseLabel{CohortCase::edgeless, {}};

  // An edged cohort graph forces the cohort to cover the whole node.
  SubsetMask cohort_union(p.ground().size());
  for (auto c : nd.cohort) cohort_union |= tree.nodes[c].set;
  const auto where = p.ground().set_notation(nd.set);
  if (!(cohort_union == nd.set))
    throw NotAPatchworkError("the cohort under " + where +
                             " has adjacent members but does not cover it");

  if (k >= 3 && e == k * (k - 1) / 2)
    return CaseLabel{CohortCase::complete, {}};

  // Path: k-1 edges, max degree 2, and a walk from an endpoint covers
  // every vertex.
  if (e != k - 1)
    throw NotAPatchworkError("the cohort adjacency graph under " + where +
                             " is neither complete, a path, nor edgeless");
  std::vector<std::size_t> endpoints;
  for (std::size_t v = 0; v < k; ++v) {
    const auto d = g.degree(v);
    if (d > 2)
      throw NotAPatchworkError("a member of the cohort under " + where +
                               " is adjacent to more than two others");
    if (d == 1) endpoints.push_back(v);
  }
  if (endpoints.size() != 2)
    throw NotAPatchworkError("the cohort adjacency graph under " + where +
                             " is neither complete, a path, nor edgeless");

  std::size_t start = endpoints[0];
  if (canonical_less(tree.nodes[nd.cohort[endpoints[1]]].set,
                     tree.nodes[nd.cohort[endpoints[0]]].set))
    start = endpoints[1];

  std::vector<std::size_t> order;  // vertex positions within the cohort
  std::vector<bool> seen(k, false);
  std::size_t cur = start;
  for (;;) {
    order.push_back(cur);
    seen[cur] = true;
    std::optional<std::size_t> next;
    for (std::size_t v = 0; v < k; ++v)
      if (!seen[v] && g.has_edge(cur, v)) {
        next = v;
        break;
      }
    if (!next) break;
    cur = *next;
  }
  if (order.size() != k)
    throw NotAPatchworkError("the cohort adjacency graph under " + where +
                             " is neither complete, a path, nor edgeless");

  CaseLabel label{CohortCase::path, {}};
  for (auto v : order) label.path_order.push_back(nd.cohort[v]);
  return label;
}

AutonomyTree autonomy_tree(const Patchwork& p) {
  if (p.ground().size() == 0)
    throw UsageError("autonomy tree is undefined for an empty universe");

  const auto aut = autonomous_sets(p);
  AutonomyTree tree;
  tree.nodes.resize(aut.size());
  for (std::size_t i = 0; i < aut.size(); ++i) tree.nodes[i].set = aut[i];

  // Canonical order is ascending cardinality, so the least proper superset
  // of node i is the first superset after it.
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < aut.size(); ++i) {
    std::optional<std::size_t> parent;
    for (std::size_t j = i + 1; j < aut.size(); ++j) {
      if (aut[i].is_subset_of(aut[j]) && !(aut[i] == aut[j])) {
        parent = j;
        break;
      }
    }
    tree.nodes[i].parent = parent;
    if (parent) {
      tree.nodes[*parent].cohort.push_back(i);
    } else {
      if (root) throw ContractViolation("autonomy tree has two roots");
      root = i;
    }
  }
  if (!root) throw ContractViolation("autonomy tree has no root");
  tree.root = *root;

  for (auto& nd : tree.nodes) {
    SubsetMask covered(p.ground().size());
    for (auto c : nd.cohort) covered |= tree.nodes[c].set;
    nd.non_cohort = nd.set - covered;
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    tree.nodes[i].label = classify_node(p, tree, i);
  return tree;
}

std::vector<SubsetMask> maximal_autonomous_decomposition(const Patchwork& p,
                                                         const SubsetMask& a) {
  if (!p.contains(a))
    throw UsageError("decomposition: mask is not a member of the patchwork");
  if (a.empty()) throw UsageError("decomposition: mask must be nonempty");

  const auto aut = autonomous_sets(p);
  std::vector<SubsetMask> inside;
  for (const auto& s : aut)
    if (s.is_subset_of(a)) inside.push_back(s);

  std::vector<SubsetMask> maximal;
  for (const auto& s : inside) {
    bool is_max = true;
    for (const auto& t : inside)
      if (!(s == t) && s.is_subset_of(t)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(s);
  }
  return maximal;
}

// ---------------------------------------------------------------------------
// Tree specs and synthesis

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_spec(const std::string& detail) {
  throw ParseError("invalid tree spec: " + detail);
}

TreeSpec::Node parse_spec_node(const ordered_json& j) {
  if (!j.is_object()) bad_spec("each node must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "kind" && key != "labels" && key != "children")
      bad_spec("unknown key \"" + key + "\"");
  }
  if (!j.contains("kind") || !j["kind"].is_string())
    bad_spec("node is missing a \"kind\" string");
  auto kind = cohort_case_from_string(j["kind"].get<std::string>());
  if (!kind)
    bad_spec("kind must be \"complete\", \"path\" or \"edgeless\"");

  TreeSpec::Node node;
  node.kind = *kind;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) bad_spec("\"labels\" must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) bad_spec("labels must be strings");
      node.labels.push_back(l.get<std::string>());
    }
  }
  if (j.contains("children")) {
    if (!j["children"].is_array()) bad_spec("\"children\" must be an array");
    for (const auto& c : j["children"]) node.children.push_back(parse_spec_node(c));
  }
  return node;
}

ordered_json spec_node_json(const TreeSpec::Node& n) {
  ordered_json j;
  j["kind"] = to_string(n.kind);
  j["labels"] = n.labels;
  auto children = ordered_json::array();
  for (const auto& c : n.children) children.push_back(spec_node_json(c));
  j["children"] = std::move(children);
  return j;
}

void validate_spec_node(const TreeSpec::Node& n,
                        std::unordered_set<std::string>& seen_labels) {
  switch (n.kind) {
    case CohortCase::complete:
      if (n.children.size() < 3)
        throw UsageError("a complete node needs at least 3 children");
      break;
    case CohortCase::path:
      if (n.children.size() < 2)
        throw UsageError("a path node needs at least 2 children");
      break;
    case CohortCase::edgeless:
      if (n.children.size() <= 1 && n.labels.empty())
        throw UsageError(
            "an edgeless node with at most one child needs a label");
      break;
  }
  if (n.kind != CohortCase::edgeless && !n.labels.empty())
    throw UsageError("only edgeless nodes may carry labels");
  for (const auto& l : n.labels)
    if (!seen_labels.insert(l).second)
      throw UsageError("duplicate label across the tree: \"" + l + "\"");
  for (const auto& c : n.children) validate_spec_node(c, seen_labels);
}

void collect_labels(const TreeSpec::Node& n, std::vector<std::string>& out) {
  for (const auto& l : n.labels) out.push_back(l);
  for (const auto& c : n.children) collect_labels(c, out);
}

SubsetMask node_mask(const TreeSpec::Node& n, const GroundSet& ground,
                     std::vector<SubsetMask>& child_masks_out) {
  SubsetMask m = ground.subset(n.labels);
  child_masks_out.clear();
  for (const auto& c : n.children) {
    std::vector<SubsetMask> grandchildren;
    SubsetMask cm = node_mask(c, ground, grandchildren);
    m |= cm;
    child_masks_out.push_back(std::move(cm));
  }
  return m;
}

void emit_members(const TreeSpec::Node& n, const GroundSet& ground,
                  std::vector<SubsetMask>& members) {
  std::vector<SubsetMask> children;
  SubsetMask self = node_mask(n, ground, children);
  members.push_back(self);

  const std::size_t k = children.size();
  switch (n.kind) {
    case CohortCase::complete: {
      if (k > 20)
        throw UsageError("complete cohort too large to enumerate");
      // Every nonempty subfamily of a complete cohort is connected.
      for (std::size_t bits = 1; bits < (std::size_t{1} << k); ++bits) {
        SubsetMask u(ground.size());
        for (std::size_t i = 0; i < k; ++i)
          if (bits & (std::size_t{1} << i)) u |= children[i];
        members.push_back(u);
      }
      break;
    }
    case CohortCase::path: {
      for (std::size_t i = 0; i < k; ++i) {
        SubsetMask u(ground.size());
        for (std::size_t j = i; j < k; ++j) {
          u |= children[j];
          members.push_back(u);
        }
      }
      break;
    }
    case CohortCase::edgeless:
      break;  // only the singletons, added by the recursive calls
  }
  for (const auto& c : n.children) emit_members(c, ground, members);
}

}  // namespace

TreeSpec parse_treespec(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("node"))
    bad_spec("top level must be an object with a \"node\" key");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "node") bad_spec("unknown key \"" + key + "\"");
  }
  return TreeSpec{parse_spec_node(j["node"])};
}

std::string serialize_treespec(const TreeSpec& spec) {
  ordered_json j;
  j["node"] = spec_node_json(spec.root);
  return j.dump();
}

SynthesisResult synthesize_patchwork(const TreeSpec& spec) {
  std::unordered_set<std::string> seen;
  validate_spec_node(spec.root, seen);

  std::vector<std::string> labels;
  collect_labels(spec.root, labels);
  GroundSet ground(std::move(labels));

  std::vector<SubsetMask> members;
  members.push_back(ground.empty_mask());
  members.push_back(ground.full_mask());
  emit_members(spec.root, ground, members);

  SetFamily family(ground, std::move(members));
  const std::size_t generators = family.size();  // self-generated
  Patchwork p = Patchwork::from_closed_family(std::move(family), generators);
  AutonomyTree tree = autonomy_tree(p);
  return SynthesisResult{std::move(ground), std::move(p), std::move(tree)};
}

}  // namespace patchwork
