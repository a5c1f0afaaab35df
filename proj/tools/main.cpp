// Command-line front end: reads instance or tree-spec JSON from a file (or
// stdin when the file is omitted), writes JSON or DOT to stdout, and keeps
// all diagnostics on stderr.
//
// Exit codes: 0 success / orderable, 3 not orderable, 1 input error,
// 2 internal contract violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "patchwork/closure.hpp"
#include "patchwork/intervalgraph.hpp"
#include "patchwork/orderability.hpp"
#include "patchwork/setcore.hpp"
#include "patchwork/structure.hpp"
#include "patchwork/testkit.hpp"

namespace {

using nlohmann::ordered_json;
using namespace patchwork;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNotOrderable = 3;

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json family_json(const SetFamily& f) {
  ordered_json j;
  j["omega"] = f.ground().labels();
  auto sets = ordered_json::array();
  for (const auto& m : f.sets()) sets.push_back(f.ground().mask_labels(m));
  j["sets"] = std::move(sets);
  return j;
}

ordered_json labels_json(const GroundSet& g, const SubsetMask& m) {
  return ordered_json(g.mask_labels(m));
}

ordered_json tree_node_json(const GroundSet& g, const AutonomyTree& tree,
                            std::size_t node) {
  const auto& nd = tree.nodes[node];
  ordered_json j;
  j["set"] = labels_json(g, nd.set);
  j["case"] = std::string(to_string(nd.label.kind));
  j["non_cohort"] = labels_json(g, nd.non_cohort);
  auto children = ordered_json::array();
  const auto& order = nd.label.kind == CohortCase::path ? nd.label.path_order
                                                        : nd.cohort;
  for (auto c : order) children.push_back(tree_node_json(g, tree, c));
  j["children"] = std::move(children);
  return j;
}

ordered_json certificate_json(const GroundSet& g, const Certificate& cert) {
  ordered_json j;
  if (const auto* triple = std::get_if<AdjacentTriple>(&cert)) {
    j["kind"] = "adjacent_triple";
    auto sets = ordered_json::array();
    sets.push_back(labels_json(g, triple->a));
    sets.push_back(labels_json(g, triple->b));
    sets.push_back(labels_json(g, triple->c));
    j["sets"] = std::move(sets);
  } else {
    const auto& exceeded = std::get<ClosureBoundExceeded>(cert);
    j["kind"] = "closure_bound_exceeded";
    j["bound"] = exceeded.bound;
    j["reached"] = exceeded.reached;
  }
  return j;
}

int cmd_close(const std::string& path, std::optional<std::size_t> bound) {
  SetFamily f = parse_family(read_input(path));
  ordered_json j;
  if (bound) {
    auto outcome = close_bounded(f, *bound);
    if (outcome.is_closed()) {
      const auto& p = outcome.patchwork();
      j["size"] = p.size();
      j["sets"] = family_json(p.family())["sets"];
    } else {
      j["size"] = outcome.exceedance().reached;
      j["exceeded"] = true;
      j["bound"] = outcome.exceedance().bound;
    }
  } else {
    auto p = close(f);
    j["size"] = p.size();
    j["sets"] = family_json(p.family())["sets"];
  }
  emit(j);
  return kExitOk;
}

int cmd_decide(const std::string& path, bool find_triple, std::size_t cap,
               bool no_quotient) {
  SetFamily f = parse_family(read_input(path));
  DecideOptions opts;
  opts.use_quotient = !no_quotient;
  opts.find_triple = find_triple;
  opts.closure_cap = cap;
  auto res = decide(f, opts);

  ordered_json j;
  j["orderable"] = res.verdict.orderable();
  if (res.verdict.orderable()) {
    auto order = ordered_json::array();
    for (auto e : *res.verdict.order) order.push_back(f.ground().label(e));
    j["order"] = std::move(order);
    j["certificate"] = nullptr;
  } else {
    j["order"] = nullptr;
    j["certificate"] = certificate_json(f.ground(), *res.verdict.certificate);
  }
  emit(j);
  return res.verdict.orderable() ? kExitOk : kExitNotOrderable;
}

int cmd_analyze(const std::string& path) {
  SetFamily f = parse_family(read_input(path));
  auto p = close(f);
  ordered_json j;
  j["closure_size"] = p.size();
  if (p.ground().size() == 0) {
    j["tree"] = nullptr;
    j["case_labels"] = ordered_json::array();
  } else {
    auto tree = autonomy_tree(p);
    j["tree"] = tree_node_json(p.ground(), tree, tree.root);
    auto cases = ordered_json::array();
    for (const auto& nd : tree.nodes) {
      ordered_json c;
      c["set"] = labels_json(p.ground(), nd.set);
      c["case"] = std::string(to_string(nd.label.kind));
      cases.push_back(std::move(c));
    }
    j["case_labels"] = std::move(cases);
  }
  emit(j);
  return kExitOk;
}

int cmd_synth(const std::string& path) {
  TreeSpec spec = parse_treespec(read_input(path));
  auto result = synthesize_patchwork(spec);
  emit(family_json(result.patchwork.family()));
  return kExitOk;
}

int cmd_graph(const std::string& path, const std::string& format) {
  SetFamily f = parse_family(read_input(path));
  SetFamily augmented = with_singletons(f);
  Graph g = intersection_graph(augmented);
  if (format == "dot") {
    std::cout << to_dot(g);
  } else {
    ordered_json j;
    auto vertices = ordered_json::array();
    for (const auto& m : augmented.sets())
      vertices.push_back(labels_json(augmented.ground(), m));
    j["vertices"] = std::move(vertices);
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.edges())
      edges.push_back(ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    emit(j);
  }
  return kExitOk;
}

int cmd_extremal(const std::string& kind, unsigned n) {
  SetFamily f = kind == "powerset" ? powerset_example(n) : interval_example(n);
  emit(family_json(f));
  return kExitOk;
}

int cmd_oracle(const std::string& path) {
  SetFamily f = parse_family(read_input(path));
  auto res = brute_force_decide(f);
  ordered_json j;
  j["orderable"] = res.orderable;
  if (res.order) {
    auto order = ordered_json::array();
    for (auto e : *res.order) order.push_back(f.ground().label(e));
    j["order"] = std::move(order);
  } else {
    j["order"] = nullptr;
  }
  emit(j);
  return res.orderable ? kExitOk : kExitNotOrderable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "patchwork: closure, structure and convex-orderability analysis of "
      "finite set families"};
  app.require_subcommand(1);

  std::string in_path;
  std::optional<std::size_t> bound;
  auto* close_cmd =
      app.add_subcommand("close", "Close a family under the partial operations");
  close_cmd->add_option("instance", in_path, "Instance JSON (stdin if omitted)");
  close_cmd->add_option("--bound", bound, "Stop once the family exceeds this size");

  std::string decide_path;
  bool find_triple = false, no_quotient = false;
  std::size_t cap = DecideOptions{}.closure_cap;
  auto* decide_cmd = app.add_subcommand(
      "decide", "Decide whether an ordering makes every set convex");
  decide_cmd->add_option("instance", decide_path, "Instance JSON (stdin if omitted)");
  decide_cmd->add_flag("--find-triple", find_triple,
                       "On bound exceedance, keep closing to exhibit a triple");
  decide_cmd->add_option("--cap", cap, "Closure size cap for --find-triple");
  decide_cmd->add_flag("--no-quotient", no_quotient,
                       "Skip the membership-signature reduction");

  std::string analyze_path;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Emit the closure's autonomy tree");
  analyze_cmd->add_option("instance", analyze_path, "Instance JSON (stdin if omitted)");

  std::string synth_path;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Build the patchwork described by a tree spec");
  synth_cmd->add_option("treespec", synth_path, "Tree-spec JSON (stdin if omitted)");

  std::string graph_path, format = "dot";
  auto* graph_cmd = app.add_subcommand(
      "graph", "Intersection graph of the family plus all singletons");
  graph_cmd->add_option("instance", graph_path, "Instance JSON (stdin if omitted)");
  graph_cmd->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  std::string kind;
  unsigned extremal_n = 0;
  auto* extremal_cmd =
      app.add_subcommand("extremal", "Emit a bound-attaining example instance");
  extremal_cmd->add_option("--kind", kind, "powerset or interval")
      ->required()
      ->check(CLI::IsMember({"powerset", "interval"}));
  extremal_cmd->add_option("--n", extremal_n, "Number of generator sets")
      ->required();

  std::string oracle_path;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Decide by trying every ordering (small universes only)");
  oracle_cmd->add_option("instance", oracle_path, "Instance JSON (stdin if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (close_cmd->parsed()) return cmd_close(in_path, bound);
    if (decide_cmd->parsed())
      return cmd_decide(decide_path, find_triple, cap, no_quotient);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_path);
    if (synth_cmd->parsed()) return cmd_synth(synth_path);
    if (graph_cmd->parsed()) return cmd_graph(graph_path, format);
    if (extremal_cmd->parsed()) return cmd_extremal(kind, extremal_n);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_path);
  } catch (const ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotAPatchworkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
