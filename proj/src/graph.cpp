#include "patchwork/graph.hpp"

#include "patchwork/errors.hpp"

namespace patchwork {

Graph::Graph(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      adj_(labels_.size(), std::vector<bool>(labels_.size(), false)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw UsageError("graph vertex out of range");
  if (u == v) throw UsageError("self-loops are not allowed");
  adj_[u][v] = true;
  adj_[v][u] = true;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= vertex_count() || v >= vertex_count())
    throw UsageError("graph vertex out of range");
  return adj_[u][v];
}

std::size_t Graph::degree(std::size_t v) const {
  if (v >= vertex_count()) throw UsageError("graph vertex out of range");
  std::size_t d = 0;
  for (bool b : adj_[v]) d += b ? 1 : 0;
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = u + 1; v < vertex_count(); ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + dot_escape(g.label(v)) +
           "\"];\n";
  for (const auto& [u, v] : g.edges())
    out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace patchwork
