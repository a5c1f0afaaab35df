#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace patchwork {

// Finite undirected graph with labeled vertices; no self-loops.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // u < v

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> adj_;
};

// Deterministic DOT output, vertices in index order.
std::string to_dot(const Graph& g);

}  // namespace patchwork
