#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bdom {

using VertexLabel = std::vector<int>;

/// Small simple undirected graph with cached all-pairs BFS distances.
///
/// Vertices carry coordinate labels: P_k uses 1..k, C_k uses 0..k-1, and a box
/// product concatenates its factors' labels. Vertex ids follow the
/// lexicographic order of labels for every graph the grammar can build.
class FiniteGraph {
 public:
  static constexpr int kUnreachable = -1;

  FiniteGraph(std::string name, std::vector<VertexLabel> labels, const std::vector<std::pair<int, int>>& edges);

  static FiniteGraph path(int k);
  static FiniteGraph cycle(int k);
  static FiniteGraph box_product(const FiniteGraph& g, const FiniteGraph& h);

  const std::string& name() const noexcept { return name_; }
  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  const VertexLabel& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<int> find_vertex(const VertexLabel& label) const;

  /// Graph distance, or kUnreachable across components.
  int distance(int u, int v) const {
    return distances_[static_cast<std::size_t>(u) * labels_.size() + static_cast<std::size_t>(v)];
  }
  bool is_connected() const noexcept;

 private:
  std::string name_;
  std::vector<VertexLabel> labels_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> distances_;
  std::size_t edge_count_ = 0;
};

std::string format_label(const VertexLabel& label);

inline constexpr std::size_t kDefaultMaxVertices = 4096;

/// Builds a graph from an expression over P<k> (path), C<k> (cycle), the
/// left-associative box product `*`, and parentheses, e.g. "P5*P5" or "(C4*C4)".
/// Throws ParseError with the offending offset on malformed input, C<k> with
/// k < 3, P<k> with k < 1, or a product larger than max_vertices.
FiniteGraph parse_graph_expr(std::string_view text, std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace bdom
