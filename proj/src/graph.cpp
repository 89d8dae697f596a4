#include "bdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bdom {

FiniteGraph::FiniteGraph(std::string name, std::vector<VertexLabel> labels,
                         const std::vector<std::pair<int, int>>& edges)
    : name_(std::move(name)), labels_(std::move(labels)), adjacency_(labels_.size()) {
  const int n = vertex_count();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    if (std::find(nu.begin(), nu.end(), v) != nu.end()) continue;
    nu.push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    ++edge_count_;
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  const auto size = labels_.size();
  distances_.assign(size * size, kUnreachable);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    int* row = &distances_[static_cast<std::size_t>(s) * size];
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adjacency_[static_cast<std::size_t>(u)]) {
        if (row[w] != kUnreachable) continue;
        row[w] = row[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

FiniteGraph FiniteGraph::path(int k) {
  if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<VertexLabel> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    labels.push_back({i + 1});
    if (i + 1 < k) edges.emplace_back(i, i + 1);
  }
  return FiniteGraph("P" + std::to_string(k), std::move(labels), edges);
}

FiniteGraph FiniteGraph::cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<VertexLabel> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    labels.push_back({i});
    edges.emplace_back(i, (i + 1) % k);
  }
  return FiniteGraph("C" + std::to_string(k), std::move(labels), edges);
}

FiniteGraph FiniteGraph::box_product(const FiniteGraph& g, const FiniteGraph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  const auto id = [nh](int a, int b) { return a * nh + b; };
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh));
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < nh; ++b) {
      VertexLabel l = g.label(a);
      l.insert(l.end(), h.label(b).begin(), h.label(b).end());
      labels.push_back(std::move(l));
      for (int b2 : h.neighbors(b)) {
        if (b < b2) edges.emplace_back(id(a, b), id(a, b2));
      }
      for (int a2 : g.neighbors(a)) {
        if (a < a2) edges.emplace_back(id(a, b), id(a2, b));
      }
    }
  }
  return FiniteGraph(g.name() + "*" + h.name(), std::move(labels), edges);
}

std::optional<int> FiniteGraph::find_vertex(const VertexLabel& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

bool FiniteGraph::is_connected() const noexcept {
  return std::none_of(distances_.begin(), distances_.end(), [](int d) { return d == kUnreachable; });
}

std::string format_label(const VertexLabel& label) {
  std::string s = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(label[i]);
  }
  return s + ")";
}

}  // namespace bdom
