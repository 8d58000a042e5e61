#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "onep/drawing.hpp"

namespace onep {

/// Abstract simple graph on vertices 0..n-1: no loops, no repeated edges.
class UndirectedSimpleGraph {
 public:
  UndirectedSimpleGraph() = default;

  explicit UndirectedSimpleGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  UndirectedSimpleGraph(std::size_t vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& edges)
      : adjacency_(vertex_count) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  /// Adds {u, v}; returns false when it is a loop or already present.
  bool add_edge(VertexId u, VertexId v) {
    if (u >= adjacency_.size() || v >= adjacency_.size()) {
      throw std::out_of_range("edge endpoint outside vertex range");
    }
    if (u == v) return false;
    const auto key = std::minmax(u, v);
    if (!edges_.insert({key.first, key.second}).second) return false;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    std::sort(adjacency_[u].begin(), adjacency_[u].end());
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
    return true;
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::set<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const {
    const auto key = std::minmax(u, v);
    return edges_.count({key.first, key.second}) != 0;
  }

  /// Component label per vertex, ignoring vertices flagged in `removed`.
  /// Removed vertices get label -1. Labels are dense from 0.
  [[nodiscard]] std::vector<int> components(const std::vector<char>& removed = {}) const {
    const std::size_t n = vertex_count();
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
      if (label[s] != -1 || (!removed.empty() && removed[s])) continue;
      label[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const VertexId w : adjacency_[v]) {
          if (label[w] == -1 && (removed.empty() || !removed[w])) {
            label[w] = next;
            stack.push_back(w);
          }
        }
      }
      ++next;
    }
    return label;
  }

  [[nodiscard]] bool connected() const {
    if (vertex_count() == 0) return true;
    const auto label = components();
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
  }

  friend bool operator==(const UndirectedSimpleGraph& a, const UndirectedSimpleGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::set<std::pair<VertexId, VertexId>> edges_;
};

/// Graph underlying a drawing: parallel edges collapse, loops disappear.
inline UndirectedSimpleGraph underlying_graph(const CombinatorialDrawing& d) {
  UndirectedSimpleGraph g(d.vertex_count());
  for (const Edge& e : d.edges()) g.add_edge(e.ends[0], e.ends[1]);
  return g;
}

}  // namespace onep
