#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcg/error.hpp"

namespace tcg {

/// Undirected simple graph on indexed vertices. Immutable in spirit: build
/// with add_edge, then treat as read-only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

  int vertex_count() const { return n_; }
  bool adjacent(int i, int j) const { return adj_[static_cast<size_t>(i) * n_ + j] != 0; }
  void add_edge(int i, int j);
  int degree(int v) const;
  long long edge_count() const;

  std::vector<std::string> labels;  // optional, per vertex; ignored by isomorphism

  static Graph complete(int n);
  static Graph edgeless(int n);
  /// m disjoint copies of K_n.
  static Graph union_of_cliques(int m, int n);

 private:
  int n_ = 0;
  std::vector<char> adj_;
};

struct ComponentInfo {
  int size = 0;
  bool is_complete = false;
  bool is_edgeless = false;
};

struct Components {
  /// sorted descending by size
  std::vector<ComponentInfo> summary;
  /// vertex -> component id (ids follow the summary order)
  std::vector<int> labels;
};

Components components(const Graph& g);
bool is_connected(const Graph& g);

/// Common degree when the graph is regular, nullopt otherwise.
std::optional<int> is_regular(const Graph& g);

/// (m, n) when the graph is a disjoint union of m complete graphs K_n of
/// equal size, nullopt otherwise.
std::optional<std::pair<int, int>> disjoint_union_form(const Graph& g);

/// Adjacency-preserving vertex bijection when one exists. Component-summary
/// and degree-refinement prescreens run first; exhaustive up to 260 vertices.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& g, const Graph& h);

/// Deterministic DOT output: vertices in index order, edges i<j sorted.
std::string export_dot(const Graph& g);
/// {"n": int, "edges": [[i,j], ...]} with i<j sorted.
std::string export_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace tcg
