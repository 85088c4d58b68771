#pragma once

#include <optional>
#include <vector>

#include "hyperspec/error.hpp"

namespace hyperspec {

using Edge = std::vector<int>; // k distinct vertex ids, kept sorted internally

/**
 * Immutable k-uniform hypergraph on vertex ids 0..n-1.
 *
 * Construction normalizes edges (sorts each edge and the edge list) and
 * validates: uniform edge size k >= 2, distinct vertices per edge, ids in
 * range, no duplicate edges, and no isolated vertices (the degenerate
 * n = 1, m = 0 graph is the one exception).
 */
class Hypergraph {
public:
  Hypergraph(int k, int n, std::vector<Edge> edges);

  int k() const { return k_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

  /// Indices of edges incident to v.
  const std::vector<int>& incident_edges(int v) const;

  int degree(int v) const;

  /// Membership test; the argument need not be sorted.
  bool contains_edge(Edge e) const;

private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// A hypergraph together with the checked guarantee that it is a supertree
/// (connected and acyclic, equivalently connected with n = m(k-1)+1).
struct SupertreeCertificate {
  Hypergraph host;
  bool verified;
};

bool is_connected(const Hypergraph& g);

/// Throws not_connected / has_cycle when g is no supertree.
SupertreeCertificate validate_supertree(const Hypergraph& g);

/// Shortest path length in the vertex adjacency relation (co-edge = distance 1).
/// nullopt when unreachable; 0 iff u == v.
std::optional<int> distance(const Hypergraph& g, int u, int v);

/// Indices of pendent edges: edges with exactly one vertex of degree >= 2.
/// Convention: for m == 1 the single edge counts as pendent.
std::vector<int> pendent_edges(const Hypergraph& g);

/// Degree-1 vertices of edge e, ascending.
std::vector<int> pendent_vertices_of_edge(const Hypergraph& g, int e);

} // namespace hyperspec
