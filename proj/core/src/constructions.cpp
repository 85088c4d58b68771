#include "hyperspec/constructions.hpp"

#include <numeric>
#include <string>

namespace hyperspec {
namespace {

// pendent edge {anchor, next, next+1, ...}; returns one past the last fresh id
Edge fresh_edge(int anchor, int k, int& next) {
  Edge e{anchor};
  for (int i = 0; i < k - 1; ++i) e.push_back(next++);
  return e;
}

void check_mk(int m, int k) {
  if (m < 1) throw error(errc::bad_params, "edge count m must be positive, got " + std::to_string(m));
  if (k < 2) throw error(errc::bad_params, "edge size k must be at least 2, got " + std::to_string(k));
}

} // namespace

SupertreeCertificate hyperstar(int m, int k) {
  check_mk(m, k);
  std::vector<Edge> edges;
  int next = 1; // vertex 0 is the center
  for (int i = 0; i < m; ++i) edges.push_back(fresh_edge(0, k, next));
  return validate_supertree(Hypergraph(k, next, std::move(edges)));
}

SupertreeCertificate t_supertree(int m, int k, int beta) {
  check_mk(m, k);
  int lo = static_cast<int>((static_cast<long>(m) * (k - 1) + 1 + k - 1) / k); // ceil
  if (beta < lo || beta > m)
    throw error(errc::beta_out_of_range, "beta=" + std::to_string(beta) + " outside [" +
                                             std::to_string(lo) + ", " + std::to_string(m) + "]");
  int core = (k - 1) * beta - (k - 2) * m; // core hyperstar size, >= 1 in range
  int loaded = m - beta;                   // core edges that receive pendants
  std::vector<Edge> edges;
  int next = 1;
  for (int i = 0; i < core; ++i) edges.push_back(fresh_edge(0, k, next));
  for (int i = 0; i < loaded; ++i) {
    Edge host = edges[static_cast<size_t>(i)];
    for (int v : host)
      if (v != 0) edges.push_back(fresh_edge(v, k, next));
  }
  return validate_supertree(Hypergraph(k, next, std::move(edges)));
}

SupertreeCertificate h_supertree(int m, int k, int mu) {
  check_mk(m, k);
  int hi = static_cast<int>((static_cast<long>(m) * (k - 1) + 1) / k); // floor
  if (mu < 1 || mu > hi)
    throw error(errc::mu_out_of_range, "mu=" + std::to_string(mu) + " outside [1, " +
                                           std::to_string(hi) + "]");
  int core = m - mu + 1;
  int pendants = mu - 1;
  std::vector<Edge> edges;
  int next = 1;
  for (int i = 0; i < core; ++i) edges.push_back(fresh_edge(0, k, next));
  int full = pendants / (k - 1); // core edges loaded with a pendant on every leaf
  int rest = pendants % (k - 1);
  for (int i = 0; i < full; ++i) {
    Edge host = edges[static_cast<size_t>(i)];
    for (int v : host)
      if (v != 0) edges.push_back(fresh_edge(v, k, next));
  }
  if (rest > 0) {
    Edge host = edges[static_cast<size_t>(full)];
    int placed = 0;
    for (int v : host) {
      if (v == 0 || placed == rest) continue;
      edges.push_back(fresh_edge(v, k, next));
      ++placed;
    }
  }
  return validate_supertree(Hypergraph(k, next, std::move(edges)));
}

SupertreeCertificate bfs_supertree(int k, const DegreeSequence& pi) {
  if (k < 2) throw error(errc::bad_params, "edge size k must be at least 2");
  if (pi.k != 0 && pi.k != k)
    throw error(errc::bad_params, "degree sequence carries k=" + std::to_string(pi.k));
  if (!DegreeSequence{pi.entries, k}.supertree_feasible())
    throw error(errc::infeasible_sequence, "degrees must be positive, non-increasing, with "
                                           "sum mk and length m(k-1)+1");
  const int n = static_cast<int>(pi.entries.size());
  const int m = DegreeSequence{pi.entries, k}.edge_count();

  // Vertices are created in breadth-first order and consume degrees in that
  // order; each vertex anchors (degree - 1) fresh edges into the next layer
  // (the root anchors all of its degree).
  std::vector<Edge> edges;
  int created = 1;
  int assigned = 0;
  std::vector<int> frontier{0}; // current layer, in creation order
  while (!frontier.empty() && assigned < n) {
    std::vector<int> next_layer;
    for (int v : frontier) {
      int d = pi.entries[static_cast<size_t>(v)];
      int spawn = (v == 0) ? d : d - 1;
      for (int s = 0; s < spawn; ++s) {
        if (created + (k - 1) > n)
          throw error(errc::infeasible_sequence, "layering spawns more vertices than degrees");
        Edge e{v};
        for (int i = 0; i < k - 1; ++i) e.push_back(created++);
        next_layer.insert(next_layer.end(), e.begin() + 1, e.end());
        edges.push_back(std::move(e));
      }
      ++assigned;
    }
    frontier = std::move(next_layer);
  }
  if (created != n || assigned != n || static_cast<int>(edges.size()) != m)
    throw error(errc::infeasible_sequence, "layering exhausted anchors before consuming all degrees");
  return validate_supertree(Hypergraph(k, n, std::move(edges)));
}

} // namespace hyperspec
