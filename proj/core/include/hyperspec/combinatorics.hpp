#pragma once

#include <optional>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct IndependenceResult {
  int beta;
  std::vector<int> witness; // lexicographically smallest optimal vertex set
};

struct MatchingResult {
  int mu;
  std::vector<int> witness; // lexicographically smallest optimal edge-index set
};

/// Non-increasing vertex degrees of a k-uniform hypergraph.
struct DegreeSequence {
  std::vector<int> entries;
  int k = 0;

  int vertex_count() const { return static_cast<int>(entries.size()); }
  /// Edge count implied by the degree sum; -1 when the sum is not divisible by k.
  int edge_count() const;
  /// Arithmetic feasibility for a supertree: entries positive and
  /// non-increasing, sum divisible by k, and n = m(k-1)+1.
  bool supertree_feasible() const;

  bool operator==(const DegreeSequence&) const = default;
};

/// A candidate breadth-first layout of a supertree.
struct BfsLayout {
  std::vector<int> order;   // vertex ids, position = rank in the well-ordering
  std::vector<int> heights; // heights[v] = distance from order[0]
  bool ok = false;
  int violated = 0; // 0 = none, else first violated condition 1..4
};

/// Exact independence number (max set of vertices no two sharing an edge),
/// branch and bound. Throws instance_too_large above the cap.
IndependenceResult independence_number(const Hypergraph& g, int cap = 40);

/// Exact matching number (max set of pairwise disjoint edges).
MatchingResult matching_number(const Hypergraph& g, int cap = 25);

/// Maximum independent set containing a pendent vertex of every pendent
/// edge. For supertrees such a set attains the independence number.
IndependenceResult pendant_friendly_mis(const SupertreeCertificate& t, int cap = 40);

DegreeSequence degree_sequence(const Hypergraph& g);

/// Checks the four breadth-first ordering conditions against the given
/// order (a permutation of 0..n-1, position 0 = root):
///   1. heights never decrease along the order;
///   2. degrees never increase along the order;
///   3. children ordered before other children have parents ordered no later;
///   4. within each edge, the k-1 non-anchor vertices occupy consecutive
///      positions.
/// Condition 3 compares anchors non-strictly, so child pairs sharing their
/// anchor (in particular any two layer-1 vertices) satisfy it vacuously.
BfsLayout check_bfs_ordering(const SupertreeCertificate& t,
                             const std::vector<int>& order);

/// Backtracking search over root choices and layer-wise arrangements.
/// Returns a satisfying layout or nullopt when none exists.
std::optional<BfsLayout> find_bfs_ordering(const SupertreeCertificate& t,
                                           int guard = 25);

} // namespace hyperspec
