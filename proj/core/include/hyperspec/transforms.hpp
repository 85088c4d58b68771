#pragma once

#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Relocate each listed edge e_i away from its pivot vertex v_i onto the
/// common target u: e_i becomes (e_i \ {v_i}) + {u}.
struct EdgeMove {
  int target;
  std::vector<std::pair<int, int>> relocations; // (edge index, pivot vertex)
};

/// Swap the r-subsets U1 of edge e and V1 of edge f:
/// e becomes (e \ U1) + V1 and f becomes (f \ V1) + U1. Degree-preserving.
struct TwoSwitchSpec {
  int edge_e;
  int edge_f;
  std::vector<int> u_set; // U1, subset of e
  std::vector<int> v_set; // V1, subset of f, same size
};

/// May disconnect a general hypergraph; callers demand connectivity where
/// they need it. Throws when the result would repeat an edge or strand a
/// vertex without any edge.
Hypergraph move_edges(const Hypergraph& g, const EdgeMove& mv);

/// Edge releasing on a non-pendent edge e of a supertree: every edge
/// adjacent to e and not containing u (each meets e in exactly one vertex
/// v_i) is moved from v_i to u. The result is again a supertree.
Hypergraph edge_release(const Hypergraph& g, int edge_index, int u);

Hypergraph two_switch(const Hypergraph& g, const TwoSwitchSpec& spec);

} // namespace hyperspec
