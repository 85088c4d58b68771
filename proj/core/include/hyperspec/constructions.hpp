#pragma once

#include "hyperspec/combinatorics.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// S_{m,k}: m edges through one center vertex, pairwise disjoint otherwise.
SupertreeCertificate hyperstar(int m, int k);

/// Supertree with m edges and independence number beta: a hyperstar core
/// with s = (k-1)beta - (k-2)m edges, plus one pendent edge at every pendent
/// vertex of the first m - beta core edges.
/// Feasible range: ceil((m(k-1)+1)/k) <= beta <= m.
SupertreeCertificate t_supertree(int m, int k, int beta);

/// Supertree with m edges and matching number mu: a hyperstar core with
/// m - mu + 1 edges carrying mu - 1 pendent edges; whole core edges are
/// loaded first (k-1 pendants each), any remainder goes onto one further
/// core edge. Feasible range: 1 <= mu <= floor((m(k-1)+1)/k).
SupertreeCertificate h_supertree(int m, int k, int mu);

/// The breadth-first-ordered supertree of a degree sequence: vertices are
/// created layer by layer, degrees are consumed in creation order, and every
/// vertex anchors its remaining degree as fresh edges into the next layer.
/// Throws infeasible_sequence when the layering exhausts anchors before all
/// degrees are consumed.
SupertreeCertificate bfs_supertree(int k, const DegreeSequence& pi);

} // namespace hyperspec
