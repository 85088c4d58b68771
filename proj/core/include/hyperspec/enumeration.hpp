#pragma once

#include <optional>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct EnumerationQuery {
  int m = 1;
  int k = 3;
  std::optional<int> beta;             // keep only classes with this independence number
  std::optional<int> mu;               // ... this matching number
  std::optional<std::vector<int>> pi;  // ... this degree sequence (non-increasing)
  int guard = 25;                      // refuse when m(k-1)+1 exceeds this
  bool reverse_anchor_order = false;   // iterate attachment anchors high-to-low
};

/// All non-isomorphic k-uniform supertrees with m edges, grown by repeated
/// pendent-edge attachment and deduplicated by canonical form. Output is
/// sorted by canonical form. Filters are applied after generation with the
/// exact solvers.
std::vector<SupertreeCertificate> enumerate_supertrees(const EnumerationQuery& q);

long count_supertrees(int m, int k, int guard = 25);

} // namespace hyperspec
