#pragma once

#include <compare>
#include <string>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Total-order-comparable canonical encoding: two hypergraphs have equal
/// forms iff they are isomorphic.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical labeling via backtracking over an equitable vertex partition.
/// Vertices are refined by (degree, incident-edge colour profiles) iterated
/// to a fixpoint; remaining ties are broken by individualization with
/// automorphism orbit pruning. Start candidates are the maximum-degree class.
CanonicalForm canonical_form(const Hypergraph& g);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

} // namespace hyperspec
