#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyperspec/combinatorics.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"
#include "hyperspec/verify.hpp"

namespace hyperspec {

/// Shortest round-trip-exact decimal form (17 significant digits).
std::string format_double(double v);

/// {"k": K, "n": N, "edges": [[...], ...]} with sorted edges; byte-stable.
std::string to_json(const Hypergraph& g);
/// Accepts unsorted edges.
Hypergraph hypergraph_from_json(const std::string& text);

/// "k n m" header line followed by m lines of k vertex ids.
std::string to_text(const Hypergraph& g);
Hypergraph hypergraph_from_text(const std::string& text);

/// Auto-detect JSON ('{' first) vs plain text.
Hypergraph hypergraph_from_string(const std::string& text);

std::string to_json(const PerronResult& r);
std::string to_json(const IndependenceResult& r);
std::string to_json(const MatchingResult& r);
std::string to_json(const DegreeSequence& d);

struct ReleaseSpec {
  int edge_index;
  int vertex;
};
using TransformSpec = std::variant<EdgeMove, ReleaseSpec, TwoSwitchSpec>;

/// {"move": {"target": u, "relocations": [[e, v], ...]}}
/// {"release": {"e": i, "u": v}}
/// {"switch": {"e": i, "f": j, "U1": [...], "V1": [...]}}
/// A bare inner object is accepted when `expect` names the operation.
TransformSpec transform_spec_from_json(const std::string& text,
                                       const std::string& expect = "");

/// CSV with fixed columns m,k,param,alpha,class_size,champion_rho,gap,unique.
std::string report_csv(const std::vector<ExtremalReport>& rows);

/// JSON object with a certification-scope note and the full rows, including
/// champion and predicted graphs.
std::string report_json(const std::vector<ExtremalReport>& rows);

/// The finite-grid certification disclaimer embedded in report_json.
std::string certification_scope_note();

} // namespace hyperspec
