#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/combinatorics.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

struct VerifyOptions {
  SolverOptions solver;
  /// A champion is certified unique only when it beats the runner-up by more
  /// than this margin (solver tolerance plus headroom).
  double margin = 1e-8;
  int guard = 25;
};

/// Outcome of one extremal comparison: the enumerated class, its spectral
/// champion, and the construction predicted to win.
struct ExtremalReport {
  std::string theorem; // "independence" | "degree-sequence" | "matching"
  int m;
  int k;
  std::string param; // "beta=4" | "mu=2" | "pi=2,2,1,1,1,1,1"
  double alpha;
  int class_size;
  Hypergraph champion;
  double champion_rho;
  Hypergraph predicted;
  double predicted_rho;
  std::optional<double> gap; // champion rho minus runner-up rho; empty for singleton classes
  bool unique;               // champion isomorphic to prediction, gap above margin
  double margin;
};

/// Champion of {supertrees with m edges and independence number beta}
/// against the t_supertree prediction.
ExtremalReport verify_independence_extremal(int m, int k, int beta,
                                            AlphaParam alpha,
                                            const VerifyOptions& opts = {});

/// Champion of {supertrees with degree sequence pi} against bfs_supertree.
ExtremalReport verify_degree_sequence_extremal(int k, const DegreeSequence& pi,
                                               AlphaParam alpha,
                                               const VerifyOptions& opts = {});

/// Champion of {supertrees with m edges and matching number mu} against
/// the h_supertree prediction.
ExtremalReport verify_matching_extremal(int m, int k, int mu, AlphaParam alpha,
                                        const VerifyOptions& opts = {});

/// All three verifiers over every feasible parameter at each (m, k) scale
/// and every alpha in the grid. Certification is for these finite grids
/// only; the underlying statements quantify over all alpha and all m.
std::vector<ExtremalReport> sweep(const std::vector<double>& alpha_grid,
                                  const std::vector<std::pair<int, int>>& scales,
                                  const VerifyOptions& opts = {});

} // namespace hyperspec
