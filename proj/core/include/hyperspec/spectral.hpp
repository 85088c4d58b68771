#pragma once

#include <optional>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Convex weight for A_alpha = alpha*D + (1-alpha)*A, restricted to [0, 1).
class AlphaParam {
public:
  explicit AlphaParam(double v);
  double value() const { return v_; }

private:
  double v_;
};

struct SolverOptions {
  double tolerance = 1e-10;
  long max_iterations = 1000000;
  /// Diagonal shift; defaults to 1 when alpha == 0 and to 0 otherwise.
  std::optional<double> shift;
  /// Optional starting vector (positive, any scale); defaults to uniform.
  std::optional<std::vector<double>> initial;
};

struct PerronResult {
  double rho;
  std::vector<double> vector; // positive, sum of k-th powers == 1
  double residual;
  long iterations;
  bool converged;
};

/// y_v = alpha*d(v)*x_v^{k-1} + (1-alpha) * sum_{e: v in e} prod_{u in e\{v}} x_u.
/// Requires a strictly positive x of length n.
std::vector<double> apply_a_alpha(const Hypergraph& g, AlphaParam alpha,
                                  const std::vector<double>& x);

/// sum_e (alpha * sum_{v in e} x_v^k + (1-alpha) * k * prod_{v in e} x_v),
/// for positive x with sum x_v^k = 1. Equals the inner product of x with
/// apply_a_alpha(g, alpha, x).
double rayleigh(const Hypergraph& g, AlphaParam alpha,
                const std::vector<double>& x);

/// Matrix-free power iteration on the shifted operator
///   x  ->  (A_alpha x + shift * x^{[k-1]})^{[1/(k-1)]},
/// renormalized so that sum x_v^k = 1 after every step. rho is bracketed by
/// the Collatz-Wielandt ratios min_v / max_v of (A_alpha x)_v / x_v^{k-1};
/// convergence means the bracket width dropped to tolerance, and the
/// returned rho is the bracket midpoint (shift removed). Requires g
/// connected. Iteration exhaustion reports converged = false, no throw.
PerronResult alpha_spectral_radius(const Hypergraph& g, AlphaParam alpha,
                                   const SolverOptions& opts = {});

/// max_v | (A_alpha x)_v - rho * x_v^{k-1} |
double residual(const Hypergraph& g, AlphaParam alpha, double rho,
                const std::vector<double>& x);

} // namespace hyperspec
