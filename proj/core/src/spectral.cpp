#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hyperspec {
namespace {

double pow_int(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

void check_positive(const Hypergraph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.n())
    throw error(errc::dimension_mismatch, "vector length " + std::to_string(x.size()) +
                                              " for n=" + std::to_string(g.n()));
  for (double xi : x)
    if (!(xi > 0.0))
      throw error(errc::non_positive_vector, "vector entries must be strictly positive");
}

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

std::vector<double> apply_unchecked(const Hypergraph& g, double alpha,
                                    const std::vector<double>& x) {
  const int n = g.n();
  const int k = g.k();
  const bool compensated = static_cast<long>(g.m()) * k > 10000;
  std::vector<double> y(static_cast<size_t>(n), 0.0);
  if (compensated) {
    std::vector<KahanSum> acc(static_cast<size_t>(n));
    for (const Edge& e : g.edges())
      for (int v : e) {
        double prod = 1.0;
        for (int u : e)
          if (u != v) prod *= x[static_cast<size_t>(u)];
        acc[static_cast<size_t>(v)].add(prod);
      }
    for (int v = 0; v < n; ++v) y[static_cast<size_t>(v)] = acc[static_cast<size_t>(v)].s;
  } else {
    for (const Edge& e : g.edges())
      for (int v : e) {
        double prod = 1.0;
        for (int u : e)
          if (u != v) prod *= x[static_cast<size_t>(u)];
        y[static_cast<size_t>(v)] += prod;
      }
  }
  for (int v = 0; v < n; ++v) {
    double diag = alpha * g.degree(v) * pow_int(x[static_cast<size_t>(v)], k - 1);
    y[static_cast<size_t>(v)] = diag + (1.0 - alpha) * y[static_cast<size_t>(v)];
  }
  return y;
}

} // namespace

AlphaParam::AlphaParam(double v) : v_(v) {
  if (!(v >= 0.0 && v < 1.0))
    throw error(errc::invalid_alpha, "alpha must lie in [0, 1), got " + std::to_string(v));
}

std::vector<double> apply_a_alpha(const Hypergraph& g, AlphaParam alpha,
                                  const std::vector<double>& x) {
  check_positive(g, x);
  return apply_unchecked(g, alpha.value(), x);
}

double rayleigh(const Hypergraph& g, AlphaParam alpha, const std::vector<double>& x) {
  check_positive(g, x);
  const int k = g.k();
  double norm = 0.0;
  for (double xi : x) norm += pow_int(xi, k);
  if (std::abs(norm - 1.0) > 1e-10)
    throw error(errc::not_unit_vector,
                "sum of k-th powers is " + std::to_string(norm) + ", expected 1");
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    double powers = 0.0;
    double prod = 1.0;
    for (int v : e) {
      powers += pow_int(x[static_cast<size_t>(v)], k);
      prod *= x[static_cast<size_t>(v)];
    }
    total += alpha.value() * powers + (1.0 - alpha.value()) * k * prod;
  }
  return total;
}

PerronResult alpha_spectral_radius(const Hypergraph& g, AlphaParam alpha,
                                   const SolverOptions& opts) {
  if (!is_connected(g))
    throw error(errc::not_connected, "spectral radius requires a connected graph");
  const int n = g.n();
  const int k = g.k();
  const double shift = opts.shift.value_or(alpha.value() == 0.0 ? 1.0 : 0.0);
  if (shift < 0.0)
    throw error(errc::bad_params, "shift must be nonnegative");

  std::vector<double> x;
  if (opts.initial) {
    check_positive(g, *opts.initial);
    x = *opts.initial;
  } else {
    x.assign(static_cast<size_t>(n), std::pow(static_cast<double>(n), -1.0 / k));
  }
  { // normalize to sum x^k = 1
    double norm = 0.0;
    for (double xi : x) norm += pow_int(xi, k);
    double scale = std::pow(norm, -1.0 / k);
    for (double& xi : x) xi *= scale;
  }

  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  long it = 0;
  bool converged = false;
  std::vector<double> y;
  for (;;) {
    y = apply_unchecked(g, alpha.value(), x);
    ++it;
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
      double xk1 = pow_int(x[static_cast<size_t>(v)], k - 1);
      double ratio = (y[static_cast<size_t>(v)] + shift * xk1) / xk1;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= opts.tolerance) {
      converged = true;
      break;
    }
    if (it >= opts.max_iterations) break;
    double norm = 0.0;
    for (int v = 0; v < n; ++v) {
      double xk1 = pow_int(x[static_cast<size_t>(v)], k - 1);
      x[static_cast<size_t>(v)] = std::pow(y[static_cast<size_t>(v)] + shift * xk1, 1.0 / (k - 1));
      norm += pow_int(x[static_cast<size_t>(v)], k);
    }
    double scale = std::pow(norm, -1.0 / k);
    for (double& xi : x) xi *= scale;
  }

  PerronResult res;
  res.rho = 0.5 * (lo + hi) - shift;
  res.vector = x;
  res.iterations = it;
  res.converged = converged;
  double r = 0.0;
  for (int v = 0; v < n; ++v)
    r = std::max(r, std::abs(y[static_cast<size_t>(v)] -
                             res.rho * pow_int(x[static_cast<size_t>(v)], k - 1)));
  res.residual = r;
  return res;
}

double residual(const Hypergraph& g, AlphaParam alpha, double rho,
                const std::vector<double>& x) {
  check_positive(g, x);
  std::vector<double> y = apply_unchecked(g, alpha.value(), x);
  double r = 0.0;
  for (int v = 0; v < g.n(); ++v)
    r = std::max(r, std::abs(y[static_cast<size_t>(v)] -
                             rho * pow_int(x[static_cast<size_t>(v)], g.k() - 1)));
  return r;
}

} // namespace hyperspec
