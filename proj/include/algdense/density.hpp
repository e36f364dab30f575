#pragma once

#include <vector>

#include "algdense/problem.hpp"

namespace algdense {

/// sum_i lambda_i^m mu_i^n xi_i mod 1 lies within error_radius of value, circularly.
struct OrbitPoint {
  long m = 0, n = 0;
  BigRat value = 0, error_radius = 0;
};

/// Holds the refinement caches for one problem. Safe to share between threads.
class OrbitEvaluator {
 public:
  explicit OrbitEvaluator(const ProblemSpec& spec);

  /// True when every lambda, mu and xi is rational; evaluation is then exact.
  bool rational() const { return rational_; }
  /// Precision cap for the working precision; PrecisionError beyond it.
  long max_bits = 1L << 20;

  OrbitPoint eval(long m, long n, long kappa) const;
  /// Static working-precision estimate for (m, n).
  long working_bits(long m, long n, long kappa) const;

 private:
  struct Term {
    AlgebraicNumber lambda, mu, xi;
    BigRat lambda_q, mu_q, xi_q;
    bool lambda_rational = false, mu_rational = false, xi_rational = false;
    double log2_lambda = 0, log2_mu = 0, xi_bits = 0;
  };
  std::vector<Term> terms_;
  bool rational_ = true;
};

OrbitPoint eval_orbit_point(const ProblemSpec& spec, long m, long n, long kappa);

/// All (m, n) with 0 <= m <= M, 0 <= n <= N in row-major order.
std::vector<OrbitPoint> grid_orbit(const OrbitEvaluator& ev, long M, long N, long kappa, int threads = 1);
std::vector<OrbitPoint> grid_orbit(const ProblemSpec& spec, long M, long N, long kappa, int threads = 1);

/// Upper bound on the largest circular gap of the true values.
BigRat max_gap(const std::vector<OrbitPoint>& points);

/// Exact star discrepancy of the centres.
BigRat star_discrepancy(const std::vector<OrbitPoint>& points);

struct DensityRow {
  long size = 0;
  size_t count = 0;
  BigRat max_gap, star_discrepancy;
};

struct DensityReport {
  long M = 0, N = 0, kappa = 0;
  std::vector<DensityRow> rows;
  bool max_gap_nonincreasing = true;
};

/// One row per square grid size. sizes must be strictly increasing.
DensityReport density_trend(const OrbitEvaluator& ev, const std::vector<long>& sizes, long kappa, int threads = 1);
DensityReport density_trend(const ProblemSpec& spec, const std::vector<long>& sizes, long kappa, int threads = 1);

}  // namespace algdense
