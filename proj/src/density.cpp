#include "algdense/density.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace algdense {

namespace {

double log2_upper(const AlgebraicNumber& x) {
  ComplexBox b = x.box(32);
  BigRat m = std::max(abs(b.re_lo), abs(b.re_hi));
  double d = m.get_d();
  return d > 0 ? std::log2(d) + 1e-9 : -64;
}

double log2_upper(const BigRat& q) {
  double d = BigRat(abs(q)).get_d();
  return d > 0 ? std::log2(d) : -64;
}

Interval real_interval(const AlgebraicNumber& x, long bits) { return x.box(bits).re(); }

}  // namespace

OrbitEvaluator::OrbitEvaluator(const ProblemSpec& spec) {
  if (spec.pairs.empty()) throw DomainError("orbit evaluation needs at least one pair");
  for (auto& p : spec.pairs) {
    Term t;
    t.lambda_rational = p.lambda.is_rational();
    t.mu_rational = p.mu.is_rational();
    if (t.lambda_rational) t.lambda_q = p.lambda.rational_value();
    else t.lambda = p.lambda.number();
    if (t.mu_rational) t.mu_q = p.mu.rational_value();
    else t.mu = p.mu.number();
    if (p.xi.kind == XiSpec::Kind::Algebraic && !p.xi.algebraic.is_rational()) {
      t.xi = p.xi.algebraic.number();
    } else {
      t.xi_rational = true;
      t.xi_q = p.xi.kind == XiSpec::Kind::Algebraic ? p.xi.algebraic.rational_value() : p.xi.value;
    }
    t.log2_lambda = t.lambda_rational ? log2_upper(t.lambda_q) : log2_upper(t.lambda);
    t.log2_mu = t.mu_rational ? log2_upper(t.mu_q) : log2_upper(t.mu);
    t.xi_bits = std::max(0.0, t.xi_rational ? log2_upper(t.xi_q) : log2_upper(t.xi));
    rational_ = rational_ && t.lambda_rational && t.mu_rational && t.xi_rational;
    terms_.push_back(std::move(t));
  }
}

long OrbitEvaluator::working_bits(long m, long n, long kappa) const {
  double w = 0;
  for (auto& t : terms_) w = std::max(w, m * std::max(0.0, t.log2_lambda) + n * std::max(0.0, t.log2_mu) + t.xi_bits);
  return static_cast<long>(std::ceil(w)) + 16 * static_cast<long>(terms_.size()) + kappa + 8;
}

OrbitPoint OrbitEvaluator::eval(long m, long n, long kappa) const {
  if (m < 0 || n < 0) throw DomainError("orbit exponents must be non-negative");
  if (kappa < 1) throw DomainError("kappa must be positive");
  OrbitPoint out;
  out.m = m;
  out.n = n;
  const auto um = static_cast<unsigned long>(m), un = static_cast<unsigned long>(n);
  if (rational_) {
    BigRat s = 0;
    for (auto& t : terms_) s += rpow(t.lambda_q, um) * rpow(t.mu_q, un) * t.xi_q;
    out.value = frac_rat(s);
    return out;
  }
  const BigRat target = pow2(-kappa - 1);
  for (long W = working_bits(m, n, kappa);; W *= 2) {
    if (W > max_bits) throw PrecisionError("orbit point needs more than " + std::to_string(max_bits) + " bits", W);
    Interval s = Interval::point(0);
    for (auto& t : terms_) {
      Interval a = t.lambda_rational ? Interval::point(rpow(t.lambda_q, um)) : pow(real_interval(t.lambda, W + 8), um, W);
      Interval b = t.mu_rational ? Interval::point(rpow(t.mu_q, un)) : pow(real_interval(t.mu, W + 8), un, W);
      Interval x = t.xi_rational ? Interval::point(t.xi_q) : real_interval(t.xi, W + 8);
      s = s + ((a * b).rounded(W) * x).rounded(W);
    }
    if (s.width() > target) continue;
    BigRat c = s.mid();
    BigRat cr = round_near(c, kappa + 8);
    out.value = frac_rat(cr);
    out.error_radius = round_up(s.width() / 2 + abs(c - cr), kappa + 8);
    return out;
  }
}

OrbitPoint eval_orbit_point(const ProblemSpec& spec, long m, long n, long kappa) {
  return OrbitEvaluator(spec).eval(m, n, kappa);
}

std::vector<OrbitPoint> grid_orbit(const OrbitEvaluator& ev, long M, long N, long kappa, int threads) {
  if (M < 0 || N < 0) throw DomainError("grid bounds must be non-negative");
  const size_t total = static_cast<size_t>(M + 1) * static_cast<size_t>(N + 1);
  std::vector<OrbitPoint> out(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k; (k = next++) < total;) {
      long m = static_cast<long>(k) / (N + 1), n = static_cast<long>(k) % (N + 1);
      try {
        out[k] = ev.eval(m, n, kappa);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int T = std::max(1, threads);
  if (T == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < T; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<OrbitPoint> grid_orbit(const ProblemSpec& spec, long M, long N, long kappa, int threads) {
  return grid_orbit(OrbitEvaluator(spec), M, N, kappa, threads);
}

BigRat max_gap(const std::vector<OrbitPoint>& points) {
  if (points.empty()) throw DomainError("max_gap of an empty sample");
  std::vector<BigRat> v;
  BigRat r = 0;
  for (auto& p : points) {
    v.push_back(p.value);
    r = std::max(r, p.error_radius);
  }
  std::sort(v.begin(), v.end());
  BigRat g = v.front() + 1 - v.back();
  for (size_t i = 1; i < v.size(); ++i) g = std::max(g, BigRat(v[i] - v[i - 1]));
  g += 2 * r;
  return std::min(g, BigRat(1));
}

BigRat star_discrepancy(const std::vector<OrbitPoint>& points) {
  if (points.empty()) throw DomainError("star_discrepancy of an empty sample");
  std::vector<BigRat> v;
  for (auto& p : points) v.push_back(p.value);
  std::sort(v.begin(), v.end());
  const BigRat n = static_cast<long>(v.size());
  BigRat d = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    BigRat up = BigRat(static_cast<long>(i + 1)) / n, lo = BigRat(static_cast<long>(i)) / n;
    d = std::max({d, BigRat(up - v[i]), BigRat(v[i] - lo)});
  }
  return d;
}

DensityReport density_trend(const OrbitEvaluator& ev, const std::vector<long>& sizes, long kappa, int threads) {
  if (sizes.empty()) throw DomainError("density_trend needs at least one grid size");
  for (size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] < 0 || (i && sizes[i] <= sizes[i - 1]))
      throw DomainError("grid sizes must be non-negative and strictly increasing");
  const long G = sizes.back();
  auto all = grid_orbit(ev, G, G, kappa, threads);
  DensityReport rep;
  rep.M = rep.N = G;
  rep.kappa = kappa;
  for (long g : sizes) {
    std::vector<OrbitPoint> sub;
    for (auto& p : all)
      if (p.m <= g && p.n <= g) sub.push_back(p);
    rep.rows.push_back({g, sub.size(), max_gap(sub), star_discrepancy(sub)});
  }
  for (size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].max_gap > rep.rows[i - 1].max_gap) rep.max_gap_nonincreasing = false;
  return rep;
}

DensityReport density_trend(const ProblemSpec& spec, const std::vector<long>& sizes, long kappa, int threads) {
  return density_trend(OrbitEvaluator(spec), sizes, kappa, threads);
}

}  // namespace algdense
