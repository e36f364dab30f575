#include "algdense/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace algdense {

namespace {

struct Cx {
  BigRat re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
BigRat norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
bool is_zero(const Cx& a) { return a.re == 0 && a.im == 0; }
Cx div(const Cx& a, const Cx& b) {
  BigRat n = norm2(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Cx rnd(const Cx& a, long bits) { return {round_near(a.re, bits), round_near(a.im, bits)}; }

Cx horner(const std::vector<BigInt>& c, const Cx& z) {
  Cx acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

std::vector<BigInt> deriv(const std::vector<BigInt>& c) {
  std::vector<BigInt> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
  return d;
}

// Rough starting points from a long double Aberth iteration.
std::vector<std::complex<long double>> initial_guesses(const std::vector<BigInt>& c) {
  using C = std::complex<long double>;
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<long double> a(c.size());
  for (size_t i = 0; i < c.size(); ++i) a[i] = static_cast<long double>(mpz_get_d(c[i].get_mpz_t()));
  long double lead = std::fabs(a[n]);
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::pow(std::fabs(a[i]) / lead, 1.0L / (n - i)));
  bound = 2 * bound + 1e-3L;
  std::vector<C> z(n);
  for (int k = 0; k < n; ++k) {
    long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(bound * (0.5L + 0.5L * (k + 1) / n), ang);
  }
  auto eval = [&](const C& x, C& f, C& df) {
    f = 0;
    df = 0;
    for (int i = n; i >= 0; --i) {
      df = df * x + f;
      f = f * x + a[i];
    }
  };
  for (int it = 0; it < 500; ++it) {
    long double maxw = 0;
    for (int i = 0; i < n; ++i) {
      C f, df;
      eval(z[i], f, df);
      if (std::abs(f) == 0) continue;
      if (std::abs(df) == 0) {
        z[i] += C(1e-6L, 1e-6L);
        continue;
      }
      C ratio = f / df;
      C s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i && z[i] != z[j]) s += 1.0L / (z[i] - z[j]);
      C den = 1.0L - ratio * s;
      C w = std::abs(den) == 0 ? ratio : ratio / den;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      maxw = std::max(maxw, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (maxw < 1e-17L) break;
  }
  return z;
}

void aberth_dyadic(const std::vector<BigInt>& c, std::vector<Cx>& z, long bits) {
  const auto dc = deriv(c);
  const size_t n = z.size();
  const BigRat tol2 = pow2(-2 * bits);
  for (int it = 0; it < 200; ++it) {
    BigRat maxw2 = 0;
    for (size_t i = 0; i < n; ++i) {
      Cx f = horner(c, z[i]);
      if (is_zero(f)) continue;
      Cx df = horner(dc, z[i]);
      if (is_zero(df)) {
        z[i].re += pow2(-bits / 2);
        maxw2 = 1;
        continue;
      }
      Cx ratio = rnd(div(f, df), bits + 8);
      Cx s{0, 0};
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Cx d = z[i] - z[j];
        if (is_zero(d)) continue;
        s = s + rnd(div(Cx{1, 0}, d), bits + 8);
      }
      Cx den = Cx{1, 0} - ratio * s;
      Cx w = is_zero(den) ? ratio : rnd(div(ratio, den), bits + 8);
      z[i] = rnd(z[i] - w, bits);
      maxw2 = std::max(maxw2, norm2(w));
    }
    if (maxw2 <= tol2) break;
  }
}

void symmetrize(std::vector<Cx>& z, long bits) {
  const BigRat snap = pow2(-bits / 2);
  for (auto& x : z)
    if (abs(x.im) <= snap * (1 + abs(x.re))) x.im = 0;
  std::vector<bool> used(z.size(), false);
  for (size_t i = 0; i < z.size(); ++i) {
    if (z[i].im <= 0 || used[i]) continue;
    size_t best = z.size();
    BigRat bestd;
    for (size_t j = 0; j < z.size(); ++j) {
      if (used[j] || z[j].im >= 0) continue;
      BigRat d = norm2(Cx{z[j].re - z[i].re, z[j].im + z[i].im});
      if (best == z.size() || d < bestd) {
        best = j;
        bestd = d;
      }
    }
    if (best == z.size()) continue;
    used[i] = used[best] = true;
    z[best] = Cx{z[i].re, -z[i].im};
  }
}

// Weierstrass-disk certificate: disks D(z_i, n |W_i|) contain all roots and each
// connected component holds as many roots as disks.
bool certify(const std::vector<BigInt>& c, const std::vector<Cx>& z, long bits, long target,
             std::vector<IsolatedRoot>& out) {
  const size_t n = z.size();
  const BigRat lead(c.back());
  out.clear();
  for (size_t i = 0; i < n; ++i) {
    Cx f = horner(c, z[i]);
    BigRat rho;
    if (is_zero(f)) {
      rho = 0;
    } else {
      Cx d{lead, 0};
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Cx diff = z[i] - z[j];
        if (is_zero(diff)) return false;
        d = d * diff;
      }
      BigRat w2 = norm2(f) / norm2(d);
      BigRat n2(static_cast<long>(n * n));
      rho = sqrt(Interval::point(w2 * n2), bits + 8).hi;
    }
    if (2 * rho > pow2(-target)) return false;
    ComplexBox b(z[i].re - rho, z[i].re + rho, z[i].im - rho, z[i].im + rho);
    bool real = z[i].im == 0;
    if (!real && b.im_lo <= 0 && b.im_hi >= 0) return false;
    out.push_back({b, real});
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (out[i].box.intersects(out[j].box)) return false;
  return true;
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots_detailed(const RatPoly& f, long precision_bits) {
  if (f.is_zero()) throw DomainError("isolate_roots: zero polynomial");
  if (!is_squarefree(f)) throw DomainError("isolate_roots: polynomial is not squarefree");
  const int n = f.degree();
  if (n == 0) return {};
  const auto c = f.primitive_integer();
  std::vector<Cx> z;
  if (n == 1) {
    BigRat r(-c[0], c[1]);
    r.canonicalize();
    if (is_dyadic(r)) return {{ComplexBox::point(r), true}};
    z.push_back({round_near(r, 64), 0});
  } else {
    for (auto& g : initial_guesses(c)) {
      BigRat re(static_cast<double>(g.real())), im(static_cast<double>(g.imag()));
      z.push_back({round_near(re, 64), round_near(im, 64)});
    }
  }
  std::vector<IsolatedRoot> out;
  for (long bits = std::max<long>(64, precision_bits + 16); bits <= (1L << 17); bits *= 2) {
    aberth_dyadic(c, z, bits);
    auto zs = z;
    symmetrize(zs, bits);
    if (certify(c, zs, bits, precision_bits, out)) {
      std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        BigRat ar = a.box.re_mid(), br = b.box.re_mid();
        if (ar != br) return ar < br;
        return a.box.im_mid() < b.box.im_mid();
      });
      return out;
    }
  }
  throw PrecisionError("root isolation failed to certify", 1L << 17);
}

std::vector<ComplexBox> isolate_roots(const RatPoly& f, long precision_bits) {
  std::vector<ComplexBox> out;
  for (auto& r : isolate_roots_detailed(f, precision_bits)) out.push_back(r.box);
  return out;
}

ComplexBox refine_root(const RatPoly& f, const ComplexBox& box, long precision_bits) {
  if (!box.valid()) throw DomainError("refine_root: malformed box");
  for (long bits = std::max<long>(precision_bits, 8); bits <= precision_bits + 256; bits += 32) {
    auto roots = isolate_roots(f, bits);
    int inside = 0, partial = 0;
    const ComplexBox* hit = nullptr;
    for (auto& r : roots) {
      if (r.subset_of(box)) {
        ++inside;
        hit = &r;
      } else if (r.intersects(box)) {
        ++partial;
      }
    }
    if (inside > 1) throw DomainError("refine_root: box contains several roots");
    if (inside == 1 && partial == 0) return hit->intersect(box);
    if (inside == 0 && partial == 0) throw DomainError("refine_root: box contains no root");
  }
  throw DomainError("refine_root: box is not isolating (root on or near its boundary)");
}

AlgebraicNumber::AlgebraicNumber(const RatPoly& poly, const ComplexBox& isolating_box)
    : state_(std::make_shared<State>()) {
  state_->poly = squarefree_part(poly);
  state_->initial = isolating_box;
  state_->best = isolating_box;
  state_->best_bits = 0;
}

AlgebraicNumber AlgebraicNumber::rational(const BigRat& q) {
  return AlgebraicNumber(RatPoly::linear_root(q), ComplexBox(q - 1, q + 1, BigRat(-1), BigRat(1)));
}

BigRat AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("algebraic number is not rational");
  return -state_->poly.coeff(0) / state_->poly.coeff(1);
}

ComplexBox AlgebraicNumber::box(long bits) const {
  if (is_rational()) {
    BigRat q = rational_value();
    return {round_down(q, bits), round_up(q, bits), 0, 0};
  }
  std::lock_guard<std::mutex> lock(state_->mu);
  if (state_->best_bits < bits || state_->best.side() > pow2(-bits)) {
    long target = std::max(bits, 2 * state_->best_bits);
    state_->best = refine_root(state_->poly, state_->initial, target);
    state_->best_bits = target;
  }
  return state_->best;
}

Approximable AlgebraicNumber::approximable() const {
  AlgebraicNumber self = *this;
  return {[self](long bits) { return self.box(bits); }};
}

size_t identify_root(const RatPoly& f, const Approximable& value, long max_bits) {
  RatPoly s = squarefree_part(f);
  for (long bits = 32; bits <= max_bits; bits *= 2) {
    auto roots = isolate_roots(s, bits);
    ComplexBox v = value.at(bits);
    size_t hits = 0, idx = 0;
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].intersects(v)) {
        ++hits;
        idx = i;
      }
    if (hits == 1) return idx;
    if (hits == 0) throw DomainError("identify_root: value is not a root of the polynomial");
  }
  throw PrecisionError("identify_root: could not separate roots", max_bits);
}

bool is_root_of(const RatPoly& annihilator, const Approximable& value, const RatPoly& q, long max_bits) {
  RatPoly s = squarefree_part(annihilator);
  RatPoly g = poly_gcd(s, q);
  if (g.degree() == 0) return false;
  if (g.degree() == s.degree()) return true;
  for (long bits = 32; bits <= max_bits; bits *= 2) {
    auto roots = isolate_roots(s, bits);
    ComplexBox v = value.at(bits);
    size_t hits = 0, idx = 0;
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].intersects(v)) {
        ++hits;
        idx = i;
      }
    if (hits == 0) throw DomainError("is_root_of: value is not a root of the annihilator");
    if (hits > 1) continue;
    bool decided = true, found = false;
    for (auto& gb : isolate_roots(g, bits)) {
      size_t meets = 0;
      bool meets_idx = false;
      for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i].intersects(gb)) {
          ++meets;
          if (i == idx) meets_idx = true;
        }
      if (meets_idx && meets == 1) found = true;
      else if (meets_idx) decided = false;
    }
    if (found) return true;
    if (decided) return false;
  }
  throw PrecisionError("is_root_of: could not separate roots", max_bits);
}

}  // namespace algdense
