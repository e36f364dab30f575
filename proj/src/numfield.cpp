#include "algdense/numfield.hpp"

#include <algorithm>

namespace algdense {

namespace {

using Matrix = std::vector<std::vector<BigRat>>;

// Reduced row echelon basis of a growing span of vectors.
class Span {
 public:
  explicit Span(size_t n) : n_(n) {}

  // Adds v if independent; returns whether it was added.
  bool add(std::vector<BigRat> v) {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const BigRat& c = v[pivots_[k]];
      if (c == 0) continue;
      BigRat f = c;
      for (size_t j = 0; j < n_; ++j) v[j] -= f * rows_[k][j];
    }
    size_t piv = n_;
    for (size_t j = 0; j < n_; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == n_) return false;
    BigRat lead = v[piv];
    for (auto& x : v) x /= lead;
    for (auto& row : rows_) {
      BigRat f = row[piv];
      if (f == 0) continue;
      for (size_t j = 0; j < n_; ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }
  size_t rank() const { return rows_.size(); }

 private:
  size_t n_;
  Matrix rows_;
  std::vector<size_t> pivots_;
};

// Solves y^T A = b^T; returns nullopt if A is singular.
std::optional<std::vector<BigRat>> solve_left(const Matrix& A, const std::vector<BigRat>& b) {
  const size_t n = A.size();
  // Transpose into an augmented system A^T y = b.
  Matrix M(n, std::vector<BigRat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) M[i][j] = A[j][i];
    M[i][n] = b[i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    BigRat inv = 1 / M[col][col];
    for (size_t j = col; j <= n; ++j) M[col][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col] == 0) continue;
      BigRat f = M[i][col];
      for (size_t j = col; j <= n; ++j) M[i][j] -= f * M[col][j];
    }
  }
  std::vector<BigRat> y(n);
  for (size_t i = 0; i < n; ++i) y[i] = M[i][n];
  return y;
}

FieldElement from_coeffs(const NumberField& K, const RatPoly& p) {
  FieldElement x;
  x.coords.assign(K.degree, BigRat(0));
  RatPoly r = p.degree() >= K.degree ? p % K.minpoly : p;
  for (int i = 0; i <= r.degree(); ++i) x.coords[i] = r.coeff(i);
  return x;
}

NumberField make_field(const RatPoly& g) {
  NumberField K;
  K.minpoly = g;
  K.degree = g.degree();
  K.embeddings = isolate_roots_detailed(g, 32);
  for (auto& e : K.embeddings) K.generator_images.emplace_back(g, e.box);
  return K;
}

bool is_real_root(const RatPoly& m, const AlgebraicNumber& a) {
  size_t idx = identify_root(m, a.approximable());
  return isolate_roots_detailed(m, 32)[idx].real;
}

KPoly kpoly_trim(KPoly a) {
  while (!a.empty() && elem_is_zero(a.back())) a.pop_back();
  return a;
}

KPoly kpoly_from(const NumberField& K, const RatPoly& p) {
  KPoly r;
  for (auto& c : p.coeffs()) r.push_back(elem_rational(K, c));
  return r;
}

KPoly kpoly_mul(const NumberField& K, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1, elem_rational(K, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = elem_add(K, r[i + j], elem_mul(K, a[i], b[j]));
  return kpoly_trim(r);
}

// p(l(X)) for a rational polynomial p and a K-polynomial l.
KPoly kpoly_compose(const NumberField& K, const RatPoly& p, const KPoly& l) {
  KPoly acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = kpoly_mul(K, acc, l);
    if (acc.empty()) acc.push_back(elem_rational(K, 0));
    acc[0] = elem_add(K, acc[0], elem_rational(K, p.coeff(i)));
    acc = kpoly_trim(acc);
  }
  return acc;
}

}  // namespace

MultMatrix operator+(const MultMatrix& a, const MultMatrix& b) {
  MultMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r.entries[i][j] += b.entries[i][j];
  return r;
}

MultMatrix operator*(const MultMatrix& a, const MultMatrix& b) {
  const size_t n = a.size();
  MultMatrix r{Matrix(n, std::vector<BigRat>(n))};
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a.entries[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return r;
}

MultMatrix identity_matrix(size_t n) {
  MultMatrix r{Matrix(n, std::vector<BigRat>(n))};
  for (size_t i = 0; i < n; ++i) r.entries[i][i] = 1;
  return r;
}

RatPoly charpoly(const MultMatrix& A) {
  const size_t n = A.size();
  std::vector<BigRat> c(n + 1);
  c[n] = 1;
  MultMatrix Mk{Matrix(n, std::vector<BigRat>(n))};
  for (size_t k = 1; k <= n; ++k) {
    MultMatrix AM = A * Mk;
    for (size_t i = 0; i < n; ++i) AM.entries[i][i] += c[n - k + 1];
    Mk = AM;
    MultMatrix T = A * Mk;
    BigRat tr = 0;
    for (size_t i = 0; i < n; ++i) tr += T.entries[i][i];
    c[n - k] = -tr / BigRat(static_cast<long>(k));
  }
  return RatPoly(std::move(c));
}

NumberField field_from_minpoly(const RatPoly& g) {
  if (g.degree() < 1) throw DomainError("field_from_minpoly: constant polynomial");
  if (g.leading() != 1) throw DomainError("field_from_minpoly: polynomial is not monic");
  if (!g.has_integer_coeffs()) throw DomainError("field_from_minpoly: non-integer coefficients");
  if (!is_squarefree(g)) throw DomainError("field_from_minpoly: polynomial is not squarefree");
  if (!is_irreducible(g)) throw DomainError("field_from_minpoly: polynomial is reducible over Q");
  return make_field(g);
}

NumberField rational_field() { return make_field(RatPoly{0, 1}); }

FieldElement elem_rational(const NumberField& K, const BigRat& q) {
  FieldElement x;
  x.coords.assign(K.degree, BigRat(0));
  x.coords[0] = q;
  return x;
}

FieldElement elem_generator(const NumberField& K) { return from_coeffs(K, RatPoly{0, 1}); }

FieldElement elem_from_poly(const NumberField& K, const RatPoly& p) { return from_coeffs(K, p); }

RatPoly elem_poly(const FieldElement& x) { return RatPoly(x.coords); }

bool elem_is_zero(const FieldElement& x) {
  return std::all_of(x.coords.begin(), x.coords.end(), [](const BigRat& c) { return c == 0; });
}

std::optional<BigRat> elem_as_rational(const FieldElement& x) {
  for (size_t i = 1; i < x.coords.size(); ++i)
    if (x.coords[i] != 0) return std::nullopt;
  return x.coords[0];
}

FieldElement elem_add(const NumberField&, const FieldElement& x, const FieldElement& y) {
  FieldElement r = x;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

FieldElement elem_sub(const NumberField&, const FieldElement& x, const FieldElement& y) {
  FieldElement r = x;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
  return r;
}

FieldElement elem_neg(const NumberField&, const FieldElement& x) {
  FieldElement r = x;
  for (auto& c : r.coords) c = -c;
  return r;
}

FieldElement elem_mul(const NumberField& K, const FieldElement& x, const FieldElement& y) {
  return from_coeffs(K, elem_poly(x) * elem_poly(y));
}

FieldElement elem_scale(const NumberField&, const FieldElement& x, const BigRat& c) {
  FieldElement r = x;
  for (auto& v : r.coords) v *= c;
  return r;
}

FieldElement elem_inv(const NumberField& K, const FieldElement& x) {
  if (elem_is_zero(x)) throw DomainError("elem_inv: inverse of zero");
  auto y = solve_left(mult_matrix(K, x).entries, elem_rational(K, 1).coords);
  if (!y) throw DomainError("elem_inv: singular multiplication matrix");
  return FieldElement{*y};
}

FieldElement elem_pow(const NumberField& K, const FieldElement& x, long e) {
  FieldElement base = e < 0 ? elem_inv(K, x) : x;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement r = elem_rational(K, 1);
  while (k) {
    if (k & 1) r = elem_mul(K, r, base);
    k >>= 1;
    if (k) base = elem_mul(K, base, base);
  }
  return r;
}

Approximable elem_image(const NumberField& K, const FieldElement& x, size_t embedding) {
  if (embedding >= K.generator_images.size()) throw DomainError("elem_image: embedding index out of range");
  if (auto q = elem_as_rational(x)) {
    BigRat v = *q;
    return Approximable{[v](long) { return ComplexBox::point(v); }};
  }
  return image_of(elem_poly(x), K.generator_images[embedding].approximable());
}

MultMatrix mult_matrix(const NumberField& K, const FieldElement& alpha) {
  MultMatrix m;
  FieldElement row = alpha;
  const RatPoly& g = K.minpoly;
  for (int j = 0; j < K.degree; ++j) {
    m.entries.push_back(row.coords);
    // row * gamma: shift up and reduce the overflow with the monic minpoly
    BigRat top = row.coords.back();
    for (int i = K.degree - 1; i > 0; --i) row.coords[i] = row.coords[i - 1] - top * g.coeff(i);
    row.coords[0] = -top * g.coeff(0);
  }
  return m;
}

BigInt denominator_radical(const MultMatrix& m) {
  BigInt l = 1;
  for (auto& row : m.entries)
    for (auto& x : row) l = lcm(l, BigInt(x.get_den()));
  return radical(l);
}

RatPoly minpoly_of_elem(const NumberField& K, const FieldElement& x) {
  if (auto q = elem_as_rational(x)) return RatPoly::linear_root(*q);
  // The characteristic polynomial is a power of the irreducible minimal polynomial.
  return squarefree_part(charpoly(mult_matrix(K, x)));
}

int subfield_degree(const NumberField& K, const std::vector<FieldElement>& gens) {
  Span span(K.degree);
  std::vector<FieldElement> basis{elem_rational(K, 1)};
  span.add(basis[0].coords);
  for (size_t i = 0; i < basis.size(); ++i)
    for (auto& g : gens) {
      FieldElement p = elem_mul(K, basis[i], g);
      if (span.add(p.coords)) basis.push_back(p);
    }
  return static_cast<int>(span.rank());
}

std::optional<std::vector<BigRat>> coords_in_powers(const NumberField& K, const FieldElement& g,
                                                    const FieldElement& x) {
  Matrix A;
  FieldElement p = elem_rational(K, 1);
  for (int j = 0; j < K.degree; ++j) {
    A.push_back(p.coords);
    p = elem_mul(K, p, g);
  }
  return solve_left(A, x.coords);
}

KPoly kpoly_gcd(const NumberField& K, KPoly a, KPoly b) {
  a = kpoly_trim(std::move(a));
  b = kpoly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    FieldElement lead_inv = elem_inv(K, b.back());
    while (a.size() >= b.size()) {
      FieldElement f = elem_mul(K, a.back(), lead_inv);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) a[off + j] = elem_sub(K, a[off + j], elem_mul(K, f, b[j]));
      a.pop_back();
      a = kpoly_trim(std::move(a));
    }
    std::swap(a, b);
  }
  if (a.empty()) return a;
  FieldElement inv = elem_inv(K, a.back());
  for (auto& c : a) c = elem_mul(K, c, inv);
  return a;
}

BigInt integrality_scale(const RatPoly& m) {
  const int n = m.degree();
  BigInt d = 1;
  for (auto& p : prime_divisors(m.denominator())) {
    long e = 0;
    for (int k = 1; k <= n; ++k) {
      BigRat c = m.coeff(n - k);
      if (c == 0) continue;
      long v = -vp(c, p);
      if (v > 0) e = std::max(e, (v + k - 1) / k);
    }
    d *= ipow(p, static_cast<unsigned long>(e));
  }
  return d;
}

ComposedField compose_field(const RatPoly& f_lambda, const ComplexBox& lambda_box, const RatPoly& f_mu,
                            const ComplexBox& mu_box, long c_bound) {
  AlgebraicNumber la(f_lambda, lambda_box), mu(f_mu, mu_box);
  RatPoly ml = minimal_factor(f_lambda, la.approximable());
  RatPoly mm = minimal_factor(f_mu, mu.approximable());
  if (!is_real_root(ml, la)) throw DomainError("compose_field: selected lambda is not real");
  if (!is_real_root(mm, mu)) throw DomainError("compose_field: selected mu is not real");

  for (long c = 0; c <= c_bound; ++c) {
    if (c == 0 && mm.degree() > 1) continue;
    RatPoly R = sum_resultant(ml, mm, c).monic();
    const BigRat cq(c);
    Approximable gamma{[la, mu, cq](long bits) {
      long guard = 2 + log2_ceil(abs(cq) + 1);
      ComplexBox b = la.box(bits + guard) + mu.box(bits + guard) * ComplexBox::point(cq);
      return b.rounded(bits + 1);
    }};
    RatPoly common = poly_gcd(R, R.derivative());
    if (common.degree() >= 1 && is_root_of(R, gamma, common)) continue;

    RatPoly mg = minimal_factor(R, gamma);
    BigInt d = integrality_scale(mg);
    const BigRat dq(d);
    RatPoly g = (rpow(dq, mg.degree()) * mg.scaled(1 / dq)).monic();
    NumberField K = make_field(g);
    Approximable scaled_gamma{[gamma, dq](long bits) {
      ComplexBox b = gamma.at(bits + log2_ceil(dq) + 1);
      return (b * ComplexBox::point(dq)).rounded(bits + 1);
    }};
    size_t emb = identify_root(g, scaled_gamma);

    // gamma / d as an element of K
    FieldElement gam = elem_scale(K, elem_generator(K), 1 / dq);
    FieldElement lam, m_el;
    if (c == 0) {
      lam = gam;
      m_el = elem_rational(K, mm.coeffs()[0] * -1);
    } else {
      // lambda is the common root of ml(X) and mm((gamma - X) / c)
      KPoly lin{elem_scale(K, gam, 1 / cq), elem_rational(K, -1 / cq)};
      KPoly h = kpoly_gcd(K, kpoly_from(K, ml), kpoly_compose(K, mm, lin));
      if (h.size() != 2) throw DomainError("compose_field: primitive element recovery failed");
      lam = elem_neg(K, h[0]);
      m_el = elem_scale(K, elem_sub(K, gam, lam), 1 / cq);
    }
    if (minpoly_of_elem(K, lam) != ml || minpoly_of_elem(K, m_el) != mm)
      throw DomainError("compose_field: exact verification failed");
    ComplexBox lb = elem_image(K, lam, emb).at(64), mb = elem_image(K, m_el, emb).at(64);
    if (!lb.intersects(la.box(64)) || !mb.intersects(mu.box(64)))
      throw DomainError("compose_field: numeric verification failed");
    return ComposedField{std::move(K), lam, m_el, c, d, emb};
  }
  throw DomainError("compose_field: no primitive element lambda + c mu with c <= " + std::to_string(c_bound));
}

StabilizedPower stabilized_power(const NumberField& K, const FieldElement& lambda, const FieldElement& mu,
                                 int l_max) {
  if (elem_is_zero(lambda) || elem_is_zero(mu)) throw DomainError("stabilized_power: zero element");
  StabilizedPower best;
  best.degree = K.degree + 1;
  FieldElement lp = lambda, mp = mu;
  for (int l = 1; l <= l_max; ++l) {
    int d = subfield_degree(K, {lp, mp});
    if (d < best.degree) {
      best.degree = d;
      best.l = l;
    }
    lp = elem_mul(K, lp, lambda);
    mp = elem_mul(K, mp, mu);
  }
  best.searched_up_to = l_max;
  return best;
}

StableGenerator find_stable_generator(const NumberField& K, const FieldElement& lambda, const FieldElement& mu,
                                      int search_bound, int power_bound) {
  for (int s = 1; s <= search_bound; ++s)
    for (int m = 0; m <= s; ++m) {
      int n = s - m;
      FieldElement sigma = elem_mul(K, elem_pow(K, lambda, n), elem_pow(K, mu, m));
      FieldElement p = sigma;
      bool ok = true;
      for (int u = 1; u <= power_bound && ok; ++u) {
        if (subfield_degree(K, {p}) != K.degree) ok = false;
        p = elem_mul(K, p, sigma);
      }
      if (ok) return StableGenerator{n, m, sigma, power_bound};
    }
  throw DomainError("find_stable_generator: no generator with n + m <= " + std::to_string(search_bound) +
                    "; try a larger search bound");
}

}  // namespace algdense
