#include "algdense/places.hpp"

#include <algorithm>

namespace algdense {

namespace {

struct Point {
  long x;
  BigRat y;
};

// Lower convex hull vertices of points sorted by x.
std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> h;
  for (auto& q : pts) {
    while (h.size() >= 2) {
      const Point& o = h[h.size() - 2];
      const Point& a = h.back();
      BigRat cross = BigRat(a.x - o.x) * (q.y - o.y) - (a.y - o.y) * BigRat(q.x - o.x);
      if (cross <= 0) h.pop_back();
      else break;
    }
    h.push_back(q);
  }
  return h;
}

BigRat hull_value(const std::vector<Point>& h, long x) {
  for (size_t k = 0; k + 1 < h.size(); ++k)
    if (h[k].x <= x && x <= h[k + 1].x)
      return h[k].y + (h[k + 1].y - h[k].y) * BigRat(x - h[k].x, h[k + 1].x - h[k].x);
  return h.back().y;
}

// v_p(x), or cap when x = 0 mod p^cap.
long vpz(const BigInt& x, const BigInt& p, long cap) {
  if (x == 0) return cap;
  BigInt t;
  long v = static_cast<long>(mpz_remove(t.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
  return std::min(v, cap);
}

BigInt coeff(const modp::Poly& a, long i) { return i < static_cast<long>(a.size()) ? a[i] : BigInt(0); }

[[noreturn]] void precision_fail(const char* what, long P) {
  throw PrecisionError(std::string("padic_factor: ") + what, 2 * P);
}

// Newton polygon of a polynomial known modulo p^P; checks that unknown
// coefficients cannot touch the hull.
std::vector<Point> padic_hull(const std::vector<long>& vals, long P) {
  std::vector<Point> pts;
  for (size_t i = 0; i < vals.size(); ++i)
    if (vals[i] < P) pts.push_back({static_cast<long>(i), BigRat(vals[i])});
  if (pts.empty() || pts.front().x != 0) precision_fail("constant term not determined", P);
  auto h = lower_hull(pts);
  for (size_t i = 0; i < vals.size(); ++i)
    if (vals[i] >= P && hull_value(h, static_cast<long>(i)) >= P) precision_fail("Newton polygon not determined", P);
  return h;
}

class PadicFactorizer {
 public:
  PadicFactorizer(BigInt p, int max_depth) : p_(std::move(p)), max_depth_(max_depth) {}

  std::vector<LocalFactor> unit(const modp::Poly& A, long P, int depth) {
    const int n = modp::degree(A);
    if (n == 1) return {make(A, P, 1, 1)};
    if (depth > max_depth_) return {loose(A, P)};
    auto fac = modp::factor(modp::reduce(A, p_), p_);
    if (fac.size() > 1) {
      std::vector<modp::Poly> parts;
      for (auto& [phi, m] : fac) {
        modp::Poly pw{1};
        for (unsigned k = 0; k < m; ++k) pw = modp::mul(pw, phi, p_);
        parts.push_back(pw);
      }
      std::vector<LocalFactor> out;
      for (auto& lifted : modp::hensel_lift_multi(A, parts, p_, P)) {
        auto sub = unit(lifted, P, depth);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    auto& [phi, mult] = fac[0];
    if (mult == 1) return {make(A, P, 1, n)};
    if (modp::degree(phi) == 1) {
      BigInt c = (p_ - phi[0]) % p_;
      auto out = positive(modp::shift(A, c, ipow(p_, P)), P, depth);
      for (auto& F : out) {
        BigInt M = ipow(p_, F.precision);
        F.coeffs = modp::shift(F.coeffs, (M - c) % M, M);
      }
      return out;
    }
    return phi_adic(A, phi, static_cast<int>(mult), P);
  }

  // All roots of B have positive valuation.
  std::vector<LocalFactor> positive(const modp::Poly& B, long P, int depth) {
    const int n = modp::degree(B);
    if (n == 1) return {make(B, P, 1, 1)};
    if (depth > max_depth_) return {loose(B, P)};
    std::vector<long> vals;
    for (int i = 0; i <= n; ++i) vals.push_back(vpz(coeff(B, i), p_, P));
    auto hull = padic_hull(vals, P);

    if (hull.size() > 2) {
      // root valuations decrease from left to right along the hull
      for (size_t k = 0; k + 2 < hull.size(); ++k) {
        BigRat s_left = -(hull[k + 1].y - hull[k].y) / BigRat(hull[k + 1].x - hull[k].x);
        BigRat s_right = -(hull[k + 2].y - hull[k + 1].y) / BigRat(hull[k + 2].x - hull[k + 1].x);
        BigInt t = -floor_rat(-s_right);
        if (BigRat(t) <= s_left) return split(B, vals, hull, t.get_si(), P, depth);
      }
      return {loose(B, P)};
    }

    BigRat s = hull[0].y / BigRat(n);  // common root valuation
    const long h = s.get_num().get_si(), e = s.get_den().get_si();
    if (e == n) return {make(B, P, static_cast<int>(e), 1)};
    if (e == 1) {
      const long PC = P - h * n;
      if (PC < 1) precision_fail("precision exhausted by rescaling", P);
      const BigInt MC = ipow(p_, PC);
      modp::Poly C;
      for (int i = 0; i <= n; ++i) C.push_back(coeff(B, i) / ipow(p_, h * (n - i)));
      C = modp::reduce(C, MC);
      auto out = unit(C, PC, depth + 1);
      for (auto& F : out) {
        BigInt M = ipow(p_, F.precision);
        for (int j = 0; j <= F.degree; ++j) F.coeffs[j] *= ipow(p_, h * (F.degree - j));
        F.coeffs = modp::reduce(F.coeffs, M);
      }
      return out;
    }
    // residual polynomial of the single side
    const long k = n / e;
    modp::Poly R;
    for (long j = 0; j <= k; ++j) R.push_back(coeff(B, j * e) / ipow(p_, (k - j) * h));
    R = modp::reduce(R, p_);
    if (modp::degree(R) == k && modp::is_irreducible(R, p_)) return {make(B, P, static_cast<int>(e), static_cast<int>(k))};
    return {loose(B, P)};
  }

 private:
  std::vector<LocalFactor> split(const modp::Poly& B, const std::vector<long>& vals, const std::vector<Point>& hull,
                                 long t, long P, int depth) {
    const int n = modp::degree(B);
    long c = vals[0];
    for (auto& pt : hull) c = std::min(c, pt.y.get_num().get_si() + t * pt.x);
    const long PC = P - c;
    if (PC < 1) precision_fail("precision exhausted by slope splitting", P);
    const BigInt MC = ipow(p_, PC);
    modp::Poly C;
    for (int i = 0; i <= n; ++i) {
      BigInt num = coeff(B, i) * ipow(p_, t * i);
      C.push_back(num / ipow(p_, c));
    }
    C = modp::reduce(C, MC);
    modp::Poly Cbar = modp::reduce(C, p_);
    size_t m = 0;
    while (m < Cbar.size() && Cbar[m] == 0) ++m;
    modp::Poly g0, h0;
    if (m > 0) {
      // roots of positive valuation against the rest
      g0.assign(Cbar.begin() + static_cast<long>(m), Cbar.end());
      h0.assign(m + 1, BigInt(0));
      h0[m] = 1;
    } else {
      // roots of nonnegative valuation against the rest
      g0 = {Cbar.back()};
      h0 = modp::monic(Cbar, p_);
    }
    if (modp::degree(h0) <= 0 || modp::degree(h0) >= n) precision_fail("slope splitting degenerate", P);
    auto [g, hi] = modp::hensel_lift(C, g0, h0, p_, PC);
    m = static_cast<size_t>(modp::degree(hi));
    modp::Poly Bh;
    for (size_t j = 0; j <= m; ++j) Bh.push_back(coeff(hi, static_cast<long>(j)) * ipow(p_, t * static_cast<long>(m - j)));
    Bh = modp::reduce(Bh, MC);
    modp::Poly Bl = modp::divmod(modp::reduce(B, MC), Bh, MC).first;
    auto out = positive(Bh, PC, depth);
    auto lo = positive(Bl, PC, depth);
    out.insert(out.end(), lo.begin(), lo.end());
    return out;
  }

  std::vector<LocalFactor> phi_adic(const modp::Poly& A, const modp::Poly& phi, int n, long P) {
    const BigInt M = ipow(p_, P);
    std::vector<long> vals;
    modp::Poly a = A;
    for (int i = 0; i <= n; ++i) {
      auto [q, r] = modp::divmod(a, phi, M);
      long v = P;
      for (auto& x : r) v = std::min(v, vpz(x, p_, P));
      vals.push_back(v);
      a = q;
    }
    auto hull = padic_hull(vals, P);
    if (hull.size() == 2 && hull[1].x == n && hull[1].y == 0) {
      BigInt g = gcd(hull[0].y.get_num(), BigInt(n));
      if (g == 1) return {make(A, P, n, modp::degree(phi))};
    }
    return {loose(A, P)};
  }

  LocalFactor make(const modp::Poly& A, long P, int e, int f) const {
    return LocalFactor{p_, P, A, modp::degree(A), f, e, true};
  }
  LocalFactor loose(const modp::Poly& A, long P) const { return LocalFactor{p_, P, A, modp::degree(A), 0, 0, false}; }

  BigInt p_;
  int max_depth_;
};

// Valuation of the determinant of a matrix over Z_p known modulo p^Q.
std::optional<long> det_valuation(std::vector<modp::Poly> a, const BigInt& p, long Q) {
  const size_t n = a.size();
  long total = 0;
  for (size_t col = 0; col < n; ++col) {
    size_t best = col;
    long bv = Q;
    for (size_t r = col; r < n; ++r) {
      long v = vpz(coeff(a[r], static_cast<long>(col)), p, Q);
      if (v < bv) {
        bv = v;
        best = r;
      }
    }
    if (bv >= Q) return std::nullopt;
    std::swap(a[best], a[col]);
    const long Qn = Q - bv;
    const BigInt Mn = ipow(p, Qn), pv = ipow(p, bv);
    BigInt u = coeff(a[col], static_cast<long>(col)) / pv, uinv;
    mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), Mn.get_mpz_t());
    for (size_t i = col + 1; i < n; ++i) {
      BigInt f = coeff(a[i], static_cast<long>(col)) / pv * uinv;
      modp::Poly row(n, BigInt(0));
      for (size_t j = col + 1; j < n; ++j) row[j] = coeff(a[i], static_cast<long>(j)) - f * coeff(a[col], static_cast<long>(j));
      for (auto& x : row) {
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), Mn.get_mpz_t());
      }
      a[i] = row;
    }
    total += bv;
    Q = Qn;
  }
  return total;
}

RatPoly trace_polynomial(const RatPoly& m) {
  const int k = m.degree() / 2;
  RatPoly R = m;
  std::vector<BigRat> T(k + 1);
  const RatPoly x2p1{1, 0, 1};
  for (int j = k; j >= 0; --j) {
    T[j] = R.coeff(k + j);
    R = R - T[j] * RatPoly::monomial(1, k - j) * pow(x2p1, j);
  }
  if (!R.is_zero()) throw DomainError("trace_polynomial: polynomial is not self-reciprocal");
  return RatPoly(T);
}

}  // namespace

std::vector<BigRat> NewtonPolygon::root_valuations() const {
  std::vector<BigRat> out;
  for (auto& s : segments)
    for (int i = 0; i < s.length; ++i) out.push_back(-s.slope);
  return out;
}

NewtonPolygon newton_polygon(const RatPoly& f, const BigInt& p) {
  if (f.is_zero() || f.coeff(0) == 0) throw DomainError("newton_polygon: f(0) = 0; strip powers of x first");
  std::vector<Point> pts;
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i) != 0) pts.push_back({i, BigRat(vp(f.coeff(i), p))});
  auto h = lower_hull(pts);
  NewtonPolygon np;
  for (size_t k = 0; k + 1 < h.size(); ++k)
    np.segments.push_back({(h[k + 1].y - h[k].y) / BigRat(h[k + 1].x - h[k].x), static_cast<int>(h[k + 1].x - h[k].x)});
  return np;
}

std::vector<LocalFactor> padic_factor(const RatPoly& g, const BigInt& p, long N, long max_precision) {
  if (g.degree() < 1 || g.leading() != 1 || !g.has_integer_coeffs())
    throw DomainError("padic_factor: expected a monic integer polynomial");
  if (!is_squarefree(g)) throw DomainError("padic_factor: polynomial is not squarefree");
  if (!is_prime(p)) throw DomainError("padic_factor: " + p.get_str() + " is not prime");
  for (long P = N; P <= max_precision; P *= 2) {
    try {
      PadicFactorizer fz(p, g.degree());
      return fz.unit(modp::reduce(g, ipow(p, P)), P, 0);
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("padic_factor: factors not separated at precision " + std::to_string(max_precision),
                       2 * max_precision);
}

BigRat valuation_at_place(const LocalFactor& F, const RatPoly& h) {
  if (h.is_zero()) throw DomainError("valuation_at_place: zero element");
  const BigInt d = h.denominator();
  const BigInt M = ipow(F.p, F.precision);
  modp::Poly r = modp::rem(modp::reduce(BigRat(d) * h, M), F.coeffs, M);
  std::vector<modp::Poly> rows;
  modp::Poly x{0, 1};
  for (int j = 0; j < F.degree; ++j) {
    rows.push_back(r);
    r = modp::rem(modp::mul(r, x, M), F.coeffs, M);
  }
  auto v = det_valuation(rows, F.p, F.precision);
  if (!v) throw PrecisionError("valuation_at_place: valuation not determined", 2 * F.precision);
  BigRat out(*v, F.degree);
  out.canonicalize();
  return out - vp(BigRat(d), F.p);
}

std::set<BigInt> candidate_primes(const NumberField& K, const std::vector<FieldElement>& elems) {
  std::set<BigInt> out;
  for (auto& e : elems) {
    if (elem_is_zero(e)) throw DomainError("candidate_primes: zero element");
    BigRat N = poly_resultant(elem_poly(e), K.minpoly);
    for (auto& q : prime_divisors(abs(N.get_num()))) out.insert(q);
    for (auto& q : prime_divisors(N.get_den())) out.insert(q);
    for (auto& q : prime_divisors(elem_poly(e).denominator())) out.insert(q);
  }
  return out;
}

bool on_unit_circle(const NumberField& K, const FieldElement& x, size_t embedding) {
  RatPoly m = minpoly_of_elem(K, x);
  if (m.degree() == 1) {
    BigRat q = -m.coeff(0);
    return q == 1 || q == -1;
  }
  if (m.coeff(0) == 0) return false;
  RatPoly mrec = poly_gcd(m, m.reversed());
  if (mrec.degree() < m.degree() || m.degree() % 2) return false;
  RatPoly T = trace_polynomial(mrec);
  Approximable z = elem_image(K, x, embedding);
  Approximable t{[z](long bits) {
    for (long guard = 8; guard < (1L << 16); guard *= 2) {
      ComplexBox b = z.at(bits + guard);
      if (b.re().contains_zero() && b.im().contains_zero()) continue;
      ComplexBox s = b + inverse(b);
      if (s.side() <= pow2(-(bits + 1))) return s.rounded(bits + 2);
    }
    throw PrecisionError("on_unit_circle: trace value not resolved", bits);
  }};
  size_t idx = identify_root(T, t);
  IsolatedRoot root = isolate_roots_detailed(T, 32)[idx];
  if (!root.real) return false;
  for (long bits = 32; bits <= 8192; bits *= 2) {
    ComplexBox b = refine_root(T, root.box, bits);
    if (b.re_lo > -2 && b.re_hi < 2) return true;
    if (b.re_lo > 2 || b.re_hi < -2) return false;
  }
  throw PrecisionError("on_unit_circle: undecided", 8192);
}

std::vector<PlaceRecord> archimedean_places(const NumberField& K, const std::vector<FieldElement>& elems,
                                            long bits) {
  std::vector<PlaceRecord> out;
  for (size_t i = 0; i < K.embeddings.size(); ++i) {
    PlaceRecord r;
    r.index = i;
    r.embedding = i;
    r.real_embedding = K.embeddings[i].real;
    for (auto& e : elems) {
      r.abs_values.push_back(abs(elem_image(K, e, i).at(bits + 2), bits));
      r.on_unit_circle.push_back(on_unit_circle(K, e, i));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PlaceRecord> finite_places(const NumberField& K, const std::vector<FieldElement>& elems,
                                       const BigInt& p) {
  for (long N = kDefaultPadicPrecision; N <= kMaxPadicPrecision; N *= 2) {
    auto factors = padic_factor(K.minpoly, p, N);
    try {
      std::vector<PlaceRecord> out;
      for (size_t i = 0; i < factors.size(); ++i) {
        PlaceRecord r;
        r.prime = p;
        r.index = i;
        r.factor = factors[i];
        for (auto& e : elems) r.valuations.push_back(valuation_at_place(factors[i], elem_poly(e)));
        out.push_back(std::move(r));
      }
      return out;
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("finite_places: valuations not determined", 2 * kMaxPadicPrecision);
}

std::vector<PlaceRecord> place_table(const NumberField& K, const std::vector<FieldElement>& elems) {
  auto out = archimedean_places(K, elems);
  for (auto& p : candidate_primes(K, elems)) {
    auto fin = finite_places(K, elems, p);
    out.insert(out.end(), fin.begin(), fin.end());
  }
  return out;
}

}  // namespace algdense
