#include "algdense/interval.hpp"

#include <algorithm>

#include <mpfr.h>

namespace algdense {

BigRat pow2(long e) {
  BigInt one = 1;
  if (e >= 0) return BigRat(BigInt(one << static_cast<unsigned long>(e)));
  return BigRat(one, BigInt(one << static_cast<unsigned long>(-e)));
}

namespace {

BigInt scaled_floor(const BigRat& x, long bits) {
  BigInt num = x.get_num(), den = x.get_den();
  if (bits >= 0) num <<= static_cast<unsigned long>(bits);
  else den <<= static_cast<unsigned long>(-bits);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigRat unscale(const BigInt& q, long bits) { return BigRat(q) * pow2(-bits); }

}  // namespace

BigRat round_down(const BigRat& x, long bits) {
  if (x.get_den() == 1 && bits >= 0) return x;
  return unscale(scaled_floor(x, bits), bits);
}

BigRat round_up(const BigRat& x, long bits) { return -round_down(-x, bits); }

BigRat round_near(const BigRat& x, long bits) { return round_down(x + pow2(-bits - 1), bits); }

bool is_dyadic(const BigRat& x) {
  const BigInt& d = x.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

long log2_ceil(const BigRat& x) {
  if (x == 0) throw DomainError("log2 of zero");
  BigRat a = abs(x);
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2)) - 1;
  while (pow2(e) < a) ++e;
  while (pow2(e - 1) >= a) --e;
  return e;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  BigRat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval sqr(const Interval& a) {
  BigRat l2 = a.lo * a.lo, h2 = a.hi * a.hi;
  if (a.contains_zero()) return {0, std::max(l2, h2)};
  return {std::min(l2, h2), std::max(l2, h2)};
}

Interval pow(const Interval& a, unsigned long e, long bits) {
  Interval r = Interval::point(1), b = a;
  while (e) {
    if (e & 1) r = (r * b).rounded(bits);
    e >>= 1;
    if (e) b = sqr(b).rounded(bits);
  }
  return r;
}

namespace {

// floor(sqrt(x) * 2^bits) for x >= 0
BigInt sqrt_scaled_floor(const BigRat& x, long bits) {
  BigInt t = scaled_floor(x, 2 * bits);
  if (t < 0) t = 0;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  return s;
}

}  // namespace

Interval sqrt(const Interval& a, long bits) {
  BigRat lo = a.lo < 0 ? BigRat(0) : a.lo;
  BigRat hi = a.hi < 0 ? BigRat(0) : a.hi;
  BigRat l = unscale(sqrt_scaled_floor(lo, bits), bits);
  BigInt s = sqrt_scaled_floor(hi, bits);
  BigRat h = unscale(s, bits);
  if (h * h < hi) h = unscale(s + 1, bits);
  return {l, h};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

namespace {

BigRat mpfr_log_rounded(const BigRat& x, long prec, mpfr_rnd_t rnd) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_q(t, x.get_mpq_t(), rnd);
  mpfr_log(t, t, rnd);
  BigRat r;
  mpfr_get_q(r.get_mpq_t(), t);
  mpfr_clear(t);
  return r;
}

}  // namespace

Interval log(const Interval& x, long bits) {
  if (x.lo <= 0) throw DomainError("log of an interval containing non-positive values");
  const long prec = bits + 64;
  return Interval{mpfr_log_rounded(x.lo, prec, MPFR_RNDD), mpfr_log_rounded(x.hi, prec, MPFR_RNDU)}.rounded(bits);
}

BigRat ComplexBox::side() const { return std::max(re_hi - re_lo, im_hi - im_lo); }

ComplexBox ComplexBox::intersect(const ComplexBox& o) const {
  return {std::max(re_lo, o.re_lo), std::min(re_hi, o.re_hi), std::max(im_lo, o.im_lo),
          std::min(im_hi, o.im_hi)};
}

std::string ComplexBox::to_string(int digits) const {
  return "[" + to_decimal(re_lo, digits) + ", " + to_decimal(re_hi, digits) + "] x [" +
         to_decimal(im_lo, digits) + ", " + to_decimal(im_hi, digits) + "]";
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re() + b.re(), a.im() + b.im()}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re() - b.re(), a.im() - b.im()}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  if (a.im_lo == 0 && a.im_hi == 0 && b.im_lo == 0 && b.im_hi == 0)
    return {a.re() * b.re(), Interval::point(0)};
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

Interval abs2(const ComplexBox& z) { return sqr(z.re()) + sqr(z.im()); }

ComplexBox inverse(const ComplexBox& b) {
  Interval n = abs2(b);
  if (n.lo <= 0) throw DomainError("complex division by a box containing zero");
  Interval inv(1 / n.hi, 1 / n.lo);
  if (b.im_lo == 0 && b.im_hi == 0) return {Interval(1, 1) / b.re(), Interval::point(0)};
  return {b.re() * inv, -(b.im() * inv)};
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) { return a * inverse(b); }

Interval abs(const ComplexBox& z, long bits) { return sqrt(abs2(z), bits); }

ComplexBox pow(const ComplexBox& z, unsigned long e, long bits) {
  ComplexBox r = ComplexBox::point(1), b = z;
  while (e) {
    if (e & 1) r = (r * b).rounded(bits);
    e >>= 1;
    if (e) b = (b * b).rounded(bits);
  }
  return r;
}

ComplexBox eval(const RatPoly& p, const ComplexBox& z, long bits) {
  ComplexBox acc = ComplexBox::point(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re_lo += *it;
    acc.re_hi += *it;
    acc = acc.rounded(bits);
  }
  return acc;
}

Interval eval(const RatPoly& p, const Interval& x, long bits) {
  Interval acc = Interval::point(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
    acc = acc.rounded(bits);
  }
  return acc;
}

Approximable image_of(const RatPoly& p, const Approximable& value) {
  return {[p, value](long bits) {
    long guard = 16;
    for (int attempt = 0; attempt < 40; ++attempt) {
      long w = bits + guard;
      ComplexBox b = eval(p, value.at(w), w + 8);
      if (b.side() <= pow2(-bits)) return b;
      guard *= 2;
    }
    throw PrecisionError("polynomial image did not reach requested width", bits + guard);
  }};
}

Approximable ratio_of(const Approximable& num, const Approximable& den) {
  return {[num, den](long bits) {
    long guard = 16;
    for (int attempt = 0; attempt < 40; ++attempt) {
      long w = bits + guard;
      ComplexBox d = den.at(w);
      if (abs2(d).lo > 0) {
        ComplexBox b = (num.at(w) / d).rounded(w + 8);
        if (b.side() <= pow2(-bits)) return b;
      }
      guard *= 2;
    }
    throw PrecisionError("ratio did not reach requested width", bits + guard);
  }};
}

}  // namespace algdense
