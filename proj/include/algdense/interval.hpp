#pragma once

#include <functional>
#include <string>

#include "algdense/arith.hpp"
#include "algdense/ratpoly.hpp"

namespace algdense {

/// Largest multiple of 2^-bits that is <= x.
BigRat round_down(const BigRat& x, long bits);
/// Smallest multiple of 2^-bits that is >= x.
BigRat round_up(const BigRat& x, long bits);
/// Nearest multiple of 2^-bits (ties toward -inf).
BigRat round_near(const BigRat& x, long bits);
bool is_dyadic(const BigRat& x);
BigRat pow2(long e);
/// Smallest e with |x| <= 2^e; x != 0.
long log2_ceil(const BigRat& x);

/// Closed real interval with rational endpoints.
struct Interval {
  BigRat lo, hi;

  Interval() = default;
  Interval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {}
  static Interval point(const BigRat& x) { return {x, x}; }

  BigRat width() const { return hi - lo; }
  BigRat mid() const { return (lo + hi) / 2; }
  bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  /// Outward rounding of both endpoints to multiples of 2^-bits.
  Interval rounded(long bits) const { return {round_down(lo, bits), round_up(hi, bits)}; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Requires 0 not in b.
Interval operator/(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
Interval pow(const Interval& a, unsigned long e, long bits);
/// Enclosure of sqrt over the nonnegative part of a, endpoints rounded to `bits`.
Interval sqrt(const Interval& a, long bits);
Interval hull(const Interval& a, const Interval& b);
/// Enclosure of the natural log of x > 0, endpoints rounded to `bits`.
Interval log(const Interval& x, long bits);

/// Axis-aligned complex rectangle [re_lo, re_hi] x [im_lo, im_hi] with dyadic
/// endpoints when produced by root isolation.
struct ComplexBox {
  BigRat re_lo, re_hi, im_lo, im_hi;

  ComplexBox() = default;
  ComplexBox(BigRat rl, BigRat rh, BigRat il, BigRat ih)
      : re_lo(std::move(rl)), re_hi(std::move(rh)), im_lo(std::move(il)), im_hi(std::move(ih)) {}
  ComplexBox(const Interval& re, const Interval& im) : ComplexBox(re.lo, re.hi, im.lo, im.hi) {}
  static ComplexBox point(const BigRat& re, const BigRat& im = 0) { return {re, re, im, im}; }

  Interval re() const { return {re_lo, re_hi}; }
  Interval im() const { return {im_lo, im_hi}; }
  BigRat re_mid() const { return (re_lo + re_hi) / 2; }
  BigRat im_mid() const { return (im_lo + im_hi) / 2; }
  /// Larger side length.
  BigRat side() const;
  bool intersects(const ComplexBox& o) const { return re().intersects(o.re()) && im().intersects(o.im()); }
  bool subset_of(const ComplexBox& o) const { return re().subset_of(o.re()) && im().subset_of(o.im()); }
  bool contains(const BigRat& re, const BigRat& im) const {
    return re_lo <= re && re <= re_hi && im_lo <= im && im <= im_hi;
  }
  ComplexBox intersect(const ComplexBox& o) const;
  ComplexBox rounded(long bits) const { return {re().rounded(bits), im().rounded(bits)}; }
  bool valid() const { return re_lo <= re_hi && im_lo <= im_hi; }
  std::string to_string(int digits = 20) const;
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
/// Requires 0 not in b.
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);
ComplexBox inverse(const ComplexBox& b);
/// Enclosure of |z|^2.
Interval abs2(const ComplexBox& z);
/// Enclosure of |z| with endpoints rounded to `bits`.
Interval abs(const ComplexBox& z, long bits);
ComplexBox pow(const ComplexBox& z, unsigned long e, long bits);
/// Horner evaluation with outward rounding to `bits` after every step.
ComplexBox eval(const RatPoly& p, const ComplexBox& z, long bits);
Interval eval(const RatPoly& p, const Interval& x, long bits);

/// A value that can be enclosed arbitrarily tightly: at(bits) returns a box of
/// side at most 2^-bits containing the value.
struct Approximable {
  std::function<ComplexBox(long bits)> at;
};

/// Enclosure of p(value) with side <= 2^-bits.
Approximable image_of(const RatPoly& p, const Approximable& value);
Approximable ratio_of(const Approximable& num, const Approximable& den);

}  // namespace algdense
