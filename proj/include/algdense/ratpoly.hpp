#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "algdense/arith.hpp"

namespace algdense {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const BigRat& c);
  static RatPoly monomial(const BigRat& c, int degree);
  /// x - c
  static RatPoly linear_root(const BigRat& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(int i) const;
  const BigRat& leading() const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const BigRat& c, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  BigRat operator()(const BigRat& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  /// f(g(x))
  RatPoly compose(const RatPoly& g) const;
  /// x^deg * f(1/x); requires f(0) != 0 for degree preservation.
  RatPoly reversed() const;
  /// f(c x)
  RatPoly scaled(const BigRat& c) const;
  /// f(x + c)
  RatPoly shifted(const BigRat& c) const;

  /// Integer polynomial with the same roots: content removed, positive leading coefficient.
  std::vector<BigInt> primitive_integer() const;
  bool has_integer_coeffs() const;
  /// lcm of coefficient denominators.
  BigInt denominator() const;

  std::string to_string(const char* var = "x") const;

 private:
  void normalize();
  std::vector<BigRat> coeffs_;
};

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);
RatPoly pow(const RatPoly& a, unsigned e);
RatPoly from_integers(const std::vector<BigInt>& c);

/// Res(f, g) = lc(g)^deg f * prod over roots b of g of f(b).
BigRat poly_resultant(const RatPoly& f, const RatPoly& g);
/// Monic gcd (zero only if both are zero, which is rejected).
RatPoly poly_gcd(const RatPoly& f, const RatPoly& g);
/// Monic f / gcd(f, f').
RatPoly squarefree_part(const RatPoly& f);
bool is_squarefree(const RatPoly& f);
RatPoly cyclotomic(unsigned d);

/// Polynomial in x whose coefficients depend on a second variable y,
/// used for resultants eliminating y. Stored as coefficient lists in y,
/// indexed by powers of x: terms[i] is the y-polynomial multiplying x^i.
using BiPoly = std::vector<RatPoly>;

/// Res_y(f(y), G(x, y)) as a polynomial in x, by evaluation at integer points
/// and interpolation. `x_degree_bound` bounds the x-degree of the result.
RatPoly resultant_in_x(const RatPoly& f_of_y, const BiPoly& g_xy, int x_degree_bound);

/// Res_y(f(x - c y), g(y)): its roots are a + c b for roots a of f, b of g.
RatPoly sum_resultant(const RatPoly& f, const RatPoly& g, const BigRat& c);
/// Res_y(f(y), g(x y)): its roots are b / a for roots a of f, b of g (f(0) != 0).
RatPoly ratio_resultant(const RatPoly& f, const RatPoly& g);
/// Res_y(f(y), x - h(y)): the characteristic polynomial of h(a) over Q(a) for monic f.
RatPoly image_charpoly(const RatPoly& f, const RatPoly& h);

RatPoly lagrange_interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys);

}  // namespace algdense
