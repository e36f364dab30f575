#pragma once

#include <optional>
#include <vector>

#include "algdense/factor_search.hpp"
#include "algdense/roots.hpp"

namespace algdense {

/// Q(gamma) for gamma a root of a monic irreducible integer polynomial.
struct NumberField {
  RatPoly minpoly;
  int degree = 0;
  /// Certified roots of minpoly, one per archimedean embedding, in isolate_roots order.
  std::vector<IsolatedRoot> embeddings;
  /// Shared refinement caches for the embedded generator.
  std::vector<AlgebraicNumber> generator_images;
};

/// Coordinates in the power basis 1, gamma, ..., gamma^(r-1).
struct FieldElement {
  std::vector<BigRat> coords;
  bool operator==(const FieldElement&) const = default;
};

struct MultMatrix {
  std::vector<std::vector<BigRat>> entries;
  size_t size() const { return entries.size(); }
  bool operator==(const MultMatrix&) const = default;
};

MultMatrix operator+(const MultMatrix& a, const MultMatrix& b);
MultMatrix operator*(const MultMatrix& a, const MultMatrix& b);
MultMatrix identity_matrix(size_t n);
/// Monic characteristic polynomial (Faddeev-LeVerrier).
RatPoly charpoly(const MultMatrix& m);

/// Throws DomainError unless g is monic with integer coefficients and irreducible.
NumberField field_from_minpoly(const RatPoly& g);
/// The rationals as Q(0).
NumberField rational_field();

FieldElement elem_rational(const NumberField& K, const BigRat& q);
FieldElement elem_generator(const NumberField& K);
/// p(gamma) reduced modulo the minimal polynomial.
FieldElement elem_from_poly(const NumberField& K, const RatPoly& p);
RatPoly elem_poly(const FieldElement& x);
bool elem_is_zero(const FieldElement& x);
std::optional<BigRat> elem_as_rational(const FieldElement& x);

FieldElement elem_add(const NumberField& K, const FieldElement& x, const FieldElement& y);
FieldElement elem_sub(const NumberField& K, const FieldElement& x, const FieldElement& y);
FieldElement elem_neg(const NumberField& K, const FieldElement& x);
FieldElement elem_mul(const NumberField& K, const FieldElement& x, const FieldElement& y);
FieldElement elem_scale(const NumberField& K, const FieldElement& x, const BigRat& c);
/// Throws DomainError on zero.
FieldElement elem_inv(const NumberField& K, const FieldElement& x);
/// Negative exponents invert first.
FieldElement elem_pow(const NumberField& K, const FieldElement& x, long e);

/// Enclosures of theta_i(x) for the i-th embedding.
Approximable elem_image(const NumberField& K, const FieldElement& x, size_t embedding);

/// Row j holds the coordinates of alpha * gamma^j.
MultMatrix mult_matrix(const NumberField& K, const FieldElement& alpha);
/// Product of the distinct primes dividing any entry denominator.
BigInt denominator_radical(const MultMatrix& m);
RatPoly minpoly_of_elem(const NumberField& K, const FieldElement& x);

/// Degree over Q of the subfield generated by `gens`.
int subfield_degree(const NumberField& K, const std::vector<FieldElement>& gens);

/// Coordinates c with x = sum c_j g^j, when g generates K.
std::optional<std::vector<BigRat>> coords_in_powers(const NumberField& K, const FieldElement& g,
                                                    const FieldElement& x);

/// Polynomials with coefficients in K, lowest degree first.
using KPoly = std::vector<FieldElement>;
/// Monic gcd over K.
KPoly kpoly_gcd(const NumberField& K, KPoly a, KPoly b);

struct ComposedField {
  NumberField field;
  FieldElement lambda, mu;
  /// gamma = scale * (lambda + c mu) generates the field.
  long c = 0;
  BigInt scale = 1;
  /// Embedding sending gamma to the selected real value.
  size_t real_embedding = 0;
};

/// Q(lambda, mu) for the real roots of f_lambda, f_mu selected by the boxes.
ComposedField compose_field(const RatPoly& f_lambda, const ComplexBox& lambda_box, const RatPoly& f_mu,
                            const ComplexBox& mu_box, long c_bound = 64);

/// Smallest positive integer d with d * x an algebraic integer, x a root of the monic m.
BigInt integrality_scale(const RatPoly& m);

struct StabilizedPower {
  int l = 1;
  int degree = 1;
  int searched_up_to = 0;  // minimum is certified only up to this exponent
};

StabilizedPower stabilized_power(const NumberField& K, const FieldElement& lambda, const FieldElement& mu,
                                 int l_max);

struct StableGenerator {
  int n = 0, m = 0;
  FieldElement sigma;
  int certified_up_to = 0;
};

/// First (n, m) in diagonal order (s,0), (s-1,1), ..., (0,s), s = 1, 2, ..., with
/// deg Q(sigma^u) = [K:Q] for all u <= power_bound. Throws DomainError past search_bound.
StableGenerator find_stable_generator(const NumberField& K, const FieldElement& lambda, const FieldElement& mu,
                                      int search_bound, int power_bound);

}  // namespace algdense
