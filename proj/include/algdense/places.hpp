#pragma once

#include <set>
#include <vector>

#include "algdense/modpoly.hpp"
#include "algdense/numfield.hpp"

namespace algdense {

struct NewtonSegment {
  BigRat slope;
  int length = 0;
  bool operator==(const NewtonSegment&) const = default;
};

/// Lower convex hull of (i, v_p(a_i)); slopes strictly increasing.
struct NewtonPolygon {
  std::vector<NewtonSegment> segments;
  /// Root valuations (negated slopes) with multiplicity.
  std::vector<BigRat> root_valuations() const;
};

/// Throws DomainError if f(0) = 0 or f is zero.
NewtonPolygon newton_polygon(const RatPoly& f, const BigInt& p);

/// A monic factor of the minimal polynomial over Q_p, known modulo p^precision.
struct LocalFactor {
  BigInt p;
  long precision = 0;
  modp::Poly coeffs;
  int degree = 0;
  /// Zero when the factor is not certified irreducible.
  int residue_degree = 0;
  int ramification = 0;
  bool certified_irreducible = false;
};

inline constexpr long kDefaultPadicPrecision = 32;
inline constexpr long kMaxPadicPrecision = 2048;

/// Factorization of the monic squarefree integer polynomial g over Q_p, starting at
/// N digits and doubling on precision failure up to max_precision.
std::vector<LocalFactor> padic_factor(const RatPoly& g, const BigInt& p, long N = kDefaultPadicPrecision,
                                      long max_precision = kMaxPadicPrecision);

/// v(h(gamma)) at the place of `factor`, normalized so v(p) = 1. For a factor that is
/// not certified irreducible this is the average over the places it merges.
/// Throws PrecisionError when the factor's precision does not determine it.
BigRat valuation_at_place(const LocalFactor& factor, const RatPoly& h);

/// Primes outside of which every place valuation of every element vanishes.
std::set<BigInt> candidate_primes(const NumberField& K, const std::vector<FieldElement>& elems);

struct PlaceRecord {
  /// 0 stands for the infinite prime.
  BigInt prime = 0;
  size_t index = 0;
  // finite places
  LocalFactor factor;
  std::vector<BigRat> valuations;
  // archimedean places
  size_t embedding = 0;
  bool real_embedding = false;
  std::vector<Interval> abs_values;
  std::vector<bool> on_unit_circle;

  bool infinite() const { return prime == 0; }
};

/// Exact test |theta_i(x)| = 1.
bool on_unit_circle(const NumberField& K, const FieldElement& x, size_t embedding);

std::vector<PlaceRecord> archimedean_places(const NumberField& K, const std::vector<FieldElement>& elems,
                                            long bits = 64);
/// The places above p with valuations of elems, raising precision as needed.
std::vector<PlaceRecord> finite_places(const NumberField& K, const std::vector<FieldElement>& elems,
                                       const BigInt& p);
/// Archimedean places followed by the places above each candidate prime.
std::vector<PlaceRecord> place_table(const NumberField& K, const std::vector<FieldElement>& elems);

}  // namespace algdense
