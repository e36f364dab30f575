#pragma once

#include <string>
#include <vector>

#include "algdense/roots.hpp"

namespace algdense {

/// A real algebraic number: a rational polynomial and a box isolating the chosen real root.
struct RealAlgebraic {
  RatPoly poly;
  ComplexBox box;

  static RealAlgebraic rational(const BigRat& q);
  /// The real root of poly nearest to `near`; DomainError if there is none or if two
  /// real roots are equally plausible at the selector's resolution `tolerance`.
  static RealAlgebraic root_near(const RatPoly& poly, const BigRat& near, const BigRat& tolerance);

  AlgebraicNumber number() const { return AlgebraicNumber(poly, box); }
  bool is_rational() const { return squarefree_part(poly).degree() == 1; }
  BigRat rational_value() const;
};

struct XiSpec {
  enum class Kind { Rational, Algebraic, Decimal };
  Kind kind = Kind::Rational;
  /// Exact value for Rational and Decimal (the decimal literal read exactly).
  BigRat value = 0;
  RealAlgebraic algebraic;
  std::string literal;
};

struct PairSpec {
  RealAlgebraic lambda, mu;
  XiSpec xi;
};

struct Bounds {
  long independence = 1'000'000;
  int power_u = 24;
  int l_max = 12;
  int s_max = 8;
  long ell_max = 10;
  int generator_search = 10;
  long c_bound = 64;
};

struct ProblemSpec {
  std::vector<PairSpec> pairs;
  Bounds bounds;
  long kappa_out = 64;
  long grid_m = 16, grid_n = 16;
};

}  // namespace algdense
