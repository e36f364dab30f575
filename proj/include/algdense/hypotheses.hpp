#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algdense/places.hpp"
#include "algdense/problem.hpp"

namespace algdense {

enum class Verdict { Holds, Fails, Undecided };
std::string to_string(Verdict v);

/// Exponent cap for exact power comparisons in the independence test.
inline constexpr long kExactPowerCap = 4096;

struct IndependenceResult {
  enum class Kind { Independent, Dependent, Undecided };
  Kind kind = Kind::Undecided;
  /// lambda^m = mu^n when Dependent.
  long m = 0, n = 0;
  std::string certificate;
};

/// Decides whether lambda^m = mu^n has a solution (m, n) != (0, 0). lambda and mu are
/// real with absolute value > 1 at embedding `embedding` of K.
IndependenceResult check_multiplicative_independence(const NumberField& K, const FieldElement& lambda,
                                                     const FieldElement& mu, size_t embedding, long bound);

/// Smallest d with (e2 / e1)^d = 1, if any. e1 and e2 are the roots of f1 and f2 isolated
/// by the boxes.
std::optional<unsigned long> is_root_of_unity_ratio(const RatPoly& f1, const ComplexBox& box1, const RatPoly& f2,
                                                    const ComplexBox& box2);

/// A pair placed in its field.
struct PreparedPair {
  ComposedField composed;
  RatPoly lambda_minpoly, mu_minpoly;
};

PreparedPair prepare_pair(const PairSpec& pair, const Bounds& bounds);

struct ConditionBResult {
  Verdict verdict = Verdict::Holds;
  size_t i = 0, j = 0, embedding = 0;
  unsigned long order_lambda = 0, order_mu = 0, u = 0;
};

ConditionBResult check_condition_b(const std::vector<PairSpec>& pairs, const std::vector<PreparedPair>& prepared);

struct HyperbolicityResult {
  Verdict verdict = Verdict::Holds;
  /// Witness or undecided place: prime (0 for infinity) and place index.
  BigInt prime = 0;
  size_t place = 0;
  std::string reason;
};

HyperbolicityResult check_hyperbolicity(const NumberField& K, const std::vector<FieldElement>& generators);
/// Same, on a precomputed place table for exactly these generators.
HyperbolicityResult check_hyperbolicity(const NumberField& K, const std::vector<FieldElement>& generators,
                                        const std::vector<PlaceRecord>& places);

struct XiResult {
  enum class Kind { OutsideField, InsideField, AssumedOutside };
  Kind kind = Kind::OutsideField;
  std::vector<BigRat> coords;
  std::string certificate;
};

XiResult check_xi(const PreparedPair& prepared, const XiSpec& xi, const Bounds& bounds);

struct PairReport {
  IndependenceResult independence;
  HyperbolicityResult hyperbolicity;
  XiResult xi;
  int field_degree = 0;
  RatPoly field_minpoly;
  long c = 0;
  StabilizedPower l0;
  std::optional<StableGenerator> generator;
  std::string generator_note;
};

struct HypothesisReport {
  std::vector<PairReport> pairs;
  ConditionBResult condition_b;
  Verdict condition_a = Verdict::Holds, condition_c = Verdict::Holds, xi_condition = Verdict::Holds;
  bool xi_assumed = false;
  enum class Overall { TheoremApplies, Fails, Undecided };
  Overall overall = Overall::Undecided;
  /// First failing or undecided condition: "a", "b", "c", "xi" or empty.
  std::string failed_condition;
};

std::string to_string(HypothesisReport::Overall o);

/// Validates |lambda_i|, |mu_i| > 1 and runs all checks.
HypothesisReport check_problem(const ProblemSpec& spec);

}  // namespace algdense
