#pragma once

#include <vector>

#include "algdense/numfield.hpp"
#include "algdense/problem.hpp"

namespace algdense {

/// One factor of the product group: (R^r x prod_{p | a} Q_p^r) / Z[1/a]^r.
struct SolenoidComponent {
  NumberField field;
  FieldElement lambda, mu;
  int r = 0;
  BigInt a = 1;
  /// primes[0] == 0 stands for infinity; the rest divide a.
  std::vector<BigInt> primes;
  /// Multiplication by lambda and mu on row vectors of power-basis coordinates.
  MultMatrix A, B;
};

struct SolenoidSystem {
  std::vector<SolenoidComponent> components;
};

SolenoidSystem build_system(const std::vector<NumberField>& fields, const std::vector<FieldElement>& lambdas,
                            const std::vector<FieldElement>& mus);
SolenoidSystem build_system(const ProblemSpec& spec);

/// {x}_p for a prime p, the usual fractional part for p == 0.
BigRat padic_fractional(const BigRat& x, const BigInt& p);

/// A rational vector per component.
using GlobalPoint = std::vector<std::vector<BigRat>>;

/// coords[i][j] is the coordinate vector at the j-th prime of component i.
struct RationalSolenoidPoint {
  std::vector<std::vector<std::vector<BigRat>>> coords;
};

/// The image of a global vector y: y at infinity and -y at every finite prime.
RationalSolenoidPoint embed_global(const SolenoidSystem& sys, const GlobalPoint& y);

/// Sum of the p-fractional parts of the first coordinates, mod 1.
BigRat project_Pi(const SolenoidSystem& sys, const RationalSolenoidPoint& x);

/// y A_i (or y B_i) per component.
GlobalPoint apply_A(const SolenoidSystem& sys, const GlobalPoint& y);
GlobalPoint apply_B(const SolenoidSystem& sys, const GlobalPoint& y);

/// Canonical representative of y modulo Z[1/a_i]^{r_i}: coordinates in [0, 1) with
/// denominators coprime to a_i.
GlobalPoint reduce_mod_lattice(const SolenoidSystem& sys, const GlobalPoint& y);

/// True iff y - z lies in Z[1/a_i]^{r_i} for every i.
bool congruent_mod_lattice(const SolenoidSystem& sys, const GlobalPoint& y, const GlobalPoint& z);

struct TorsionWitness {
  long ell = 0;
  int s = 0;
  GlobalPoint point;
};

/// First (ell, s) in lexicographic order with a point of order ell, nonzero in every
/// component, fixed by A^s and B^s. Throws DomainError when the search is exhausted.
TorsionWitness find_fixed_torsion(const SolenoidSystem& sys, int s_max, long ell_max);

/// Exact check of A^s y = B^s y = y modulo the lattice.
bool verify_torsion(const SolenoidSystem& sys, const TorsionWitness& w);

/// Orbit of y modulo the lattice under the semigroup generated by A and B, sorted.
std::vector<GlobalPoint> torsion_orbit(const SolenoidSystem& sys, const GlobalPoint& y);

}  // namespace algdense
