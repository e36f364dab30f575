#pragma once

#include <set>

#include "algdense/roots.hpp"

namespace algdense {

/// Budget for the subset enumeration behind minimal_factor.
inline constexpr size_t kFactorSubsetBudget = 2'000'000;

/// Degrees d (0 < d <= deg f) that a rational factor of the squarefree polynomial f
/// can have, judged from factorization patterns modulo several small primes.
std::set<int> admissible_factor_degrees(const RatPoly& f, int primes_to_try = 8);

/// The monic minimal polynomial over Q of `value`, a root of the nonzero polynomial f.
///
/// Works on the squarefree part of f: candidate factors are reconstructed from
/// products of certified root boxes (subsets containing the root, closed under
/// conjugation) and confirmed by exact division. No general factorization is
/// performed. Throws DomainError if the subset budget is exhausted.
RatPoly minimal_factor(const RatPoly& f, const Approximable& value);

/// Certified irreducibility over Q.
bool is_irreducible(const RatPoly& f);

}  // namespace algdense
