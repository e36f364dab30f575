#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "algdense/interval.hpp"
#include "algdense/ratpoly.hpp"

namespace algdense {

/// One certified root: isolating box plus whether the root is known to be real.
struct IsolatedRoot {
  ComplexBox box;
  bool real = false;
};

/// Certified isolation of all complex roots of a squarefree polynomial.
///
/// Returns exactly deg f pairwise-disjoint boxes, each with side <= 2^-precision_bits
/// and containing exactly one root, sorted by the real then imaginary part of the
/// box centers. A box centered on the real axis certifies a real root; every other
/// box is disjoint from the real axis. Roots hit exactly by the iteration get a
/// degenerate box.
std::vector<IsolatedRoot> isolate_roots_detailed(const RatPoly& f, long precision_bits);
std::vector<ComplexBox> isolate_roots(const RatPoly& f, long precision_bits);

/// Sub-box of `box` isolating the same root of f with side <= 2^-precision_bits.
/// Throws DomainError if `box` does not contain exactly one root of f.
ComplexBox refine_root(const RatPoly& f, const ComplexBox& box, long precision_bits);

/// A complex algebraic number: a squarefree rational polynomial it annihilates and an
/// isolating box. Refinements are cached and shared between copies.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  /// `poly` need not be squarefree; its squarefree part is used.
  AlgebraicNumber(const RatPoly& poly, const ComplexBox& isolating_box);
  static AlgebraicNumber rational(const BigRat& q);

  const RatPoly& poly() const { return state_->poly; }
  /// Box of side <= 2^-bits containing the number.
  ComplexBox box(long bits) const;
  const ComplexBox& initial_box() const { return state_->initial; }
  bool is_rational() const { return state_->poly.degree() == 1; }
  BigRat rational_value() const;
  Approximable approximable() const;

 private:
  struct State {
    RatPoly poly;
    ComplexBox initial;
    std::mutex mu;
    ComplexBox best;
    long best_bits = 0;
  };
  std::shared_ptr<State> state_;
};

/// Index of the root of f whose isolating box (at growing precision) is the unique
/// one meeting the enclosures of `value`. `value` must be a root of f.
/// Throws PrecisionError if it cannot be separated within `max_bits`.
size_t identify_root(const RatPoly& f, const Approximable& value, long max_bits = 4096);

/// True iff `value`, known to be a root of `annihilator`, is also a root of q.
bool is_root_of(const RatPoly& annihilator, const Approximable& value, const RatPoly& q,
                long max_bits = 4096);

}  // namespace algdense
