#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace algdense {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a certified computation cannot finish within its precision cap.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, long needed_bits)
      : std::runtime_error(what), needed_bits_(needed_bits) {}
  long needed_bits() const { return needed_bits_; }

 private:
  long needed_bits_;
};

inline BigRat make_rat(long num, long den = 1) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a", "-a", "a/b" or a decimal "-1.25e-3" exactly. Throws DomainError on malformed input.
BigRat parse_rational(const std::string& text);

/// p-adic valuation of a nonzero integer.
long vp(const BigInt& x, const BigInt& p);
/// p-adic valuation of a nonzero rational (numerator minus denominator).
long vp(const BigRat& x, const BigInt& p);

BigInt ipow(const BigInt& base, unsigned long e);
BigRat rpow(const BigRat& base, unsigned long e);

/// Prime factorization of |n|, n != 0, as prime -> exponent.
std::map<BigInt, unsigned> factorize(const BigInt& n);
std::vector<BigInt> prime_divisors(const BigInt& n);
bool is_prime(const BigInt& n);

/// Product of distinct primes dividing n (1 for n = +-1).
BigInt radical(const BigInt& n);

BigInt floor_rat(const BigRat& x);
/// x - floor(x), in [0, 1).
BigRat frac_rat(const BigRat& x);

/// Euler totient for small d.
unsigned long euler_phi(unsigned long d);

std::string to_string(const BigRat& x);
std::string to_string(const BigInt& x);

/// Decimal rendering of x with `digits` digits after the point, truncated toward -inf.
std::string to_decimal(const BigRat& x, int digits);

}  // namespace algdense
