#pragma once

#include <utility>
#include <vector>

#include "algdense/arith.hpp"
#include "algdense/ratpoly.hpp"

namespace algdense::modp {

/// Polynomial over Z/m: coefficients lowest degree first, each in [0, m),
/// no trailing zeros.
using Poly = std::vector<BigInt>;

Poly reduce(const Poly& a, const BigInt& m);
/// Reduction of an integer-coefficient polynomial; throws if a coefficient
/// denominator is not invertible mod m.
Poly reduce(const RatPoly& a, const BigInt& m);
RatPoly lift(const Poly& a);

int degree(const Poly& a);
bool is_one(const Poly& a);
Poly add(const Poly& a, const Poly& b, const BigInt& m);
Poly sub(const Poly& a, const Poly& b, const BigInt& m);
Poly mul(const Poly& a, const Poly& b, const BigInt& m);
Poly scale(const Poly& a, const BigInt& c, const BigInt& m);
/// Division by b whose leading coefficient is a unit mod m.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const BigInt& m);
Poly rem(const Poly& a, const Poly& b, const BigInt& m);
Poly monic(const Poly& a, const BigInt& m);
Poly derivative(const Poly& a, const BigInt& m);
/// a(x + c)
Poly shift(const Poly& a, const BigInt& c, const BigInt& m);

// Field operations, p prime.
Poly gcd(const Poly& a, const Poly& b, const BigInt& p);
/// (g, s, t) with s a + t b = g monic.
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, const BigInt& p);
Poly powmod(const Poly& base, const BigInt& e, const Poly& f, const BigInt& p);

/// Monic irreducible factors with multiplicities of a nonzero polynomial over F_p,
/// sorted by degree then coefficients.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, const BigInt& p);
bool is_irreducible(const Poly& f, const BigInt& p);

/// Lifts f = g * h from mod p to mod p^N (linear lifting). h is monic, g and h coprime
/// mod p; f need not be monic. Returns (g, h) mod p^N with h monic of the same degree.
std::pair<Poly, Poly> hensel_lift(const Poly& f, const Poly& g0, const Poly& h0, const BigInt& p, long N);

/// Lifts a factorization of monic f into pairwise coprime monic factors mod p to mod p^N.
std::vector<Poly> hensel_lift_multi(const Poly& f, const std::vector<Poly>& factors_mod_p, const BigInt& p,
                                    long N);

}  // namespace algdense::modp
