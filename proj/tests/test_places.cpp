#include <algorithm>

#include "algdense/places.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace algdense;

namespace {

ComplexBox box_near(double x) {
  BigRat c(x);
  return ComplexBox(c - BigRat(1, 1000), c + BigRat(1, 1000), BigRat(-1, 1000), BigRat(1, 1000));
}

void check_product_and_partition(const RatPoly& g, long p) {
  auto K = field_from_minpoly(g);
  auto fac = padic_factor(g, p);
  int total = 0;
  long prec = fac.front().precision;
  for (auto& f : fac) {
    total += f.degree;
    prec = std::min(prec, f.precision);
    if (f.certified_irreducible) CHECK(f.ramification * f.residue_degree == f.degree);
  }
  CHECK(total == g.degree());
  BigInt M = ipow(BigInt(p), prec);
  modp::Poly prod{1};
  for (auto& f : fac) prod = modp::mul(prod, modp::reduce(f.coeffs, M), M);
  CHECK(prod == modp::reduce(g, M));
}

}  // namespace

TEST_CASE("newton_polygon examples") {
  auto a = newton_polygon(RatPoly{-2, 0, 1}, 2);
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0] == NewtonSegment{BigRat(-1, 2), 2});
  auto b = newton_polygon(RatPoly{-7, 0, 1}, 3);
  REQUIRE(b.segments.size() == 1);
  CHECK(b.segments[0] == NewtonSegment{0, 2});
  auto c = newton_polygon(RatPoly{-4, 1}, 2);
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0] == NewtonSegment{-2, 1});
  CHECK_THROWS_AS(newton_polygon(RatPoly{0, 1, 1}, 2), DomainError);
  auto d = newton_polygon(RatPoly{8, 2, 1}, 2);
  REQUIRE(d.segments.size() == 2);
  CHECK(d.segments[0] == NewtonSegment{-2, 1});
  CHECK(d.segments[1] == NewtonSegment{-1, 1});
}

TEST_CASE("padic_factor examples") {
  auto a = padic_factor(RatPoly{-2, 0, 1}, 2);
  REQUIRE(a.size() == 1);
  CHECK(a[0].certified_irreducible);
  CHECK(a[0].ramification == 2);
  CHECK(a[0].residue_degree == 1);

  auto b = padic_factor(RatPoly{-7, 0, 1}, 3);
  REQUIRE(b.size() == 2);
  for (auto& f : b) CHECK(f.degree == 1);
  // square root of 7 in Z_3 from the local factor, checked by squaring
  BigInt M = ipow(BigInt(3), b[0].precision);
  BigInt r = (M - b[0].coeffs[0]) % M;
  CHECK((r * r - 7) % M == 0);

  auto c = padic_factor(RatPoly{-2, 0, 1}, 7);
  REQUIRE(c.size() == 2);
  BigInt M7 = ipow(BigInt(7), c[0].precision);
  BigInt r7 = (M7 - c[0].coeffs[0]) % M7;
  CHECK((r7 * r7 - 2) % M7 == 0);

  auto d = padic_factor(RatPoly{-1, -1, 1}, 2);
  REQUIRE(d.size() == 1);
  CHECK(d[0].residue_degree == 2);
  CHECK(d[0].ramification == 1);

  // distinct integer slopes 2 and 1 split into two linear factors
  auto e = padic_factor(RatPoly{8, 2, 1}, 2);
  CHECK(e.size() == 2);

  CHECK_THROWS_AS(padic_factor(RatPoly{1, 2, 1}, 2), DomainError);
  CHECK_THROWS_AS(padic_factor(RatPoly{-2, 0, 1}, 4), DomainError);
}

TEST_CASE("padic_factor degree partition and product") {
  for (auto& g : {RatPoly{-2, 0, 1}, RatPoly{-1, -1, 1}, RatPoly{-2, 0, 0, 1}, RatPoly{1, 0, -10, 0, 1},
                  RatPoly{1, -1, -1, -1, 1}, RatPoly{8, 2, 1}, RatPoly{1, 0, 1}})
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 127L}) check_product_and_partition(g, p);
}

TEST_CASE("valuation_at_place examples") {
  auto a = padic_factor(RatPoly{-2, 0, 1}, 2);
  CHECK(valuation_at_place(a[0], RatPoly{0, 1}) == BigRat(1, 2));
  auto q = padic_factor(RatPoly{0, 1}, 3);
  CHECK(valuation_at_place(q[0], RatPoly{3}) == 1);
  for (long p : {2L, 3L, 5L})
    for (auto& f : padic_factor(RatPoly{-1, -1, 1}, p)) CHECK(valuation_at_place(f, RatPoly{0, 1}) == 0);
  CHECK_THROWS_AS(valuation_at_place(a[0], RatPoly{}), DomainError);
}

TEST_CASE("candidate_primes examples") {
  auto Q = rational_field();
  CHECK(candidate_primes(Q, {elem_rational(Q, 2), elem_rational(Q, 3)}) == std::set<BigInt>{2, 3});
  auto F = field_from_minpoly(RatPoly{-1, -1, 1});
  CHECK(candidate_primes(F, {elem_generator(F)}).empty());
  auto K = field_from_minpoly(RatPoly{-2, 0, 1});
  CHECK(candidate_primes(K, {elem_generator(K)}) == std::set<BigInt>{2});
  CHECK_THROWS_AS(candidate_primes(K, {elem_rational(K, 0)}), DomainError);
}

TEST_CASE("product formula and Newton polygon consistency on fixtures") {
  for (auto& fx : place_fixtures()) {
    auto K = field_from_minpoly(fx.field);
    FieldElement e = elem_from_poly(K, fx.element);
    BigInt p = fx.prime;
    auto places = finite_places(K, {e}, p);
    BigRat N = poly_resultant(elem_poly(e), K.minpoly);
    BigRat sum = 0;
    std::vector<BigRat> vals;
    for (auto& pl : places) {
      sum += pl.factor.degree * pl.valuations[0];
      for (int i = 0; i < pl.factor.degree; ++i) vals.push_back(pl.valuations[0]);
      CHECK(BigInt(pl.valuations[0].get_den()) <= pl.factor.degree);
    }
    CHECK(sum == BigRat(vp(N, p)));
    auto cp = charpoly(mult_matrix(K, e));
    auto np = newton_polygon(cp, p).root_valuations();
    std::sort(vals.begin(), vals.end());
    std::sort(np.begin(), np.end());
    CHECK(vals == np);
  }
}

TEST_CASE("archimedean_places examples") {
  auto F = field_from_minpoly(RatPoly{-1, -1, 1});
  auto a = archimedean_places(F, {elem_generator(F)});
  REQUIRE(a.size() == 2);
  CHECK(abs(a[1].abs_values[0].mid() - BigRat("16180339887/10000000000")) < BigRat(1, 1000000000));
  CHECK(abs(a[0].abs_values[0].mid() - BigRat("6180339887/10000000000")) < BigRat(1, 1000000000));
  CHECK_FALSE(a[0].on_unit_circle[0]);
  CHECK_FALSE(a[1].on_unit_circle[0]);

  auto Q = rational_field();
  auto b = archimedean_places(Q, {elem_rational(Q, 2)});
  CHECK(b[0].abs_values[0].contains(2));
  CHECK_FALSE(b[0].on_unit_circle[0]);

  auto G = field_from_minpoly(RatPoly{1, 0, 1});
  auto c = archimedean_places(G, {elem_generator(G)});
  CHECK(c[0].on_unit_circle[0]);
  CHECK(c[1].on_unit_circle[0]);
}

TEST_CASE("Salem conjugates on the unit circle") {
  // numeric oracle: roots 1.72208381, -0.65138782 +- 0.75874496i, 0.58069183
  auto S = field_from_minpoly(RatPoly{1, -1, -1, -1, 1});
  auto a = archimedean_places(S, {elem_generator(S)});
  int on = 0;
  for (auto& pl : a) on += pl.on_unit_circle[0];
  CHECK(on == 2);
  for (auto& pl : a)
    if (pl.on_unit_circle[0]) CHECK_FALSE(pl.real_embedding);
}

TEST_CASE("archimedean product equals the norm") {
  for (auto& fx : place_fixtures()) {
    auto K = field_from_minpoly(fx.field);
    FieldElement e = elem_from_poly(K, fx.element);
    auto a = archimedean_places(K, {e}, 80);
    Interval prod = Interval::point(1);
    for (auto& pl : a) prod = prod * pl.abs_values[0];
    BigRat N = abs(poly_resultant(elem_poly(e), K.minpoly));
    CHECK(abs(prod.mid() - N) <= pow2(-40));
  }
}

TEST_CASE("place_table examples") {
  auto Q = rational_field();
  auto t = place_table(Q, {elem_rational(Q, 2), elem_rational(Q, 3)});
  REQUIRE(t.size() == 3);
  CHECK(t[0].infinite());
  CHECK(t[1].prime == 2);
  CHECK(t[1].valuations == std::vector<BigRat>{1, 0});
  CHECK(t[2].valuations == std::vector<BigRat>{0, 1});

  auto f = compose_field(RatPoly{-1, -1, 1}, box_near(1.618), RatPoly{-2, 1}, ComplexBox::point(2));
  auto tf = place_table(f.field, {f.lambda, f.mu});
  int finite = 0;
  for (auto& pl : tf)
    if (!pl.infinite()) {
      ++finite;
      CHECK(pl.prime == 2);
      CHECK(pl.valuations == std::vector<BigRat>{0, 1});
      CHECK(pl.factor.residue_degree == 2);
    }
  CHECK(finite == 1);

  auto K = field_from_minpoly(RatPoly{-2, 0, 1});
  auto tk = place_table(K, {elem_generator(K), elem_rational(K, 3)});
  bool ramified = false;
  for (auto& pl : tk)
    if (pl.prime == 2 && pl.valuations[0] == BigRat(1, 2) && pl.factor.ramification == 2) ramified = true;
  CHECK(ramified);
}
