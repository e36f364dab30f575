#include <random>

#include "algdense/solenoid.hpp"
#include "doctest.h"

using namespace algdense;

namespace {

SolenoidSystem rational_system(const BigRat& l, const BigRat& m) {
  auto Q = rational_field();
  return build_system({Q}, {elem_rational(Q, l)}, {elem_rational(Q, m)});
}

SolenoidSystem phi_system() {
  auto K = field_from_minpoly(RatPoly{-1, -1, 1});
  return build_system({K}, {elem_generator(K)}, {elem_rational(K, 2)});
}

GlobalPoint G(std::initializer_list<BigRat> v) { return {std::vector<BigRat>(v)}; }

}  // namespace

TEST_CASE("build_system examples") {
  auto s = rational_system(2, 3);
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].r == 1);
  CHECK(s.components[0].a == 1);
  CHECK(s.components[0].primes == std::vector<BigInt>{0});
  CHECK(s.components[0].A.entries[0][0] == 2);
  CHECK(s.components[0].B.entries[0][0] == 3);

  auto t = rational_system(make_rat(3, 2), 5);
  CHECK(t.components[0].a == 2);
  CHECK(t.components[0].primes == std::vector<BigInt>{0, 2});
  CHECK(t.components[0].A.entries[0][0] == make_rat(3, 2));

  auto u = rational_system(make_rat(5, 6), make_rat(7, 10));
  CHECK(u.components[0].a == 30);
  CHECK(u.components[0].primes == std::vector<BigInt>{0, 2, 3, 5});

  auto p = phi_system();
  CHECK(p.components[0].r == 2);
  CHECK(p.components[0].a == 1);
  CHECK(p.components[0].A.entries == std::vector<std::vector<BigRat>>{{0, 1}, {1, 1}});
  CHECK(p.components[0].B.entries == std::vector<std::vector<BigRat>>{{2, 0}, {0, 2}});
}

TEST_CASE("built matrices commute and carry the minpoly") {
  std::vector<RatPoly> polys{{-1, -1, 1}, {-2, 0, 1}, {-2, 0, 0, 1}, {1, -1, -1, -1, 1}, {1, 0, -10, 0, 1}};
  for (auto& f : polys) {
    auto K = field_from_minpoly(f);
    auto x = elem_generator(K);
    auto y = elem_add(K, elem_mul(K, x, x), elem_rational(K, make_rat(1, 3)));
    auto s = build_system({K}, {x}, {y});
    auto& c = s.components[0];
    CHECK(c.A * c.B == c.B * c.A);
    CHECK(charpoly(c.A) == f);
    CHECK(c.a == 3);
  }
}

TEST_CASE("padic_fractional examples") {
  CHECK(padic_fractional(make_rat(1, 2), 2) == make_rat(1, 2));
  CHECK(padic_fractional(make_rat(1, 3), 2) == 0);
  CHECK(padic_fractional(make_rat(5, 6), 2) == make_rat(1, 2));
  CHECK(padic_fractional(make_rat(7, 4), 0) == make_rat(3, 4));
  CHECK(padic_fractional(make_rat(-1, 4), 0) == make_rat(3, 4));
  CHECK(padic_fractional(make_rat(-1, 2), 2) == make_rat(1, 2));
  CHECK(padic_fractional(make_rat(1, 12), 2) == make_rat(3, 4));
  CHECK(padic_fractional(make_rat(1, 12), 3) == make_rat(1, 3));
  CHECK(padic_fractional(make_rat(5, 1), 5) == 0);
  CHECK(padic_fractional(make_rat(1, 75), 5) == make_rat(17, 25));
}

TEST_CASE("padic fractional parts sum to x mod 1") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-500, 500);
  const long dens[] = {1, 2, 4, 6, 12, 30, 45, 360, 1001};
  for (int t = 0; t < 300; ++t) {
    BigRat x(num(rng), dens[t % 9]);
    x.canonicalize();
    BigRat s = 0;
    for (auto& p : prime_divisors(x.get_den())) {
      BigRat f = padic_fractional(x, p);
      CHECK(f >= 0);
      CHECK(f < 1);
      BigInt d = f.get_den();
      while (d % p == 0) d /= p;
      CHECK(d == 1);
      s += f;
    }
    CHECK(frac_rat(s) == frac_rat(x));
  }
}

TEST_CASE("project_Pi examples") {
  auto s = rational_system(2, 3);
  CHECK(project_Pi(s, embed_global(s, G({make_rat(1, 5)}))) == make_rat(1, 5));
  RationalSolenoidPoint p;
  p.coords = {{{make_rat(7, 4)}}};
  CHECK(project_Pi(s, p) == make_rat(3, 4));
  auto t = rational_system(make_rat(3, 2), 5);
  RationalSolenoidPoint q;
  q.coords = {{{make_rat(1, 2)}, {0}}};
  CHECK(project_Pi(t, q) == make_rat(1, 2));
  q.coords = {{{make_rat(1, 3)}, {make_rat(1, 4)}}};
  CHECK(project_Pi(t, q) == make_rat(7, 12));
  // the (z, -z, -z) image of z in Z[1/6]
  auto u = rational_system(make_rat(5, 6), make_rat(7, 6));
  CHECK(project_Pi(u, embed_global(u, G({make_rat(7, 36)}))) == 0);
  CHECK_THROWS_AS(project_Pi(u, p), DomainError);
}

TEST_CASE("project_Pi vanishes on the lattice") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-10000, 10000), e2(0, 6), e3(0, 4);
  auto t = rational_system(make_rat(3, 2), 5);
  auto u = rational_system(make_rat(5, 6), make_rat(7, 6));
  auto K = field_from_minpoly(RatPoly{-2, 0, 1});
  auto x = elem_generator(K);
  auto w = build_system({K, rational_field()}, {elem_scale(K, x, make_rat(3, 2)), elem_rational(rational_field(), 3)},
                        {elem_rational(K, 5), elem_rational(rational_field(), make_rat(10, 3))});
  CHECK(w.components[0].a == 2);
  CHECK(w.components[1].a == 3);
  for (int k = 0; k < 100; ++k) {
    auto z = [&](long a) {
      BigRat q(num(rng), BigInt(ipow(2, e2(rng)) * (a % 3 == 0 ? ipow(3, e3(rng)) : BigInt(1))));
      q.canonicalize();
      return q;
    };
    CHECK(project_Pi(t, embed_global(t, G({z(2)}))) == 0);
    CHECK(project_Pi(u, embed_global(u, G({z(6)}))) == 0);
    BigRat z3(num(rng), ipow(3, e3(rng)));
    z3.canonicalize();
    CHECK(project_Pi(w, embed_global(w, {{z(2), z(2)}, {z3}})) == 0);
  }
}

TEST_CASE("find_fixed_torsion examples") {
  auto s = rational_system(2, 3);
  auto w = find_fixed_torsion(s, 8, 10);
  CHECK(w.ell == 5);
  CHECK(w.s == 4);
  CHECK(w.point == G({make_rat(1, 5)}));
  CHECK(verify_torsion(s, w));
  CHECK_THROWS_AS(find_fixed_torsion(s, 8, 4), DomainError);
}

TEST_CASE("find_fixed_torsion details") {
  auto s = rational_system(2, 3);
  CHECK_THROWS_AS(find_fixed_torsion(s, 8, 1), DomainError);
  CHECK_THROWS_AS(find_fixed_torsion(s, 3, 10), DomainError);
  TorsionWitness w7{7, 6, G({make_rat(1, 7)})};
  CHECK(verify_torsion(s, w7));
  TorsionWitness w7bad{7, 3, G({make_rat(1, 7)})};
  CHECK(!verify_torsion(s, w7bad));

  auto p = phi_system();
  auto wp = find_fixed_torsion(p, 12, 10);
  CHECK(wp.ell == 3);
  CHECK(wp.s == 8);
  CHECK(verify_torsion(p, wp));
  CHECK_THROWS_AS(find_fixed_torsion(p, 7, 4), DomainError);
  auto wp5 = find_fixed_torsion(p, 7, 5);
  CHECK(wp5.ell == 5);
  CHECK(wp5.s == 4);

  // denominators 2: 2 divides a, so 3 is the first admissible prime
  auto t = rational_system(make_rat(3, 2), 5);
  auto wt = find_fixed_torsion(t, 8, 10);
  CHECK(wt.ell == 7);
  CHECK(verify_torsion(t, wt));
}

TEST_CASE("torsion_orbit examples") {
  auto s = rational_system(2, 3);
  auto o5 = torsion_orbit(s, G({make_rat(1, 5)}));
  CHECK(o5 == std::vector<GlobalPoint>{G({make_rat(1, 5)}), G({make_rat(2, 5)}), G({make_rat(3, 5)}),
                                       G({make_rat(4, 5)})});
  CHECK(torsion_orbit(s, G({0})) == std::vector<GlobalPoint>{G({0})});
  CHECK(torsion_orbit(s, G({make_rat(1, 7)})).size() == 6);
  CHECK(torsion_orbit(s, G({make_rat(6, 5)})).size() == 4);

  auto p = phi_system();
  auto wp = find_fixed_torsion(p, 12, 10);
  auto op = torsion_orbit(p, wp.point);
  CHECK(op.size() == 8);
  for (auto& x : op) {
    auto a = reduce_mod_lattice(p, apply_A(p, x));
    auto b = reduce_mod_lattice(p, apply_B(p, x));
    CHECK(std::find(op.begin(), op.end(), a) != op.end());
    CHECK(std::find(op.begin(), op.end(), b) != op.end());
  }

  auto t = rational_system(make_rat(3, 2), 5);
  // 3/2 acts as 3 * 2^-1 = 3 * 4 = 5 mod 7
  auto ot = torsion_orbit(t, G({make_rat(1, 7)}));
  CHECK(ot.size() == 6);
  CHECK(reduce_mod_lattice(t, G({make_rat(3, 14)})) == G({make_rat(5, 7)}));
}
