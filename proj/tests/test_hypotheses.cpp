#include "algdense/hypotheses.hpp"
#include "doctest.h"

using namespace algdense;

namespace {

RealAlgebraic R(const RatPoly& f, const char* near) {
  return RealAlgebraic::root_near(f, parse_rational(near), BigRat(1, 1000));
}
RealAlgebraic Q(long n, long d = 1) { return RealAlgebraic::rational(make_rat(n, d)); }

XiSpec xi_rational(long n, long d = 1) {
  XiSpec x;
  x.kind = XiSpec::Kind::Rational;
  x.value = make_rat(n, d);
  return x;
}
XiSpec xi_algebraic(const RealAlgebraic& a) {
  XiSpec x;
  x.kind = XiSpec::Kind::Algebraic;
  x.algebraic = a;
  return x;
}
XiSpec xi_decimal(const char* lit) {
  XiSpec x;
  x.kind = XiSpec::Kind::Decimal;
  x.value = parse_rational(lit);
  x.literal = lit;
  return x;
}

const RatPoly kSqrt2{-2, 0, 1};
const RatPoly kSqrt3{-3, 0, 1};
const RatPoly kPhi{-1, -1, 1};
const RatPoly kSalem{1, -1, -1, -1, 1};

PairSpec P(RealAlgebraic l, RealAlgebraic m, XiSpec xi = {}) { return {std::move(l), std::move(m), std::move(xi)}; }

IndependenceResult independence(const PairSpec& p) {
  auto pp = prepare_pair(p, Bounds{});
  return check_multiplicative_independence(pp.composed.field, pp.composed.lambda, pp.composed.mu,
                                           pp.composed.real_embedding, 1'000'000);
}

}  // namespace

TEST_CASE("independence examples") {
  using K = IndependenceResult::Kind;
  CHECK(independence(P(Q(2), Q(3))).kind == K::Independent);
  auto d = independence(P(Q(2), Q(4)));
  CHECK(d.kind == K::Dependent);
  CHECK(d.m == 2);
  CHECK(d.n == 1);
  CHECK(independence(P(R(kPhi, "1.618"), Q(2))).kind == K::Independent);
  CHECK(independence(P(Q(6), Q(12))).kind == K::Independent);
  CHECK(independence(P(Q(8), Q(32))).kind == K::Dependent);
  auto e = independence(P(Q(8), Q(32)));
  CHECK(e.m == 5);
  CHECK(e.n == 3);
  auto neg = independence(P(Q(2), Q(-2)));
  CHECK(neg.kind == K::Dependent);
  CHECK(neg.m == 2);
  CHECK(neg.n == 2);
  auto r = independence(P(R(kSqrt2, "1.414"), Q(2)));
  CHECK(r.kind == K::Dependent);
  CHECK(r.m == 2);
  CHECK(r.n == 1);
  // units
  auto u = independence(P(R(kPhi, "1.618"), R(RatPoly{1, -3, 1}, "2.618")));
  CHECK(u.kind == K::Dependent);
  CHECK(u.m == 2);
  CHECK(u.n == 1);
  auto w = independence(P(R(kPhi, "1.618"), R(RatPoly{-1, -2, 1}, "2.414")));
  CHECK(w.kind == K::Independent);
}

TEST_CASE("independence dependent witnesses verify exactly") {
  for (auto& pair : {P(Q(4), Q(8)), P(Q(9), Q(27)), P(R(RatPoly{-4, 0, 1}, "2"), Q(16)),
                     P(R(kSqrt3, "1.732"), Q(9)), P(R(RatPoly{1, -3, 1}, "2.618"), R(RatPoly{-1, -4, 1}, "4.236"))}) {
    auto pp = prepare_pair(pair, Bounds{});
    const auto& K = pp.composed.field;
    auto r = check_multiplicative_independence(K, pp.composed.lambda, pp.composed.mu, pp.composed.real_embedding, 1000);
    REQUIRE(r.kind == IndependenceResult::Kind::Dependent);
    CHECK(elem_pow(K, pp.composed.lambda, r.m) == elem_pow(K, pp.composed.mu, r.n));
  }
}

TEST_CASE("root of unity ratio examples") {
  CHECK(is_root_of_unity_ratio(RatPoly{1, 1}, ComplexBox::point(-1), RatPoly{-1, 1}, ComplexBox::point(1)) == 2ul);
  CHECK(!is_root_of_unity_ratio(RatPoly{-2, 1}, ComplexBox::point(2), RatPoly{-3, 1}, ComplexBox::point(3)));
  auto w = isolate_roots_detailed(RatPoly{1, 1, 1}, 32);
  REQUIRE(w.size() == 2);
  CHECK(is_root_of_unity_ratio(RatPoly{1, 1, 1}, w[0].box, RatPoly{1, 1, 1}, w[1].box) == 3ul);
  auto c = isolate_roots_detailed(RatPoly{-2, 0, 0, 1}, 32);
  REQUIRE(c.size() == 3);
  CHECK(is_root_of_unity_ratio(RatPoly{-2, 0, 0, 1}, c[0].box, RatPoly{-2, 0, 0, 1}, c[2].box) == 3ul);
  CHECK(is_root_of_unity_ratio(RatPoly{-2, 0, 0, 1}, c[1].box, RatPoly{-2, 0, 0, 1}, c[1].box) == 1ul);
  // i and 1: order 4. sqrt2 and -sqrt2: order 2
  auto s = isolate_roots_detailed(RatPoly{1, 0, 1}, 32);
  CHECK(is_root_of_unity_ratio(RatPoly{-1, 1}, ComplexBox::point(1), RatPoly{1, 0, 1}, s[0].box) == 4ul);
  auto t = isolate_roots_detailed(kSqrt2, 32);
  CHECK(is_root_of_unity_ratio(kSqrt2, t[0].box, kSqrt2, t[1].box) == 2ul);
  // (1+i)/(1-i) = i has order 4, but (1+2i)/(1-2i) is not a root of unity
  auto g = isolate_roots_detailed(RatPoly{2, -2, 1}, 32);
  CHECK(is_root_of_unity_ratio(RatPoly{2, -2, 1}, g[0].box, RatPoly{2, -2, 1}, g[1].box) == 4ul);
  auto h = isolate_roots_detailed(RatPoly{5, -2, 1}, 32);
  CHECK(!is_root_of_unity_ratio(RatPoly{5, -2, 1}, h[0].box, RatPoly{5, -2, 1}, h[1].box));
}

TEST_CASE("condition b examples") {
  auto run = [](std::vector<PairSpec> pairs) {
    std::vector<PreparedPair> prep;
    for (auto& p : pairs) prep.push_back(prepare_pair(p, Bounds{}));
    return check_condition_b(pairs, prep);
  };
  CHECK(run({P(Q(2), Q(3)), P(Q(3), Q(2))}).verdict == Verdict::Holds);
  auto dup = run({P(Q(2), Q(3)), P(Q(2), Q(3))});
  CHECK(dup.verdict == Verdict::Fails);
  CHECK(dup.u == 1);
  auto sign = run({P(Q(2), Q(3)), P(Q(-2), Q(3))});
  CHECK(sign.verdict == Verdict::Fails);
  CHECK(sign.order_lambda == 2);
  CHECK(sign.order_mu == 1);
  CHECK(sign.u == 2);
  // galois twist: (sqrt2, 3) against (-sqrt2, 3)
  auto twist = run({P(R(kSqrt2, "1.414"), Q(3)), P(R(kSqrt2, "-1.414"), Q(3))});
  CHECK(twist.verdict == Verdict::Fails);
  CHECK(twist.u == 1);
  CHECK(run({P(R(kSqrt2, "1.414"), Q(3)), P(R(kSqrt2, "1.414"), Q(5))}).verdict == Verdict::Holds);
  // (-sqrt2)^2 = sqrt2^2 with mu fixed
  auto joint = run({P(R(kSqrt2, "1.414"), R(RatPoly{2, -4, 1}, "3.414")),
                    P(R(kSqrt2, "-1.414"), R(RatPoly{2, -4, 1}, "3.414"))});
  CHECK(joint.verdict == Verdict::Fails);
  CHECK(joint.u == 2);
  // conjugating lambda alone is not a joint conjugate tuple
  auto apart = run({P(R(kSqrt2, "1.414"), R(RatPoly{2, -4, 1}, "3.414")),
                    P(R(kSqrt2, "-1.414"), R(RatPoly{2, -4, 1}, "0.586"))});
  CHECK(apart.verdict == Verdict::Fails);
  CHECK(apart.u == 1);
  auto off = run({P(R(kSqrt2, "1.414"), R(RatPoly{2, -4, 1}, "3.414")),
                  P(R(RatPoly{2, -4, 1}, "3.414"), R(kSqrt2, "1.414"))});
  CHECK(off.verdict == Verdict::Holds);
}

TEST_CASE("hyperbolicity examples") {
  auto Kq = rational_field();
  CHECK(check_hyperbolicity(Kq, {elem_rational(Kq, 2), elem_rational(Kq, 3)}).verdict == Verdict::Holds);
  CHECK(check_hyperbolicity(Kq, {elem_rational(Kq, make_rat(1, 2)), elem_rational(Kq, 3)}).verdict == Verdict::Holds);
  auto Kphi = field_from_minpoly(kPhi);
  CHECK(check_hyperbolicity(Kphi, {elem_generator(Kphi)}).verdict == Verdict::Holds);
  auto Ks = field_from_minpoly(kSalem);
  auto h = check_hyperbolicity(Ks, {elem_generator(Ks)});
  CHECK(h.verdict == Verdict::Fails);
  CHECK(h.prime == 0);
  CHECK(!Ks.embeddings[h.place].real);
  auto h2 = check_hyperbolicity(Ks, {elem_generator(Ks), elem_inv(Ks, elem_generator(Ks))});
  CHECK(h2.verdict == Verdict::Fails);
  CHECK(h2.place == h.place);
  // x^2 - x + 2: 2 splits, 1/alpha has valuations (-1, 0) above 2
  auto K7 = field_from_minpoly(RatPoly{2, -1, 1});
  auto f = check_hyperbolicity(K7, {elem_inv(K7, elem_generator(K7))});
  CHECK(f.verdict == Verdict::Fails);
  CHECK(f.prime == 2);
  CHECK(check_hyperbolicity(K7, {elem_rational(K7, make_rat(1, 2))}).verdict == Verdict::Holds);
  auto Ki = field_from_minpoly(RatPoly{1, 0, 1});
  CHECK(check_hyperbolicity(Ki, {elem_generator(Ki), elem_rational(Ki, 2)}).verdict == Verdict::Holds);
  CHECK(check_hyperbolicity(Ki, {elem_generator(Ki)}).verdict == Verdict::Holds);
}

TEST_CASE("xi examples") {
  auto out = check_xi(prepare_pair(P(Q(2), Q(3)), Bounds{}), xi_algebraic(R(kSqrt2, "1.414")), Bounds{});
  CHECK(out.kind == XiResult::Kind::OutsideField);
  auto pp = prepare_pair(P(R(kSqrt2, "1.414"), Q(3)), Bounds{});
  auto in = check_xi(pp, xi_rational(3, 7), Bounds{});
  CHECK(in.kind == XiResult::Kind::InsideField);
  CHECK(in.coords == std::vector<BigRat>{make_rat(3, 7), 0});
  CHECK(check_xi(pp, xi_algebraic(R(kSqrt3, "1.732")), Bounds{}).kind == XiResult::Kind::OutsideField);
  auto s8 = check_xi(pp, xi_algebraic(R(RatPoly{-8, 0, 1}, "-2.83")), Bounds{});
  CHECK(s8.kind == XiResult::Kind::InsideField);
  CHECK(s8.coords == std::vector<BigRat>{0, -2});
  auto half = check_xi(pp, xi_algebraic(R(RatPoly{-1, 0, 2}, "0.707")), Bounds{});
  CHECK(half.kind == XiResult::Kind::InsideField);
  CHECK(half.coords == std::vector<BigRat>{0, make_rat(1, 2)});
  CHECK(check_xi(pp, xi_algebraic(R(RatPoly{-2, 0, 0, 1}, "1.26")), Bounds{}).kind == XiResult::Kind::OutsideField);
  CHECK(check_xi(pp, xi_decimal("1.41421356"), Bounds{}).kind == XiResult::Kind::AssumedOutside);
  auto pphi = prepare_pair(P(R(kPhi, "1.618"), Q(2)), Bounds{});
  auto s5 = check_xi(pphi, xi_algebraic(R(RatPoly{-5, 0, 1}, "2.236")), Bounds{});
  CHECK(s5.kind == XiResult::Kind::InsideField);
  CHECK(s5.coords == std::vector<BigRat>{-1, 2});
}

TEST_CASE("check_problem examples") {
  using O = HypothesisReport::Overall;
  ProblemSpec a;
  a.pairs = {P(Q(2), Q(3), xi_algebraic(R(kSqrt2, "1.414"))), P(Q(3), Q(2), xi_rational(0))};
  auto ra = check_problem(a);
  CHECK(ra.overall == O::TheoremApplies);
  CHECK(ra.failed_condition.empty());
  CHECK(!ra.xi_assumed);

  ProblemSpec b;
  b.pairs = {P(Q(2), Q(4), xi_algebraic(R(kSqrt2, "1.414")))};
  auto rb = check_problem(b);
  CHECK(rb.overall == O::Fails);
  CHECK(rb.failed_condition == "a");
  CHECK(rb.pairs[0].independence.m == 2);
  CHECK(rb.pairs[0].independence.n == 1);

  ProblemSpec c;
  c.pairs = {P(Q(2), Q(3), xi_algebraic(R(kSqrt2, "1.414"))), P(Q(2), Q(3), xi_rational(0))};
  auto rc = check_problem(c);
  CHECK(rc.overall == O::Fails);
  CHECK(rc.failed_condition == "b");
  CHECK(rc.condition_b.u == 1);

  ProblemSpec d;
  d.pairs = {P(R(kPhi, "1.618"), Q(2), xi_algebraic(R(kSqrt3, "1.732")))};
  auto rd = check_problem(d);
  CHECK(rd.overall == O::TheoremApplies);
  CHECK(rd.pairs[0].field_degree == 2);

  ProblemSpec e;
  e.pairs = {P(Q(2), Q(3), xi_rational(1, 3))};
  auto re = check_problem(e);
  CHECK(re.overall == O::Fails);
  CHECK(re.failed_condition == "xi");

  ProblemSpec f;
  f.pairs = {P(Q(2), Q(3), xi_decimal("1.41421356"))};
  auto rf = check_problem(f);
  CHECK(rf.overall == O::TheoremApplies);
  CHECK(rf.xi_assumed);

  ProblemSpec g;
  g.pairs = {P(R(kSalem, "1.72"), Q(2), xi_algebraic(R(kSqrt2, "1.414")))};
  auto rg = check_problem(g);
  CHECK(rg.condition_c == Verdict::Holds);

  ProblemSpec bad;
  bad.pairs = {P(Q(1, 2), Q(3), xi_rational(0))};
  CHECK_THROWS_AS(check_problem(bad), DomainError);
  bad.pairs = {P(Q(-1), Q(3), xi_rational(0))};
  CHECK_THROWS_AS(check_problem(bad), DomainError);
}

TEST_CASE("integer pairs with irrational xi apply") {
  const long ints[] = {2, 3, 5, 6, 7, 10};
  for (long p : ints)
    for (long q : ints) {
      if (p == q) continue;
      ProblemSpec s;
      s.pairs = {P(Q(p), Q(q), xi_algebraic(R(kSqrt2, "1.414")))};
      CHECK(check_problem(s).overall == HypothesisReport::Overall::TheoremApplies);
    }
}

TEST_CASE("report determinism") {
  ProblemSpec s;
  s.pairs = {P(R(kPhi, "1.618"), Q(2), xi_algebraic(R(kSqrt3, "1.732")))};
  auto a = check_problem(s), b = check_problem(s);
  CHECK(a.pairs[0].field_minpoly == b.pairs[0].field_minpoly);
  CHECK(a.pairs[0].independence.certificate == b.pairs[0].independence.certificate);
  CHECK(a.pairs[0].l0.l == b.pairs[0].l0.l);
}
