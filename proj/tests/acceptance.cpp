#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "algdense/cli.hpp"
#include "algdense/density.hpp"
#include "algdense/hypotheses.hpp"
#include "algdense/places.hpp"
#include "algdense/solenoid.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace algdense;

namespace {

std::string data(const char* name) { return std::string(ALGDENSE_DATA_DIR) + "/" + name; }

struct CliRun {
  int code;
  nlohmann::ordered_json json;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  CliRun r{code, {}};
  if (!out.str().empty()) r.json = nlohmann::ordered_json::parse(out.str());
  return r;
}

// plain double Durand-Kerner, monic coefficients from the constant term up
std::vector<std::complex<double>> numeric_roots(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::pow(std::complex<double>(0.4, 0.9), i);
  for (int it = 0; it < 500; ++it)
    for (int i = 0; i < n; ++i) {
      std::complex<double> f = c[n], d = 1;
      for (int k = n - 1; k >= 0; --k) f = f * z[i] + c[k];
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[i] - z[j];
      z[i] -= f / d;
    }
  return z;
}

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool c, const std::string& what) {
    if (!c && ok) {
      ok = false;
      note = what;
    }
  }
};

bool criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < limit_s, "runtime over " + std::to_string(limit_s) + " s");
  std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title, secs,
              o.ok ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
  return o.ok;
}

RealAlgebraic Q(long n, long d = 1) { return RealAlgebraic::rational(make_rat(n, d)); }

XiSpec xi_q(long n, long d = 1) {
  XiSpec x;
  x.value = make_rat(n, d);
  return x;
}

ProblemSpec two_three_sqrt2() {
  ProblemSpec s;
  XiSpec x;
  x.kind = XiSpec::Kind::Algebraic;
  x.algebraic = RealAlgebraic::root_near(RatPoly{-2, 0, 1}, parse_rational("1.414"), BigRat(1, 1000));
  s.pairs = {{Q(2), Q(3), x}};
  return s;
}

}  // namespace

int main() {
  int failed = 0;
  auto tally = [&](bool ok) { failed += !ok; };

  tally(criterion(1, "integer scope: applies, fails(a) (2,1), fails(b) u=1", 15, [](Outcome& o) {
    for (auto [file, code] : {std::pair{"integer_pairs.json", 0}, {"two_four.json", 1}, {"duplicated.json", 1}}) {
      auto t0 = Clock::now();
      auto r = cli({"check", data(file)});
      o.require(std::chrono::duration<double>(Clock::now() - t0).count() < 5, std::string(file) + " over 5 s");
      o.require(r.code == code, std::string(file) + " exit " + std::to_string(r.code));
      if (r.code != code) return;
      auto& res = r.json["result"];
      if (code == 0) o.require(res["overall"] == "theorem-applies", "integer pairs verdict");
      if (std::string(file) == "two_four.json") {
        o.require(res["failed_condition"] == "a", "(2,4) condition");
        auto& w = res["pairs"][0]["independence"]["witness"];
        o.require(w["m"] == 2 && w["n"] == 1, "(2,4) witness");
      }
      if (std::string(file) == "duplicated.json") {
        o.require(res["failed_condition"] == "b", "duplicate condition");
        o.require(res["condition_b"]["witness"]["u"] == 1, "duplicate u");
      }
    }
  }));

  tally(criterion(2, "hyperbolicity: <2,3>, <phi> hold, quartic Salem fails", 30, [](Outcome& o) {
    auto Kq = rational_field();
    o.require(check_hyperbolicity(Kq, {elem_rational(Kq, 2), elem_rational(Kq, 3)}).verdict == Verdict::Holds,
              "<2,3>");
    auto Kp = field_from_minpoly(RatPoly{-1, -1, 1});
    o.require(check_hyperbolicity(Kp, {elem_generator(Kp)}).verdict == Verdict::Holds, "<phi>");
    // x^4 - x^3 - x^2 - x + 1
    auto z = numeric_roots({1, -1, -1, -1, 1});
    int on = 0, out = 0, in = 0;
    for (auto& r : z) {
      double a = std::abs(r);
      on += std::abs(a - 1) < 1e-9;
      out += a > 1 + 1e-9;
      in += a < 1 - 1e-9;
    }
    o.require(on == 2 && out == 1 && in == 1, "numeric Salem property");
    auto Ks = field_from_minpoly(RatPoly{1, -1, -1, -1, 1});
    auto h = check_hyperbolicity(Ks, {elem_generator(Ks)});
    o.require(h.verdict == Verdict::Fails && h.prime == 0, "Salem verdict");
    if (h.verdict == Verdict::Fails) {
      auto r = Ks.generator_images[h.place].box(40);
      std::complex<double> w(r.re_mid().get_d(), r.im_mid().get_d());
      o.require(std::abs(std::abs(w) - 1) < 1e-6, "witness embedding not on the unit circle");
    }
  }));

  tally(criterion(3, "place arithmetic on 20 fixtures, sqrt2 at 2 and 7", 30, [](Outcome& o) {
    auto fx = place_fixtures();
    o.require(fx.size() == 20, "fixture count");
    for (auto& f : fx) {
      auto K = field_from_minpoly(f.field);
      FieldElement e = elem_from_poly(K, f.element);
      BigInt p = f.prime;
      BigRat sum = 0;
      std::vector<BigRat> vals;
      for (auto& pl : finite_places(K, {e}, p)) {
        sum += pl.factor.degree * pl.valuations[0];
        for (int i = 0; i < pl.factor.degree; ++i) vals.push_back(pl.valuations[0]);
      }
      BigRat N = poly_resultant(elem_poly(e), K.minpoly);
      o.require(sum == BigRat(vp(N, p)), "product formula");
      auto np = newton_polygon(charpoly(mult_matrix(K, e)), p).root_valuations();
      std::sort(vals.begin(), vals.end());
      std::sort(np.begin(), np.end());
      o.require(vals == np, "Newton polygon valuations");
    }
    auto K = field_from_minpoly(RatPoly{-2, 0, 1});
    auto two = finite_places(K, {elem_generator(K)}, BigInt(2));
    o.require(two.size() == 1 && two[0].valuations[0] == make_rat(1, 2), "sqrt2 at 2");
    o.require(finite_places(K, {elem_generator(K)}, BigInt(7)).size() == 2, "sqrt2 at 7");
  }));

  tally(criterion(4, "matrix homomorphism on 500 pairs in 5 fields", 30, [](Outcome& o) {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    std::vector<RatPoly> polys{RatPoly{-2, 0, 1}, RatPoly{-1, -1, 1}, RatPoly{-2, 0, 0, 1},
                               RatPoly{1, 0, -10, 0, 1}, RatPoly{1, -1, -1, -1, 1}};
    for (auto& g : polys) {
      auto K = field_from_minpoly(g);
      o.require(charpoly(mult_matrix(K, elem_generator(K))) == g, "charpoly");
      for (int t = 0; t < 100; ++t) {
        FieldElement x, y;
        for (int i = 0; i < K.degree; ++i) {
          x.coords.push_back(make_rat(num(rng), den(rng)));
          y.coords.push_back(make_rat(num(rng), den(rng)));
        }
        auto Mx = mult_matrix(K, x), My = mult_matrix(K, y);
        o.require(Mx * My == mult_matrix(K, elem_mul(K, x, y)), "product");
        o.require(Mx + My == mult_matrix(K, elem_add(K, x, y)), "sum");
      }
    }
  }));

  tally(criterion(5, "torsion on (2, 3): ell 5, s 4, point 1/5, orbit of 4", 1, [](Outcome& o) {
    ProblemSpec s;
    s.pairs = {{Q(2), Q(3), xi_q(0)}};
    auto sys = build_system(s);
    auto w = find_fixed_torsion(sys, 8, 10);
    o.require(w.ell == 5 && w.s == 4, "ell and s");
    o.require(w.point.size() == 1 && w.point[0] == std::vector<BigRat>{make_rat(1, 5)}, "point");
    o.require(verify_torsion(sys, w), "re-verification");
    auto orbit = torsion_orbit(sys, w.point);
    std::vector<GlobalPoint> want;
    for (long k = 1; k <= 4; ++k) want.push_back({{make_rat(k, 5)}});
    o.require(orbit == want, "orbit");
  }));

  tally(criterion(6, "projection kernel on (3/2, 5), 2-adic fractional parts", 1, [](Outcome& o) {
    ProblemSpec s;
    s.pairs = {{Q(3, 2), Q(5), xi_q(0)}};
    auto sys = build_system(s);
    o.require(sys.components[0].a == 2, "a = 2");
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> num(-1000, 1000), ex(0, 12);
    for (int t = 0; t < 100; ++t) {
      // diagonal image of Z[1/2]
      BigRat y(num(rng), BigInt(ipow(BigInt(2), static_cast<unsigned long>(ex(rng)))));
      y.canonicalize();
      auto lat = embed_global(sys, {{y}});
      o.require(project_Pi(sys, lat) == 0, "projection of a lattice element");
    }
    o.require(padic_fractional(make_rat(1, 2), 2) == make_rat(1, 2), "{1/2}_2");
    o.require(padic_fractional(make_rat(1, 3), 2) == 0, "{1/3}_2");
    o.require(padic_fractional(make_rat(5, 6), 2) == make_rat(1, 2), "{5/6}_2");
  }));

  tally(criterion(7, "certified orbit values: kappa 64 vs 96, rational fast path", 60, [](Outcome& o) {
    OrbitEvaluator ev(two_three_sqrt2());
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(0, 64);
    for (int k = 0; k < 100; ++k) {
      long m = d(rng), n = d(rng);
      auto a = ev.eval(m, n, 64), b = ev.eval(m, n, 96);
      BigRat diff = abs(a.value - b.value);
      diff = std::min(diff, BigRat(1 - diff));
      o.require(diff <= a.error_radius, "re-evaluation outside radius");
    }
    ProblemSpec s;
    s.pairs = {{Q(2), Q(3), xi_q(1, 7)}};
    OrbitEvaluator fast(s);
    o.require(fast.rational(), "fast path not taken");
    for (long m = 0; m <= 20; ++m)
      for (long n = 0; n <= 20; ++n) {
        long r = 1;
        for (long i = 0; i < m; ++i) r = r * 2 % 7;
        for (long i = 0; i < n; ++i) r = r * 3 % 7;
        auto p = fast.eval(m, n, 64);
        o.require(p.value == make_rat(r, 7) && p.error_radius == 0, "modular mismatch");
      }
  }));

  tally(criterion(8, "density trend for (2, 3, sqrt2) against the oracle", 300, [](Outcome& o) {
    // tests/oracles/density_oracle.py
    const char* pinned[] = {"0.04877323527902566099589201", "0.03510472644273724964448231",
                            "0.007391156883244567219157857", "0.001829386525289192382304597"};
    auto rep = density_trend(two_three_sqrt2(), {8, 16, 32, 64}, 64, 4);
    for (size_t i = 0; i < 4; ++i) {
      BigRat want = parse_rational(pinned[i]);
      o.require(abs(rep.rows[i].max_gap - want) <= parse_rational("1/1000000000000000000"), "pinned row");
    }
    o.require(rep.rows[3].max_gap < rep.rows[0].max_gap, "64 not below 8");
    ProblemSpec s;
    s.pairs = {{Q(2), Q(3), xi_q(1, 3)}};
    for (auto& r : density_trend(s, {8, 16, 32, 64}, 64).rows)
      o.require(r.max_gap == make_rat(1, 3), "negative control");
  }));

  tally(criterion(9, "(phi, 2, sqrt3): check applies, 32x32 gap below 8x8", 300, [](Outcome& o) {
    auto r = cli({"check", data("phi_two_sqrt3.json")});
    o.require(r.code == 0 && r.json["result"]["overall"] == "theorem-applies", "check verdict");
    auto g = cli({"orbit", data("phi_two_sqrt3.json"), "--grid", "32", "32", "--csv", "/dev/null"});
    o.require(g.code == 0, "orbit exit");
    if (g.code != 0) return;
    auto& rows = g.json["result"]["rows"];
    o.require(rows.front()["size"] == 8 && rows.back()["size"] == 32, "trend sizes");
    BigRat g8 = parse_rational(rows.front()["max_gap"].get<std::string>());
    BigRat g32 = parse_rational(rows.back()["max_gap"].get<std::string>());
    o.require(g32 < g8, "32 not below 8");
  }));

  std::printf("%s: %d of 9 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
