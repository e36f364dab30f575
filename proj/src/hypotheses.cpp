#include "algdense/hypotheses.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace algdense {

namespace {

Interval abs_at(const NumberField& K, const FieldElement& x, size_t emb, long bits) {
  return abs(elem_image(K, x, emb).at(bits + 2), bits);
}

Interval log_abs(const NumberField& K, const FieldElement& x, size_t emb, long bits) {
  for (long b = bits;; b *= 2) {
    Interval a = abs_at(K, x, emb, b);
    if (a.lo > 0) return log(a, bits);
    if (b > (1L << 16)) throw PrecisionError("log of an absolute value too close to zero", b);
  }
}

// Sign of |theta(x)| - 1, assuming it is not exactly 1.
int compare_abs_one(const NumberField& K, const FieldElement& x, size_t emb) {
  for (long bits = 32; bits <= (1L << 16); bits *= 2) {
    Interval a = abs_at(K, x, emb, bits);
    if (a.lo > 1) return 1;
    if (a.hi < 1) return -1;
  }
  throw PrecisionError("absolute value not separated from 1", 1L << 17);
}

std::vector<BigRat> convergents_up_to(BigRat x, long bound, std::vector<BigInt>& dens) {
  std::vector<BigRat> out;
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int steps = 0; steps < 200; ++steps) {
    BigInt a = floor_rat(x);
    BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > bound) break;
    out.emplace_back(h2, k2);
    dens.push_back(k2);
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    BigRat f = x - BigRat(a);
    if (f == 0) break;
    x = 1 / f;
  }
  return out;
}

struct CandidateCheck {
  enum { Dependent, NotThis, Undecided } kind;
  long m = 0, n = 0;
  std::string note;
};

CandidateCheck verify_candidate(const NumberField& K, const FieldElement& lambda, const FieldElement& mu,
                                size_t emb, long m, long n) {
  for (long bits = 64; bits <= 1024; bits *= 2) {
    Interval d = Interval::point(m) * log_abs(K, lambda, emb, bits) - Interval::point(n) * log_abs(K, mu, emb, bits);
    if (!d.contains_zero())
      return {CandidateCheck::NotThis, m, n, "m log|lambda| - n log|mu| is bounded away from 0"};
    if (d.width() < pow2(-bits / 2)) break;
  }
  if (m > kExactPowerCap || n > kExactPowerCap)
    return {CandidateCheck::Undecided, m, n, "candidate exponents exceed the exact power cap"};
  FieldElement rho = elem_mul(K, elem_pow(K, lambda, m), elem_pow(K, mu, -n));
  if (rho == elem_rational(K, 1)) return {CandidateCheck::Dependent, m, n, "verified exactly"};
  if (rho == elem_rational(K, -1)) return {CandidateCheck::Dependent, 2 * m, 2 * n, "verified exactly"};
  return {CandidateCheck::NotThis, m, n, "lambda^m / mu^n is not +-1"};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "undecided";
  }
}

std::string to_string(HypothesisReport::Overall o) {
  switch (o) {
    case HypothesisReport::Overall::TheoremApplies: return "theorem-applies";
    case HypothesisReport::Overall::Fails: return "fails";
    default: return "undecided";
  }
}

IndependenceResult check_multiplicative_independence(const NumberField& K, const FieldElement& lambda,
                                                     const FieldElement& mu, size_t embedding, long bound) {
  using Kind = IndependenceResult::Kind;
  std::vector<BigRat> vl, vm;
  for (auto& p : candidate_primes(K, {lambda, mu}))
    for (auto& pl : finite_places(K, {lambda, mu}, p)) {
      vl.push_back(pl.valuations[0]);
      vm.push_back(pl.valuations[1]);
    }
  auto zero = [](const std::vector<BigRat>& v) { return std::all_of(v.begin(), v.end(), [](auto& x) { return x == 0; }); };
  const bool zl = zero(vl), zm = zero(vm);
  if (zl != zm) return {Kind::Independent, 0, 0, "exactly one of lambda, mu is a unit at the finite places"};

  if (!zl) {
    // a dependence lambda^m = mu^n forces m vl = n vm
    std::optional<BigRat> q;
    for (size_t i = 0; i < vl.size(); ++i) {
      if (vm[i] == 0) {
        if (vl[i] != 0) return {Kind::Independent, 0, 0, "finite valuation vectors are not proportional"};
        continue;
      }
      BigRat r = vl[i] / vm[i];
      if (q && *q != r) return {Kind::Independent, 0, 0, "finite valuation vectors are not proportional"};
      q = r;
    }
    if (*q <= 0) return {Kind::Independent, 0, 0, "finite valuation vectors have opposite signs"};
    const long m0 = q->get_den().get_si(), n0 = q->get_num().get_si();
    if (m0 > bound || n0 > bound) return {Kind::Undecided, 0, 0, "forced exponents exceed the bound"};
    auto c = verify_candidate(K, lambda, mu, embedding, m0, n0);
    if (c.kind == CandidateCheck::Dependent) return {Kind::Dependent, c.m, c.n, c.note};
    if (c.kind == CandidateCheck::Undecided) return {Kind::Undecided, m0, n0, c.note};
    return {Kind::Independent, 0, 0, "valuations force (m, n) = k (" + std::to_string(m0) + ", " + std::to_string(n0) +
                                          ") and " + c.note};
  }

  // both units: compare archimedean log vectors
  for (long bits = 128; bits <= 1024; bits *= 2) {
    std::vector<Interval> ll, lm;
    for (size_t i = 0; i < K.embeddings.size(); ++i) {
      ll.push_back(log_abs(K, lambda, i, bits));
      lm.push_back(log_abs(K, mu, i, bits));
    }
    for (size_t i = 0; i < ll.size(); ++i)
      for (size_t j = i + 1; j < ll.size(); ++j)
        if (!(ll[i] * lm[j] - ll[j] * lm[i]).contains_zero())
          return {Kind::Independent, 0, 0, "archimedean log vectors are not proportional"};
    Interval q = ll[embedding] / lm[embedding];
    std::vector<BigInt> dens;
    for (auto& c : convergents_up_to(q.mid(), bound, dens)) {
      if (!q.contains(c) || c <= 0) continue;
      const long m = c.get_den().get_si(), n = c.get_num().get_si();
      bool all = true;
      for (size_t i = 0; i < ll.size() && all; ++i)
        all = (Interval::point(m) * ll[i] - Interval::point(n) * lm[i]).contains_zero();
      if (!all) continue;
      auto r = verify_candidate(K, lambda, mu, embedding, m, n);
      if (r.kind == CandidateCheck::Dependent) return {Kind::Dependent, r.m, r.n, r.note};
    }
  }
  return {Kind::Undecided, 0, 0, "no dependence with exponents <= " + std::to_string(bound)};
}

std::optional<unsigned long> is_root_of_unity_ratio(const RatPoly& f1, const ComplexBox& box1, const RatPoly& f2,
                                                    const ComplexBox& box2) {
  AlgebraicNumber a(f1, box1), b(f2, box2);
  RatPoly m1 = minimal_factor(f1, a.approximable());
  RatPoly m2 = minimal_factor(f2, b.approximable());
  if (m1.coeff(0) == 0 || m2.coeff(0) == 0) throw DomainError("is_root_of_unity_ratio: zero value");
  for (long bits = 32; bits <= 128; bits *= 2) {
    Interval ia = abs2(a.box(bits)), ib = abs2(b.box(bits));
    if (!ia.intersects(ib)) return std::nullopt;
  }
  RatPoly R = squarefree_part(ratio_resultant(m1, m2));
  const unsigned long D = static_cast<unsigned long>(R.degree());
  Approximable zeta = ratio_of(b.approximable(), a.approximable());
  for (unsigned long d = 1; d <= 2 * D * D + 2; ++d) {
    if (euler_phi(d) > D) continue;
    RatPoly phi = cyclotomic(static_cast<unsigned>(d));
    if (poly_gcd(R, phi).degree() < 1) continue;
    if (is_root_of(R, zeta, phi)) return d;
  }
  return std::nullopt;
}

PreparedPair prepare_pair(const PairSpec& pair, const Bounds& bounds) {
  PreparedPair out;
  out.composed = compose_field(pair.lambda.poly, pair.lambda.box, pair.mu.poly, pair.mu.box, bounds.c_bound);
  out.lambda_minpoly = minpoly_of_elem(out.composed.field, out.composed.lambda);
  out.mu_minpoly = minpoly_of_elem(out.composed.field, out.composed.mu);
  return out;
}

ConditionBResult check_condition_b(const std::vector<PairSpec>& pairs, const std::vector<PreparedPair>& prepared) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& P = prepared[i];
    const NumberField& K = P.composed.field;
    auto lroots = isolate_roots(P.lambda_minpoly, 32);
    auto mroots = isolate_roots(P.mu_minpoly, 32);
    for (size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      for (size_t l = 0; l < K.embeddings.size(); ++l) {
        size_t li = identify_root(P.lambda_minpoly, elem_image(K, P.composed.lambda, l));
        auto d1 = is_root_of_unity_ratio(P.lambda_minpoly, lroots[li], pairs[j].lambda.poly, pairs[j].lambda.box);
        if (!d1) continue;
        size_t mi = identify_root(P.mu_minpoly, elem_image(K, P.composed.mu, l));
        auto d2 = is_root_of_unity_ratio(P.mu_minpoly, mroots[mi], pairs[j].mu.poly, pairs[j].mu.box);
        if (!d2) continue;
        return {Verdict::Fails, i, j, l, *d1, *d2, std::lcm(*d1, *d2)};
      }
    }
  }
  return {};
}

HyperbolicityResult check_hyperbolicity(const NumberField& K, const std::vector<FieldElement>& generators) {
  return check_hyperbolicity(K, generators, place_table(K, generators));
}

HyperbolicityResult check_hyperbolicity(const NumberField& K, const std::vector<FieldElement>& generators,
                                        const std::vector<PlaceRecord>& places) {
  HyperbolicityResult undecided;
  bool any_undecided = false;

  // infinite prime
  bool premise = false;
  std::optional<size_t> sphere;
  for (auto& pl : places) {
    if (!pl.infinite()) continue;
    bool all_on = true;
    for (size_t g = 0; g < generators.size(); ++g) {
      if (pl.on_unit_circle[g]) continue;
      all_on = false;
      if (compare_abs_one(K, generators[g], pl.embedding) > 0) premise = true;
    }
    if (all_on && !sphere) sphere = pl.embedding;
  }
  if (premise && sphere) return {Verdict::Fails, 0, *sphere, "embedding maps every generator onto the unit circle"};

  std::map<BigInt, std::vector<const PlaceRecord*>> by_prime;
  for (auto& pl : places)
    if (!pl.infinite()) by_prime[pl.prime].push_back(&pl);
  for (auto& [p, list] : by_prime) {
    bool premise_certain = false, premise_possible = false;
    std::optional<size_t> sphere_certain;
    bool sphere_possible = false;
    for (auto* pl : list) {
      bool cert = pl->factor.certified_irreducible;
      bool any_neg = false, all_zero = true, any_nonzero = false;
      for (auto& v : pl->valuations) {
        if (v < 0) any_neg = true;
        if (v != 0) {
          all_zero = false;
          any_nonzero = true;
        }
      }
      if (any_neg) premise_certain = premise_possible = true;
      if (!cert && any_nonzero) premise_possible = true;
      if (cert && all_zero && !sphere_certain) sphere_certain = pl->index;
      if (cert ? all_zero : true) sphere_possible = true;
    }
    if (premise_certain && sphere_certain)
      return {Verdict::Fails, p, *sphere_certain, "place with all valuations 0 while another has a negative one"};
    if (premise_possible && sphere_possible && !any_undecided) {
      any_undecided = true;
      undecided = {Verdict::Undecided, p, 0, "local factor not certified irreducible"};
    }
  }
  if (any_undecided) return undecided;
  return {};
}

XiResult check_xi(const PreparedPair& prepared, const XiSpec& xi, const Bounds& bounds) {
  using Kind = XiResult::Kind;
  const NumberField& K = prepared.composed.field;
  auto inside_rational = [&](const BigRat& q) {
    XiResult r{Kind::InsideField, elem_rational(K, q).coords, "rational"};
    return r;
  };
  if (xi.kind == XiSpec::Kind::Decimal)
    return {Kind::AssumedOutside, {}, "decimal literal; membership in the field is not certified"};
  if (xi.kind == XiSpec::Kind::Rational) return inside_rational(xi.value);
  const RealAlgebraic& a = xi.algebraic;
  RatPoly m = minimal_factor(a.poly, a.number().approximable());
  if (m.degree() == 1) return inside_rational(-m.coeff(0));
  if (K.degree % m.degree() != 0)
    return {Kind::OutsideField, {}, "degree " + std::to_string(m.degree()) + " does not divide " + std::to_string(K.degree)};
  const size_t emb = prepared.composed.real_embedding;
  auto comp = compose_field(K.minpoly, K.embeddings[emb].box, m, a.box, bounds.c_bound);
  if (comp.field.degree > K.degree)
    return {Kind::OutsideField, {}, "compositum has degree " + std::to_string(comp.field.degree) + " > " +
                                        std::to_string(K.degree)};
  auto coords = coords_in_powers(comp.field, comp.lambda, comp.mu);
  if (!coords) throw DomainError("check_xi: generator does not span the compositum");
  return {Kind::InsideField, *coords, "expressed in the power basis"};
}

HypothesisReport check_problem(const ProblemSpec& spec) {
  if (spec.pairs.empty()) throw DomainError("problem has no pairs");
  for (auto& pair : spec.pairs)
    for (const RealAlgebraic* v : {&pair.lambda, &pair.mu}) {
      AlgebraicNumber n = v->number();
      bool ok = false;
      for (long bits = 32; bits <= 4096; bits *= 2) {
        Interval a = abs(n.box(bits), bits);
        if (a.lo > 1) {
          ok = true;
          break;
        }
        if (a.hi <= 1) break;
      }
      if (!ok) throw DomainError("lambda and mu must satisfy |lambda|, |mu| > 1");
    }

  HypothesisReport rep;
  std::vector<PreparedPair> prepared;
  for (auto& pair : spec.pairs) prepared.push_back(prepare_pair(pair, spec.bounds));

  bool any_outside = false, any_assumed = false;
  for (size_t i = 0; i < spec.pairs.size(); ++i) {
    const auto& P = prepared[i];
    const NumberField& K = P.composed.field;
    const FieldElement &lam = P.composed.lambda, &mu = P.composed.mu;
    PairReport pr;
    pr.field_degree = K.degree;
    pr.field_minpoly = K.minpoly;
    pr.c = P.composed.c;
    pr.independence =
        check_multiplicative_independence(K, lam, mu, P.composed.real_embedding, spec.bounds.independence);
    pr.hyperbolicity = check_hyperbolicity(K, {lam, mu});
    pr.xi = check_xi(P, spec.pairs[i].xi, spec.bounds);
    pr.l0 = stabilized_power(K, lam, mu, spec.bounds.l_max);
    try {
      if (pr.l0.l == 1) {
        pr.generator = find_stable_generator(K, lam, mu, spec.bounds.generator_search, spec.bounds.power_u);
      } else {
        auto sub = [&](const FieldElement& x) {
          FieldElement p = elem_pow(K, x, pr.l0.l);
          RatPoly mp = minpoly_of_elem(K, p);
          size_t idx = identify_root(mp, elem_image(K, p, P.composed.real_embedding));
          return std::pair{mp, isolate_roots(mp, 32)[idx]};
        };
        auto [fl, bl] = sub(lam);
        auto [fm, bm] = sub(mu);
        auto K0 = compose_field(fl, bl, fm, bm, spec.bounds.c_bound);
        pr.generator = find_stable_generator(K0.field, K0.lambda, K0.mu, spec.bounds.generator_search,
                                             spec.bounds.power_u);
      }
    } catch (const DomainError& e) {
      pr.generator_note = e.what();
    }
    if (pr.xi.kind == XiResult::Kind::OutsideField) any_outside = true;
    if (pr.xi.kind == XiResult::Kind::AssumedOutside) any_assumed = true;
    rep.pairs.push_back(std::move(pr));
  }
  rep.condition_b = check_condition_b(spec.pairs, prepared);

  auto fold = [](Verdict acc, Verdict v) {
    if (acc == Verdict::Fails || v == Verdict::Fails) return Verdict::Fails;
    if (acc == Verdict::Undecided || v == Verdict::Undecided) return Verdict::Undecided;
    return Verdict::Holds;
  };
  for (auto& pr : rep.pairs) {
    Verdict a = pr.independence.kind == IndependenceResult::Kind::Independent ? Verdict::Holds
                : pr.independence.kind == IndependenceResult::Kind::Dependent ? Verdict::Fails
                                                                              : Verdict::Undecided;
    rep.condition_a = fold(rep.condition_a, a);
    rep.condition_c = fold(rep.condition_c, pr.hyperbolicity.verdict);
  }
  rep.xi_condition = (any_outside || any_assumed) ? Verdict::Holds : Verdict::Fails;
  rep.xi_assumed = !any_outside && any_assumed;

  const std::pair<const char*, Verdict> order[] = {
      {"a", rep.condition_a}, {"b", rep.condition_b.verdict}, {"c", rep.condition_c}, {"xi", rep.xi_condition}};
  rep.overall = HypothesisReport::Overall::TheoremApplies;
  for (auto& [name, v] : order)
    if (v == Verdict::Fails) {
      rep.overall = HypothesisReport::Overall::Fails;
      rep.failed_condition = name;
      return rep;
    }
  for (auto& [name, v] : order)
    if (v == Verdict::Undecided) {
      rep.overall = HypothesisReport::Overall::Undecided;
      rep.failed_condition = name;
      return rep;
    }
  return rep;
}

}  // namespace algdense
