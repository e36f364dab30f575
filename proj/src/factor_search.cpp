#include "algdense/factor_search.hpp"

#include <algorithm>
#include <functional>

#include "algdense/modpoly.hpp"

namespace algdense {

namespace {

// Monic integer polynomial whose roots are D times the roots of the monic s.
RatPoly integral_rescale(const RatPoly& s, BigInt& D) {
  D = s.denominator();
  RatPoly S = s.scaled(BigRat(1, 1) / BigRat(D));
  return (rpow(BigRat(D), s.degree()) * S).monic();
}

std::set<int> subset_sums(const std::vector<int>& degs) {
  std::set<int> sums{0};
  for (int d : degs) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

struct Unit {
  std::vector<size_t> roots;  // one real root or a conjugate pair
};

}  // namespace

std::set<int> admissible_factor_degrees(const RatPoly& f, int primes_to_try) {
  RatPoly s = squarefree_part(f);
  BigInt D;
  RatPoly S = integral_rescale(s, D);
  const int n = S.degree();
  std::set<int> allowed;
  for (int d = 1; d <= n; ++d) allowed.insert(d);
  int used = 0;
  BigInt p = 2;
  for (int tries = 0; tries < 200 && used < primes_to_try && allowed.size() > 1; ++tries) {
    modp::Poly red = modp::reduce(S, p);
    if (modp::degree(red) == n && modp::degree(modp::gcd(red, modp::derivative(red, p), p)) == 0) {
      std::vector<int> degs;
      for (auto& [g, m] : modp::factor(red, p)) degs.push_back(modp::degree(g));
      auto sums = subset_sums(degs);
      std::set<int> next;
      for (int d : allowed)
        if (sums.count(d)) next.insert(d);
      allowed = std::move(next);
      ++used;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return allowed;
}

RatPoly minimal_factor(const RatPoly& f, const Approximable& value) {
  RatPoly s = squarefree_part(f);
  const int n = s.degree();
  if (n < 1) throw DomainError("minimal_factor: constant polynomial has no roots");
  if (n == 1) return s;
  BigInt D;
  RatPoly S = integral_rescale(s, D);
  const BigRat Dq(D);
  Approximable scaled{[value, Dq](long bits) {
    long extra = log2_ceil(Dq) + 1;
    ComplexBox b = value.at(bits + extra);
    return ComplexBox(b.re() * Interval::point(Dq), b.im() * Interval::point(Dq));
  }};

  auto allowed = admissible_factor_degrees(S);
  if (allowed.size() == 1) return s;

  size_t budget = kFactorSubsetBudget;
  for (long prec = 48;; prec *= 2) {
    if (prec > (1L << 14)) throw PrecisionError("minimal_factor: precision cap reached", prec);
    auto roots = isolate_roots_detailed(S, prec);
    ComplexBox v = scaled.at(prec);
    std::vector<size_t> hits;
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].box.intersects(v)) hits.push_back(i);
    if (hits.empty()) throw DomainError("minimal_factor: value is not a root");
    if (hits.size() > 1) continue;
    const size_t idx = hits[0];

    // Group roots into real singletons and conjugate pairs.
    std::vector<Unit> units;
    std::vector<bool> taken(roots.size(), false);
    size_t target_unit = 0;
    bool pairing_ok = true;
    for (size_t i = 0; i < roots.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      Unit u{{i}};
      if (!roots[i].real) {
        ComplexBox mirror(roots[i].box.re_lo, roots[i].box.re_hi, -roots[i].box.im_hi, -roots[i].box.im_lo);
        size_t partner = roots.size();
        for (size_t j = 0; j < roots.size(); ++j)
          if (!taken[j] && roots[j].box.intersects(mirror)) partner = j;
        if (partner == roots.size()) {
          pairing_ok = false;
          break;
        }
        taken[partner] = true;
        u.roots.push_back(partner);
      }
      units.push_back(u);
    }
    if (!pairing_ok) continue;
    for (size_t k = 0; k < units.size(); ++k)
      for (size_t r : units[k].roots)
        if (r == idx) target_unit = k;

    // Enclosure of prod (x - r) over a unit set, as coefficient boxes.
    const long wbits = prec + 16;
    auto product = [&](const std::vector<size_t>& chosen) {
      std::vector<ComplexBox> c{ComplexBox::point(1)};
      for (size_t k : chosen)
        for (size_t r : units[k].roots) {
          std::vector<ComplexBox> next(c.size() + 1, ComplexBox::point(0));
          for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = next[i + 1] + c[i];
            next[i] = (next[i] - c[i] * roots[r].box).rounded(wbits);
          }
          c = std::move(next);
        }
      return c;
    };

    bool need_more_precision = false;
    // Returns the unique integer polynomial compatible with the boxes, if any.
    auto integer_candidate = [&](const std::vector<ComplexBox>& c, RatPoly& out) {
      std::vector<BigRat> coeffs;
      for (auto& b : c) {
        if (!b.im().contains_zero()) return false;
        BigInt lo = -floor_rat(-b.re_lo), hi = floor_rat(b.re_hi);
        if (lo > hi) return false;
        if (lo < hi) {
          need_more_precision = true;
          return false;
        }
        coeffs.emplace_back(lo);
      }
      out = RatPoly(coeffs);
      return true;
    };

    auto unit_size = [&](size_t k) { return static_cast<int>(units[k].roots.size()); };
    RatPoly found;
    bool have = false;
    for (int d : allowed) {
      if (d == n) break;
      bool complement = 2 * d > n;
      int want = complement ? n - d : d;
      std::vector<size_t> chosen;
      if (!complement) {
        chosen.push_back(target_unit);
        want -= unit_size(target_unit);
        if (want < 0) continue;
      }
      std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
        if (have) return;
        if (remaining == 0) {
          if (budget-- == 0) throw DomainError("minimal_factor: subset budget exhausted");
          RatPoly cand;
          if (!integer_candidate(product(chosen), cand)) return;
          if (!(S % cand).is_zero()) return;
          found = complement ? S / cand : cand;
          have = true;
          return;
        }
        for (size_t k = start; k < units.size(); ++k) {
          if (k == target_unit) continue;
          if (unit_size(k) > remaining) continue;
          chosen.push_back(k);
          rec(k + 1, remaining - unit_size(k));
          chosen.pop_back();
          if (have) return;
        }
      };
      rec(0, want);
      if (have) break;
      if (need_more_precision) break;
    }
    if (need_more_precision && !have) continue;
    RatPoly F = have ? found : S;
    // Undo the scaling: roots of F are D times roots of the factor of s.
    RatPoly back = F.scaled(Dq);
    return back.monic();
  }
}

bool is_irreducible(const RatPoly& f) {
  if (f.is_zero() || f.degree() < 1) return false;
  RatPoly s = squarefree_part(f);
  if (s.degree() < f.degree()) return false;
  if (f.degree() == 1) return true;
  auto roots = isolate_roots(s, 32);
  AlgebraicNumber r(s, roots[0]);
  return minimal_factor(s, r.approximable()).degree() == s.degree();
}

}  // namespace algdense
