#include "algdense/modpoly.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace algdense::modp {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inv(const BigInt& x, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("coefficient is not invertible modulo " + m.get_str());
  return r;
}

}  // namespace

Poly reduce(const Poly& a, const BigInt& m) {
  Poly r;
  for (auto& c : a) r.push_back(mod(c, m));
  trim(r);
  return r;
}

Poly reduce(const RatPoly& a, const BigInt& m) {
  Poly r;
  for (auto& c : a.coeffs()) r.push_back(mod(BigInt(c.get_num() * inv(c.get_den(), m)), m));
  trim(r);
  return r;
}

RatPoly lift(const Poly& a) {
  std::vector<BigRat> c;
  for (auto& x : a) c.emplace_back(x);
  return RatPoly(std::move(c));
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

Poly add(const Poly& a, const Poly& b, const BigInt& m) {
  Poly r(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(r, m);
}

Poly sub(const Poly& a, const Poly& b, const BigInt& m) {
  Poly r(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(r, m);
}

Poly mul(const Poly& a, const Poly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(r, m);
}

Poly scale(const Poly& a, const BigInt& c, const BigInt& m) {
  Poly r;
  for (auto& x : a) r.push_back(x * c);
  return reduce(r, m);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const BigInt& m) {
  if (b.empty()) throw DomainError("modular polynomial division by zero");
  Poly r = reduce(a, m);
  if (r.size() < b.size()) return {Poly{}, r};
  const BigInt li = inv(b.back(), m);
  const size_t db = b.size() - 1;
  Poly q(r.size() - db, BigInt(0));
  for (size_t i = r.size(); i-- > db;) {
    BigInt t = mod(BigInt(r[i] * li), m);
    if (t == 0) continue;
    q[i - db] = t;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = mod(BigInt(r[i - db + j] - t * b[j]), m);
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, const BigInt& m) { return divmod(a, b, m).second; }

Poly monic(const Poly& a, const BigInt& m) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), m), m);
}

Poly derivative(const Poly& a, const BigInt& m) {
  Poly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  return reduce(r, m);
}

Poly shift(const Poly& a, const BigInt& c, const BigInt& m) {
  Poly acc;
  Poly lin = reduce(Poly{c, BigInt(1)}, m);
  for (size_t i = a.size(); i-- > 0;) acc = add(mul(acc, lin, m), Poly{a[i]}, m);
  return acc;
}

Poly gcd(const Poly& a, const Poly& b, const BigInt& p) {
  Poly x = reduce(a, p), y = reduce(b, p);
  while (!y.empty()) {
    Poly r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, const BigInt& p) {
  Poly r0 = reduce(a, p), r1 = reduce(b, p);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  BigInt li = inv(r0.back(), p);
  return {scale(r0, li, p), scale(s0, li, p), scale(t0, li, p)};
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& f, const BigInt& p) {
  Poly result{1};
  result = rem(result, f, p);
  Poly b = rem(base, f, p);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), f, p);
  }
  return result;
}

namespace {

// Yun-style squarefree decomposition in characteristic p.
void squarefree_decomposition(const Poly& f, const BigInt& p, unsigned mult_scale,
                              std::vector<std::pair<Poly, unsigned>>& out) {
  if (degree(f) <= 0) return;
  Poly c = gcd(f, derivative(f, p), p);
  Poly w = divmod(f, c, p).first;
  unsigned i = 1;
  while (!is_one(w) && degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly fac = divmod(w, y, p).first;
    if (degree(fac) > 0) out.push_back({monic(fac, p), i * mult_scale});
    w = y;
    c = divmod(c, y, p).first;
    ++i;
  }
  if (degree(c) > 0) {
    // c is a p-th power: take the p-th root of its coefficients' positions.
    const unsigned long pu = p.get_ui();
    Poly root;
    for (size_t k = 0; k < c.size(); k += pu) root.push_back(c[k]);
    squarefree_decomposition(monic(root, p), p, mult_scale * static_cast<unsigned>(pu), out);
  }
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f, const BigInt& p) {
  std::vector<std::pair<Poly, int>> out;
  Poly x{0, 1};
  Poly h = rem(x, f, p);
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, p, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.push_back({g, d});
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back({monic(f, p), degree(f)});
  return out;
}

void equal_degree(const Poly& f, int d, const BigInt& p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(monic(f, p));
    return;
  }
  BigInt q = ipow(p, static_cast<unsigned long>(d));
  while (true) {
    Poly a;
    for (int i = 0; i < n; ++i) {
      BigInt c;
      mpz_set_ui(c.get_mpz_t(), rng());
      a.push_back(mod(c, p));
    }
    trim(a);
    if (degree(a) <= 0) continue;
    Poly b;
    if (p == 2) {
      Poly t = a, acc = a;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), f, p);
        acc = add(acc, t, p);
      }
      b = acc;
    } else {
      b = sub(powmod(a, BigInt((q - 1) / 2), f, p), Poly{1}, p);
    }
    Poly g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f_in, const BigInt& p) {
  Poly f = monic(reduce(f_in, p), p);
  if (f.empty()) throw DomainError("factor of the zero polynomial mod p");
  std::vector<std::pair<Poly, unsigned>> sqf, out;
  squarefree_decomposition(f, p, 1, sqf);
  std::mt19937_64 rng(0x5eed);
  for (auto& [part, mult] : sqf) {
    for (auto& [block, d] : distinct_degree(part, p)) {
      std::vector<Poly> irr;
      equal_degree(block, d, p, rng, irr);
      for (auto& g : irr) out.push_back({g, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

bool is_irreducible(const Poly& f, const BigInt& p) {
  Poly g = reduce(f, p);
  if (degree(g) <= 0) return false;
  auto fac = factor(g, p);
  return fac.size() == 1 && fac[0].second == 1;
}

std::pair<Poly, Poly> hensel_lift(const Poly& f, const Poly& g0, const Poly& h0, const BigInt& p, long N) {
  auto [one, s, t] = ext_gcd(reduce(g0, p), reduce(h0, p), p);
  if (!is_one(one)) throw DomainError("hensel_lift: factors are not coprime mod p");
  Poly g = reduce(g0, p), h = monic(reduce(h0, p), p);
  BigInt pj = p;  // current modulus p^j
  for (long j = 1; j < N; ++j) {
    BigInt next = pj * p;
    Poly diff = sub(reduce(f, next), mul(g, h, next), next);
    Poly e;
    for (auto& c : diff) e.push_back(BigInt(c / pj));
    e = reduce(e, p);
    if (!e.empty()) {
      // g0 sigma + h0 tau = e (mod p), deg sigma < deg h0
      Poly sigma = rem(mul(s, e, p), h, p);
      Poly tau = divmod(sub(e, mul(reduce(g, p), sigma, p), p), reduce(h, p), p).first;
      h = add(h, scale(sigma, pj, next), next);
      g = add(g, scale(tau, pj, next), next);
    }
    pj = next;
  }
  return {g, h};
}

std::vector<Poly> hensel_lift_multi(const Poly& f, const std::vector<Poly>& factors_mod_p, const BigInt& p, long N) {
  std::vector<Poly> out;
  if (factors_mod_p.size() == 1) {
    out.push_back(reduce(f, ipow(p, N)));
    return out;
  }
  Poly rest = f;
  for (size_t i = 0; i + 1 < factors_mod_p.size(); ++i) {
    Poly others{1};
    for (size_t j = i + 1; j < factors_mod_p.size(); ++j) others = mul(others, factors_mod_p[j], p);
    auto [g, h] = hensel_lift(rest, others, factors_mod_p[i], p, N);
    out.push_back(h);
    rest = g;
  }
  out.push_back(rest);
  return out;
}

}  // namespace algdense::modp
