#include "algdense/solenoid.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "algdense/hypotheses.hpp"

namespace algdense {

namespace {

// d = (part built from primes of a) * (rest)
std::pair<BigInt, BigInt> split_denominator(BigInt d, const BigInt& a) {
  BigInt inside = 1;
  if (a > 1)
    for (;;) {
      BigInt g = gcd(d, a);
      if (g == 1) break;
      d /= g;
      inside *= g;
    }
  return {inside, d};
}

BigInt mod_inverse(const BigInt& x, const BigInt& m) {
  BigInt r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t())) throw DomainError("not invertible");
  return r;
}

BigRat reduce_coord(const BigRat& q, const BigInt& a) {
  auto [inside, rest] = split_denominator(q.get_den(), a);
  if (rest == 1) return 0;
  BigInt t = q.get_num() * mod_inverse(inside, rest);
  mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), rest.get_mpz_t());
  BigRat out(t, rest);
  out.canonicalize();
  return out;
}

bool in_lattice(const BigRat& q, const BigInt& a) { return split_denominator(q.get_den(), a).second == 1; }

std::vector<BigRat> row_times(const std::vector<BigRat>& y, const MultMatrix& M) {
  std::vector<BigRat> out(M.size(), BigRat(0));
  for (size_t j = 0; j < M.size(); ++j)
    if (y[j] != 0)
      for (size_t k = 0; k < M.size(); ++k) out[k] += y[j] * M.entries[j][k];
  return out;
}

MultMatrix matrix_pow(MultMatrix m, unsigned long e) {
  MultMatrix r = identity_matrix(m.size());
  while (e) {
    if (e & 1) r = r * m;
    e >>= 1;
    if (e) m = m * m;
  }
  return r;
}

using ModMatrix = std::vector<std::vector<long long>>;

long long mod_of(const BigRat& q, long long l) {
  BigInt L = static_cast<long>(l);
  BigInt t = q.get_num() * mod_inverse(q.get_den(), L);
  mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), L.get_mpz_t());
  return t.get_si();
}

ModMatrix reduce_matrix(const MultMatrix& M, long long l) {
  ModMatrix out(M.size(), std::vector<long long>(M.size()));
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < M.size(); ++j) out[i][j] = mod_of(M.entries[i][j], l);
  return out;
}

ModMatrix mul(const ModMatrix& a, const ModMatrix& b, long long l) {
  const size_t n = a.size();
  ModMatrix c(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % l;
  return c;
}

long long inv_mod(long long x, long long l) {
  long long r = 1, e = l - 2;
  x %= l;
  while (e) {
    if (e & 1) r = r * x % l;
    x = x * x % l;
    e >>= 1;
  }
  return r;
}

// nonzero y with y P = 0 and y Q = 0 over Z/l, l prime
std::optional<std::vector<long long>> left_kernel_vector(const ModMatrix& P, const ModMatrix& Q, long long l) {
  const size_t n = P.size();
  // rows of the system: columns of P and Q
  std::vector<std::vector<long long>> rows;
  for (const ModMatrix* M : {&P, &Q})
    for (size_t c = 0; c < n; ++c) {
      std::vector<long long> r(n);
      for (size_t k = 0; k < n; ++k) r[k] = (*M)[k][c];
      rows.push_back(r);
    }
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < rows.size(); ++c) {
    size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    long long iv = inv_mod(rows[rank][c], l);
    for (auto& v : rows[rank]) v = v * iv % l;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      long long f = rows[r][c];
      for (size_t k = 0; k < n; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % l + l) % l;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  if (rank == n) return std::nullopt;
  size_t free_col = 0;
  for (size_t c = 0; c < n; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end()) {
      free_col = c;
      break;
    }
  std::vector<long long> y(n, 0);
  y[free_col] = 1;
  for (size_t r = 0; r < rank; ++r) y[pivot_col[r]] = (l - rows[r][free_col]) % l;
  return y;
}

}  // namespace

SolenoidSystem build_system(const std::vector<NumberField>& fields, const std::vector<FieldElement>& lambdas,
                            const std::vector<FieldElement>& mus) {
  if (fields.size() != lambdas.size() || fields.size() != mus.size())
    throw DomainError("build_system: mismatched component counts");
  SolenoidSystem sys;
  for (size_t i = 0; i < fields.size(); ++i) {
    SolenoidComponent c;
    c.field = fields[i];
    c.lambda = lambdas[i];
    c.mu = mus[i];
    c.r = fields[i].degree;
    c.A = mult_matrix(c.field, c.lambda);
    c.B = mult_matrix(c.field, c.mu);
    c.a = lcm(denominator_radical(c.A), denominator_radical(c.B));
    c.primes.push_back(0);
    for (auto& p : prime_divisors(c.a)) c.primes.push_back(p);
    sys.components.push_back(std::move(c));
  }
  return sys;
}

SolenoidSystem build_system(const ProblemSpec& spec) {
  std::vector<NumberField> fields;
  std::vector<FieldElement> ls, ms;
  for (auto& pair : spec.pairs) {
    auto p = prepare_pair(pair, spec.bounds);
    fields.push_back(p.composed.field);
    ls.push_back(p.composed.lambda);
    ms.push_back(p.composed.mu);
  }
  return build_system(fields, ls, ms);
}

BigRat padic_fractional(const BigRat& x, const BigInt& p) {
  if (p == 0) return frac_rat(x);
  if (p < 2) throw DomainError("padic_fractional: p must be prime");
  BigInt d = x.get_den(), pe = 1;
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    d /= p;
    pe *= p;
  }
  if (pe == 1) return 0;
  BigInt t = x.get_num() * mod_inverse(d, pe);
  mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pe.get_mpz_t());
  BigRat out(t, pe);
  out.canonicalize();
  return out;
}

RationalSolenoidPoint embed_global(const SolenoidSystem& sys, const GlobalPoint& y) {
  if (y.size() != sys.components.size()) throw DomainError("embed_global: wrong number of components");
  RationalSolenoidPoint x;
  for (size_t i = 0; i < y.size(); ++i) {
    std::vector<std::vector<BigRat>> per;
    std::vector<BigRat> neg;
    for (auto& v : y[i]) neg.push_back(-v);
    for (size_t j = 0; j < sys.components[i].primes.size(); ++j) per.push_back(j == 0 ? y[i] : neg);
    x.coords.push_back(std::move(per));
  }
  return x;
}

BigRat project_Pi(const SolenoidSystem& sys, const RationalSolenoidPoint& x) {
  if (x.coords.size() != sys.components.size()) throw DomainError("project_Pi: wrong number of components");
  BigRat s = 0;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    const auto& primes = sys.components[i].primes;
    if (x.coords[i].size() != primes.size()) throw DomainError("project_Pi: wrong number of local factors");
    for (size_t j = 0; j < primes.size(); ++j) {
      if (x.coords[i][j].empty()) throw DomainError("project_Pi: empty coordinate vector");
      s += padic_fractional(x.coords[i][j][0], primes[j]);
    }
  }
  return frac_rat(s);
}

GlobalPoint apply_A(const SolenoidSystem& sys, const GlobalPoint& y) {
  GlobalPoint out;
  for (size_t i = 0; i < y.size(); ++i) out.push_back(row_times(y[i], sys.components[i].A));
  return out;
}

GlobalPoint apply_B(const SolenoidSystem& sys, const GlobalPoint& y) {
  GlobalPoint out;
  for (size_t i = 0; i < y.size(); ++i) out.push_back(row_times(y[i], sys.components[i].B));
  return out;
}

GlobalPoint reduce_mod_lattice(const SolenoidSystem& sys, const GlobalPoint& y) {
  GlobalPoint out = y;
  for (size_t i = 0; i < y.size(); ++i)
    for (auto& q : out[i]) q = reduce_coord(q, sys.components[i].a);
  return out;
}

bool congruent_mod_lattice(const SolenoidSystem& sys, const GlobalPoint& y, const GlobalPoint& z) {
  for (size_t i = 0; i < y.size(); ++i)
    for (size_t l = 0; l < y[i].size(); ++l)
      if (!in_lattice(y[i][l] - z[i][l], sys.components[i].a)) return false;
  return true;
}

TorsionWitness find_fixed_torsion(const SolenoidSystem& sys, int s_max, long ell_max) {
  if (s_max < 1 || ell_max < 1) throw DomainError("find_fixed_torsion: bounds must be positive");
  for (long l = 2; l <= ell_max; ++l) {
    if (!is_prime(BigInt(l))) continue;
    bool coprime = true;
    for (auto& c : sys.components) coprime = coprime && (c.a % l != 0);
    if (!coprime) continue;
    std::vector<ModMatrix> A, B, Ap, Bp;
    for (auto& c : sys.components) {
      A.push_back(reduce_matrix(c.A, l));
      B.push_back(reduce_matrix(c.B, l));
    }
    Ap = A;
    Bp = B;
    for (int s = 1; s <= s_max; ++s) {
      if (s > 1)
        for (size_t i = 0; i < A.size(); ++i) {
          Ap[i] = mul(Ap[i], A[i], l);
          Bp[i] = mul(Bp[i], B[i], l);
        }
      GlobalPoint point;
      bool ok = true;
      for (size_t i = 0; i < A.size() && ok; ++i) {
        ModMatrix P = Ap[i], Q = Bp[i];
        for (size_t d = 0; d < P.size(); ++d) {
          P[d][d] = (P[d][d] + l - 1) % l;
          Q[d][d] = (Q[d][d] + l - 1) % l;
        }
        auto v = left_kernel_vector(P, Q, l);
        if (!v) {
          ok = false;
          break;
        }
        std::vector<BigRat> y;
        for (auto x : *v) y.push_back(BigRat(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(l))));
        for (auto& q : y) q.canonicalize();
        point.push_back(std::move(y));
      }
      if (!ok) continue;
      TorsionWitness w{l, s, point};
      if (!verify_torsion(sys, w)) throw std::logic_error("find_fixed_torsion: modular witness failed exact check");
      return w;
    }
  }
  throw DomainError("no witness with s <= " + std::to_string(s_max) + " and ell <= " + std::to_string(ell_max));
}

bool verify_torsion(const SolenoidSystem& sys, const TorsionWitness& w) {
  if (w.point.size() != sys.components.size()) return false;
  GlobalPoint a, b;
  for (size_t i = 0; i < w.point.size(); ++i) {
    const auto& c = sys.components[i];
    a.push_back(row_times(w.point[i], matrix_pow(c.A, static_cast<unsigned long>(w.s))));
    b.push_back(row_times(w.point[i], matrix_pow(c.B, static_cast<unsigned long>(w.s))));
  }
  return congruent_mod_lattice(sys, a, w.point) && congruent_mod_lattice(sys, b, w.point);
}

std::vector<GlobalPoint> torsion_orbit(const SolenoidSystem& sys, const GlobalPoint& y) {
  constexpr size_t kCap = 1'000'000;
  std::set<GlobalPoint> seen;
  std::deque<GlobalPoint> queue;
  GlobalPoint start = reduce_mod_lattice(sys, y);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    GlobalPoint x = std::move(queue.front());
    queue.pop_front();
    for (auto next : {apply_A(sys, x), apply_B(sys, x)}) {
      next = reduce_mod_lattice(sys, next);
      if (seen.insert(next).second) {
        if (seen.size() > kCap) throw DomainError("torsion_orbit: orbit larger than " + std::to_string(kCap));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace algdense
