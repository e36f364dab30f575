#include "algdense/ratpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace algdense {

RatPoly::RatPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

RatPoly RatPoly::constant(const BigRat& c) { return RatPoly(std::vector<BigRat>{c}); }

RatPoly RatPoly::monomial(const BigRat& c, int degree) {
  std::vector<BigRat> v(degree + 1, BigRat(0));
  v[degree] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_root(const BigRat& c) { return RatPoly(std::vector<BigRat>{-c, BigRat(1)}); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

const BigRat& RatPoly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

RatPoly RatPoly::operator-() const {
  auto c = coeffs_;
  for (auto& x : c) x = -x;
  return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<BigRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(c));
}

RatPoly operator*(const BigRat& s, const RatPoly& a) {
  auto c = a.coeffs_;
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

BigRat RatPoly::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRat> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * BigRat(static_cast<long>(i));
  return RatPoly(std::move(c));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  BigRat inv = 1 / leading();
  return inv * *this;
}

RatPoly RatPoly::compose(const RatPoly& g) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

RatPoly RatPoly::reversed() const {
  auto c = coeffs_;
  std::reverse(c.begin(), c.end());
  return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const BigRat& s) const {
  auto c = coeffs_;
  BigRat pw = 1;
  for (auto& x : c) {
    x *= pw;
    pw *= s;
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::shifted(const BigRat& s) const { return compose(RatPoly(std::vector<BigRat>{s, BigRat(1)})); }

BigInt RatPoly::denominator() const {
  BigInt d = 1;
  for (auto& c : coeffs_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

bool RatPoly::has_integer_coeffs() const {
  for (auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<BigInt> RatPoly::primitive_integer() const {
  if (is_zero()) throw DomainError("primitive part of zero polynomial");
  BigInt d = denominator();
  std::vector<BigInt> out;
  BigInt g = 0;
  for (auto& c : coeffs_) {
    BigRat t = c * BigRat(d);
    out.push_back(t.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

std::string RatPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRat& c = coeffs_[i];
    if (c == 0) continue;
    BigRat a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatPoly from_integers(const std::vector<BigInt>& c) {
  std::vector<BigRat> v;
  for (auto& x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<BigRat> r = a.coeffs();
  std::vector<BigRat> q(a.degree() - b.degree() + 1, BigRat(0));
  const BigRat inv = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    BigRat t = r[i] * inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }
RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

RatPoly pow(const RatPoly& a, unsigned e) {
  RatPoly r = RatPoly::constant(1), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

// Standard resultant lc(f)^deg g * prod g(a_i); zero if either input is zero.
BigRat resultant_std(RatPoly f, RatPoly g) {
  if (f.is_zero() || g.is_zero()) return 0;
  BigRat acc = 1;
  while (true) {
    int m = f.degree(), n = g.degree();
    if (m == 0) return acc * rpow(f.leading(), n);
    if (n == 0) return acc * rpow(g.leading(), m);
    RatPoly r = g % f;
    if (r.is_zero()) return 0;
    int dr = r.degree();
    // Res(f, g) = lc(f)^(n - dr) Res(f, r);  Res(f, r) = (-1)^(m dr) Res(r, f)
    acc *= rpow(f.leading(), n - dr);
    if ((static_cast<long>(m) * dr) % 2) acc = -acc;
    g = std::move(f);
    f = std::move(r);
  }
}

BigRat resultant_spec(const RatPoly& f, const RatPoly& g) {
  // lc(g)^deg f * prod f(b_j) = Res_std(g, f)
  return resultant_std(g, f);
}

}  // namespace

BigRat poly_resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of zero polynomial");
  return resultant_spec(f, g);
}

RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0)");
  RatPoly a = f, b = g;
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of zero polynomial");
  if (f.degree() == 0) return RatPoly::constant(1);
  return (f / poly_gcd(f, f.derivative())).monic();
}

bool is_squarefree(const RatPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

RatPoly cyclotomic(unsigned d) {
  if (d == 0) throw DomainError("cyclotomic(0)");
  static std::mutex mu;
  static std::map<unsigned, RatPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  RatPoly num = RatPoly::monomial(1, static_cast<int>(d)) - RatPoly::constant(1);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) num = num / cyclotomic(e);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, num);
  return num;
}

RatPoly lagrange_interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
  // Newton divided differences.
  const size_t n = xs.size();
  std::vector<BigRat> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  RatPoly acc = RatPoly::constant(dd[n - 1]);
  for (size_t k = n - 1; k-- > 0;) acc = acc * RatPoly::linear_root(xs[k]) + RatPoly::constant(dd[k]);
  return acc;
}

RatPoly resultant_in_x(const RatPoly& f_of_y, const BiPoly& g_xy, int x_degree_bound) {
  std::vector<BigRat> xs, ys;
  for (int k = 0; k <= x_degree_bound; ++k) {
    BigRat x0(k + 1);
    RatPoly gy;
    BigRat pw = 1;
    for (const auto& term : g_xy) {
      gy = gy + pw * term;
      pw *= x0;
    }
    xs.push_back(x0);
    ys.push_back(resultant_spec(gy, f_of_y));
  }
  return lagrange_interpolate(xs, ys);
}

namespace {

BigRat binom(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigRat(r);
}

}  // namespace

RatPoly sum_resultant(const RatPoly& f, const RatPoly& g, const BigRat& c) {
  // f(x - c y) = sum_k f_k sum_i C(k, i) x^i (-c y)^(k - i)
  const int m = f.degree();
  BiPoly terms(m + 1);
  for (int k = 0; k <= m; ++k) {
    if (f.coeff(k) == 0) continue;
    for (int i = 0; i <= k; ++i) {
      BigRat coef = f.coeff(k) * binom(k, i) * rpow(-c, k - i);
      terms[i] = terms[i] + RatPoly::monomial(coef, k - i);
    }
  }
  return resultant_in_x(g, terms, m * g.degree());
}

RatPoly ratio_resultant(const RatPoly& f, const RatPoly& g) {
  if (f.coeff(0) == 0) throw DomainError("ratio_resultant: f(0) = 0");
  const int n = g.degree();
  BiPoly terms(n + 1);
  for (int i = 0; i <= n; ++i) terms[i] = RatPoly::monomial(g.coeff(i), i);
  return resultant_in_x(f, terms, f.degree() * n);
}

RatPoly image_charpoly(const RatPoly& f, const RatPoly& h) {
  BiPoly terms(2);
  terms[0] = -h;
  terms[1] = RatPoly::constant(1);
  return resultant_in_x(f, terms, f.degree());
}

}  // namespace algdense
