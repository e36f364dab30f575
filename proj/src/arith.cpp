#include "algdense/arith.hpp"

#include <algorithm>
#include <cctype>

namespace algdense {

BigRat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos && s.find_first_of(".eE") != std::string::npos) {
    std::string mant = s, ex = "0";
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      mant = s.substr(0, e);
      ex = s.substr(e + 1);
    }
    auto dot = mant.find('.');
    std::string frac = dot == std::string::npos ? "" : mant.substr(dot + 1);
    std::string whole = dot == std::string::npos ? mant : mant.substr(0, dot);
    std::string sign;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      sign = whole[0] == '-' ? "-" : "";
      whole.erase(0, 1);
    }
    if (whole.empty() && frac.empty()) throw DomainError("malformed rational literal '" + text + "'");
    std::string digits = (whole.empty() ? "0" : whole) + frac;
    if (!valid_int(digits) || digits[0] == '-' || digits[0] == '+' || !valid_int(ex) || ex.size() > 6)
      throw DomainError("malformed rational literal '" + text + "'");
    long shift = std::stol(ex) - static_cast<long>(frac.size());
    BigRat r(BigInt(sign + digits, 10));
    BigInt ten = 10;
    if (shift >= 0)
      r *= BigRat(ipow(ten, static_cast<unsigned long>(shift)));
    else
      r /= BigRat(ipow(ten, static_cast<unsigned long>(-shift)));
    r.canonicalize();
    return r;
  }
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw DomainError("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den, 10);
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  BigRat r(BigInt(num, 10), d);
  r.canonicalize();
  return r;
}

long vp(const BigInt& x, const BigInt& p) {
  if (x == 0) throw DomainError("valuation of zero");
  BigInt y = abs(x);
  long v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    y /= p;
    ++v;
  }
  return v;
}

long vp(const BigRat& x, const BigInt& p) {
  if (x == 0) throw DomainError("valuation of zero");
  return vp(BigInt(x.get_num()), p) - vp(BigInt(x.get_den()), p);
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat rpow(const BigRat& base, unsigned long e) {
  BigRat r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  return r;
}

namespace {

BigInt pollard_rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) {
      BigInt r = v * v + c;
      return BigInt(r % n);
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n == 0) throw DomainError("factorize(0)");
  std::map<BigInt, unsigned> out;
  BigInt m = abs(n);
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++out[BigInt(p)];
    }
  }
  factor_into(m, out);
  return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  std::vector<BigInt> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

BigInt radical(const BigInt& n) {
  BigInt r = 1;
  for (auto& p : prime_divisors(n)) r *= p;
  return r;
}

BigInt floor_rat(const BigRat& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigRat frac_rat(const BigRat& x) { return x - BigRat(floor_rat(x)); }

unsigned long euler_phi(unsigned long d) {
  unsigned long r = d;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      r -= r / p;
    }
  }
  if (d > 1) r -= r / d;
  return r;
}

std::string to_string(const BigRat& x) { return x.get_str(); }
std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_decimal(const BigRat& x, int digits) {
  BigInt scale = ipow(10, static_cast<unsigned long>(digits));
  BigInt scaled = floor_rat(x * BigRat(scale));
  bool neg = scaled < 0;
  BigInt a = abs(scaled);
  std::string s = a.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return neg ? "-" + s : s;
}

}  // namespace algdense
