#include "algdense/problem_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace algdense {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(path + ": " + msg, 0, 0, path);
}

void only_keys(const json& j, const std::string& path, std::set<std::string> allowed) {
  for (auto& [k, v] : j.items())
    if (!allowed.count(k)) fail(path, "unknown key '" + k + "'");
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, "missing key '" + key + "'");
  return j.at(key);
}

BigInt integer_of(const json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(j.dump(), 10);
  if (j.is_string()) {
    BigRat q;
    try {
      q = parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
      fail(path, e.what());
    }
    if (q.get_den() != 1) fail(path, "expected an integer");
    return q.get_num();
  }
  fail(path, "expected an integer");
}

BigRat rational_of(const json& j, const std::string& path) {
  if (j.is_number_integer()) return BigRat(BigInt(j.dump(), 10));
  if (j.is_number()) fail(path, "write non-integer numbers as strings such as \"3/2\"");
  if (!j.is_string()) fail(path, "expected a rational");
  const std::string s = j.get<std::string>();
  if (s.find_first_of(".eE") != std::string::npos) fail(path, "expected a rational \"p/q\", not a decimal");
  try {
    return parse_rational(s);
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

long long_of(const json& j, const std::string& path, long lo) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  long v = j.get<long>();
  if (v < lo) fail(path, "must be at least " + std::to_string(lo));
  return v;
}

RealAlgebraic selector_of(const json& j, const std::string& path) {
  only_keys(j, path, {"minpoly", "root_near"});
  const json& mp = need(j, "minpoly", path);
  if (!mp.is_array() || mp.size() < 2) fail(path + "/minpoly", "expected at least two coefficients");
  std::vector<BigInt> c;
  for (size_t i = 0; i < mp.size(); ++i) c.push_back(integer_of(mp[i], path + "/minpoly/" + std::to_string(i)));
  RatPoly f = from_integers(c);
  if (f.degree() < 1) fail(path + "/minpoly", "polynomial must have positive degree");
  const json& near = need(j, "root_near", path);
  if (!near.is_string()) fail(path + "/root_near", "expected a decimal string");
  const std::string s = near.get<std::string>();
  BigRat x;
  try {
    x = parse_rational(s);
  } catch (const DomainError& e) {
    fail(path + "/root_near", e.what());
  }
  auto dot = s.find('.');
  long digits = dot == std::string::npos ? 0 : static_cast<long>(s.size() - dot - 1);
  BigRat tol = BigRat(1, 2) / BigRat(ipow(BigInt(10), static_cast<unsigned long>(digits)));
  try {
    return RealAlgebraic::root_near(f, x, tol);
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

RealAlgebraic value_of(const json& j, const std::string& path) {
  if (j.is_object()) return selector_of(j, path);
  return RealAlgebraic::rational(rational_of(j, path));
}

XiSpec xi_of(const json& j, const std::string& path) {
  XiSpec x;
  auto decimal = [&](const std::string& s, const std::string& p) {
    x.kind = XiSpec::Kind::Decimal;
    x.literal = s;
    try {
      x.value = parse_rational(s);
    } catch (const DomainError& e) {
      fail(p, e.what());
    }
  };
  if (j.is_object() && j.contains("decimal")) {
    only_keys(j, path, {"decimal"});
    if (!j.at("decimal").is_string()) fail(path + "/decimal", "expected a decimal string");
    decimal(j.at("decimal").get<std::string>(), path + "/decimal");
  } else if (j.is_object()) {
    x.kind = XiSpec::Kind::Algebraic;
    x.algebraic = selector_of(j, path);
  } else if (j.is_string() && j.get<std::string>().find_first_of(".eE") != std::string::npos) {
    decimal(j.get<std::string>(), path);
  } else {
    x.kind = XiSpec::Kind::Rational;
    x.value = rational_of(j, path);
    x.literal = j.is_string() ? j.get<std::string>() : j.dump();
  }
  return x;
}

std::pair<long, long> line_column(const std::string& text, size_t byte) {
  long line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    auto pos = msg.find("parse error");
    if (pos != std::string::npos) pos = msg.find(": ", pos);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         (pos == std::string::npos ? msg : msg.substr(pos + 2)),
                     line, col, "");
  }
  if (!doc.is_object()) fail("", "expected an object at the top level");
  only_keys(doc, "", {"schema_version", "pairs", "bounds", "grid"});
  if (doc.contains("schema_version") && doc["schema_version"] != kSchemaVersion)
    fail("/schema_version", "unsupported schema version " + doc["schema_version"].dump());

  ProblemSpec spec;
  const json& pairs = need(doc, "pairs", "");
  if (!pairs.is_array() || pairs.empty()) fail("/pairs", "expected a non-empty array");
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::string p = "/pairs/" + std::to_string(i);
    if (!pairs[i].is_object()) fail(p, "expected an object");
    only_keys(pairs[i], p, {"lambda", "mu", "xi"});
    PairSpec ps;
    ps.lambda = value_of(need(pairs[i], "lambda", p), p + "/lambda");
    ps.mu = value_of(need(pairs[i], "mu", p), p + "/mu");
    ps.xi = xi_of(need(pairs[i], "xi", p), p + "/xi");
    spec.pairs.push_back(std::move(ps));
  }
  if (doc.contains("bounds")) {
    const json& b = doc["bounds"];
    if (!b.is_object()) fail("/bounds", "expected an object");
    only_keys(b, "/bounds", {"B", "U", "l_max", "s_max", "ell_max", "generator_search", "c_bound", "kappa_out"});
    auto get = [&](const char* k, auto& field, long lo) {
      if (b.contains(k)) field = static_cast<std::remove_reference_t<decltype(field)>>(
                             long_of(b[k], std::string("/bounds/") + k, lo));
    };
    get("B", spec.bounds.independence, 1);
    get("U", spec.bounds.power_u, 1);
    get("l_max", spec.bounds.l_max, 1);
    get("s_max", spec.bounds.s_max, 1);
    get("ell_max", spec.bounds.ell_max, 1);
    get("generator_search", spec.bounds.generator_search, 1);
    get("c_bound", spec.bounds.c_bound, 1);
    get("kappa_out", spec.kappa_out, 1);
  }
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object()) fail("/grid", "expected an object");
    only_keys(g, "/grid", {"M", "N"});
    if (g.contains("M")) spec.grid_m = long_of(g["M"], "/grid/M", 0);
    if (g.contains("N")) spec.grid_n = long_of(g["N"], "/grid/N", 0);
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path, 0, 0, "");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace algdense
