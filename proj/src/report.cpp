#include "algdense/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace algdense {

namespace {

const char* kind_str(IndependenceResult::Kind k) {
  switch (k) {
    case IndependenceResult::Kind::Independent: return "independent";
    case IndependenceResult::Kind::Dependent: return "dependent";
    default: return "undecided";
  }
}

const char* kind_str(XiResult::Kind k) {
  switch (k) {
    case XiResult::Kind::OutsideField: return "outside_field";
    case XiResult::Kind::InsideField: return "inside_field";
    default: return "assumed_outside";
  }
}

std::string prime_str(const BigInt& p) { return p == 0 ? "inf" : p.get_str(); }

Json rats(const std::vector<BigRat>& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(rat_str(x));
  return a;
}

}  // namespace

std::string rat_str(const BigRat& x) {
  BigRat y = x;
  y.canonicalize();
  return y.get_str();
}

Json poly_json(const RatPoly& f) {
  Json a = Json::array();
  for (int i = 0; i <= f.degree(); ++i) a.push_back(rat_str(f.coeff(i)));
  return a;
}

std::string decimal_upper(const BigRat& x, int sig) {
  if (x < 0) throw DomainError("decimal_upper: negative input");
  if (x == 0) return "0";
  // 10^e <= x < 10^(e+1)
  long e = static_cast<long>(std::floor(std::log10(x.get_d())));
  auto p10 = [](long k) {
    return k >= 0 ? BigRat(ipow(BigInt(10), static_cast<unsigned long>(k)))
                  : BigRat(BigInt(1), ipow(BigInt(10), static_cast<unsigned long>(-k)));
  };
  while (p10(e) > x) --e;
  while (p10(e + 1) <= x) ++e;
  BigRat unit = p10(e - sig + 1);
  BigRat q = x / unit;
  BigInt mant = q.get_num() / q.get_den();
  if (BigRat(mant) < q) mant += 1;
  if (mant >= ipow(BigInt(10), static_cast<unsigned long>(sig))) {
    mant /= 10;
    ++e;
  }
  std::string s = mant.get_str();
  std::string out = s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  return out + "e" + std::to_string(e);
}

Json to_json(const HypothesisReport& r) {
  Json j;
  j["overall"] = to_string(r.overall);
  j["failed_condition"] = r.failed_condition.empty() ? Json(nullptr) : Json(r.failed_condition);
  j["conditions"] = {{"a", to_string(r.condition_a)},
                     {"b", to_string(r.condition_b.verdict)},
                     {"c", to_string(r.condition_c)},
                     {"xi", to_string(r.xi_condition)}};
  j["xi_assumed"] = r.xi_assumed;
  Json b;
  b["verdict"] = to_string(r.condition_b.verdict);
  if (r.condition_b.verdict == Verdict::Fails)
    b["witness"] = {{"i", r.condition_b.i},
                    {"j", r.condition_b.j},
                    {"embedding", r.condition_b.embedding},
                    {"order_lambda", r.condition_b.order_lambda},
                    {"order_mu", r.condition_b.order_mu},
                    {"u", r.condition_b.u}};
  j["condition_b"] = b;
  Json pairs = Json::array();
  for (size_t i = 0; i < r.pairs.size(); ++i) {
    const auto& p = r.pairs[i];
    Json pj;
    pj["index"] = i;
    pj["field"] = {{"degree", p.field_degree}, {"minpoly", poly_json(p.field_minpoly)}, {"c", p.c}};
    Json ind = {{"verdict", kind_str(p.independence.kind)}};
    if (p.independence.kind == IndependenceResult::Kind::Dependent)
      ind["witness"] = {{"m", p.independence.m}, {"n", p.independence.n}};
    ind["certificate"] = p.independence.certificate;
    pj["independence"] = ind;
    Json hyp = {{"verdict", to_string(p.hyperbolicity.verdict)}};
    if (p.hyperbolicity.verdict != Verdict::Holds)
      hyp["witness"] = {{"prime", prime_str(p.hyperbolicity.prime)}, {"place", p.hyperbolicity.place}};
    if (!p.hyperbolicity.reason.empty()) hyp["reason"] = p.hyperbolicity.reason;
    pj["hyperbolicity"] = hyp;
    Json xi = {{"verdict", kind_str(p.xi.kind)}};
    if (p.xi.kind == XiResult::Kind::InsideField) xi["coords"] = rats(p.xi.coords);
    xi["certificate"] = p.xi.certificate;
    pj["xi"] = xi;
    pj["stabilized_power"] = {{"l0", p.l0.l}, {"degree", p.l0.degree}, {"searched_up_to", p.l0.searched_up_to}};
    if (p.generator)
      pj["generator"] = {{"n", p.generator->n},
                         {"m", p.generator->m},
                         {"sigma", rats(p.generator->sigma.coords)},
                         {"certified_up_to", p.generator->certified_up_to}};
    else
      pj["generator"] = {{"note", p.generator_note}};
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  return j;
}

Json places_json(const ProblemSpec& spec) {
  Json out = Json::array();
  for (size_t i = 0; i < spec.pairs.size(); ++i) {
    auto pp = prepare_pair(spec.pairs[i], spec.bounds);
    const auto& K = pp.composed.field;
    auto table = place_table(K, {pp.composed.lambda, pp.composed.mu});
    Json pj;
    pj["index"] = i;
    pj["field"] = {{"degree", K.degree}, {"minpoly", poly_json(K.minpoly)}};
    Json arch = Json::array(), fin = Json::array();
    for (auto& pl : table) {
      if (pl.infinite()) {
        Json a;
        a["embedding"] = pl.embedding;
        a["real"] = pl.real_embedding;
        a["abs_lambda"] = to_decimal(pl.abs_values[0].mid(), 12);
        a["abs_mu"] = to_decimal(pl.abs_values[1].mid(), 12);
        a["on_unit_circle"] = {static_cast<bool>(pl.on_unit_circle[0]), static_cast<bool>(pl.on_unit_circle[1])};
        arch.push_back(a);
      } else {
        Json f;
        f["prime"] = pl.prime.get_str();
        f["index"] = pl.index;
        f["degree"] = pl.factor.degree;
        f["certified"] = pl.factor.certified_irreducible;
        f["e"] = pl.factor.ramification;
        f["f"] = pl.factor.residue_degree;
        f["v_lambda"] = rat_str(pl.valuations[0]);
        f["v_mu"] = rat_str(pl.valuations[1]);
        fin.push_back(f);
      }
    }
    pj["archimedean"] = arch;
    pj["finite"] = fin;
    out.push_back(pj);
  }
  return out;
}

std::string places_text(const Json& places) {
  std::ostringstream os;
  for (auto& pj : places) {
    os << "pair " << pj["index"].get<size_t>() << "  degree " << pj["field"]["degree"].get<int>() << "  minpoly [";
    bool first = true;
    for (auto& c : pj["field"]["minpoly"]) {
      os << (first ? "" : ", ") << c.get<std::string>();
      first = false;
    }
    os << "]\n";
    os << std::left << std::setw(6) << "prime" << std::setw(7) << "place" << std::setw(4) << "e" << std::setw(4) << "f"
       << std::setw(18) << "|lambda| / v" << std::setw(18) << "|mu| / v" << "note\n";
    for (auto& a : pj["archimedean"]) {
      std::string note = a["real"].get<bool>() ? "real" : "complex";
      if (a["on_unit_circle"][0].get<bool>() || a["on_unit_circle"][1].get<bool>()) note += ", unit circle";
      os << std::setw(6) << "inf" << std::setw(7) << a["embedding"].get<size_t>() << std::setw(4) << "-"
         << std::setw(4) << "-" << std::setw(18) << a["abs_lambda"].get<std::string>() << std::setw(18)
         << a["abs_mu"].get<std::string>() << note << "\n";
    }
    for (auto& f : pj["finite"]) {
      bool cert = f["certified"].get<bool>();
      os << std::setw(6) << f["prime"].get<std::string>() << std::setw(7) << f["index"].get<size_t>() << std::setw(4)
         << (cert ? std::to_string(f["e"].get<int>()) : "?") << std::setw(4)
         << (cert ? std::to_string(f["f"].get<int>()) : "?") << std::setw(18) << f["v_lambda"].get<std::string>()
         << std::setw(18) << f["v_mu"].get<std::string>() << (cert ? "" : "uncertified, degree " +
                                                                          std::to_string(f["degree"].get<int>()))
         << "\n";
    }
  }
  std::string t = os.str(), out;
  std::istringstream lines(t);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

Json to_json(const DensityReport& r) {
  Json j;
  j["grid"] = {{"M", r.M}, {"N", r.N}};
  j["kappa_out"] = r.kappa;
  Json rows = Json::array();
  for (auto& row : r.rows)
    rows.push_back({{"size", row.size},
                    {"count", row.count},
                    {"max_gap", rat_str(row.max_gap)},
                    {"max_gap_decimal", decimal_upper(row.max_gap, 12)},
                    {"star_discrepancy", rat_str(row.star_discrepancy)},
                    {"star_discrepancy_decimal", decimal_upper(row.star_discrepancy, 12)}});
  j["rows"] = rows;
  j["max_gap_nonincreasing"] = r.max_gap_nonincreasing;
  return j;
}

std::string orbit_csv(const std::vector<OrbitPoint>& points, long kappa) {
  const int digits = static_cast<int>(std::ceil(kappa * std::log10(2.0))) + 2;
  std::string out = "m,n,value,error_radius\n";
  for (auto& p : points) {
    std::string v = to_decimal(p.value, digits);
    BigRat printed = parse_rational(v);
    BigRat r = p.error_radius + (p.value - printed);
    out += std::to_string(p.m) + "," + std::to_string(p.n) + "," + v + "," + (r == 0 ? "0" : decimal_upper(r, 3)) + "\n";
  }
  return out;
}

Json torsion_json(const SolenoidSystem& sys, const std::optional<TorsionWitness>& w, int s_max, long ell_max) {
  constexpr size_t kListCap = 4096;
  Json j;
  j["bounds"] = {{"s_max", s_max}, {"ell_max", ell_max}};
  Json comps = Json::array();
  for (auto& c : sys.components) {
    Json primes = Json::array();
    for (auto& p : c.primes) primes.push_back(prime_str(p));
    comps.push_back({{"r", c.r}, {"a", c.a.get_str()}, {"primes", primes}});
  }
  j["system"] = comps;
  j["found"] = w.has_value();
  if (!w) {
    j["message"] = "no witness with s <= " + std::to_string(s_max) + " and ell <= " + std::to_string(ell_max);
    return j;
  }
  j["ell"] = w->ell;
  j["s"] = w->s;
  Json pt = Json::array();
  for (auto& comp : w->point) pt.push_back(rats(comp));
  j["point"] = pt;
  j["verified"] = verify_torsion(sys, *w);
  j["projection"] = rat_str(project_Pi(sys, embed_global(sys, w->point)));
  auto orbit = torsion_orbit(sys, w->point);
  j["orbit_size"] = orbit.size();
  Json ol = Json::array();
  for (size_t k = 0; k < orbit.size() && k < kListCap; ++k) {
    Json e = Json::array();
    for (auto& comp : orbit[k]) e.push_back(rats(comp));
    ol.push_back(e);
  }
  j["orbit"] = ol;
  j["orbit_truncated"] = orbit.size() > kListCap;
  return j;
}

}  // namespace algdense
