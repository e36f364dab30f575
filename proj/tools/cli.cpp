#include "algdense/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "algdense/problem_io.hpp"
#include "algdense/report.hpp"

namespace algdense {

namespace {

struct Options {
  std::string file;
  bool text = false;
  bool timing = false;
  int threads = 1;
  std::optional<long> bound, umax, lmax, smax, prec;
  std::vector<long> grid;
  std::string csv, report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path, 0, 0, "");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write " + path, 0, 0, "");
  o << data;
  if (!o) throw InputError("cannot write " + path, 0, 0, "");
}

Json run_header(const std::string& command, const std::string& digest) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "algdense";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input_sha256"] = digest;
  return j;
}

int exit_of(HypothesisReport::Overall o) {
  switch (o) {
    case HypothesisReport::Overall::TheoremApplies: return kApplies;
    case HypothesisReport::Overall::Fails: return kFails;
    default: return kUndecided;
  }
}

std::string check_text(const HypothesisReport& r) {
  std::ostringstream os;
  os << std::left;
  os << std::setw(10) << "overall" << to_string(r.overall);
  if (!r.failed_condition.empty()) os << " (" << r.failed_condition << ")";
  os << "\n";
  os << std::setw(10) << "a" << to_string(r.condition_a) << "\n";
  os << std::setw(10) << "b" << to_string(r.condition_b.verdict);
  if (r.condition_b.verdict == Verdict::Fails)
    os << "  pairs " << r.condition_b.i << "," << r.condition_b.j << " u=" << r.condition_b.u;
  os << "\n";
  os << std::setw(10) << "c" << to_string(r.condition_c) << "\n";
  os << std::setw(10) << "xi" << to_string(r.xi_condition) << (r.xi_assumed ? "  (assumed)" : "") << "\n";
  Json j = to_json(r);
  for (auto& p : j["pairs"]) {
    os << "pair " << p["index"].get<size_t>() << "  degree " << p["field"]["degree"].get<int>() << "  independence "
       << p["independence"]["verdict"].get<std::string>();
    if (p["independence"].contains("witness"))
      os << " (" << p["independence"]["witness"]["m"].get<long>() << ", " << p["independence"]["witness"]["n"].get<long>()
         << ")";
    os << "  hyperbolicity " << p["hyperbolicity"]["verdict"].get<std::string>();
    if (p["hyperbolicity"].contains("witness"))
      os << " at " << p["hyperbolicity"]["witness"]["prime"].get<std::string>();
    os << "  xi " << p["xi"]["verdict"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string trend_text(const DensityReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "size" << std::setw(10) << "count" << std::setw(22) << "max_gap"
     << "star_discrepancy\n";
  for (auto& row : r.rows)
    os << std::setw(8) << row.size << std::setw(10) << row.count << std::setw(22) << decimal_upper(row.max_gap, 12)
       << decimal_upper(row.star_discrepancy, 12) << "\n";
  os << "max_gap nonincreasing: " << (r.max_gap_nonincreasing ? "yes" : "no") << "\n";
  return os.str();
}

std::string torsion_text(const Json& t) {
  std::ostringstream os;
  if (!t["found"].get<bool>()) return t["message"].get<std::string>() + "\n";
  os << "ell " << t["ell"].get<long>() << "  s " << t["s"].get<int>() << "  point " << t["point"].dump()
     << "  verified " << (t["verified"].get<bool>() ? "yes" : "no") << "  orbit " << t["orbit_size"].get<size_t>()
     << "\n";
  return os.str();
}

std::vector<long> trend_sizes(long M, long N) {
  long cap = std::min(M, N);
  std::vector<long> s;
  for (long v : {8L, 16L, 32L, std::min(M, 64L), M})
    if (v <= cap) s.push_back(v);
  if (s.empty()) s.push_back(cap);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const std::string text = read_file(o.file);
  const std::string digest = sha256_hex(text);
  ProblemSpec spec = parse_problem(text);
  if (o.bound) spec.bounds.independence = *o.bound;
  if (o.umax) spec.bounds.power_u = *o.umax;
  if (o.prec) spec.kappa_out = *o.prec;
  if (o.grid.size() == 2) {
    spec.grid_m = o.grid[0];
    spec.grid_n = o.grid[1];
  }
  if (command == "check" && o.lmax) spec.bounds.l_max = *o.lmax;
  if (command == "torsion") {
    if (o.lmax) spec.bounds.ell_max = *o.lmax;
    if (o.smax) spec.bounds.s_max = *o.smax;
  }

  Json run = run_header(command, digest);
  std::string body;
  std::optional<std::string> csv;
  int code = kApplies;

  if (command == "check") {
    HypothesisReport r = check_problem(spec);
    code = exit_of(r.overall);
    run["result"] = to_json(r);
    if (o.text) body = check_text(r);
  } else if (command == "places") {
    run["result"] = places_json(spec);
    if (o.text) body = places_text(run["result"]);
  } else if (command == "orbit") {
    OrbitEvaluator ev(spec);
    auto points = grid_orbit(ev, spec.grid_m, spec.grid_n, spec.kappa_out, o.threads);
    auto trend = density_trend(ev, trend_sizes(spec.grid_m, spec.grid_n), spec.kappa_out, o.threads);
    csv = orbit_csv(points, spec.kappa_out);
    run["result"] = to_json(trend);
    run["result"]["points"] = points.size();
    if (o.text) body = trend_text(trend);
  } else {
    SolenoidSystem sys = build_system(spec);
    std::optional<TorsionWitness> w;
    try {
      w = find_fixed_torsion(sys, spec.bounds.s_max, spec.bounds.ell_max);
    } catch (const DomainError& e) {
      if (std::string(e.what()).rfind("no witness", 0) != 0) throw;
    }
    code = w ? kApplies : kUndecided;
    run["result"] = torsion_json(sys, w, spec.bounds.s_max, spec.bounds.ell_max);
    if (o.text) body = torsion_text(run["result"]);
  }

  if (o.timing)
    run["timing"] = {{"seconds", std::chrono::duration<double>(clock::now() - t0).count()}};
  const std::string json_text = run.dump(2) + "\n";
  if (!o.report.empty()) write_file(o.report, json_text);
  if (csv && !o.csv.empty()) write_file(o.csv, *csv);

  if (csv && o.csv.empty())
    out << *csv;
  else if (o.text)
    out << body;
  else
    out << json_text;
  return code;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks density hypotheses for sums of algebraic exponentials modulo one", "algdense"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;
  unsigned hw = std::thread::hardware_concurrency();
  o.threads = static_cast<int>(std::clamp(hw, 1u, 8u));

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "problem file (JSON)")->required();
    auto* fmt = sub->add_option_group("format");
    fmt->add_flag("--json", [&](std::int64_t) { o.text = false; }, "JSON output (default)");
    fmt->add_flag("--text", o.text, "aligned text output");
    fmt->require_option(0, 1);
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--timing", o.timing, "add wall-clock timing to the JSON report");
    sub->add_option("--report", o.report, "also write the JSON report to this path");
  };
  auto* check = app.add_subcommand("check", "verify the hypotheses");
  common(check);
  check->add_option("--bound", o.bound, "independence exponent bound B")->check(CLI::PositiveNumber);
  check->add_option("--umax", o.umax, "root-of-unity order bound U")->check(CLI::PositiveNumber);
  check->add_option("--lmax", o.lmax, "power stabilization bound")->check(CLI::PositiveNumber);

  auto* places = app.add_subcommand("places", "place table per pair");
  common(places);

  auto* orbit = app.add_subcommand("orbit", "evaluate the orbit grid and density diagnostics");
  common(orbit);
  orbit->add_option("--grid", o.grid, "grid bounds M N")->expected(2)->check(CLI::NonNegativeNumber);
  orbit->add_option("--prec", o.prec, "output precision in bits")->check(CLI::PositiveNumber);
  orbit->add_option("--csv", o.csv, "write the CSV here; without it the CSV goes to standard output");

  auto* torsion = app.add_subcommand("torsion", "search for a common fixed torsion point");
  common(torsion);
  torsion->add_option("--smax", o.smax, "largest iterate s")->check(CLI::PositiveNumber);
  torsion->add_option("--lmax", o.lmax, "largest prime ell")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  // results are buffered so nothing reaches `out` on failure
  std::ostringstream buf;
  const std::string prefix = "algdense " + command + ": ";
  try {
    int code = dispatch(command, o, buf);
    out << buf.str();
    return code;
  } catch (const InputError& e) {
    err << prefix << o.file << ": " << e.what() << "\n";
  } catch (const PrecisionError& e) {
    err << prefix << "precision failure: " << e.what() << " (required " << e.needed_bits() << " bits)\n";
    return kPrecisionFailure;
  } catch (const DomainError& e) {
    err << prefix << o.file << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << prefix << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace algdense
