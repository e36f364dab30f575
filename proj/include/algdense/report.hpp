#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algdense/density.hpp"
#include "algdense/hypotheses.hpp"
#include "algdense/solenoid.hpp"
#include "json.hpp"

namespace algdense {

using Json = nlohmann::ordered_json;

std::string rat_str(const BigRat& x);
/// Coefficients from the constant term up, as strings.
Json poly_json(const RatPoly& f);
/// Smallest decimal with `sig` significant digits that is >= x >= 0, e.g. "5.43e-20".
std::string decimal_upper(const BigRat& x, int sig);

Json to_json(const HypothesisReport& r);

Json places_json(const ProblemSpec& spec);
std::string places_text(const Json& places);

Json to_json(const DensityReport& r);
/// Header m,n,value,error_radius. The printed radius covers the decimal truncation of value.
std::string orbit_csv(const std::vector<OrbitPoint>& points, long kappa);

Json torsion_json(const SolenoidSystem& sys, const std::optional<TorsionWitness>& w, int s_max, long ell_max);

}  // namespace algdense
