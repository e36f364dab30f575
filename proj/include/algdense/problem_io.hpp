#pragma once

#include <stdexcept>
#include <string>

#include "algdense/problem.hpp"

namespace algdense {

/// Malformed problem file. line and column are 1-based and zero when the error is not
/// syntactic; path is a JSON pointer to the offending value.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, long line, long column, std::string path)
      : std::runtime_error(what), line(line), column(column), path(std::move(path)) {}
  long line, column;
  std::string path;
};

inline constexpr int kSchemaVersion = 1;

/// Parses a JSON problem document:
///   {"schema_version": 1,
///    "pairs": [{"lambda": V, "mu": V, "xi": X}, ...],
///    "bounds": {"B", "U", "l_max", "s_max", "ell_max", "generator_search", "c_bound", "kappa_out"},
///    "grid": {"M", "N"}}
/// V is an integer, a rational string "p/q", or {"minpoly": [c0, c1, ...], "root_near": "1.414"}
/// with coefficients from the constant term up. X is V, or a decimal string such as
/// "1.41421356" or {"decimal": "..."}.
ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);

}  // namespace algdense
