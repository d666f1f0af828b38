#pragma once

// Problem files are JSON objects:
//
//   {
//     "alpha":   2,
//     "terms":   [ {"coeff": "-1", "beta": 0.5}, {"coeff": "-1", "beta": 0, "power": 1} ],
//     "forcing": "t^3 + 6*t + (3.2/gamma(0.5))*t^2.5",
//     "init":    [0, 0],
//     "t_end":   1,
//     "exact":   "t^3"
//   }
//
// alpha and beta may also be given as constant expression strings ("sqrt(11)").
// Unknown keys are rejected.

#include <filesystem>
#include <optional>
#include <string_view>

#include "hfm/expr.hpp"
#include "hfm/solver.hpp"

namespace hfm::app {

struct ProblemFile {
  FdeProblem problem;
  std::optional<Expr> exact;
};

/// Throws ProblemError (structure), ParseError (expressions) or EvalError.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Serialize back to the file format; expressions are written fully parenthesized.
std::string to_json(const ProblemFile& file);

}  // namespace hfm::app
