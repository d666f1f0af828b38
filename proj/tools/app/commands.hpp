#pragma once

// Subcommands of the hfm tool as in-process functions. Each returns the
// process exit code and writes diagnostics to `err`.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hfm/oracle.hpp"

namespace hfm::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConvergence = 2;
inline constexpr int kExitThreshold = 3;

struct SolveArgs {
  std::filesystem::path problem;
  std::size_t m = 100;
  std::optional<std::filesystem::path> out;  ///< stdout when absent
  std::string format = "csv";                ///< csv | md
};
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
  std::string suite = "all";  ///< all | example id ("5.4") | case name ("5.4-3")
  std::filesystem::path out_dir = "bench_out";
  bool sweep = false;  ///< also solve at 2m and 4m
  std::optional<std::size_t> m;  ///< overrides every case's own grid
  unsigned jobs = 1;
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Cases matching a suite selector; throws ProblemError when nothing matches.
std::vector<const oracle::ExactCase*> select_cases(const std::string& suite);

struct VerifyArgs {
  std::size_t m = 64;
  std::vector<double> alphas = {0.5, 1.0, 2.5};
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct IntegrateArgs {
  std::string expr;
  double alpha = 0.5;
  std::size_t m = 8;
  double t_end = 1.0;
  std::optional<std::string> exact;
};
int cmd_integrate(const IntegrateArgs& args, std::ostream& out, std::ostream& err);

}  // namespace hfm::app
