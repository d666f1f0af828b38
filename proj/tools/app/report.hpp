#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hfm/expr.hpp"
#include "hfm/oracle.hpp"
#include "hfm/solver.hpp"

namespace hfm::app {

/// "%.17g": round-trips every double and never depends on locale.
std::string fmt17(double v);

/// Short form for tables ("%.6g" style, with exponent where needed).
std::string fmt_short(double v);

struct ReportRow {
  double t;
  double y_hf;
  std::optional<double> y_exact;
  std::optional<double> abs_err;
};

struct SolveReport {
  std::vector<ReportRow> rows;
  std::size_t m = 0;
  double h = 0.0;
  std::optional<double> max_abs_err;
  double residual = 0.0;
  double wall_time_seconds = 0.0;
  int max_iterations = 0;
};

SolveReport make_report(const Solution& sol, const std::optional<Expr>& exact,
                        double wall_time_seconds);

/// Header t,y_hf,y_exact,abs_err; exact columns left empty when unknown.
void write_csv(std::ostream& os, const SolveReport& r);

/// Summary table followed by the node table.
void write_markdown(std::ostream& os, const SolveReport& r, const std::string& title);

struct CaseResult {
  const oracle::ExactCase* c = nullptr;
  std::size_t m = 0;
  double max_error = 0.0;
  double residual = 0.0;
  double wall_time_seconds = 0.0;
  bool passed = false;
  std::string failure;  ///< Set when the solve itself threw.
  SolveReport report;
  /// (m, error) pairs of the refinement sweep; empty unless requested.
  std::vector<std::pair<std::size_t, double>> sweep;
};

void write_bench_summary(std::ostream& os, const std::vector<CaseResult>& results);

}  // namespace hfm::app
