#include "app/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hfm::app {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

SolveReport make_report(const Solution& sol, const std::optional<Expr>& exact,
                        double wall_time_seconds) {
  SolveReport r;
  r.m = sol.grid.m();
  r.h = sol.grid.h();
  r.residual = sol.residual;
  r.wall_time_seconds = wall_time_seconds;
  r.max_iterations = sol.max_iterations();
  double worst = 0.0;
  for (std::size_t i = 0; i <= r.m; ++i) {
    ReportRow row{sol.grid.node(i), sol.y.node_value(i), std::nullopt, std::nullopt};
    if (exact) {
      row.y_exact = (*exact)(row.t);
      row.abs_err = std::abs(row.y_hf - *row.y_exact);
      worst = std::max(worst, *row.abs_err);
    }
    r.rows.push_back(row);
  }
  if (exact) r.max_abs_err = worst;
  return r;
}

void write_csv(std::ostream& os, const SolveReport& r) {
  os << "t,y_hf,y_exact,abs_err\n";
  for (const auto& row : r.rows) {
    os << fmt17(row.t) << ',' << fmt17(row.y_hf) << ',';
    if (row.y_exact) os << fmt17(*row.y_exact);
    os << ',';
    if (row.abs_err) os << fmt17(*row.abs_err);
    os << '\n';
  }
}

void write_markdown(std::ostream& os, const SolveReport& r, const std::string& title) {
  os << "# " << title << "\n\n"
     << "| m | h | max abs error | residual | max iterations | wall time (s) |\n"
     << "|---|---|---|---|---|---|\n"
     << "| " << r.m << " | " << fmt_short(r.h) << " | "
     << (r.max_abs_err ? fmt_short(*r.max_abs_err) : std::string("n/a")) << " | "
     << fmt_short(r.residual) << " | " << r.max_iterations << " | "
     << fmt_short(r.wall_time_seconds) << " |\n\n"
     << "| t | y_hf | y_exact | abs_err |\n|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    os << "| " << fmt17(row.t) << " | " << fmt17(row.y_hf) << " | "
       << (row.y_exact ? fmt17(*row.y_exact) : "") << " | "
       << (row.abs_err ? fmt17(*row.abs_err) : "") << " |\n";
  }
}

void write_bench_summary(std::ostream& os, const std::vector<CaseResult>& results) {
  os << "# Benchmark suite\n\n"
     << "| case | problem | m | max abs error | reference | threshold | status | residual | "
        "wall time (s) |\n"
     << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : results) {
    os << "| " << r.c->name << " | " << r.c->title << " | " << r.m << " | "
       << (r.failure.empty() ? fmt_short(r.max_error) : std::string("error")) << " | "
       << fmt_short(r.c->reference_error) << " | " << fmt_short(r.c->threshold) << " | "
       << (r.passed ? "pass" : "FAIL") << " | " << fmt_short(r.residual) << " | "
       << fmt_short(r.wall_time_seconds) << " |\n";
  }

  const bool any_sweep = std::any_of(results.begin(), results.end(),
                                     [](const CaseResult& r) { return !r.sweep.empty(); });
  if (any_sweep) {
    os << "\n## Refinement\n\n| case | m | max abs error | smaller than at m/2 |\n"
       << "|---|---|---|---|\n";
    for (const auto& r : results) {
      for (std::size_t k = 0; k < r.sweep.size(); ++k) {
        const auto [m, err] = r.sweep[k];
        os << "| " << r.c->name << " | " << m << " | " << fmt_short(err) << " | "
           << (k == 0 ? "" : err < r.sweep[k - 1].second ? "yes" : "no") << " |\n";
      }
    }
  }

  os << "\n## Published errors of other methods\n\n| case | method | step | max abs error |\n"
     << "|---|---|---|---|\n";
  for (const auto& r : results) {
    for (const auto& b : r.c->baselines) {
      os << "| " << r.c->name << " | " << b.method << " | " << b.step << " | "
         << fmt_short(b.max_error) << " |\n";
    }
  }
  for (const auto& r : results) {
    if (!r.failure.empty()) os << "\n" << r.c->name << ": " << r.failure << "\n";
  }
}

}  // namespace hfm::app
