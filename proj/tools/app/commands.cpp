#include "app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include "app/problem_file.hpp"
#include "app/report.hpp"
#include "hfm/error.hpp"
#include "hfm/opmat.hpp"

namespace hfm::app {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Library messages already name the byte offset or node.
void report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
}

double rel_diff(double got, long double want) {
  if (want == 0.0L) return got == 0.0 ? 0.0 : INFINITY;
  return static_cast<double>(std::fabs((static_cast<long double>(got) - want) / want));
}

std::vector<double> unit(std::size_t m, std::size_t i) {
  std::vector<double> v(m, 0.0);
  v[i] = 1.0;
  return v;
}

CaseResult run_case(const oracle::ExactCase& c, std::size_t m, bool sweep) {
  CaseResult r;
  r.c = &c;
  r.m = m;
  try {
    const auto start = Clock::now();
    const Solution sol = solve(c.problem, m);
    r.wall_time_seconds = seconds_since(start);
    r.max_error = oracle::max_node_error(sol, c.exact);
    r.residual = sol.residual;
    r.passed = r.max_error <= c.threshold;
    r.report = make_report(sol, c.exact, 0.0);
    if (sweep) {
      r.sweep.emplace_back(m, r.max_error);
      for (std::size_t mm : {2 * m, 4 * m}) {
        r.sweep.emplace_back(mm, oracle::max_node_error(solve(c.problem, mm), c.exact));
      }
    }
  } catch (const Error& e) {
    r.failure = e.what();
    r.passed = false;
  }
  return r;
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format != "csv" && args.format != "md") {
    err << "error: --format must be csv or md\n";
    return kExitInput;
  }
  if (args.m == 0) {
    err << "error: --m must be at least 1\n";
    return kExitInput;
  }
  std::optional<ProblemFile> file;
  try {
    file = load_problem(args.problem);
  } catch (const Error& e) {
    report_error(err, e);
    return kExitInput;
  }

  SolveReport report;
  try {
    const auto start = Clock::now();
    const Solution sol = solve(file->problem, args.m);
    report = make_report(sol, file->exact, seconds_since(start));
  } catch (const ConvergenceError& e) {
    report_error(err, e);
    return kExitConvergence;
  } catch (const DomainError& e) {
    report_error(err, e);
    return kExitConvergence;
  } catch (const Error& e) {
    report_error(err, e);
    return kExitInput;
  }

  auto emit = [&](std::ostream& os) {
    if (args.format == "csv") {
      write_csv(os, report);
    } else {
      write_markdown(os, report, args.problem.filename().string());
    }
  };
  if (args.out) {
    std::ofstream f(*args.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << args.out->string() << '\n';
      return kExitInput;
    }
    emit(f);
  } else {
    emit(out);
  }
  err << "m = " << report.m << ", residual = " << fmt_short(report.residual);
  if (report.max_abs_err) err << ", max abs error = " << fmt_short(*report.max_abs_err);
  err << '\n';
  return kExitOk;
}

std::vector<const oracle::ExactCase*> select_cases(const std::string& suite) {
  std::vector<const oracle::ExactCase*> out;
  for (const auto& c : oracle::builtin_cases()) {
    if (suite == "all" || suite == c.name || suite == c.example_id()) out.push_back(&c);
  }
  if (out.empty()) throw ProblemError("no benchmark case matches '" + suite + "'");
  return out;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.m && *args.m == 0) {
    err << "error: --m must be at least 1\n";
    return kExitInput;
  }
  std::vector<const oracle::ExactCase*> cases;
  try {
    cases = select_cases(args.suite);
  } catch (const Error& e) {
    report_error(err, e);
    return kExitInput;
  }
  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << args.out_dir.string() << ": " << ec.message() << '\n';
    return kExitInput;
  }

  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      results[i] = run_case(*cases[i], args.m.value_or(cases[i]->m), args.sweep);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(args.jobs, cases.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    out << r.c->name << "  m=" << r.m << "  max_err=" << fmt_short(r.max_error)
        << "  threshold=" << fmt_short(r.c->threshold) << "  " << (r.passed ? "pass" : "FAIL")
        << '\n';
    if (!r.failure.empty()) {
      err << r.c->name << ": " << r.failure << '\n';
      continue;
    }
    std::ofstream f(args.out_dir / (r.c->name + ".csv"), std::ios::binary);
    write_csv(f, r.report);
  }
  std::ofstream summary(args.out_dir / "summary.md", std::ios::binary);
  write_bench_summary(summary, results);
  if (!summary) {
    err << "error: cannot write summary in " << args.out_dir.string() << '\n';
    return kExitInput;
  }
  return all_passed ? kExitOk : kExitThreshold;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  constexpr double kClosedFormTol = 1e-12;
  constexpr double kQuadratureTol = 1e-9;
  if (args.m == 0 || args.alphas.empty()) {
    err << "error: need --m >= 1 and at least one alpha\n";
    return kExitInput;
  }
  const Grid grid(1.0, args.m);
  const std::size_t m = args.m;
  const double h = grid.h();
  bool ok = true;

  for (double alpha : args.alphas) {
    std::shared_ptr<const OpMatSet> ops;
    try {
      ops = OpMatCache::global().get(alpha, grid);
    } catch (const Error& e) {
      report_error(err, e);
      return kExitInput;
    }

    // Columns of the matrices are the HF images of single basis functions.
    double closed = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const HfPair js = frac_integrate(HfPair(grid, unit(m, i), std::vector<double>(m, 0.0)), *ops);
      const HfPair jt = frac_integrate(HfPair(grid, std::vector<double>(m, 0.0), unit(m, i)), *ops);
      for (std::size_t j = 0; j <= m; ++j) {
        const long off = static_cast<long>(j) - static_cast<long>(i);
        closed = std::max(closed, rel_diff(js.node_value(j), oracle::shf_integral_at_node(alpha, h, off)));
        closed = std::max(closed, rel_diff(jt.node_value(j), oracle::tf_integral_at_node(alpha, h, off)));
      }
    }

    // Quadrature of the defining integral at a few (column, node) pairs.
    double quad = 0.0;
    for (std::size_t i : {std::size_t{0}, m / 2, m - 1}) {
      const double a = grid.node(i), b = grid.node(i + 1);
      const std::vector<double> breaks{a, b};
      auto shf = [=](double t) { return t >= a && t < b ? 1.0 : 0.0; };
      auto tf = [=](double t) { return t >= a && t < b ? (t - a) / h : 0.0; };
      const HfPair js = frac_integrate(HfPair(grid, unit(m, i), std::vector<double>(m, 0.0)), *ops);
      const HfPair jt = frac_integrate(HfPair(grid, std::vector<double>(m, 0.0), unit(m, i)), *ops);
      for (std::size_t j : {i + 1, m}) {
        const double t = grid.node(j);
        try {
          quad = std::max(quad, std::abs(js.node_value(j) -
                                         oracle::frac_int_quadrature(shf, alpha, t, 1e-11, breaks)));
          quad = std::max(quad, std::abs(jt.node_value(j) -
                                         oracle::frac_int_quadrature(tf, alpha, t, 1e-11, breaks)));
        } catch (const AccuracyError& e) {
          report_error(err, e);
          quad = INFINITY;
        }
      }
    }

    const bool pass = closed <= kClosedFormTol && quad <= kQuadratureTol;
    out << "alpha=" << fmt17(alpha) << "  m=" << m << "  closed_form_max_rel=" << fmt_short(closed)
        << "  quadrature_max_abs=" << fmt_short(quad) << "  " << (pass ? "pass" : "FAIL") << '\n';
    ok = ok && pass;

    if (alpha == 1.0) {
      bool exact = true;
      for (std::size_t k = 0; k < m; ++k) {
        exact = exact && ops->pss.first_row()[k] == (k == 0 ? 0.0 : h);
        exact = exact && ops->pst.first_row()[k] == (k == 0 ? h : 0.0);
        exact = exact && ops->pts.first_row()[k] == (k == 0 ? 0.0 : h / 2);
        exact = exact && ops->ptt.first_row()[k] == (k == 0 ? h / 2 : 0.0);
      }
      out << "alpha=1 first-order matrices reproduced exactly: " << (exact ? "yes" : "NO") << '\n';
      ok = ok && exact;
    }
  }
  return ok ? kExitOk : kExitThreshold;
}

int cmd_integrate(const IntegrateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.m == 0) throw ProblemError("--m must be at least 1");
    if (!(args.t_end > 0.0) || !std::isfinite(args.t_end)) {
      throw ProblemError("--t-end must be positive");
    }
    const Expr f = parse(args.expr);
    std::optional<Expr> exact;
    if (args.exact) exact = parse(*args.exact);
    const Grid grid(args.t_end, args.m);
    const HfPair result = frac_integrate(sample(f, grid), args.alpha);

    out << (exact ? "t,value,exact,abs_err\n" : "t,value\n");
    double worst = 0.0;
    for (std::size_t i = 0; i <= args.m; ++i) {
      const double t = grid.node(i);
      const double v = result.node_value(i);
      out << fmt17(t) << ',' << fmt17(v);
      if (exact) {
        const double e = (*exact)(t);
        worst = std::max(worst, std::abs(v - e));
        out << ',' << fmt17(e) << ',' << fmt17(std::abs(v - e));
      }
      out << '\n';
    }
    if (exact) out << "max_abs_err," << fmt17(worst) << '\n';
  } catch (const Error& e) {
    report_error(err, e);
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace hfm::app
