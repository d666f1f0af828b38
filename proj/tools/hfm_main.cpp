// hfm: solve multi-order fractional differential equations with hybrid
// functions, run the built-in benchmark suite, and check the operational
// matrices against independent oracles.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "app/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hybrid-function solver for multi-order fractional differential equations"};
  app.require_subcommand(1);

  hfm::app::SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve the problem described by a JSON file");
  s->add_option("problem", solve.problem, "Problem file")->required()->check(CLI::ExistingFile);
  s->add_option("--m", solve.m, "Number of subintervals")->check(CLI::PositiveNumber);
  s->add_option("--out", solve.out, "Output path (default: stdout)");
  s->add_option("--format", solve.format, "csv or md")->check(CLI::IsMember({"csv", "md"}));

  hfm::app::BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run the built-in benchmark cases");
  b->add_option("--suite", bench.suite, "all, an example id such as 5.4, or a case such as 5.4-3");
  b->add_option("--out-dir", bench.out_dir, "Directory for CSV files and summary.md");
  b->add_flag("--sweep", bench.sweep, "Also report errors at 2m and 4m");
  b->add_option("--m", bench.m, "Solve every case on this grid instead of its own")
      ->check(CLI::PositiveNumber);
  b->add_option("--jobs", bench.jobs, "Cases solved concurrently")->check(CLI::PositiveNumber);

  hfm::app::VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check operational matrices against closed forms and quadrature");
  v->add_option("--m", verify.m, "Number of subintervals")->check(CLI::PositiveNumber);
  v->add_option("--alphas", verify.alphas, "Orders to check")->delimiter(',');

  hfm::app::IntegrateArgs integ;
  auto* i = app.add_subcommand("integrate", "Fractional integral of an expression in t");
  i->add_option("expr", integ.expr, "Integrand, e.g. \"t^2 + 1\"")->required();
  i->add_option("--alpha", integ.alpha, "Order of integration")->required();
  i->add_option("--m", integ.m, "Number of subintervals")->check(CLI::PositiveNumber);
  i->add_option("--t-end", integ.t_end, "Right end of the interval");
  i->add_option("--exact", integ.exact, "Exact integral, for the error column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hfm::app::kExitInput;
  }

  if (*s) return hfm::app::cmd_solve(solve, std::cout, std::cerr);
  if (*b) return hfm::app::cmd_bench(bench, std::cout, std::cerr);
  if (*v) return hfm::app::cmd_verify(verify, std::cout, std::cerr);
  return hfm::app::cmd_integrate(integ, std::cout, std::cerr);
}
