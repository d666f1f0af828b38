#include <cmath>
#include <string>

#include "app/problem_file.hpp"
#include "doctest.h"
#include "hfm/error.hpp"

using namespace hfm;
using hfm::app::parse_problem;

TEST_CASE("complete problem file") {
  const auto f = parse_problem(R"j({
    "alpha": 2,
    "terms": [{"coeff": "-1", "beta": 0.5}, {"coeff": "-t", "beta": 0, "power": 3}],
    "forcing": "t^3",
    "init": [0, 1],
    "t_end": 2,
    "exact": "t"
  })j");
  CHECK(f.problem.alpha() == 2.0);
  CHECK(f.problem.terms().size() == 2);
  CHECK(f.problem.terms()[0].power == 1.0);
  CHECK(f.problem.terms()[1].power == 3.0);
  CHECK(f.problem.terms()[1].coeff(2.0) == -2.0);
  CHECK(f.problem.t_end() == 2.0);
  CHECK(f.problem.init()[1] == 1.0);
  REQUIRE(f.exact);
  CHECK((*f.exact)(0.5) == 0.5);
}

TEST_CASE("defaults and constant expressions") {
  const auto f = parse_problem(R"j({"alpha": "sqrt(11)", "terms": [{"coeff": 1, "beta": "sqrt(2)/20"}],
                                  "forcing": "0", "init": [0, 0, 0, 0]})j");
  CHECK(f.problem.alpha() == std::sqrt(11.0));
  CHECK(f.problem.terms()[0].beta == std::sqrt(2.0) / 20);
  CHECK(f.problem.t_end() == 1.0);
  CHECK_FALSE(f.exact);
}

TEST_CASE("rejections") {
  CHECK_THROWS_WITH_AS(parse_problem(R"j({"alpha": 1, "forcing": "0", "init": [0], "extra": 1})j"),
                       doctest::Contains("extra"), ProblemError);
  CHECK_THROWS_WITH_AS(
      parse_problem(R"j({"alpha": 1, "terms": [{"coeff": "1", "beta": 0, "pow": 2}], "forcing": "0", "init": [0]})j"),
      doctest::Contains("pow"), ProblemError);
  CHECK_THROWS_WITH_AS(parse_problem(R"j({"alpha": 1, "init": [0]})j"),
                       doctest::Contains("forcing"), ProblemError);
  CHECK_THROWS_AS(parse_problem(R"j({"alpha": 1, "forcing": "0", "init": [0])j"), ProblemError);
  CHECK_THROWS_AS(parse_problem(R"j([1, 2])j"), ProblemError);
  CHECK_THROWS_AS(parse_problem(R"j({"alpha": "t", "forcing": "0", "init": [0]})j"), ProblemError);
  CHECK_THROWS_AS(parse_problem(R"j({"alpha": 2, "forcing": "0", "init": [0]})j"), ProblemError);
  CHECK_THROWS_AS(parse_problem(R"j({"alpha": 1, "forcing": "2t", "init": [0]})j"), ParseError);
}

TEST_CASE("serialization round trip") {
  const auto f = parse_problem(R"j({"alpha": 1.5, "terms": [{"coeff": "-t^2", "beta": 0.25, "power": 2}],
                                  "forcing": "1 + gamma(1.5)*t", "init": [1, 0], "exact": "1"})j");
  const auto g = parse_problem(app::to_json(f));
  CHECK(g.problem.alpha() == f.problem.alpha());
  CHECK(g.problem.terms()[0].beta == 0.25);
  CHECK(g.problem.terms()[0].power == 2.0);
  CHECK(g.problem.terms()[0].coeff.same_structure(f.problem.terms()[0].coeff));
  CHECK(g.problem.forcing().same_structure(f.problem.forcing()));
  CHECK(g.problem.init() == f.problem.init());
  CHECK(g.exact->same_structure(*f.exact));
}
