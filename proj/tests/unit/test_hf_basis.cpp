#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hfm/hf_basis.hpp"
#include "hfm/oracle.hpp"

using namespace hfm;

namespace {

struct Poly {
  std::vector<double> c;
  double operator()(double t) const { return oracle::polynomial(c, t); }
};

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  Poly p;
  for (int i = 0; i <= degree; ++i) p.c.push_back(d(rng));
  return p;
}

}  // namespace

TEST_CASE("sample: linear function on four subintervals") {
  const HfPair p = sample([](double t) { return t; }, Grid(1.0, 4));
  CHECK(std::vector<double>(p.cs().begin(), p.cs().end()) == std::vector<double>{0, 0.25, 0.5, 0.75});
  CHECK(std::vector<double>(p.ct().begin(), p.ct().end()) ==
        std::vector<double>{0.25, 0.25, 0.25, 0.25});
}

TEST_CASE("sample: zero function") {
  const HfPair p = sample([](double) { return 0.0; }, Grid(2.0, 7));
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(p.cs()[i] == 0.0);
    CHECK(p.ct()[i] == 0.0);
  }
}

TEST_CASE("sample: cubic at the third node") {
  const HfPair p = sample([](double t) { return t * t * t; }, Grid(1.0, 8));
  CHECK(p.cs()[2] == 0.015625);
  CHECK(p.ct()[2] == 0.037109375);
}

TEST_CASE("sample: non-finite value names the node") {
  try {
    sample([](double t) { return 1.0 / (t - 0.5); }, Grid(1.0, 4));
    FAIL("expected SamplingError");
  } catch (const SamplingError& e) {
    CHECK(e.node() == 2);
    CHECK(e.t() == 0.5);
  }
}

TEST_CASE("grid") {
  const Grid g(1.0, 3);
  CHECK(g.node(3) == 1.0);
  CHECK(g.h() * 3 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(Grid(1.0, 0), DomainError);
  CHECK_THROWS_AS(Grid(-1.0, 4), DomainError);
  CHECK_THROWS_AS(g.node(4), DomainError);
}

TEST_CASE("HfPair rejects mismatched lengths") {
  CHECK_THROWS_AS(HfPair(Grid(1.0, 3), {1, 2}, {1, 2, 3}), ShapeError);
}

TEST_CASE("evaluate") {
  const HfPair sq = sample([](double t) { return t * t; }, Grid(1.0, 4));
  CHECK(evaluate(sq, 0.5) == 0.25);
  CHECK(evaluate(sq, 0.375) == 0.15625);
  CHECK(evaluate(sq, 1.0) == 1.0);
  CHECK(evaluate(HfPair(Grid(1.0, 4)), 0.3) == 0.0);
  CHECK_THROWS_AS(evaluate(sq, -0.01), DomainError);
  CHECK_THROWS_AS(evaluate(sq, 1.01), DomainError);
}

TEST_CASE("property: node exactness and piecewise linearity") {
  std::mt19937_64 rng(7);
  for (std::size_t m : {1u, 2u, 8u, 64u}) {
    const Grid g(1.0, m);
    const Poly f = random_poly(rng, 5);
    const HfPair p = sample(f, g);
    for (std::size_t i = 0; i <= m; ++i) {
      CHECK(evaluate(p, g.node(i)) == f(g.node(i)));
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (double theta : {0.125, 0.5, 0.875}) {
        const double t = (static_cast<double>(i) + theta) * g.h();
        CHECK(evaluate(p, t) == doctest::Approx(p.cs()[i] + theta * p.ct()[i]).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("multiply: matches sampling of the product") {
  const Grid g(1.0, 4);
  auto f = [](double t) { return t; };
  auto h = [](double t) { return t * t; };
  const HfPair prod = multiply(sample(f, g), sample(h, g));
  const HfPair direct = sample([&](double t) { return f(t) * h(t); }, g);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(prod.cs()[i] == direct.cs()[i]);
    CHECK(prod.ct()[i] == doctest::Approx(direct.ct()[i]).epsilon(1e-15));
  }
}

TEST_CASE("multiply: unit and zero") {
  const Grid g(1.0, 5);
  const HfPair p = sample([](double t) { return std::exp(t); }, g);
  const HfPair one = multiply(p, sample([](double) { return 1.0; }, g));
  const HfPair zero = multiply(p, HfPair(g));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(one.cs()[i] == p.cs()[i]);
    CHECK(one.ct()[i] == p.ct()[i]);
    CHECK(zero.cs()[i] == 0.0);
    CHECK(zero.ct()[i] == 0.0);
  }
  CHECK_THROWS_AS(multiply(p, HfPair(Grid(1.0, 4))), ShapeError);
}

TEST_CASE("property: product rule is exact at nodes") {
  std::mt19937_64 rng(11);
  for (std::size_t m : {1u, 2u, 8u, 64u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Grid g(1.0, m);
      const Poly f = random_poly(rng, 3), h = random_poly(rng, 4);
      const HfPair prod = multiply(sample(f, g), sample(h, g));
      for (std::size_t i = 0; i <= m; ++i) {
        const double t = g.node(i);
        CHECK(prod.node_value(i) == doctest::Approx(f(t) * h(t)).epsilon(1e-13).scale(1.0));
      }
    }
  }
}

TEST_CASE("power") {
  const Grid g(1.0, 8);
  const HfPair cube = power(sample([](double t) { return t; }, g), 3.0);
  const HfPair direct = sample([](double t) { return t * t * t; }, g);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(cube.cs()[i] == direct.cs()[i]);
    CHECK(cube.ct()[i] == direct.ct()[i]);
  }

  const HfPair p = sample([](double t) { return std::sin(3 * t); }, g);
  const HfPair same = power(p, 1.0);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(same.cs()[i] == p.cs()[i]);
    CHECK(same.ct()[i] == p.ct()[i]);
  }

  // e * x^3 with x = t^3/3.
  const HfPair x3 = power(sample([](double t) { return t * t * t / 3; }, g), 3.0);
  for (std::size_t i = 0; i < 8; ++i) {
    const double xi = std::pow(i * 0.125, 3) / 3;
    CHECK(x3.cs()[i] == doctest::Approx(xi * xi * xi).epsilon(1e-15));
  }
}

TEST_CASE("power: negative base with fractional exponent") {
  const Grid g(1.0, 4);
  const HfPair p = sample([](double t) { return 0.3 - t; }, g);
  CHECK_THROWS_WITH_AS(power(p, 0.5), doctest::Contains("node 2"), DomainError);
  CHECK_NOTHROW(power(p, 2.0));
}

TEST_CASE("property: power rule is exact at nodes") {
  std::mt19937_64 rng(13);
  for (std::size_t m : {1u, 2u, 8u, 64u}) {
    const Grid g(1.0, m);
    // |f| <= 8 on [0, 1], so the shifted sample is positive.
    const Poly f = random_poly(rng, 3);
    auto pos = [&](double t) { return f(t) + 10.0; };
    const HfPair base = sample(pos, g);
    for (double n : {2.0, 3.0, 0.5, 1.7}) {
      const HfPair p = power(base, n);
      for (std::size_t i = 0; i <= m; ++i) {
        const double want = std::pow(pos(g.node(i)), n);
        CHECK(p.node_value(i) == doctest::Approx(want).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("inner products") {
  const Grid g(1.0, 8);
  CHECK(inner_product(3, 3, g, BasisProduct::SS) == 0.125);
  CHECK(inner_product(3, 3, g, BasisProduct::TT) == doctest::Approx(0.125 / 3));
  CHECK(inner_product(3, 3, g, BasisProduct::ST) == 0.0625);
  CHECK(inner_product(2, 5, g, BasisProduct::SS) == 0.0);
  CHECK(inner_product(2, 3, g, BasisProduct::TT) == 0.0);
  CHECK(inner_product(4, 3, g, BasisProduct::ST) == 0.0);
}

TEST_CASE("property: inner products match quadrature of the basis functions") {
  const Grid g(1.0, 8);
  const double h = g.h();
  auto S = [&](std::size_t i) {
    return [=](double t) { return t >= i * h && t < (i + 1) * h ? 1.0 : 0.0; };
  };
  auto T = [&](std::size_t i) {
    return [=](double t) { return t >= i * h && t < (i + 1) * h ? (t - i * h) / h : 0.0; };
  };
  std::vector<double> breaks;
  for (std::size_t i = 0; i <= 8; ++i) breaks.push_back(g.node(i));
  for (std::size_t i : {0u, 3u, 7u}) {
    for (std::size_t j : {0u, 3u, 4u, 7u}) {
      auto ss = [&](double t) { return S(i)(t) * S(j)(t); };
      auto tt = [&](double t) { return T(i)(t) * T(j)(t); };
      auto st = [&](double t) { return S(i)(t) * T(j)(t); };
      CHECK(std::abs(oracle::integrate(ss, 0, 1, 1e-14, breaks).value -
                     inner_product(i, j, g, BasisProduct::SS)) <= 1e-12);
      CHECK(std::abs(oracle::integrate(tt, 0, 1, 1e-14, breaks).value -
                     inner_product(i, j, g, BasisProduct::TT)) <= 1e-12);
      CHECK(std::abs(oracle::integrate(st, 0, 1, 1e-14, breaks).value -
                     inner_product(i, j, g, BasisProduct::ST)) <= 1e-12);
    }
  }
}
