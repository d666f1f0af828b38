#include "hfm/gamma.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hfm/error.hpp"

namespace hfm {

namespace {

constexpr std::array<double, 21> make_factorials() {
  std::array<double, 21> f{};
  f[0] = 1.0;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * static_cast<double>(i);
  return f;
}

constexpr auto kFactorials = make_factorials();

}  // namespace

double gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  if (x <= static_cast<double>(kFactorials.size()) && x == std::floor(x)) {
    return kFactorials[static_cast<std::size_t>(x) - 1];
  }
  return std::tgamma(x);
}

}  // namespace hfm
