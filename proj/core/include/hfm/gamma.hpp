#pragma once

namespace hfm {

/// Euler gamma function for x > 0. Positive integers up to 20 return the
/// exact factorial; elsewhere the relative error is below 1e-14 on (0, 50].
/// Throws DomainError for x <= 0 or non-finite x.
double gamma(double x);

}  // namespace hfm
