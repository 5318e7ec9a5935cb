#pragma once

#include "desing/polynomial.hpp"

namespace desing {

/// Exact quotient a/b; throws if the division is not exact.
Polynomial exactDivide(const Polynomial& a, const Polynomial& b);

/// A gcd with leading coefficient 1 (degrevlex). Errors when both are zero.
Polynomial gcdMultivariate(const Polynomial& f, const Polynomial& g);

Polynomial multiGcd(const std::vector<Polynomial>& fs);

/// Product of the distinct irreducible factors (characteristic zero):
/// f / gcd(f, df/dx_1, ..., df/dx_d), monic.
Polynomial squarefreePart(const Polynomial& f);

} // namespace desing
