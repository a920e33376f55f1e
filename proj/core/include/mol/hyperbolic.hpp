#pragma once

#include <cassert>
#include <cmath>
#include <numbers>

namespace mol {

/// sinh(alpha*u) / sinh(alpha*U) for 0 <= u <= U, alpha > 0, evaluated without
/// forming the (possibly overflowing) hyperbolics:
///
///   sinh(a u)/sinh(a U) = e^{a(u-U)} * (1 - e^{-2au}) / (1 - e^{-2aU}).
///
/// Exact 0 at u = 0 and exact 1 at u = U; monotone in u; bounded by e^{a(u-U)}.
inline double sinh_ratio(double alpha, double u, double big) {
    assert(alpha > 0.0 && big > 0.0 && u >= 0.0 && u <= big);
    return std::exp(alpha * (u - big)) *
           (std::expm1(-2.0 * alpha * u) / std::expm1(-2.0 * alpha * big));
}

/// Normalized sinc: sin(pi x)/(pi x), with sinc(0) = 1.
inline double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

} // namespace mol
