#pragma once

// Internal closed forms shared by the generator catalog and the kappa /
// escort modules. Not installed.

#include <cmath>
#include <numbers>

namespace nncalc::detail {

// arcsinh(u)/u with the removable singularity at u = 0 filled in. The series
// guard sits on the product u itself so it holds exactly where the series
// converges; |u| <= 1e-4 keeps the truncation error below ~5e-26.
inline double asinh_ratio(double u) {
    if (std::fabs(u) <= 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + 3.0 * u2 * u2 / 40.0;
    }
    return std::asinh(u) / u;
}

// sinh(u)/u, same treatment.
inline double sinh_ratio(double u) {
    if (std::fabs(u) <= 1e-4) {
        const double u2 = u * u;
        return 1.0 + u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sinh(u) / u;
}

// arcsinh(kappa x)/kappa, exact identity map at kappa = 0.
inline double kappa_forward(double x, double kappa) {
    return x * asinh_ratio(kappa * x);
}

// sinh(kappa r)/kappa, the inverse of kappa_forward.
inline double kappa_inverse(double r, double kappa) {
    return r * sinh_ratio(kappa * r);
}

// Unit-cell bijection of the real line: on [n, n+1] it is
// n + sin^2(pi (x - n)/2), so every integer is a fixed point.
inline double spin_cell_forward(double x) {
    const double n = std::floor(x);
    const double s = std::sin(std::numbers::pi / 2.0 * (x - n));
    return n + s * s;
}

// Preimage under spin_cell_forward. The map sends each unit cell onto
// itself monotonically, so the preimage lies in the cell of floor(y);
// 64 bisection steps shrink the bracket to 2^-64 of a cell.
inline double spin_cell_inverse(double y) {
    const double n = std::floor(y);
    const double t = y - n;
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 64; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double s = std::sin(std::numbers::pi / 2.0 * mid);
        if (s * s < t) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return n + 0.5 * (lo + hi);
}

}  // namespace nncalc::detail
