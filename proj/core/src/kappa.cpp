#include "nncalc/kappa.hpp"

#include <cmath>

#include "nncalc/calculus.hpp"
#include "nncalc/errors.hpp"
#include "deformed_maps.hpp"

namespace nncalc {

namespace {

void require_kappa(double kappa) {
    if (!std::isfinite(kappa) || kappa < 0.0) {
        throw InvalidParam("kappa must be finite and >= 0");
    }
}

}  // namespace

double kappa_derivative(const std::function<double(double)>& A, double x,
                        double kappa, double step) {
    require_kappa(kappa);
    const double h = step > 0.0 ? step : 1e-4 * (1.0 + std::fabs(x));
    const double d = detail::richardson_derivative(A, x, h);
    return d * std::sqrt(1.0 + kappa * kappa * x * x);
}

double kappa_dual_derivative(const std::function<double(double)>& A, double y,
                             double kappa, double step) {
    require_kappa(kappa);
    const double h = step > 0.0 ? step : 1e-4 * (1.0 + std::fabs(y));
    // symmetric version of the defining quotient: deformed-subtract the
    // samples, divide by the plain increment
    const auto hat = [&](double t) { return detail::kappa_forward(A(t), kappa); };
    return detail::richardson_limit(
        [&](double s) {
            return detail::kappa_inverse(hat(y + s) - hat(y - s), kappa) /
                   (2.0 * s);
        },
        h);
}

double kappa_ln(double y, double kappa) {
    require_kappa(kappa);
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw DomainViolation("kappa_ln: argument must be positive and finite");
    }
    return detail::kappa_inverse(std::log(y), kappa);
}

double kappa_nn_ln_derivative(double y, double kappa) {
    require_kappa(kappa);
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw DomainViolation(
            "kappa_nn_ln_derivative: argument must be positive and finite");
    }
    return detail::kappa_inverse(1.0 / y, kappa);
}

double kappa_exp(double x, double kappa) {
    require_kappa(kappa);
    if (!std::isfinite(x)) {
        throw DomainViolation("kappa_exp: argument must be finite");
    }
    const double v = std::exp(detail::kappa_forward(x, kappa));
    if (!std::isfinite(v)) {
        throw Overflow("kappa_exp overflows at x = " + std::to_string(x));
    }
    return v;
}

double kappa_exp_self(double x, double kappa) {
    const double v = detail::kappa_inverse(kappa_exp(x, kappa), kappa);
    if (!std::isfinite(v)) {
        throw Overflow("kappa_exp_self overflows at x = " + std::to_string(x));
    }
    return v;
}

Table fig1_table(double x_lo, double x_hi, int points, double kappa) {
    require_kappa(kappa);
    if (!(x_lo > 0.0) || !(x_hi > x_lo)) {
        throw InvalidParam("fig1_table: need 0 < x_lo < x_hi");
    }
    if (points < 2) {
        throw InvalidParam("fig1_table: need at least 2 points");
    }
    Table t;
    t.columns = {"x", "exp_k1_k0", "exp_k1_k1"};
    const double llo = std::log(x_lo);
    const double step = (std::log(x_hi) - llo) / (points - 1);
    t.rows.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double x = std::exp(llo + i * step);
        t.rows.push_back({x, kappa_exp(-x, kappa), kappa_exp_self(-x, kappa)});
    }
    return t;
}

}  // namespace nncalc
