#include "nncalc/cosmo.hpp"

#include <cmath>

#include "nncalc/errors.hpp"
#include "deformed_maps.hpp"

namespace nncalc {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0)) {
        throw InvalidParam(std::string(name) + " must be finite and > 0");
    }
}

}  // namespace

double friedmann_scale_factor(double t, const CosmologyParams& P) {
    require_positive(P.omega_m, "omega_m");
    require_positive(P.omega_lambda, "omega_lambda");
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainViolation("friedmann_scale_factor: t must be > 0");
    }
    const double c = 1.5 * std::sqrt(P.omega_lambda);
    return std::pow(std::sqrt(P.omega_m / P.omega_lambda) * std::sinh(c * t),
                    2.0 / 3.0);
}

double nn_friedmann_scale_factor(double t, double omega, const Arithmetic& X) {
    require_positive(omega, "omega");
    const double r = X.to_conjugate(t);
    if (!(r > 0.0)) {
        throw DomainViolation(
            "nn_friedmann_scale_factor: f_X(t) must be positive");
    }
    return std::pow(1.5 * std::sqrt(omega) * r, 2.0 / 3.0);
}

MatchedFriedmann matched_generator(const CosmologyParams& P) {
    require_positive(P.omega_m, "omega_m");
    require_positive(P.omega_lambda, "omega_lambda");
    require_positive(P.omega, "omega");
    const double kappa = 1.5 * std::sqrt(P.omega_lambda);
    const double scale = std::sqrt(P.omega_m / P.omega);
    Generator g;
    g.label = "friedmann-matched";
    g.params = {{"omega_m", P.omega_m},
                {"omega_lambda", P.omega_lambda},
                {"omega", P.omega},
                {"kappa", kappa}};
    g.forward = [kappa, scale](double t) {
        return scale * detail::kappa_inverse(t, kappa);
    };
    g.inverse = [kappa, scale](double y) {
        return detail::kappa_forward(y / scale, kappa);
    };
    g.domain = Interval::all();
    g.range = Interval::all();
    g.check_window = Interval::closed(-std::min(50.0, 600.0 / kappa),
                                      std::min(50.0, 600.0 / kappa));
    return {g, kappa};
}

Trajectory nn_friedmann_integrate(double t_start, double t_end, double omega,
                                  const Arithmetic& X, int steps) {
    require_positive(omega, "omega");
    if (steps < 100) {
        throw StepFailure("nn_friedmann_integrate: need at least 100 steps");
    }
    if (!(t_start > 0.0) || !(t_end > t_start)) {
        throw DomainViolation(
            "nn_friedmann_integrate: need t_end > t_start > 0");
    }
    const double r0 = X.to_conjugate(t_start);
    const double r1 = X.to_conjugate(t_end);
    if (!(r0 > 0.0)) {
        throw DomainViolation(
            "nn_friedmann_integrate: f_X(t_start) must be positive");
    }

    // da/dr = sqrt(omega / a), integrated in the conjugate time
    const auto slope = [omega](double a) { return std::sqrt(omega / a); };
    const double h = (r1 - r0) / steps;

    Trajectory traj;
    traj.t.reserve(steps + 1);
    traj.a.reserve(steps + 1);
    double a = std::pow(1.5 * std::sqrt(omega) * r0, 2.0 / 3.0);
    traj.t.push_back(t_start);
    traj.a.push_back(a);
    for (int i = 0; i < steps; ++i) {
        const double k1 = slope(a);
        const double k2 = slope(a + 0.5 * h * k1);
        const double k3 = slope(a + 0.5 * h * k2);
        const double k4 = slope(a + h * k3);
        a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(a) || !(a > 0.0)) {
            throw NonFinite("nn_friedmann_integrate: scale factor degenerated "
                            "during integration");
        }
        const double r = r0 + (i + 1) * h;
        traj.t.push_back(X.from_conjugate(r));
        traj.a.push_back(a);
    }
    // land exactly on the requested endpoint label
    traj.t.back() = t_end;
    return traj;
}

}  // namespace nncalc
