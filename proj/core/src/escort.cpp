#include "nncalc/escort.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nncalc/calculus.hpp"
#include "nncalc/errors.hpp"
#include "deformed_maps.hpp"

namespace nncalc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit(double p, const char* who) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        std::ostringstream os;
        os << who << ": probability " << p << " outside [0, 1]";
        throw DomainViolation(os.str());
    }
}

}  // namespace

double SpinBijection::forward(double x) { return detail::spin_cell_forward(x); }

double SpinBijection::inverse(double y) { return detail::spin_cell_inverse(y); }

double escort_binary(const std::function<double(double)>& h, double p) {
    require_unit(p, "escort_binary");
    const double v = h(p - 0.5);
    if (!std::isfinite(v)) {
        throw NonFinite("escort_binary: odd part returned a non-finite value");
    }
    const double g = 0.5 + v;
    if (g < 0.0 || g > 1.0) {
        std::ostringstream os;
        os << "escort_binary: g(" << p << ") = " << g << " leaves [0, 1]";
        throw RangeViolation(os.str());
    }
    return g;
}

double escort_affine(double a, double n, double p) {
    if (!std::isfinite(a) || a < -1.0 || a > 1.0) {
        throw InvalidParam("escort_affine: need -1 <= a <= 1");
    }
    if (!std::isfinite(n) || n < 3.0) {
        throw InvalidParam("escort_affine: need n >= 3");
    }
    require_unit(p, "escort_affine");
    return (1.0 - a + 2.0 * a * p) / (n + (2.0 - n) * a);
}

double quantum_conditional(double theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
        throw DomainViolation("quantum_conditional: angle must lie in [0, pi]");
    }
    return SpinBijection::forward((kPi - theta) / kPi);
}

double hidden_variable_integral(double alpha, double beta, double tol) {
    const double d = alpha - beta;
    if (!std::isfinite(d) || d < 0.0 || d > kPi) {
        throw DomainViolation(
            "hidden_variable_integral: need 0 <= alpha - beta <= pi");
    }
    const Arithmetic spin{spin_generator()};
    // conditional density: the deformed constant whose conjugate is the
    // uniform 1/pi on the half-circle
    const double rho = spin.embed(1.0 / kPi);
    const NNFunction density{spin, spin, [rho](double) { return rho; }};
    const double lo = spin.embed(alpha);
    const double hi = spin.oplus(spin.embed(kPi), spin.embed(beta));
    return nn_integral(density, lo, hi, tol);
}

bool bell_rescaled_check(const std::function<double(double)>& g,
                         const std::array<double, 4>& p4, double tol) {
    for (double p : p4) {
        if (!std::isfinite(p) || p < 0.0 || p > 0.5) {
            throw InvalidParam("bell_rescaled_check: entries must lie in "
                               "[0, 1/2]");
        }
    }
    if (std::fabs(p4[0] + p4[1] - 0.5) > 1e-12 ||
        std::fabs(p4[2] + p4[3] - 0.5) > 1e-12) {
        throw InvalidParam("bell_rescaled_check: each pair must sum to 1/2");
    }
    double sum = 0.0;
    for (double p : p4) {
        sum += 0.5 * g(2.0 * p);
    }
    return std::fabs(sum - 1.0) <= tol;
}

ProbabilityVector escort_renormalized(const ProbabilityVector& p, double q) {
    if (!std::isfinite(q)) {
        throw InvalidParam("escort_renormalized: q must be finite");
    }
    if (q == 1.0) {
        return p;
    }
    double S = 0.0;
    std::vector<double> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0.0 && q < 0.0) {
            throw InvalidParam("escort_renormalized: q < 0 requires strictly "
                               "positive probabilities");
        }
        out[k] = std::pow(p[k], q);
        S += out[k];
    }
    for (double& v : out) v /= S;
    return ProbabilityVector(std::move(out));
}

Table correspondence_limit(double a, double p, const std::vector<double>& n_list) {
    if (n_list.empty()) {
        throw InvalidParam("correspondence_limit: empty n list");
    }
    Table t;
    t.columns = {"n", "g"};
    t.rows.reserve(n_list.size());
    for (double n : n_list) {
        t.rows.push_back({n, escort_affine(a, n, p)});
    }
    return t;
}

}  // namespace nncalc
