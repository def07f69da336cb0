#include "nncalc/generator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nncalc/errors.hpp"
#include "deformed_maps.hpp"

namespace nncalc {

std::string Interval::str() const {
    std::ostringstream os;
    os << (lo_open ? '(' : '[');
    if (std::isfinite(lo)) {
        os << lo;
    } else {
        os << "-inf";
    }
    os << ", ";
    if (std::isfinite(hi)) {
        os << hi;
    } else {
        os << "inf";
    }
    os << (hi_open ? ')' : ']');
    return os.str();
}

Generator identity_generator() {
    Generator g;
    g.label = "identity";
    g.forward = [](double x) { return x; };
    g.inverse = [](double r) { return r; };
    g.domain = Interval::all();
    g.range = Interval::all();
    g.check_window = Interval::closed(-100.0, 100.0);
    return g;
}

Generator log_generator() {
    Generator g;
    g.label = "log";
    g.forward = [](double x) { return std::log(x); };
    g.inverse = [](double r) { return std::exp(r); };
    g.domain = Interval::positive();
    g.range = Interval::all();
    g.check_window = Interval::closed(1e-3, 1e3);
    return g;
}

Generator neglog_generator() {
    Generator g;
    g.label = "neglog";
    g.forward = [](double x) { return std::log(-x); };
    g.inverse = [](double r) { return -std::exp(r); };
    g.domain = Interval::negative();
    g.range = Interval::all();
    g.check_window = Interval::closed(-1e3, -1e-3);
    return g;
}

Generator kaniadakis_generator(double kappa) {
    if (!std::isfinite(kappa) || kappa < 0.0) {
        throw InvalidParam("kaniadakis generator: kappa must be finite and >= 0");
    }
    Generator g;
    g.label = "kaniadakis";
    g.params["kappa"] = kappa;
    g.forward = [kappa](double x) { return detail::kappa_forward(x, kappa); };
    g.inverse = [kappa](double r) { return detail::kappa_inverse(r, kappa); };
    g.domain = Interval::all();
    g.range = Interval::all();
    // keep sinh(kappa r) comfortably below overflow inside the check window
    const double w = kappa > 0.0 ? std::min(50.0, 600.0 / kappa) : 50.0;
    g.check_window = Interval::closed(-w, w);
    return g;
}

Generator renyi_generator(double q) {
    if (!std::isfinite(q) || q == 1.0) {
        throw InvalidParam("renyi generator: q must be finite and != 1");
    }
    const double e = 1.0 - q;
    Generator g;
    g.label = "renyi";
    g.params["q"] = q;
    g.forward = [e](double x) { return std::exp(e * x); };
    g.inverse = [e](double r) { return std::log(r) / e; };
    g.domain = Interval::all();
    g.range = Interval::positive();
    const double w = std::min(20.0, 600.0 / std::fabs(e));
    g.check_window = Interval::closed(-w, w);
    return g;
}

Generator lemma2_generator(double a, double n) {
    if (!std::isfinite(a) || a < -1.0 || a > 1.0 || a == 0.0) {
        throw InvalidParam("lemma2 generator: need -1 <= a <= 1 and a != 0");
    }
    if (!std::isfinite(n) || n < 3.0) {
        throw InvalidParam("lemma2 generator: need n >= 3");
    }
    // denominator is n + (2-n)a, linear in a with values in [2, 2n-2]
    const double den = n + (2.0 - n) * a;
    Generator g;
    g.label = "lemma2";
    g.params["a"] = a;
    g.params["n"] = n;
    g.forward = [a, den](double p) { return (1.0 - a + 2.0 * a * p) / den; };
    g.inverse = [a, den](double y) { return (den * y - 1.0 + a) / (2.0 * a); };
    g.domain = Interval::all();
    g.range = Interval::all();
    g.check_window = Interval::closed(-100.0, 100.0);
    return g;
}

Generator spin_generator() {
    Generator g;
    g.label = "spin";
    g.forward = [](double x) { return detail::spin_cell_inverse(x); };
    g.inverse = [](double r) { return detail::spin_cell_forward(r); };
    g.domain = Interval::all();
    g.range = Interval::all();
    g.check_window = Interval::closed(-8.0, 8.0);
    return g;
}

void validate(const Generator& g, int grid_points) {
    if (grid_points < 2) {
        throw InvalidParam("validate: need at least 2 grid points");
    }
    const Interval& w = g.check_window;
    if (!std::isfinite(w.lo) || !std::isfinite(w.hi) || !(w.lo < w.hi)) {
        throw InvalidParam("validate: generator '" + g.label +
                           "' has no usable check window");
    }
    const double step = (w.hi - w.lo) / (grid_points - 1);
    double prev = 0.0;
    int dir = 0;  // +1 increasing, -1 decreasing, set by the first step
    for (int i = 0; i < grid_points; ++i) {
        const double x = w.lo + i * step;
        const double r = g.forward(x);
        if (!std::isfinite(r)) {
            throw InvalidParam("validate: generator '" + g.label +
                               "' is not finite inside its check window");
        }
        const double back = g.inverse(r);
        if (!(std::fabs(back - x) <= 1e-10 * (1.0 + std::fabs(x)))) {
            std::ostringstream os;
            os << "validate: generator '" << g.label
               << "' fails the round trip at x = " << x << " (got " << back
               << ")";
            throw InvalidParam(os.str());
        }
        if (i > 0) {
            if (dir == 0) {
                dir = r > prev ? 1 : (r < prev ? -1 : 0);
            }
            if (dir == 0 || (dir > 0 ? !(r > prev) : !(r < prev))) {
                std::ostringstream os;
                os << "validate: generator '" << g.label
                   << "' is not strictly monotone near x = " << x;
                throw InvalidParam(os.str());
            }
        }
        prev = r;
    }
}

}  // namespace nncalc
