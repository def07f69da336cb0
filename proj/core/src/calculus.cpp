#include "nncalc/calculus.hpp"

#include <cmath>
#include <sstream>

#include "nncalc/errors.hpp"

namespace nncalc {

double NNFunction::conjugate(double r) const {
    return cod.to_conjugate(map(dom.from_conjugate(r)));
}

namespace detail {

double richardson_limit(const std::function<double(double)>& quotient,
                        double h) {
    const double d1 = quotient(h);
    const double d2 = quotient(h / 2.0);
    const double d3 = quotient(h / 4.0);
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r2 = (4.0 * d3 - d2) / 3.0;
    const double out = (16.0 * r2 - r1) / 15.0;
    if (!std::isfinite(out)) {
        throw NonFinite("difference quotient did not stay finite");
    }
    return out;
}

double richardson_derivative(const std::function<double(double)>& F, double r,
                             double h) {
    return richardson_limit(
        [&](double s) { return (F(r + s) - F(r - s)) / (2.0 * s); }, h);
}

namespace {

struct SimpsonState {
    const std::function<double(double)>& F;
    long panels = 0;
    long max_panels = 0;

    double eval(double r) const {
        const double v = F(r);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "integrand is not finite at r = " << r;
            throw QuadratureFailure(os.str());
        }
        return v;
    }
};

// Classic recursive refinement: accept a panel when the two-half Simpson sum
// agrees with the whole-panel one to 15x the local tolerance, adding the
// standard 1/15 correction term. Below ~1e-18 of the original width further
// splitting is numerically meaningless, so depth 60 accepts unconditionally.
double simpson_step(SimpsonState& st, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.eval(lm);
    const double frm = st.eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    if (std::fabs(err) <= 15.0 * tol || depth >= 60) {
        return left + right + err / 15.0;
    }
    st.panels += 2;
    if (st.panels > st.max_panels) {
        throw QuadratureFailure("panel budget exhausted before reaching the "
                                "requested tolerance");
    }
    return simpson_step(st, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
           simpson_step(st, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& F, double a,
                        double b, double tol, long max_panels) {
    if (!(tol > 0.0)) {
        throw InvalidParam("quadrature tolerance must be positive");
    }
    if (a == b) return 0.0;
    SimpsonState st{F, 0, max_panels};
    const double m = 0.5 * (a + b);
    const double fa = st.eval(a);
    const double fm = st.eval(m);
    const double fb = st.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(st, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace detail

double nn_derivative(const NNFunction& fn, double x, double step) {
    const double r0 = fn.dom.to_conjugate(x);
    const double h = step > 0.0 ? step : 1e-4 * (1.0 + std::fabs(r0));
    const Interval& range = fn.dom.gen().range;
    if (!range.contains(r0 + h) || !range.contains(r0 - h)) {
        std::ostringstream os;
        os << "derivative stencil around r = " << r0 << " (h = " << h
           << ") leaves the conjugate range " << range.str()
           << " of generator '" << fn.dom.gen().label << "'";
        throw DomainViolation(os.str());
    }
    const double d = detail::richardson_derivative(
        [&fn](double r) { return fn.conjugate(r); }, r0, h);
    return fn.cod.from_conjugate(d);
}

double nn_integral(const NNFunction& fn, double lo, double hi, double tol) {
    double ra = fn.dom.to_conjugate(lo);
    double rb = fn.dom.to_conjugate(hi);
    double sign = 1.0;
    if (ra > rb) {
        std::swap(ra, rb);
        sign = -1.0;
    }
    // same composition as fn.conjugate, with the finite check interposed so
    // a singular integrand surfaces as a quadrature failure, not as a domain
    // complaint from the codomain generator
    const auto F = [&fn](double r) {
        const double x = fn.dom.from_conjugate(r);
        const double y = fn.map(x);
        if (!std::isfinite(y)) {
            std::ostringstream os;
            os << "integrand is not finite at x = " << x;
            throw QuadratureFailure(os.str());
        }
        return fn.cod.to_conjugate(y);
    };
    const double inner =
        ra == rb ? 0.0 : detail::adaptive_simpson(F, ra, rb, tol, 1L << 20);
    return fn.cod.from_conjugate(sign * inner);
}

double nn_exp(const Arithmetic& X, const Arithmetic& Y, double x) {
    const double e = std::exp(X.to_conjugate(x));
    if (!Y.gen().range.contains(e)) {
        throw OutOfRange("nn_exp: e^{f_X(x)} has no preimage under generator '" +
                         Y.gen().label + "'");
    }
    return Y.from_conjugate(e);
}

double nn_ln(const Arithmetic& X, const Arithmetic& Y, double y) {
    const double w = Y.to_conjugate(y);
    if (!(w > 0.0)) {
        std::ostringstream os;
        os << "nn_ln: f_Y(y) = " << w << " is not positive, logarithm undefined";
        throw DomainViolation(os.str());
    }
    return X.from_conjugate(std::log(w));
}

}  // namespace nncalc
