#include "nncalc/statmech.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "nncalc/errors.hpp"

namespace nncalc {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw InvalidParam("probability vector must not be empty");
    }
    double sum = 0.0;
    for (double v : p_) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw InvalidParam("probability entries must lie in [0, 1]");
        }
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "probabilities must sum to 1 within 1e-12 (got " << sum << ")";
        throw InvalidParam(os.str());
    }
}

namespace {

void require_same_size(const ProbabilityVector& p, const std::vector<double>& a,
                       const char* who) {
    if (p.size() != a.size()) {
        throw InvalidParam(std::string(who) +
                           ": weights and values differ in length");
    }
}

}  // namespace

double kn_mean(const Generator& f, const ProbabilityVector& p,
               const std::vector<double>& a) {
    require_same_size(p, a, "kn_mean");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!f.domain.contains(a[k])) {
            std::ostringstream os;
            os << "kn_mean: value " << a[k] << " outside the domain "
               << f.domain.str() << " of generator '" << f.label << "'";
            throw OutOfRange(os.str());
        }
        s += p[k] * f.forward(a[k]);
    }
    if (!f.range.contains(s)) {
        throw OutOfRange("kn_mean: the weighted conjugate sum has no preimage "
                         "under generator '" + f.label + "'");
    }
    return f.inverse(s);
}

double kn_mean_deformed(const Arithmetic& X, const ProbabilityVector& p,
                        const std::vector<double>& a) {
    require_same_size(p, a, "kn_mean_deformed");
    // p'_k = f^-1(p_k); embed() throws OutOfRange when a weight (0 included)
    // has no preimage
    double acc = X.odot(X.embed(p[0]), a[0]);
    for (std::size_t k = 1; k < a.size(); ++k) {
        acc = X.oplus(acc, X.odot(X.embed(p[k]), a[k]));
    }
    return acc;
}

double shannon_entropy(const ProbabilityVector& p) {
    double s = 0.0;
    for (double v : p.values()) {
        if (v > 0.0) s += v * std::log(1.0 / v);
    }
    return s;
}

double renyi_entropy(const ProbabilityVector& p, double q) {
    if (!std::isfinite(q)) {
        throw InvalidParam("renyi_entropy: q must be finite");
    }
    if (std::fabs(q - 1.0) < 1e-6) {
        return shannon_entropy(p);
    }
    double s = 0.0;
    for (double v : p.values()) {
        if (v == 0.0) {
            if (q <= 0.0) {
                throw InvalidParam("renyi_entropy: q <= 0 requires strictly "
                                   "positive probabilities");
            }
            continue;
        }
        s += std::pow(v, q);
    }
    return std::log(s) / (1.0 - q);
}

double nn_shannon_entropy(const Arithmetic& X, const Arithmetic& Z,
                          const std::vector<double>& p) {
    if (p.empty()) {
        throw InvalidParam("nn_shannon_entropy: empty distribution");
    }
    double sum = 0.0;
    double acc = 0.0;
    for (double pk : p) {
        const double u = X.to_conjugate(pk);
        if (!(u > 0.0) || u > 1.0) {
            std::ostringstream os;
            os << "nn_shannon_entropy: conjugate weight " << u
               << " outside (0, 1]";
            throw DomainViolation(os.str());
        }
        sum += u;
        if (u < 1.0) acc += u * std::log(1.0 / u);
    }
    if (std::fabs(sum - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "nn_shannon_entropy: conjugate weights sum to " << sum
           << ", expected 1 within 1e-10";
        throw NormalizationError(os.str());
    }
    return Z.from_conjugate(acc);
}

double kn_translation_defect(const Generator& f, const ProbabilityVector& p,
                             const std::vector<double>& a, double c) {
    std::vector<double> shifted(a);
    for (double& v : shifted) v += c;
    return std::fabs(kn_mean(f, p, shifted) - (kn_mean(f, p, a) + c));
}

bool kn_translation_check(const Generator& f, const ProbabilityVector& p,
                          const std::vector<double>& a, double c, double tol) {
    return kn_translation_defect(f, p, a, c) < tol;
}

MaxEntSolution maxent_solve(const Arithmetic& X, const EnergySpectrum& E,
                            double beta) {
    if (E.levels.empty()) {
        throw InvalidParam("maxent_solve: empty energy spectrum");
    }
    if (!std::isfinite(beta)) {
        throw InvalidParam("maxent_solve: beta must be finite");
    }
    const std::size_t n = E.levels.size();
    std::vector<double> eps(n);
    double W = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        eps[k] = E.arith.to_conjugate(E.levels[k]);
        const double w = std::exp(-beta * eps[k]);
        if (!std::isfinite(w) || w == 0.0) {
            throw Overflow("maxent_solve: Gibbs weight degenerates at level " +
                           std::to_string(E.levels[k]));
        }
        W += w;
    }
    MaxEntSolution sol;
    sol.beta = beta;
    sol.C = 1.0 / W;
    sol.alpha = 1.0 + std::log(sol.C);
    sol.p.resize(n);
    sol.stationarity_residual = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double u = sol.C * std::exp(-beta * eps[k]);
        sol.p[k] = X.from_conjugate(u);
        // optimality system: -ln u_k - 1 + alpha - beta eps_k = 0
        const double res =
            std::fabs(-std::log(u) - 1.0 + sol.alpha - beta * eps[k]);
        sol.stationarity_residual = std::max(sol.stationarity_residual, res);
    }
    return sol;
}

}  // namespace nncalc
