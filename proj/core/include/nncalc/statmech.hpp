#pragma once

#include <cstddef>
#include <vector>

#include "nncalc/arithmetic.hpp"

namespace nncalc {

// Discrete distribution in the ordinary sense: entries in [0, 1] summing to
// 1 within 1e-12. Constructed once, immutable afterwards.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> p);

    const std::vector<double>& values() const { return p_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t k) const { return p_[k]; }

private:
    std::vector<double> p_;
};

// Energy levels read through their own arithmetic.
struct EnergySpectrum {
    std::vector<double> levels;
    Arithmetic arith;
};

// Output of maxent_solve. p holds deformed probabilities: they satisfy the
// conjugate normalization sum_k f_X(p_k) = 1, not the plain unit sum (the
// two coincide only for the identity generator).
struct MaxEntSolution {
    std::vector<double> p;
    double C;                      // conjugate normalization constant
    double beta;
    double alpha;                  // multiplier recovered from stationarity
    double stationarity_residual;  // worst violation of the optimality system
};

// Quasi-arithmetic mean f^-1( sum_k p_k f(a_k) ). Invariant under affine
// reparametrizations c1 f + c2 of the generator, and always lies between
// min(a) and max(a).
double kn_mean(const Generator& f, const ProbabilityVector& p,
               const std::vector<double>& a);

// The same mean evaluated the deformed way: weights are pulled back to
// p'_k = f^-1(p_k) and the terms folded with the induced (+) and (*),
// making the mean a plain weighted sum of that arithmetic. Zero weights are
// excluded by construction for generators whose range excludes 0.
double kn_mean_deformed(const Arithmetic& X, const ProbabilityVector& p,
                        const std::vector<double>& a);

// sum_k p_k ln(1/p_k) in nats; 0 ln(1/0) counts as 0.
double shannon_entropy(const ProbabilityVector& p);

// (1/(1-q)) ln sum_k p_k^q in nats. |q-1| < 1e-6 routes to shannon_entropy;
// q <= 0 demands strictly positive entries. Nonincreasing in q.
double renyi_entropy(const ProbabilityVector& p, double q);

// Deformed Shannon form: the p_k are deformed probabilities whose conjugates
// u_k = f_X(p_k) must lie in (0, 1] and sum to 1 (within 1e-10, else
// NormalizationError); the entropy sum_k u_k ln(1/u_k) is read back through
// Z. With X = Z = identity this is shannon_entropy.
double nn_shannon_entropy(const Arithmetic& X, const Arithmetic& Z,
                          const std::vector<double>& p);

// |mean(a + c) - (mean(a) + c)|: zero for the e^{(1-q)x} family, an honest
// gap for generic generators (cube-mean being the classic counterexample).
double kn_translation_defect(const Generator& f, const ProbabilityVector& p,
                             const std::vector<double>& a, double c);
bool kn_translation_check(const Generator& f, const ProbabilityVector& p,
                          const std::vector<double>& a, double c,
                          double tol = 1e-9);

// Maximizes sum u_k ln(1/u_k) over conjugate weights u_k = f_X(p_k) subject
// to sum u_k = 1 and fixed conjugate mean energy at inverse temperature
// beta. Closed form: u_k = C e^{-beta f_E(E_k)}, p_k = f_X^-1(u_k),
// alpha = 1 + ln C. The returned stationarity residual is checked against
// the optimality system; it sits at rounding level by construction.
MaxEntSolution maxent_solve(const Arithmetic& X, const EnergySpectrum& E,
                            double beta);

}  // namespace nncalc
