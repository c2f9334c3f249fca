// Truncated evaluation of the scalar q-series theta, Zagier's Eisenstein
// series, the generalized Cohen-Eisenstein series and the weight 1/2 forms E
// and G, with the half-integral weight slash operator for residual tests.
#pragma once

#include "qtv/numeric.hpp"
#include "qtv/quadforms.hpp"

#include <functional>
#include <string>

namespace qtv {

struct SeriesEvaluation {
    Complex value;
    Complex tau;
    i64 cutoff = 0;
    // Bound on the omitted terms from the documented coefficient envelope.
    Real tail_bound;
    std::string note;
};

// theta(tau) = sum_{n in Z} q^{n^2}, |n| <= cutoff.
SeriesEvaluation eval_theta(const Complex& tau, i64 cutoff);

// -1/12 + sum H(n) q^n + 1/(8 pi sqrt v) + (1/(4 sqrt pi)) sum_{n>=1}
// n Gamma(-1/2, 4 pi n^2 v) q^{-n^2}; holomorphic indices up to cutoff,
// nonholomorphic indices with n^2 <= cutoff.
SeriesEvaluation eval_H_zagier(const Complex& tau, i64 cutoff);

// sum_{n=0}^{cutoff} H_{l,N}(n) q^n.
SeriesEvaluation eval_cohen_eisenstein(i64 l, i64 N, const Complex& tau, i64 cutoff);

// How the E-series term 2 v^{1/2} sum_{d<0} h*(d) Gamma(1/2, 4 pi |d| v) q^d
// is evaluated: h* is only defined for positive indices.
enum class NegativeIndexMode {
    omit,               // drop the term and flag it in the note
    hurwitz_weighted,   // h*(d) := H(|d|) / sqrt|d| * weight
};
SeriesEvaluation eval_E(const Complex& tau, i64 cutoff, NegativeIndexMode mode = NegativeIndexMode::omit,
                        const Real& weight = Real(1));

// Full expansion of G for an odd prime p with coefficients from the
// coefficient module (c(0), c(m^2), L-value formula for nonsquares,
// class-number formula for negative indices).
SeriesEvaluation eval_G(i64 p, const Complex& tau, i64 cutoff);

// gamma tau for gamma in SL2(Z).
Complex mobius(const Mat2& g, const Complex& tau);

// (f|_k gamma)(tau) = (c/d) eps_d^{2k} (c tau + d)^{-k} f(gamma tau) for
// gamma in Gamma_0(4), k = twice_k / 2 with twice_k odd, principal branch.
Complex slash_half(const Complex& f_at_gamma_tau, const Mat2& g, int twice_k, const Complex& tau);

using SeriesFunction = std::function<SeriesEvaluation(const Complex&)>;
struct ResidualResult {
    Real residual;      // |f|_k gamma (tau) - f(tau)|
    Real tail_bounds;   // tail bound at tau plus the scaled one at gamma tau
    Real image_height;  // Im(gamma tau)
};
ResidualResult modularity_residual(const SeriesFunction& f, const Mat2& g, int twice_k, const Complex& tau);

// Smallest cutoff whose envelope tail at height v is below target.
i64 cutoff_for_height(const Real& v, const Real& target, double envelope_exponent = 1.0);

}  // namespace qtv
