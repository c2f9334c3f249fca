// Transcendental kernels: complementary error function, Gamma(1/2, x), the
// digamma values in scope, and the special functions alpha and F.
#pragma once

#include "qtv/numeric.hpp"
#include "qtv/quadrature.hpp"

namespace qtv {

// erfc(w) = (2/sqrt(pi)) int_w^inf e^{-t^2} dt. Positive-term series for
// |w| < 4, Lentz continued fraction beyond.
Real erfc(const Real& w);
// e^{w^2} erfc(w) for w >= 0 without forming e^{w^2}.
Real erfc_scaled(const Real& w);
// The two routes separately, for cross-checks.
Real erfc_series(const Real& w);
Real erfc_scaled_continued_fraction(const Real& w);

// Gamma(1/2, x) = sqrt(pi) erfc(sqrt(x)) for x > 0.
Real inc_gamma_half(const Real& x);

// alpha(y) = sqrt(y) int_0^inf log(t+1) t^{-1/2} e^{-pi y t} dt, y > 0.
// The integral splits at t = 1; t = u^2 on [0, 1]; the tail is truncated at
// a point where the explicit remainder bound is negligible.
enum class QuadratureScheme { gauss_adaptive, tanh_sinh };
QuadratureResult alpha(const Real& y, QuadratureScheme scheme = QuadratureScheme::gauss_adaptive,
                       const Real& tol = Real(1e-25));

// F(t) = log t - sqrt(pi) int_0^t e^{w^2} erfc(w) dw + log 2 + gamma/2, t > 0.
QuadratureResult F_bfi(const Real& t, const Real& tol = Real(1e-25));

// psi at the only arguments in scope: psi(0) := -gamma by convention and
// psi(1) = -gamma. Other arguments throw.
Real digamma_in_scope(const Real& x);

// Worst |-2 F(2 sqrt(pi N v) m) - alpha(4 N m^2 v)| over the grid
// N in {1,3,5}, v in {0.3,0.5,1,2}, m in {1,2,3}.
struct SpecialRelationSweep {
    Real worst;
    int points = 0;
    bool all_converged = true;
};
SpecialRelationSweep special_relation_sweep();

}  // namespace qtv
