// Named Fourier-coefficient formulas of the weight 1/2 forms E and G: divisor
// sums, log-divisor sums, square-indexed closed forms with their numerical
// derivative oracles, negative-index values, local factors, and the
// constant-term and Kronecker-limit consistency checks.
#pragma once

#include "qtv/numeric.hpp"
#include "qtv/report.hpp"

#include <vector>

namespace qtv {

// T^{chi_t}_{N,s}(n) = sum_{d | n, gcd(d,N)=1} mu(d) chi_t(d) d^{s-1}
//                      sigma_{N,2s-1}(n/d),
// with sigma_{N,x}(r) = sum_{e | r, gcd(e,N)=1} e^x.
Real T_sum(i64 N, const Real& s, i64 t, i64 n);
// Exact form for integer s.
Rational T_sum_exact(i64 N, i64 s, i64 t, i64 n);

// t_N(m) = sum_{d | m, gcd(d,N)=1} (mu(d)/d) sum_{r | m/d, gcd(r,N)=1}
//          (log d + 2 log r) / r.
Real t_frak(i64 N, i64 m);

// Square-indexed and constant coefficients (closed forms).
Real b_square(i64 m);
Complex c_zero(i64 p);
Complex c_square(i64 p, i64 m);

// Numerical s-derivative at 3/4 of the pre-derivative products (central
// difference with step h, one Richardson level). m = 0 selects c(0).
struct DerivativeOracle {
    Complex value;
    // |D(h/2) - D(h)|, a proxy for the step error; large values flag
    // instability.
    Real step_spread;
};
DerivativeOracle c_derivative_oracle(i64 p, i64 m, const Real& h);
DerivativeOracle b_derivative_oracle(i64 m, const Real& h);
// The product f(0, 2s) at s = 3/4 (the c(0) local factor at 3/2).
Complex c_zero_local_factor_at_32(i64 p);

// c(n) for negative discriminants n from the class-number combination
// (12/p) (H_{1,p}(|n|) + p/(1-p) H_{p,p}(|n|)) / (4 pi (1-i) sqrt|n|).
Complex c_negative(i64 p, i64 n);
// The rational factor (12/p)(H_{1,p}(|n|) + p/(1-p) H_{p,p}(|n|)).
Rational c_negative_rational_part(i64 p, i64 n);

Real frak_C(i64 p);
// frak_C solved from the constant-1 identity of the constant-term system.
Real frak_C_from_constant_term(i64 p);

// A2~(n) with the odd-valuation branch 1 - 2^{-(v-1)/2}, which is what the
// Kloosterman sums over 2-power moduli produce. All branches are rational.
Rational local_A2_tilde(i64 n);
// The same table with the printed odd-valuation branch 1 - 2^{-(v+3)/2}.
Rational local_A2_tilde_printed(i64 n);
// Local factor A(p,n) at an odd prime p.
Rational local_Ap(i64 p, i64 n);

// Kronecker-limit coefficients at the two cusps of Gamma_0(p).
Real B_infty(i64 p, const Real& s);
Real B_zero(i64 p, const Real& s);
struct LaurentData {
    Real value_infty;       // B_infty(p, 1)
    Real value_zero;        // B_zero(p, 1)
    Real derivative_infty;  // numerical d/ds at s = 1
    Real derivative_zero;
    // Logarithmic-derivative evaluation of the same closed forms.
    Real analytic_derivative_infty;
    Real analytic_derivative_zero;
    Real printed_constant;  // 1 + 1/(pi^2 (p^2-1)) as printed for B_infty
    Real printed_derivative_infty;
    Real printed_derivative_zero;
};
LaurentData b_laurent_data(i64 p);
// Asserts B_infty(1) = 1, B_zero(1) = p and the numerical derivatives
// against the logarithmic-derivative evaluation; the notes record how far
// the printed expansion coefficients are from these values.
std::vector<VerificationReport> b_laurent_check(i64 p);

// The three constant-term identities: v^{1/2} and log(16v) exactly, the
// constant 1 against frak_C numerically.
std::vector<VerificationReport> constant_term_checks(i64 p);

// Right-hand side of the square-index real trace identity.
Real square_trace_rhs(i64 p, i64 m);
// The unsimplified combination (2/(p-1)) b(m^2) + (gamma + log(pi m^2)) /
// (pi (p+1)) + (2/3)(1-i) pi c(m^2) - 2 frak_C(p), rescaled by pi.
Complex square_trace_unsimplified(i64 p, i64 m);
VerificationReport square_trace_consistency(i64 p, i64 m);

}  // namespace qtv
