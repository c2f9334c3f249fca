// Kronecker characters, fundamental discriminants, exact and numerical
// Dirichlet L-values, Hurwitz zeta, and constrained divisor sums.
#pragma once

#include "qtv/numeric.hpp"

#include <optional>
#include <vector>

namespace qtv {

// n = t * m^2 with t a fundamental discriminant (t = 1 for squares).
struct DiscSplit {
    i64 t = 1;
    i64 m = 1;
    i64 n = 1;
};

bool is_fundamental_discriminant(i64 t);  // true for t = 1 as well
DiscSplit fundamental_decomposition(i64 n);

// chi_t(k) = (t / k); chi_1 is the principal character of modulus 1.
int chi(i64 t, i64 k);

// L(0, chi_t) = -(1/|t|) sum_{a=1}^{|t|-1} chi_t(a) a for t < 0.
Rational L_at_0(i64 t);
// Finite character sums: log-sine sum for t > 0, linear sum for t < 0.
Real L_at_1(i64 t);

struct LValue {
    std::optional<Rational> exact;
    Real numeric;
    Real error_bound;  // absolute
};

// L_N(s, chi_t) = L(s, chi_t) prod_{q | N} (1 - chi_t(q) q^{-s}).
// Supported: s = -1 with t = 1 (exact), s = 0 with t < 0 (exact),
// s = 1 with t != 1, and real s > 1 for any t.
LValue L_incomplete(i64 N, const Real& s, i64 t);
// Euler factor prod_{q | N} (1 - chi_t(q) q^{-s}) at real s.
Real euler_factor(i64 N, const Real& s, i64 t);

// Hurwitz zeta zeta(s, x) for real s > 1, x > 0, by Euler-Maclaurin; the
// optional out-parameter receives the magnitude of the first omitted term.
Real hurwitz_zeta(const Real& s, const Real& x, Real* error = nullptr);
// d/ds zeta(s, x) by differentiating the same Euler-Maclaurin expansion.
Real hurwitz_zeta_ds(const Real& s, const Real& x, Real* error = nullptr);

// Riemann zeta (library-backed), completed zeta Gamma(s/2) zeta(s) / pi^{s/2},
// and zeta'(2)/zeta(2) from the Euler-Maclaurin derivative (cached).
Real zeta(const Real& s);
Real zeta_star(const Real& s);
Real zeta_log_derivative_at_2();
// Constant term of zeta at s = 1: lim (zeta(s) - 1/(s-1)) = Euler's gamma.
Real zeta_laurent_constant_at_1();

// Even-index Bernoulli numbers B_0, B_2, ..., B_{2k} as exact rationals.
std::vector<Rational> bernoulli_even(int k);

// sigma_{l,N,s}(r) = sum over d | r with gcd(d, l) = 1 and gcd(r/d, N/l) = 1
// of d^s. Exact for integer s (negative s allowed), numerical for real s.
Rational sigma_lns(i64 l, i64 N, i64 s, i64 r);
Real sigma_lns_real(i64 l, i64 N, const Real& s, i64 r);

}  // namespace qtv
