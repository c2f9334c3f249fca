// Hurwitz class numbers by two routes, the level-N generalization, the
// regulator sum over square divisors, and the linear relation among them.
#pragma once

#include "qtv/numeric.hpp"
#include "qtv/report.hpp"

namespace qtv {

// Weighted count of SL2(Z)-classes of positive definite forms of
// discriminant -n (imprimitive included; weights 1/2 and 1/3 for forms
// with extra automorphs). H(0) = -1/12; zero unless n = 0, 3 mod 4.
Rational hurwitz_H_forms(i64 n);

// L(0, chi_t) * sum_{a | m} mu(a) chi_t(a) sigma_1(m / a) for -n = t m^2.
Rational hurwitz_H_lformula(i64 n);

// Generalized class numbers H_{l,N}(n) for l | N, N odd squarefree, with the
// index n >= 0 equal to the q-exponent of the generating series.
Rational gen_hurwitz(i64 l, i64 N, i64 n);

// (1/2pi) sum_{r^2 | n} 2 log(eps+(n/r^2)) h+(n/r^2) with the norm +1 unit and
// the number of SL2(Z)-classes of primitive forms of each discriminant.
Real h_star(i64 n);

// H_{p,p}(n)/(1-p) = H(n) - (p+1)/p H_{1,p}(n), exactly.
VerificationReport verify_linear_relation(i64 p, i64 n);

}  // namespace qtv
