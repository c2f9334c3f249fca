#include "qtv/coefficients.hpp"

#include "qtv/arith_core.hpp"
#include "qtv/characters.hpp"
#include "qtv/classnumbers.hpp"
#include "qtv/kloosterman.hpp"

#include <functional>
#include <stdexcept>

namespace qtv {

namespace {

void check_odd_prime(i64 p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

Rational rational_pow(i64 base, i64 e) {
    if (e >= 0) return Rational(bmp::pow(BigInt(base), static_cast<unsigned>(e)));
    return Rational(BigInt(1), bmp::pow(BigInt(base), static_cast<unsigned>(-e)));
}

Real real_pow(i64 base, const Real& e) { return bmp::pow(Real(base), e); }

// L_{4p}(x, id) = zeta(x) (1 - 2^{-x}) (1 - p^{-x}), valid for x != 1.
Real level_zeta(i64 p, const Real& x) { return zeta(x) * euler_factor(4 * p, x, 1); }

// (2/3)(1-i) pi
Complex coefficient_normalizer() {
    const Real k = Real(2) / 3 * const_pi();
    return Complex(k, -k);
}

DerivativeOracle richardson_at_34(const std::function<Complex(const Real&)>& f, const Real& h) {
    const Real s0 = Real(3) / 4;
    auto central = [&](const Real& step) { return (f(s0 + step) - f(s0 - step)) / (2 * step); };
    const Complex d_full = central(h);
    const Complex d_half = central(h / 2);
    DerivativeOracle out;
    out.value = (Real(4) * d_half - d_full) / Real(3);
    out.step_spread = abs(d_half - d_full);
    return out;
}

}  // namespace

Real T_sum(i64 N, const Real& s, i64 t, i64 n) {
    if (n < 1) throw std::invalid_argument("T_sum: n must be positive");
    Real total(0);
    for (i64 d : divisors(n)) {
        if (gcd(d, N) != 1) continue;
        const int mu = moebius(d);
        const int ch = chi(t, d);
        if (mu == 0 || ch == 0) continue;
        total += Real(mu * ch) * real_pow(d, s - 1) * sigma_lns_real(N, N, 2 * s - 1, n / d);
    }
    return total;
}

Rational T_sum_exact(i64 N, i64 s, i64 t, i64 n) {
    if (n < 1) throw std::invalid_argument("T_sum_exact: n must be positive");
    Rational total(0);
    for (i64 d : divisors(n)) {
        if (gcd(d, N) != 1) continue;
        const int mu = moebius(d);
        const int ch = chi(t, d);
        if (mu == 0 || ch == 0) continue;
        total += Rational(mu * ch) * rational_pow(d, s - 1) * sigma_lns(N, N, 2 * s - 1, n / d);
    }
    return total;
}

Real t_frak(i64 N, i64 m) {
    if (m < 1) throw std::invalid_argument("t_frak: m must be positive");
    Real total(0);
    for (i64 d : divisors(m)) {
        if (gcd(d, N) != 1) continue;
        const int mu = moebius(d);
        if (mu == 0) continue;
        Real inner(0);
        for (i64 r : divisors(m / d)) {
            if (gcd(r, N) != 1) continue;
            inner += (bmp::log(Real(d)) + 2 * bmp::log(Real(r))) / r;
        }
        total += Real(mu) / d * inner;
    }
    return total;
}

Real b_square(i64 m) {
    const Real pi = const_pi();
    return 2 / (3 * pi) *
           (const_euler() - 2 * zeta_log_derivative_at_2() - 2 * const_log2() + bmp::log(pi) / 2 - t_frak(1, m));
}

Complex c_zero(i64 p) {
    check_odd_prime(p);
    const Real P(p);
    const Real pi = const_pi();
    const Real rhs = 2 / (pi * (P + 1)) *
                     (const_euler() - const_log2() - zeta_log_derivative_at_2() - P * P * bmp::log(P) / (P * P - 1));
    return Complex(rhs) / coefficient_normalizer();
}

Complex c_square(i64 p, i64 m) {
    check_odd_prime(p);
    if (m < 1) throw std::invalid_argument("c_square: m must be positive");
    const Real P(p);
    const Real pi = const_pi();
    const Real log_p = bmp::log(P);
    const Real bracket = const_euler() - 2 * zeta_log_derivative_at_2() +
                         const_log2() * (bmp::pow(Real(2), -valuation(m, 2)) - 3) +
                         log_p * (1 / (P + 1) + (P + 1) / (P - 1) * bmp::pow(P, -valuation(m, p)) - 2 * P / (P - 1)) -
                         t_frak(4 * p, m);
    return Complex(2 / (pi * (P + 1)) * bracket) / coefficient_normalizer();
}

DerivativeOracle c_derivative_oracle(i64 p, i64 m, const Real& h) {
    check_odd_prime(p);
    if (m < 0) throw std::invalid_argument("c_derivative_oracle: m must be nonnegative");
    const Complex one_plus_i(Real(1), Real(1));
    auto product = [p, m, &one_plus_i](const Real& s) -> Complex {
        const Real shift = s - Real(3) / 4;
        const Complex extra = one_plus_i * bmp::pow(Real(2), -4 * s);
        if (m == 0) {
            const Real ratio = shift * level_zeta(p, 4 * s - 2) / level_zeta(p, 4 * s - 1);
            return ratio * ((local_series_2_zero(s) + extra) * local_series_p_zero(p, s));
        }
        const Real ratio = shift * level_zeta(p, 2 * s - Real(0.5)) / level_zeta(p, 4 * s - 1);
        return ratio * T_sum(4 * p, Real(1.5) - 2 * s, 1, m) *
               ((local_series_2_square(m, s) + extra) * local_series_p_square(p, m, s));
    };
    return richardson_at_34(product, h);
}

DerivativeOracle b_derivative_oracle(i64 m, const Real& h) {
    if (m < 1) throw std::invalid_argument("b_derivative_oracle: m must be positive");
    auto product = [m](const Real& s) -> Complex {
        const Real shift = s - Real(3) / 4;
        return Complex(shift * bmp::pow(const_pi(), s + Real(0.25)) / bmp::pow(Real(2), 4 * s - 2) *
                       zeta(2 * s - Real(0.5)) / zeta(4 * s - 1) * T_sum(1, Real(1.5) - 2 * s, 1, m));
    };
    DerivativeOracle d = richardson_at_34(product, h);
    d.value = Real(2) / 9 * d.value;
    d.step_spread = Real(2) / 9 * d.step_spread;
    return d;
}

Complex c_zero_local_factor_at_32(i64 p) {
    check_odd_prime(p);
    const Real s = Real(3) / 4;
    const Complex extra = Complex(Real(1), Real(1)) * bmp::pow(Real(2), -4 * s);
    return (local_series_2_zero(s) + extra) * local_series_p_zero(p, s);
}

Rational c_negative_rational_part(i64 p, i64 n) {
    check_odd_prime(p);
    if (n >= 0) throw std::invalid_argument("c_negative: n must be negative");
    const i64 a = -n;
    return Rational(12, p) * (gen_hurwitz(1, p, a) + Rational(p) / Rational(1 - p) * gen_hurwitz(p, p, a));
}

Complex c_negative(i64 p, i64 n) {
    const Rational q = c_negative_rational_part(p, n);
    // 1 / (4 pi (1-i) sqrt|n|) = (1+i) / (8 pi sqrt|n|)
    const Real scale = to_real(q) / (8 * const_pi() * bmp::sqrt(Real(-n)));
    return Complex(scale, scale);
}

Real frak_C(i64 p) {
    check_odd_prime(p);
    const Real P(p);
    const Real pi = const_pi();
    const Real g = const_euler();
    return 4 * P / (pi * (P * P - 1)) *
           (g - const_log2() - zeta_log_derivative_at_2() - P * bmp::log(P) / (2 * (P + 1)) +
            (bmp::log(pi) - g) / 4);
}

namespace {

Rational a2_tilde(i64 n, bool printed) {
    if (n == 0) throw std::invalid_argument("local_A2_tilde: n must be nonzero");
    const int v = valuation(n, 2);
    const i64 odd = n / ipow(2, v);
    if (v % 2 == 1) return 1 - rational_pow(2, printed ? -(v + 3) / 2 : -(v - 1) / 2);
    if (mod(odd, 4) == 3) return 1 - rational_pow(2, -v / 2);
    if (mod(odd, 8) == 1) return Rational(1);
    return 1 - Rational(2, 3) * rational_pow(2, -v / 2);
}

}  // namespace

Rational local_A2_tilde(i64 n) { return a2_tilde(n, false); }
Rational local_A2_tilde_printed(i64 n) { return a2_tilde(n, true); }

Rational local_Ap(i64 p, i64 n) {
    check_odd_prime(p);
    if (n == 0) throw std::invalid_argument("local_Ap: n must be nonzero");
    const int v = valuation(n, p);
    const i64 rest = n / ipow(p, v);
    const Rational inv_p(1, p);
    if (v % 2 == 1) return inv_p - Rational(p + 1) * rational_pow(p, -(v + 3) / 2);
    if (kronecker(rest, p) == 1) return inv_p;
    return inv_p - 2 * rational_pow(p, -v / 2 - 1);
}

Real B_infty(i64 p, const Real& s) {
    check_odd_prime(p);
    const Real P(p);
    return (P * P - 1) / (bmp::pow(P, 2 * s) - 1) * bmp::pow(const_pi(), s + 1) / (6 * bmp::tgamma(s) * zeta(2 * s));
}

Real B_zero(i64 p, const Real& s) {
    check_odd_prime(p);
    const Real P(p);
    const Real p2s = bmp::pow(P, 2 * s);
    return (P + 1) * (p2s - P) * bmp::pow(const_pi(), s + 1) / (6 * (p2s - 1) * bmp::tgamma(s) * zeta(2 * s));
}

LaurentData b_laurent_data(i64 p) {
    check_odd_prime(p);
    const Real P(p);
    const Real pi = const_pi();
    const Real one(1);
    const Real h = bmp::pow(Real(10), -10);
    auto deriv = [&](const std::function<Real(const Real&)>& f) {
        auto central = [&](const Real& step) { return (f(one + step) - f(one - step)) / (2 * step); };
        return (4 * central(h / 2) - central(h)) / 3;
    };
    LaurentData d;
    d.value_infty = B_infty(p, one);
    d.value_zero = B_zero(p, one);
    d.derivative_infty = deriv([p](const Real& s) { return B_infty(p, s); });
    d.derivative_zero = deriv([p](const Real& s) { return B_zero(p, s); });
    // d/ds log of the closed forms at s = 1, where Gamma'(1) = -gamma.
    const Real common = const_euler() + bmp::log(pi) - 2 * zeta_log_derivative_at_2();
    const Real log_p = bmp::log(P);
    d.analytic_derivative_infty = d.value_infty * (common - 2 * P * P * log_p / (P * P - 1));
    d.analytic_derivative_zero =
        d.value_zero * (common + 2 * P * P * log_p / (P * P - P) - 2 * P * P * log_p / (P * P - 1));
    d.printed_constant = 1 + 1 / (pi * pi * (P * P - 1));
    d.printed_derivative_infty = pi * pi * ((P * P - 1) * common - 2 * P * P * log_p);
    d.printed_derivative_zero = pi * pi * (P * (P * P - 1) * common + 2 * P * P * log_p);
    return d;
}

std::vector<VerificationReport> b_laurent_check(i64 p) {
    const LaurentData d = b_laurent_data(p);
    const Real tol = bmp::pow(Real(10), -12);
    std::vector<VerificationReport> out;
    out.push_back(make_numeric_report("B_infty(1)", p, 0, d.value_infty, Real(1), tol, true));
    out.back().note = "printed constant term " + to_string(d.printed_constant, 12);
    out.push_back(make_numeric_report("B_zero(1)", p, 0, d.value_zero, Real(p), tol, true));
    out.back().note = "printed constant term " + to_string(Real(p) + d.printed_constant - 1, 12);
    const Real dtol = bmp::pow(Real(10), -15);
    out.push_back(make_numeric_report("B_infty'(1)", p, 0, d.derivative_infty, d.analytic_derivative_infty, dtol, true));
    out.back().note = "printed coefficient " + to_string(d.printed_derivative_infty, 12);
    out.push_back(make_numeric_report("B_zero'(1)", p, 0, d.derivative_zero, d.analytic_derivative_zero, dtol, true));
    out.back().note = "printed coefficient " + to_string(d.printed_derivative_zero, 12);
    return out;
}

std::vector<VerificationReport> constant_term_checks(i64 p) {
    check_odd_prime(p);
    std::vector<VerificationReport> out;
    // v^{1/2}: sqrt(p) * sqrt(p) = p keeps the right side rational.
    const Rational sqrt_lhs = Rational(2, 3 * (p - 1)) + Rational(2, 3);
    const Rational sqrt_rhs = Rational(p, p * p - 1) * Rational(2, 3) * (p + 1);
    out.push_back(make_exact_report("constant_term_v_half", p, 0, sqrt_lhs, sqrt_rhs));
    // log(16 v): coefficients of 1/pi.
    const Rational log_lhs = Rational(2, p - 1) * Rational(-1, 4) - Rational(1, 2 * (p + 1));
    const Rational log_rhs = -Rational(p, p * p - 1);
    out.push_back(make_exact_report("constant_term_log16v", p, 0, log_lhs, log_rhs));
    // Constant 1.
    const Real P(p);
    const Real pi = const_pi();
    const Real g = const_euler();
    const Real base = g - const_log2() - zeta_log_derivative_at_2();
    const Real one_lhs = 2 / (pi * (P - 1)) * base + 2 / (pi * (P + 1)) * (base - P * P * bmp::log(P) / (P * P - 1));
    const Real one_rhs = frak_C(p) - P / (pi * (P * P - 1)) * (bmp::log(pi) - g);
    out.push_back(make_numeric_report("constant_term_one", p, 0, one_lhs, one_rhs, bmp::pow(Real(10), -12), false));
    return out;
}

Real frak_C_from_constant_term(i64 p) {
    check_odd_prime(p);
    const Real P(p);
    const Real pi = const_pi();
    const Real g = const_euler();
    const Real base = g - const_log2() - zeta_log_derivative_at_2();
    return 2 / (pi * (P - 1)) * base + 2 / (pi * (P + 1)) * (base - P * P * bmp::log(P) / (P * P - 1)) +
           P / (pi * (P * P - 1)) * (bmp::log(pi) - g);
}

Real square_trace_rhs(i64 p, i64 m) {
    check_odd_prime(p);
    if (m < 1) throw std::invalid_argument("square_trace_rhs: m must be positive");
    const Real P(p);
    const Real g = const_euler();
    const Real log2 = const_log2();
    const Real log_p = bmp::log(P);
    const Real first = (-5 * g - bmp::log(const_pi()) + 4 * zeta_log_derivative_at_2() + 4 * log2 -
                        6 * log_p / (P + 1) - 4 * t_frak(1, m)) /
                       (3 * (P - 1));
    const Real second = 2 / (P + 1) *
                        ((bmp::pow(Real(2), -valuation(m, 2)) - 1) * log2 +
                         (P + 1) / (P - 1) * bmp::pow(P, -valuation(m, p)) * log_p + bmp::log(Real(m)) -
                         t_frak(4 * p, m));
    return first + second;
}

Complex square_trace_unsimplified(i64 p, i64 m) {
    check_odd_prime(p);
    const Real P(p);
    const Real pi = const_pi();
    const Real n = Real(m) * Real(m);
    const Complex inner = Complex(2 / (P - 1) * b_square(m) + (const_euler() + bmp::log(pi * n)) / (pi * (P + 1)) -
                                  2 * frak_C(p)) +
                          coefficient_normalizer() * c_square(p, m);
    return pi * inner;
}

VerificationReport square_trace_consistency(i64 p, i64 m) {
    const Complex lhs = square_trace_unsimplified(p, m);
    const Complex rhs(square_trace_rhs(p, m));
    return make_numeric_report("square_trace_consistency", p, m * m, lhs, rhs, bmp::pow(Real(10), -10), true,
                               Real(1));
}

}  // namespace qtv
