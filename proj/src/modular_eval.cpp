#include "qtv/modular_eval.hpp"

#include "qtv/arith_core.hpp"
#include "qtv/characters.hpp"
#include "qtv/classnumbers.hpp"
#include "qtv/coefficients.hpp"
#include "qtv/kloosterman.hpp"
#include "qtv/specialfunctions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qtv {

namespace {

void require_upper_half_plane(const Complex& tau) {
    if (tau.im <= 0) throw std::domain_error("series evaluation needs Im tau > 0");
}

bool is_discriminant(i64 n) {
    const i64 r = ((n % 4) + 4) % 4;
    return r == 0 || r == 1;
}

// sum_{n > N} env(n) r^n in long double, run until the terms are negligible
// and decreasing, then closed by a geometric bound on the remainder.
Real envelope_tail(const std::function<long double(long double)>& env, long double r, i64 N) {
    long double sum = 0;
    long double prev = 0;
    long double rn = std::pow(r, static_cast<long double>(N + 1));
    for (i64 n = N + 1; n < N + 10000000; ++n) {
        const long double term = env(static_cast<long double>(n)) * rn;
        sum += term;
        if (n > N + 1 && term < prev && term < 1e-60L * (1 + sum)) {
            const long double ratio = term / prev;
            sum += term * ratio / (1 - ratio);
            break;
        }
        prev = term;
        rn *= r;
        if (rn == 0) break;
    }
    return Real(static_cast<double>(2 * sum));
}

long double log_envelope(long double n, long double scale) {
    const long double l = 1 + std::log(n);
    return scale * l * l;
}

// Gamma(1/2, 4 pi n v) e^{2 pi n v}, without overflow.
Real scaled_gamma_half(i64 n, const Real& v) {
    const Real x = 4 * const_pi() * n * v;
    return bmp::sqrt(const_pi()) * bmp::exp(-x / 2) * erfc_scaled(bmp::sqrt(x));
}

// Gamma(-1/2, x) e^{x/2} = 2 (x^{-1/2} - sqrt(pi) erfcx(sqrt x)) e^{-x/2}.
Real scaled_gamma_minus_half(const Real& x) {
    return 2 * (1 / bmp::sqrt(x) - bmp::sqrt(const_pi()) * erfc_scaled(bmp::sqrt(x))) * bmp::exp(-x / 2);
}

// q^n for n = 0..N by repeated multiplication.
std::vector<Complex> q_powers(const Complex& q, i64 N) {
    std::vector<Complex> out(static_cast<size_t>(N + 1));
    out[0] = Complex(Real(1));
    for (i64 n = 1; n <= N; ++n) out[static_cast<size_t>(n)] = out[static_cast<size_t>(n - 1)] * q;
    return out;
}

long double abs_q(const Complex& tau) { return std::exp(-2.0L * 3.14159265358979323846L * tau.im.convert_to<long double>()); }

}  // namespace

Complex mobius(const Mat2& g, const Complex& tau) {
    return (Complex(Real(g.a)) * tau + Complex(Real(g.b))) / (Complex(Real(g.c)) * tau + Complex(Real(g.d)));
}

Complex slash_half(const Complex& f_at_gamma_tau, const Mat2& g, int twice_k, const Complex& tau) {
    if (g.c % 4 != 0) throw std::invalid_argument("slash_half: gamma must lie in Gamma_0(4)");
    if (twice_k % 2 == 0) throw std::invalid_argument("slash_half: weight must be a half-integer");
    if (g.det() != 1) throw std::invalid_argument("slash_half: determinant must be 1");
    const int chi = kronecker(g.c, g.d);
    const Complex eps = ((g.d % 4) + 4) % 4 == 1 ? Complex(Real(1)) : i_pow(twice_k);
    const Complex j = Complex(Real(g.c)) * tau + Complex(Real(g.d));
    const Complex power = exp(Complex(Real(-twice_k) / 2) * log(j));
    return Complex(Real(chi)) * eps * power * f_at_gamma_tau;
}

SeriesEvaluation eval_theta(const Complex& tau, i64 cutoff) {
    require_upper_half_plane(tau);
    const Complex q = expi2pi(tau.re) * Complex(bmp::exp(-2 * const_pi() * tau.im));
    SeriesEvaluation out;
    out.tau = tau;
    out.cutoff = cutoff;
    Complex sum(Real(1));
    // q^{n^2} via q^{(n+1)^2} = q^{n^2} q^{2n+1}.
    Complex qn2(Real(1));
    Complex step = q;
    const Complex q2 = q * q;
    for (i64 n = 1; n <= cutoff; ++n) {
        qn2 = qn2 * step;
        step = step * q2;
        sum += Complex(Real(2)) * qn2;
    }
    out.value = sum;
    const Real r = bmp::exp(-2 * const_pi() * tau.im);
    const Real M(cutoff + 1);
    out.tail_bound = 2 * bmp::pow(r, M * M) / (1 - bmp::pow(r, 2 * M + 1));
    return out;
}

SeriesEvaluation eval_H_zagier(const Complex& tau, i64 cutoff) {
    require_upper_half_plane(tau);
    const Real pi = const_pi();
    const Real v = tau.im;
    const Complex q = expi2pi(tau.re) * Complex(bmp::exp(-2 * pi * v));
    const std::vector<Complex> qp = q_powers(q, cutoff);
    Complex sum(Real(-1) / 12 + 1 / (8 * pi * bmp::sqrt(v)));
    for (i64 n = 3; n <= cutoff; ++n) {
        const i64 r = n % 4;
        if (r != 0 && r != 3) continue;
        sum += Complex(to_real(hurwitz_H_forms(n))) * qp[static_cast<size_t>(n)];
    }
    // Nonholomorphic part: e^{-2 pi i n^2 u} Gamma(-1/2, x) e^{2 pi n^2 v}.
    i64 M = 0;
    const Real coeff = 1 / (4 * bmp::sqrt(pi));
    for (i64 n = 1; n * n <= cutoff; ++n) {
        const Real x = 4 * pi * n * n * v;
        sum += Complex(coeff * n * scaled_gamma_minus_half(x)) * expi2pi(-Real(n * n) * tau.re);
        M = n;
    }
    SeriesEvaluation out;
    out.tau = tau;
    out.cutoff = cutoff;
    out.value = sum;
    const long double r = abs_q(tau);
    // H(n) <= sqrt(n) (1 + log n); n Gamma(-1/2, x) e^{x/2} <= n x^{-3/2} e^{-x/2}.
    out.tail_bound = envelope_tail([](long double n) { return std::sqrt(n) * (1 + std::log(n)); }, r, cutoff);
    const long double vv = v.convert_to<long double>();
    long double nonhol = 0;
    for (i64 n = M + 1; n < M + 200; ++n) {
        const long double x = 4 * 3.14159265358979323846L * n * n * vv;
        const long double term = n * std::pow(x, -1.5L) * std::exp(-x / 2);
        nonhol += term;
        if (term < 1e-70L) break;
    }
    out.tail_bound += Real(static_cast<double>(2 * nonhol / (4 * std::sqrt(3.14159265358979323846L))));
    return out;
}

SeriesEvaluation eval_cohen_eisenstein(i64 l, i64 N, const Complex& tau, i64 cutoff) {
    require_upper_half_plane(tau);
    const Complex q = expi2pi(tau.re) * Complex(bmp::exp(-2 * const_pi() * tau.im));
    const std::vector<Complex> qp = q_powers(q, cutoff);
    Complex sum;
    for (i64 n = 0; n <= cutoff; ++n) {
        const i64 r = n % 4;
        if (r != 0 && r != 3) continue;
        sum += Complex(to_real(gen_hurwitz(l, N, n))) * qp[static_cast<size_t>(n)];
    }
    SeriesEvaluation out;
    out.tau = tau;
    out.cutoff = cutoff;
    out.value = sum;
    // |H_{l,N}(n)| <= 4 N sqrt(n) (1 + log n).
    const long double NN = static_cast<long double>(N);
    out.tail_bound = envelope_tail([NN](long double n) { return 4 * NN * std::sqrt(n) * (1 + std::log(n)); },
                                   abs_q(tau), cutoff);
    return out;
}

SeriesEvaluation eval_E(const Complex& tau, i64 cutoff, NegativeIndexMode mode, const Real& weight) {
    require_upper_half_plane(tau);
    const Real pi = const_pi();
    const Real v = tau.im;
    const Complex q = expi2pi(tau.re) * Complex(bmp::exp(-2 * pi * v));
    const std::vector<Complex> qp = q_powers(q, cutoff);
    Complex sum(bmp::sqrt(v) / 3 - bmp::log(v) / (4 * pi) -
                (2 * const_log2() - const_euler() - zeta_log_derivative_at_2()) / pi);
    for (i64 d = 1; d <= cutoff; ++d) {
        if (!is_discriminant(d)) continue;
        if (is_nonsquare_discriminant(d)) {
            sum += Complex(h_star(d) / bmp::sqrt(Real(d))) * qp[static_cast<size_t>(d)];
        }
    }
    for (i64 m = 1; m * m <= cutoff; ++m) {
        const Real y = 4 * Real(m * m) * v;
        sum += Complex(b_square(m) + alpha(y).value / (2 * pi)) * qp[static_cast<size_t>(m * m)];
    }
    SeriesEvaluation out;
    out.tau = tau;
    out.cutoff = cutoff;
    if (mode == NegativeIndexMode::hurwitz_weighted) {
        for (i64 n = 3; n <= cutoff; ++n) {
            if (n % 4 != 0 && n % 4 != 3) continue;
            const Real hs = weight * to_real(hurwitz_H_forms(n)) / bmp::sqrt(Real(n));
            sum += Complex(2 * bmp::sqrt(v) * hs * scaled_gamma_half(n, v)) * expi2pi(-Real(n) * tau.re);
        }
        out.note = "negative-index term: H(|d|)/sqrt|d| weighted by " + to_string(weight, 10);
    } else {
        out.note = "negative-index term omitted: h*(d) undefined for d < 0";
    }
    out.value = sum;
    out.tail_bound = envelope_tail([](long double n) { return log_envelope(n, 4); }, abs_q(tau), cutoff);
    return out;
}

SeriesEvaluation eval_G(i64 p, const Complex& tau, i64 cutoff) {
    require_upper_half_plane(tau);
    const Real pi = const_pi();
    const Real v = tau.im;
    const Real P(p);
    const Complex q = expi2pi(tau.re) * Complex(bmp::exp(-2 * pi * v));
    const std::vector<Complex> qp = q_powers(q, cutoff);
    const Complex norm = Complex(Real(2), Real(-2)) * (pi / 3);  // (2/3)(1-i) pi
    Complex sum(2 * bmp::sqrt(v) / 3 - bmp::log(16 * v) / (2 * pi * (P + 1)));
    sum += norm * c_zero(p);
    for (i64 m = 1; m * m <= cutoff; ++m) {
        const Real mm(m * m);
        const Real y = 4 * mm * v;
        const Complex coeff = Complex((const_euler() + bmp::log(pi * mm) + alpha(y).value) / (pi * (P + 1))) +
                              norm * c_square(p, m);
        sum += coeff * qp[static_cast<size_t>(m * m)];
    }
    for (i64 n = 1; n <= cutoff; ++n) {
        if (!is_nonsquare_discriminant(n)) continue;
        sum += norm * plus_value_at_32(p, n) * qp[static_cast<size_t>(n)];
    }
    // (2/3)(1-i) sqrt(pi) c(n) Gamma(1/2, 4 pi |n| v) q^n for n < 0.
    const Complex norm_neg = norm / bmp::sqrt(pi);
    for (i64 n = 3; n <= cutoff; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        sum += norm_neg * c_negative(p, -n) * Complex(scaled_gamma_half(n, v)) * expi2pi(-Real(n) * tau.re);
    }
    SeriesEvaluation out;
    out.tau = tau;
    out.cutoff = cutoff;
    out.value = sum;
    out.tail_bound = envelope_tail([](long double n) { return log_envelope(n, 10); }, abs_q(tau), cutoff);
    return out;
}

ResidualResult modularity_residual(const SeriesFunction& f, const Mat2& g, int twice_k, const Complex& tau) {
    const Complex image = mobius(g, tau);
    const SeriesEvaluation at_image = f(image);
    const SeriesEvaluation at_tau = f(tau);
    ResidualResult out;
    out.residual = abs(slash_half(at_image.value, g, twice_k, tau) - at_tau.value);
    const Real j = abs(Complex(Real(g.c)) * tau + Complex(Real(g.d)));
    out.tail_bounds = at_tau.tail_bound + bmp::pow(j, Real(-twice_k) / 2) * at_image.tail_bound;
    out.image_height = image.im;
    return out;
}

i64 cutoff_for_height(const Real& v, const Real& target, double envelope_exponent) {
    const long double r = std::exp(-2.0L * 3.14159265358979323846L * v.convert_to<long double>());
    const long double t = target.convert_to<long double>();
    auto env = [envelope_exponent](long double n) {
        const long double l = 1 + std::log(n);
        return std::pow(n, static_cast<long double>(envelope_exponent)) * l * l;
    };
    i64 N = 16;
    while (envelope_tail(env, r, N).convert_to<long double>() > t) N = N + N / 4;
    return N;
}

}  // namespace qtv
