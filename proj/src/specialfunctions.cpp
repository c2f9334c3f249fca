#include "qtv/specialfunctions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtv {

namespace {

constexpr int kSeriesLimit = 4;
constexpr unsigned kGuardDigits = 20;

// sum_{n>=0} 2^n w^{2n+1} / (2n+1)!!, all terms positive.
Real erf_kernel_series(const Real& w) {
    const Real w2 = w * w;
    Real term = w;
    Real sum = w;
    const Real eps = working_epsilon();
    for (long n = 1; n < 100000; ++n) {
        term *= 2 * w2 / (2 * n + 1);
        sum += term;
        if (term < eps * sum) break;
    }
    return sum;
}

Real two_over_sqrt_pi() { return 2 / bmp::sqrt(const_pi()); }

}  // namespace

Real erfc_series(const Real& w) {
    if (w < 0) return 2 - erfc_series(-w);
    Real out;
    {
        PrecisionGuard guard(working_digits() + kGuardDigits);
        const Real W(w, working_digits());
        out = 1 - two_over_sqrt_pi() * bmp::exp(-W * W) * erf_kernel_series(W);
    }
    return Real(out);
}

Real erfc_scaled_continued_fraction(const Real& w) {
    if (w <= 0) throw std::domain_error("continued fraction needs w > 0");
    // f = w + (1/2)/(w + 1/(w + (3/2)/(w + ...))), erfcx = 1/(sqrt(pi) f).
    const Real tiny = bmp::pow(Real(10), -static_cast<int>(2 * working_digits()));
    const Real eps = working_epsilon();
    Real f = w;
    Real C = f;
    Real D = 0;
    for (long k = 1; k < 1000000; ++k) {
        const Real a = Real(k) / 2;
        D = w + a * D;
        if (bmp::abs(D) < tiny) D = tiny;
        C = w + a / C;
        if (bmp::abs(C) < tiny) C = tiny;
        D = 1 / D;
        const Real delta = C * D;
        f *= delta;
        if (bmp::abs(delta - 1) < eps) break;
    }
    return 1 / (bmp::sqrt(const_pi()) * f);
}

Real erfc_scaled(const Real& w) {
    if (w < 0) throw std::domain_error("erfc_scaled needs w >= 0");
    if (w >= kSeriesLimit) return erfc_scaled_continued_fraction(w);
    Real out;
    {
        PrecisionGuard guard(working_digits() + kGuardDigits);
        const Real W(w, working_digits());
        const Real e = bmp::exp(W * W);
        out = e - two_over_sqrt_pi() * erf_kernel_series(W);
    }
    return Real(out);
}

Real erfc(const Real& w) {
    if (w < 0) return 2 - erfc(-w);
    if (w < kSeriesLimit) return erfc_series(w);
    return bmp::exp(-w * w) * erfc_scaled_continued_fraction(w);
}

Real inc_gamma_half(const Real& x) {
    if (x <= 0) throw std::domain_error("inc_gamma_half needs x > 0");
    return bmp::sqrt(const_pi()) * erfc(bmp::sqrt(x));
}

QuadratureResult alpha(const Real& y, QuadratureScheme scheme, const Real& tol) {
    if (y <= 0) throw std::domain_error("alpha needs y > 0");
    const Real pi = const_pi();
    const Real piy = pi * y;
    const Real root = bmp::sqrt(y);
    // Beyond T >= 5 the factor log(t+1)/sqrt(t) is decreasing, so the tail is
    // at most log(T+1)/sqrt(T) e^{-pi y T}/(pi y).
    auto tail = [&](const Real& T) { return root * bmp::log(T + 1) / bmp::sqrt(T) * bmp::exp(-piy * T) / piy; };
    Real T = std::max<Real>(Real(5), (bmp::log(1 / tol) + 10) / piy);
    while (tail(T) > tol / 10) T *= 2;

    QuadratureResult head;
    QuadratureResult body;
    if (scheme == QuadratureScheme::gauss_adaptive) {
        head = integrate_gauss_adaptive(
            [&](const Real& u) { return 2 * bmp::log1p(u * u) * bmp::exp(-piy * u * u); }, Real(0), Real(1), tol / 4);
        body = integrate_gauss_adaptive(
            [&](const Real& t) { return bmp::log1p(t) / bmp::sqrt(t) * bmp::exp(-piy * t); }, Real(1), T, tol / 4);
    } else {
        auto g = [&](const Real& t) {
            if (t <= 0) return Real(0);
            return bmp::log1p(t) / bmp::sqrt(t) * bmp::exp(-piy * t);
        };
        head = integrate_tanh_sinh(g, Real(0), Real(1), tol / 4);
        body = integrate_tanh_sinh(g, Real(1), T, tol / 4);
        if (!body.converged) {
            // Long intervals: split into unit panels.
            body = QuadratureResult{Real(0), Real(0), 0, true};
            for (Real a(1); a < T; a += 1) {
                const QuadratureResult part = integrate_tanh_sinh(g, a, std::min<Real>(a + 1, T), tol / (4 * T));
                body.value += part.value;
                body.error_bound += part.error_bound;
                body.evaluations += part.evaluations;
                body.converged = body.converged && part.converged;
            }
        }
    }
    QuadratureResult out;
    out.value = root * (head.value + body.value);
    out.error_bound = root * (head.error_bound + body.error_bound) + tail(T) + working_epsilon() * bmp::abs(out.value);
    out.evaluations = head.evaluations + body.evaluations;
    out.converged = head.converged && body.converged;
    return out;
}

QuadratureResult F_bfi(const Real& t, const Real& tol) {
    if (t <= 0) throw std::domain_error("F_bfi needs t > 0");
    const QuadratureResult I = integrate_gauss_adaptive([](const Real& w) { return erfc_scaled(w); }, Real(0), t, tol / 2);
    const Real rpi = bmp::sqrt(const_pi());
    QuadratureResult out;
    out.value = bmp::log(t) - rpi * I.value + const_log2() + const_euler() / 2;
    out.error_bound = rpi * I.error_bound + 10 * working_epsilon() * (1 + bmp::abs(bmp::log(t)));
    out.evaluations = I.evaluations;
    out.converged = I.converged;
    return out;
}

Real digamma_in_scope(const Real& x) {
    if (x == 0 || x == 1) return -const_euler();
    throw std::domain_error("digamma is only provided at 0 (by convention) and 1");
}

SpecialRelationSweep special_relation_sweep() {
    SpecialRelationSweep out;
    out.worst = 0;
    const Real pi = const_pi();
    for (int N : {1, 3, 5})
        for (const char* vs : {"0.3", "0.5", "1", "2"})
            for (int m : {1, 2, 3}) {
                const Real v = real_from_string(vs);
                const QuadratureResult f = F_bfi(2 * bmp::sqrt(pi * N * v) * m);
                const QuadratureResult a = alpha(4 * N * m * m * v);
                out.worst = std::max<Real>(out.worst, bmp::abs(-2 * f.value - a.value));
                out.all_converged = out.all_converged && f.converged && a.converged;
                ++out.points;
            }
    return out;
}

}  // namespace qtv
