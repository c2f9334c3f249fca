#include "qtv/characters.hpp"

#include "qtv/arith_core.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qtv {

bool is_fundamental_discriminant(i64 t) {
    if (t == 1) return true;
    if (t == 0) return false;
    if (mod(t, 4) == 1) return is_squarefree(t);
    if (mod(t, 4) == 0) {
        i64 k = t / 4;
        return (mod(k, 4) == 2 || mod(k, 4) == 3) && is_squarefree(k);
    }
    return false;
}

DiscSplit fundamental_decomposition(i64 n) {
    if (n == 0) throw std::invalid_argument("fundamental_decomposition: n must be nonzero");
    // Squarefree kernel first, then fix the 2-part so that t = 0, 1 mod 4.
    i64 core = n < 0 ? -1 : 1;
    i64 m = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent % 2) core *= pp.prime;
        m *= ipow(pp.prime, pp.exponent / 2);
    }
    if (mod(core, 4) != 1) {
        if (m % 2 != 0) throw std::invalid_argument("fundamental_decomposition: n is not a discriminant");
        core *= 4;
        m /= 2;
    }
    return {core, m, n};
}

int chi(i64 t, i64 k) { return kronecker(t, k); }

Rational L_at_0(i64 t) {
    if (t >= 0 || !is_fundamental_discriminant(t)) throw std::invalid_argument("L_at_0: t must be a negative fundamental discriminant");
    const i64 q = -t;
    i64 s = 0;
    for (i64 a = 1; a < q; ++a) s += chi(t, a) * a;
    return Rational(-s, q);
}

Real L_at_1(i64 t) {
    if (t == 1 || !is_fundamental_discriminant(t)) throw std::invalid_argument("L_at_1: t must be a fundamental discriminant != 1");
    const Real pi = const_pi();
    if (t > 0) {
        Real s(0);
        for (i64 a = 1; a < t; ++a) {
            int c = chi(t, a);
            if (c != 0) s += c * bmp::log(bmp::sin(pi * a / t));
        }
        return -s / bmp::sqrt(Real(t));
    }
    const i64 q = -t;
    i64 s = 0;
    for (i64 a = 1; a < q; ++a) s += chi(t, a) * a;
    return -pi * Real(s) / (Real(q) * bmp::sqrt(Real(q)));
}

Real euler_factor(i64 N, const Real& s, i64 t) {
    Real f(1);
    if (N == 1) return f;
    for (const auto& pp : factorize(N)) f *= 1 - chi(t, pp.prime) * bmp::pow(Real(pp.prime), -s);
    return f;
}

LValue L_incomplete(i64 N, const Real& s, i64 t) {
    if (N < 1) throw std::invalid_argument("L_incomplete: N must be positive");
    if (!is_fundamental_discriminant(t)) throw std::invalid_argument("L_incomplete: t must be fundamental");
    LValue out;
    out.error_bound = 0;
    if (s == -1 && t == 1) {
        Rational v(-1, 12);
        if (N > 1)
            for (const auto& pp : factorize(N)) v *= Rational(1 - pp.prime);
        out.exact = v;
        out.numeric = to_real(v);
        return out;
    }
    if (s == 0 && t < 0) {
        // Euler factors at s = 0 are the rationals 1 - chi(q).
        Rational v = L_at_0(t);
        if (N > 1)
            for (const auto& pp : factorize(N)) v *= Rational(1 - chi(t, pp.prime));
        out.exact = v;
        out.numeric = to_real(v);
        return out;
    }
    if (s == 1 && t != 1) {
        out.numeric = L_at_1(t) * euler_factor(N, s, t);
        out.error_bound = working_epsilon() * bmp::abs(out.numeric) * 100;
        return out;
    }
    if (s > 1) {
        if (t == 1) {
            out.numeric = zeta(s) * euler_factor(N, s, t);
            out.error_bound = working_epsilon() * bmp::abs(out.numeric) * 10;
            return out;
        }
        const i64 q = t < 0 ? -t : t;
        Real acc(0), err(0);
        for (i64 a = 1; a < q; ++a) {
            int c = chi(t, a);
            if (c == 0) continue;
            Real e;
            acc += c * hurwitz_zeta(s, Real(a) / q, &e);
            err += e;
        }
        Real scale = bmp::pow(Real(q), -s);
        Real ef = euler_factor(N, s, t);
        out.numeric = acc * scale * ef;
        out.error_bound = err * scale * bmp::abs(ef);
        return out;
    }
    throw std::invalid_argument("L_incomplete: unsupported (s, t) combination");
}

std::vector<Rational> bernoulli_even(int k) {
    static std::vector<Rational> all;  // B_0, B_1, B_2, ... (all indices)
    static std::mutex mu;
    std::vector<Rational> even;
    std::lock_guard<std::mutex> lock(mu);
    const int need = 2 * k;
    while (static_cast<int>(all.size()) <= need) {
        // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
        const int n = static_cast<int>(all.size());
        if (n == 0) {
            all.push_back(Rational(1));
            continue;
        }
        Rational s(0);
        BigInt binom = 1;  // C(n+1, 0)
        for (int j = 0; j < n; ++j) {
            s += Rational(binom) * all[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        all.push_back(-s / Rational(n + 1));
    }
    for (int j = 0; j <= need; j += 2) even.push_back(all[j]);
    return even;
}

namespace {

struct EMParams {
    int N;
    int M;
};

EMParams em_params() {
    const int d = static_cast<int>(working_digits());
    return {d + 20, d / 2 + 12};
}

}  // namespace

Real hurwitz_zeta(const Real& s, const Real& x, Real* error) {
    if (s <= 1 || x <= 0) throw std::invalid_argument("hurwitz_zeta: need s > 1 and x > 0");
    const auto [N, M] = em_params();
    const auto B = bernoulli_even(M + 1);
    Real sum(0);
    for (int k = 0; k < N; ++k) sum += bmp::pow(k + x, -s);
    const Real y = N + x;
    const Real ys = bmp::pow(y, -s);
    sum += y * ys / (s - 1) + ys / 2;
    // Rising factorial s (s+1) ... (s+2j-2) / (2j)! times y^{-s-2j+1}.
    Real poly = s;
    Real fact(2);
    Real ypow = ys / y;
    Real last(0);
    for (int j = 1; j <= M + 1; ++j) {
        Real term = to_real(B[j]) / fact * poly * ypow;
        if (j == M + 1) {
            last = bmp::abs(term);
            break;
        }
        sum += term;
        poly *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= Real(2 * j + 1) * Real(2 * j + 2);
        ypow /= y * y;
    }
    if (error) *error = last * 2;
    return sum;
}

Real hurwitz_zeta_ds(const Real& s, const Real& x, Real* error) {
    if (s <= 1 || x <= 0) throw std::invalid_argument("hurwitz_zeta_ds: need s > 1 and x > 0");
    const auto [N, M] = em_params();
    const auto B = bernoulli_even(M + 1);
    Real sum(0);
    for (int k = 0; k < N; ++k) {
        Real base = k + x;
        sum -= bmp::log(base) * bmp::pow(base, -s);
    }
    const Real y = N + x;
    const Real ly = bmp::log(y);
    const Real ys = bmp::pow(y, -s);
    const Real sm1 = s - 1;
    sum += -ly * y * ys / sm1 - y * ys / (sm1 * sm1) - ly * ys / 2;
    Real poly = s;
    Real dlogpoly = 1 / s;  // derivative of log(poly)
    Real fact(2);
    Real ypow = ys / y;
    Real last(0);
    for (int j = 1; j <= M + 1; ++j) {
        Real coeff = to_real(B[j]) / fact;
        Real term = coeff * poly * ypow * (dlogpoly - ly);
        if (j == M + 1) {
            last = bmp::abs(term);
            break;
        }
        sum += term;
        poly *= (s + 2 * j - 1) * (s + 2 * j);
        dlogpoly += 1 / (s + 2 * j - 1) + 1 / (s + 2 * j);
        fact *= Real(2 * j + 1) * Real(2 * j + 2);
        ypow /= y * y;
    }
    if (error) *error = last * 2;
    return sum;
}

Real zeta(const Real& s) {
    if (s == 1) throw std::invalid_argument("zeta: pole at s = 1");
    Real r;
    mpfr_zeta(r.backend().data(), s.backend().data(), MPFR_RNDN);
    return r;
}

Real zeta_star(const Real& s) {
    if (s == 0 || s == 1) throw std::invalid_argument("zeta_star: poles at s = 0, 1");
    Real half = s / 2;
    Real g;
    mpfr_gamma(g.backend().data(), half.backend().data(), MPFR_RNDN);
    return g * zeta(s) / bmp::pow(const_pi(), half);
}

Real zeta_log_derivative_at_2() {
    static std::map<unsigned, Real> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(working_digits());
        if (it != cache.end()) return it->second;
    }
    const Real two(2);
    Real v = hurwitz_zeta_ds(two, Real(1)) / hurwitz_zeta(two, Real(1));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(working_digits(), v);
    return v;
}

Real zeta_laurent_constant_at_1() { return const_euler(); }

namespace {

template <typename Acc, typename Pow>
void sigma_loop(i64 l, i64 N, i64 r, Acc& acc, Pow pw) {
    if (l < 1 || N < 1 || N % l != 0) throw std::invalid_argument("sigma_lns: need l | N");
    if (r < 1) throw std::invalid_argument("sigma_lns: r must be positive");
    const i64 cofactor = N / l;
    for (i64 d : divisors(r)) {
        if (gcd(d, l) != 1 || gcd(r / d, cofactor) != 1) continue;
        acc += pw(d);
    }
}

}  // namespace

Rational sigma_lns(i64 l, i64 N, i64 s, i64 r) {
    Rational acc(0);
    sigma_loop(l, N, r, acc, [s](i64 d) {
        BigInt base(d);
        if (s >= 0) return Rational(bmp::pow(base, static_cast<unsigned>(s)));
        return Rational(BigInt(1), bmp::pow(base, static_cast<unsigned>(-s)));
    });
    return acc;
}

Real sigma_lns_real(i64 l, i64 N, const Real& s, i64 r) {
    Real acc(0);
    sigma_loop(l, N, r, acc, [&s](i64 d) { return bmp::pow(Real(d), s); });
    return acc;
}

}  // namespace qtv
