#include "qtv/kloosterman.hpp"

#include "qtv/arith_core.hpp"
#include "qtv/characters.hpp"
#include "qtv/coefficients.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qtv {

int kronecker_four(i64 c) {
    if (c <= 0) throw std::invalid_argument("kronecker_four: c must be positive");
    return kronecker(4, c);
}

namespace {

void check_plus_args(i64 level, i64 c, int twice_k) {
    if (level < 1 || c < 1) throw std::invalid_argument("plus_term: level and c must be positive");
    if (twice_k % 2 == 0) throw std::invalid_argument("plus_term: weight must be a half-integer");
}

}  // namespace

Complex plus_term(i64 level, i64 n, i64 c, int twice_k) {
    check_plus_args(level, c, twice_k);
    const i64 modulus = 4 * level * c;
    const Complex eps3 = i_pow(twice_k);
    const Real inv_mod = Real(1) / Real(modulus);
    Complex sum;
    for (i64 r = 1; r < modulus; r += 2) {
        if (gcd(r, modulus) != 1) continue;
        const int k = kronecker(modulus, r);
        if (k == 0) continue;
        Complex term = expi2pi(Real(mod(n * r, modulus)) * inv_mod);
        if (r % 4 == 3) term *= eps3;
        if (k > 0) sum += term;
        else sum -= term;
    }
    return Real(1 + kronecker_four(c)) * sum;
}

namespace {

// r -> (C / r) on odd r for a fixed modulus C, by quadratic reciprocity over
// the prime factors of C with Legendre-symbol tables; zero unless gcd(r,C) = 1.
class TopKronecker {
public:
    explicit TopKronecker(i64 modulus) {
        for (const PrimePower& pp : factorize(modulus)) {
            if (pp.prime == 2) {
                two_odd_ = pp.exponent % 2 == 1;
                continue;
            }
            Factor f;
            f.q = pp.prime;
            f.odd_exponent = pp.exponent % 2 == 1;
            if (f.odd_exponent) {
                f.legendre.assign(static_cast<std::size_t>(f.q), -1);
                f.legendre[0] = 0;
                for (i64 x = 1; x < f.q; ++x) f.legendre[static_cast<std::size_t>((x * x) % f.q)] = 1;
            }
            factors_.push_back(std::move(f));
        }
    }

    int operator()(i64 r) const {
        if (r % 2 == 0) return 0;
        int value = 1;
        if (two_odd_ && (r % 8 == 3 || r % 8 == 5)) value = -value;
        const bool r_three = r % 4 == 3;
        for (const Factor& f : factors_) {
            const i64 res = r % f.q;
            if (res == 0) return 0;
            if (!f.odd_exponent) continue;
            value *= f.legendre[static_cast<std::size_t>(res)];
            if (r_three && f.q % 4 == 3) value = -value;
        }
        return value;
    }

private:
    struct Factor {
        i64 q = 0;
        bool odd_exponent = false;
        std::vector<int> legendre;
    };
    bool two_odd_ = false;
    std::vector<Factor> factors_;
};

}  // namespace

std::complex<double> plus_term_fast(i64 level, i64 n, i64 c, int twice_k) {
    check_plus_args(level, c, twice_k);
    const i64 modulus = 4 * level * c;
    const TopKronecker top(modulus);
    // i^{2k} for r = 3 mod 4
    const int rot = ((twice_k % 4) + 4) % 4;
    const std::complex<double> eps3 = rot == 1 ? std::complex<double>(0, 1) : std::complex<double>(0, -1);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(modulus);
    const i64 n_red = mod(n, modulus);
    std::complex<double> sum(0, 0);
    i64 phase = n_red;  // n r mod modulus, advanced by 2n per step
    const i64 phase_step = (2 * n_red) % modulus;
    for (i64 r = 1; r < modulus; r += 2) {
        const int k = top(r);
        if (k != 0) {
            std::complex<double> term = std::polar(1.0, step * static_cast<double>(phase));
            if (r % 4 == 3) term *= eps3;
            sum += static_cast<double>(k) * term;
        }
        phase += phase_step;
        if (phase >= modulus) phase -= modulus;
    }
    return static_cast<double>(1 + kronecker_four(c)) * sum;
}

KloostermanValue plus_zeta_truncated(i64 level, i64 n, double s, i64 cutoff, int twice_k) {
    KloostermanValue out;
    out.cutoff = cutoff;
    out.tail_bound = Real(0);
    if (cutoff <= 0) return out;
    std::vector<double> magnitude(static_cast<std::size_t>(cutoff) + 1, 0.0);
    std::complex<double> total(0, 0);
    for (i64 c = 1; c <= cutoff; ++c) {
        const std::complex<double> term =
            plus_term_fast(level, n, c, twice_k) / std::pow(static_cast<double>(4 * level * c), s);
        magnitude[static_cast<std::size_t>(c)] = std::abs(term);
        total += term;
    }
    out.value = Complex(Real(total.real()), Real(total.imag()));

    // Calibrate |term_c| <= A c^{1/2 - s} on the second half of the range.
    double amp = 0;
    double early = 0;
    double late = 0;
    for (i64 c = 1; c <= cutoff; ++c) {
        const double m = magnitude[static_cast<std::size_t>(c)];
        if (2 * c > cutoff) amp = std::max(amp, m * std::pow(static_cast<double>(c), s - 0.5));
        if (4 * c > cutoff && 2 * c <= cutoff) early = std::max(early, m);
        if (4 * c > 3 * cutoff) late = std::max(late, m);
    }
    out.decaying = cutoff < 8 || late <= early;
    if (s > 1.5) {
        const double tail = 2.0 * amp * std::pow(static_cast<double>(cutoff), 1.5 - s) / (s - 1.5);
        // Double-precision rounding of the accumulated sum.
        out.tail_bound = Real(tail + 1e-15 * static_cast<double>(cutoff) * std::abs(total));
    } else {
        out.tail_bound = Real(std::numeric_limits<double>::infinity());
        out.decaying = false;
    }
    return out;
}

std::complex<double> plus_zeta_bad_part(i64 level, i64 n, double s, i64 modulus_limit) {
    if (!is_prime(level) || level == 2) throw std::invalid_argument("plus_zeta_bad_part: level must be an odd prime");
    std::complex<double> total(0, 0);
    for (i64 two = 1; 4 * level * two <= modulus_limit; two *= 2) {
        for (i64 c = two; 4 * level * c <= modulus_limit; c *= level) {
            total += plus_term_fast(level, n, c) / std::pow(static_cast<double>(4 * level * c), s);
        }
    }
    return total;
}

Real plus_zeta_coprime_part(i64 p, i64 n, const Real& s) {
    if (is_square(n)) throw std::invalid_argument("plus_zeta_coprime_part: n must not be a square");
    const DiscSplit split = fundamental_decomposition(n);
    const Real num = L_incomplete(4 * p, s - Real(0.5), split.t).numeric;
    const Real den = L_incomplete(4 * p, 2 * s - 1, 1).numeric;
    return num / den * T_sum(4 * p, Real(1.5) - s, split.t, split.m);
}

Complex local_sum_2_zero(int j) {
    if (j < 1) throw std::invalid_argument("local_sum_2_zero: j >= 1");
    if (j == 1) return Complex(Real(1));
    if (j % 2 == 1) return Complex();
    const Real scale = to_real(BigInt(1) << (j - 2));
    return Complex(scale, scale);
}

Complex local_sum_p_zero(i64 p, int j) {
    if (j < 1) throw std::invalid_argument("local_sum_p_zero: j >= 1");
    if (j % 2 == 1) return Complex();
    const BigInt pj = bmp::pow(BigInt(p), static_cast<unsigned>(j));
    return Complex(to_real(BigInt(pj - pj / p)));
}

Complex local_sum_2_zero_direct(int j) {
    if (j < 1 || j > 30) throw std::invalid_argument("local_sum_2_zero_direct: 1 <= j <= 30");
    const i64 modulus = i64{1} << j;
    i64 re = 0;
    i64 im = 0;
    for (i64 r = 1; r < modulus; r += 2) {
        const int k = kronecker(modulus, r);
        if (r % 4 == 1) re += k;
        else im += k;
    }
    return Complex(Real(re), Real(im));
}

Complex local_sum_p_zero_direct(i64 p, int j) {
    if (j < 1) throw std::invalid_argument("local_sum_p_zero_direct: j >= 1");
    const i64 modulus = ipow(p, j);
    i64 sum = 0;
    for (i64 r = 1; r <= modulus; ++r) sum += kronecker(r, modulus);
    // eps_{p^j}^{-1}: 1 or -i
    if (mod(modulus, 4) == 1) return Complex(Real(sum));
    return Complex(Real(0), Real(-sum));
}

Complex local_series_2_zero(const Real& s, int j_max) {
    Complex total;
    for (int j = 2; j <= j_max; j += 2) {
        total += local_sum_2_zero(j) * bmp::pow(Real(2), -2 * j * s);
    }
    return total;
}

Complex local_series_p_zero(i64 p, const Real& s, int j_max) {
    Complex total;
    for (int j = 2; j <= j_max; j += 2) {
        total += local_sum_p_zero(p, j) * bmp::pow(Real(p), -2 * j * s);
    }
    return total;
}

Complex local_series_2_square(i64 m, const Real& s) {
    if (m < 1) throw std::invalid_argument("local_series_2_square: m >= 1");
    const int v = valuation(m, 2);
    const Real a = 2 * s - Real(0.5);
    const Real two(2);
    const Real pre = bmp::pow(two, -(2 * v + 2) * a) / (bmp::pow(two, 4 * s - 1) - 2) / bmp::pow(two, 2 * s + Real(0.5));
    const Real bracket = bmp::pow(two, v + 1) * (bmp::pow(two, a) - 2) * (bmp::pow(two, a) + 1) +
                         bmp::pow(two, (2 * v + 3) * a);
    const Real r = pre * bracket;
    return Complex(r, r);
}

Real local_series_p_square(i64 p, i64 m, const Real& s) {
    if (m < 1) throw std::invalid_argument("local_series_p_square: m >= 1");
    const int v = valuation(m, p);
    const Real P(p);
    const Real a = 2 * s - Real(0.5);
    const Real x = bmp::pow(P, 4 * s - 1);
    const Real base = bmp::pow(P, v - 2 * v * a);
    const Real inner = -base * x + base * (x - bmp::pow(P, Real(1.5) - 2 * s) + bmp::pow(P, a) - P + 1) + x - 1;
    return Real(-1) + inner / (x - P);
}

Complex local_moment_2_zero(int j_max) {
    Complex total;
    for (int j = 2; j <= j_max; ++j) {
        total += local_sum_2_zero(j) * (Real(j) * bmp::pow(Real(2), Real(-3 * j) / 2));
    }
    return total;
}

Complex local_moment_p_zero(i64 p, int j_max) {
    Complex total;
    for (int j = 1; j <= j_max; ++j) {
        total += local_sum_p_zero(p, j) * (Real(j) * bmp::pow(Real(p), Real(-3 * j) / 2));
    }
    return total;
}

Complex plus_value_at_32(i64 p, i64 n) {
    if (n >= 0 && is_square(n)) throw std::invalid_argument("plus_value_at_32: n must not be a square");
    if (mod(n, 4) != 0 && mod(n, 4) != 1) throw std::invalid_argument("plus_value_at_32: n must be 0 or 1 mod 4");
    const DiscSplit split = fundamental_decomposition(n);
    const Real l1 = L_at_1(split.t) * euler_factor(4 * p, Real(1), split.t);
    const Real l2 = L_incomplete(4 * p, Real(2), 1).numeric;
    const Real tsum = to_real(T_sum_exact(4 * p, 0, split.t, split.m));
    const Real scale = l1 / l2 * tsum * Real(3) / 8 * to_real(local_A2_tilde(n) * local_Ap(p, n));
    return Complex(scale, scale);
}

namespace {

void check_kzeta_args(i64 p, const Real& s) {
    if (!is_prime(p)) throw std::invalid_argument("kzeta0: p must be prime");
    if (s <= 1) throw std::invalid_argument("kzeta0: requires s > 1 (pole at s = 1)");
}

}  // namespace

Real kzeta0_closed(i64 p, const Real& s) {
    check_kzeta_args(p, s);
    const Real p2s = bmp::pow(Real(p), 2 * s);
    return zeta(2 * s - 1) / zeta(2 * s) * Real(p - 1) / (p2s - 1);
}

Real kzeta0_tilde_closed(i64 p, const Real& s) {
    check_kzeta_args(p, s);
    const Real p2s = bmp::pow(Real(p), 2 * s);
    return zeta(2 * s - 1) / zeta(2 * s) * (p2s - p) / (p2s - 1);
}

TruncatedSeries kzeta0_truncated(i64 p, const Real& s, i64 cutoff) {
    check_kzeta_args(p, s);
    if (cutoff < 1) throw std::invalid_argument("kzeta0_truncated: cutoff >= 1");
    // Totient sieve.
    std::vector<i64> phi(static_cast<std::size_t>(cutoff) + 1);
    for (i64 k = 0; k <= cutoff; ++k) phi[static_cast<std::size_t>(k)] = k;
    for (i64 q = 2; q <= cutoff; ++q) {
        if (phi[static_cast<std::size_t>(q)] != q) continue;
        for (i64 k = q; k <= cutoff; k += q) phi[static_cast<std::size_t>(k)] -= phi[static_cast<std::size_t>(k)] / q;
    }
    TruncatedSeries out;
    out.value = Real(0);
    const Real exponent = -2 * s;
    for (i64 c = p; c <= cutoff; c += p) {
        out.value += Real(phi[static_cast<std::size_t>(c)]) * bmp::exp(exponent * bmp::log(Real(c)));
    }
    // c = p k with k > K = floor(cutoff/p): phi(c) c^{-2s} <= p^{1-2s} k^{1-2s},
    // and sum_{k > K} k^{1-2s} <= K^{2-2s} / (2s - 2).
    const Real big_k(cutoff / p);
    out.tail_bound = bmp::pow(Real(p), 1 - 2 * s) * bmp::pow(big_k, 2 - 2 * s) / (2 * s - 2);
    return out;
}

}  // namespace qtv
