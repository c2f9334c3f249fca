// Twisted Kloosterman-type sums with the theta multiplier, truncated plus
// space Kloosterman zeta series, the closed-form prime-power local series,
// and the weight-0 level-p zeta closed forms.
#pragma once

#include "qtv/numeric.hpp"

#include <complex>
#include <optional>

namespace qtv {

struct KloostermanValue {
    Complex value;
    // Set for truncated evaluations only.
    std::optional<i64> cutoff;
    // Finite tail estimate for truncated evaluations, zero for closed forms.
    Real tail_bound;
    // False when the trailing terms do not decay (truncation unreliable).
    bool decaying = true;
};

// (4/c) as a Kronecker symbol: 1 for odd c, 0 for even c.
int kronecker_four(i64 c);

// (1 + (4/c)) * sum_{r mod 4Nc, gcd(r,4Nc)=1} (4Nc/r) eps_r^{2k} e(nr/(4Nc))
// at the working precision; twice_k = 2k must be odd.
Complex plus_term(i64 level, i64 n, i64 c, int twice_k = 1);
// The same sum in double precision, for long truncated series.
std::complex<double> plus_term_fast(i64 level, i64 n, i64 c, int twice_k = 1);

// sum_{c <= cutoff} plus_term(level, n, c) (4 level c)^{-s}, inner sums in
// double precision. The tail estimate assumes |plus_term| grows at most like
// sqrt(4 level c), calibrated on the last half of the included terms.
KloostermanValue plus_zeta_truncated(i64 level, i64 n, double s, i64 cutoff,
                                     int twice_k = 1);

// Sub-series of the plus zeta over moduli c = 2^a level^b only (level an odd
// prime), summed while 4 level c <= modulus_limit.
std::complex<double> plus_zeta_bad_part(i64 level, i64 n, double s,
                                        i64 modulus_limit);
// Coprime part of the plus zeta at real s > 3/2 for n = t m^2 nonsquare:
// L_{4p}(s - 1/2, chi_t) / L_{4p}(2s - 1, id) * T^{chi_t}_{4p, 3/2 - s}(m).
Real plus_zeta_coprime_part(i64 p, i64 n, const Real& s);

// a(2^j, 0) = sum_{r mod 2^j, r odd} (2^j / r) eps_r, closed form; j >= 1.
Complex local_sum_2_zero(int j);
// a(p^j, 0) = eps_{p^j}^{-1} sum_{r mod p^j} (r / p^j), closed form; j >= 1.
Complex local_sum_p_zero(i64 p, int j);
// The same two sums evaluated term by term from their defining sums.
Complex local_sum_2_zero_direct(int j);
Complex local_sum_p_zero_direct(i64 p, int j);

// sum_{j >= 2} a(2^j, 0) 2^{-2js} and sum_{j >= 1} a(p^j, 0) p^{-2js},
// summed term by term up to j_max (geometric tails below precision).
Complex local_series_2_zero(const Real& s, int j_max = 400);
Complex local_series_p_zero(i64 p, const Real& s, int j_max = 400);
// Closed forms of sum_{j >= 2} a(2^j, m^2) 2^{-2js} and
// sum_{j >= 1} a(p^j, m^2) p^{-2js} for m >= 1.
Complex local_series_2_square(i64 m, const Real& s);
Real local_series_p_square(i64 p, i64 m, const Real& s);

// Weighted moment sums at s = 3/4: sum_j a(2^j,0) j 2^{-3j/2} and
// sum_j a(p^j,0) j p^{-3j/2}, term by term up to j_max.
Complex local_moment_2_zero(int j_max = 400);
Complex local_moment_p_zero(i64 p, int j_max = 400);

// K^+_{1/2,4p}(0, n; 3/2) for nonsquare n = t m^2 (either sign):
// L_{4p}(1,chi_t)/L_{4p}(2,id) T^{chi_t}_{4p,0}(m) * 3(1+i)/8 * A2~(n) A(p,n).
// Throws for squares.
Complex plus_value_at_32(i64 p, i64 n);

// K_{0,p}(0,0;2s) = zeta(2s-1)/zeta(2s) (p-1)/(p^{2s}-1) and
// K~_{0,p}(0,0;2s) = zeta(2s-1)/zeta(2s) (p^{2s}-p)/(p^{2s}-1); s > 1.
Real kzeta0_closed(i64 p, const Real& s);
Real kzeta0_tilde_closed(i64 p, const Real& s);

// sum_{p | c, c <= cutoff} phi(c) c^{-2s}, the m = n = 0 column of the level
// p Kloosterman zeta, with the rigorous tail bound
// sum_{c > cutoff} c^{1-2s} <= cutoff^{2-2s} / (2s - 2).
struct TruncatedSeries {
    Real value;
    Real tail_bound;
};
TruncatedSeries kzeta0_truncated(i64 p, const Real& s, i64 cutoff);

}  // namespace qtv
