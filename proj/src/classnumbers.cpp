#include "qtv/classnumbers.hpp"

#include "qtv/arith_core.hpp"
#include "qtv/characters.hpp"
#include "qtv/quadforms.hpp"

#include <stdexcept>

namespace qtv {

namespace {

bool is_plus_index(i64 n) { return mod(n, 4) == 0 || mod(n, 4) == 3; }

void check_level(i64 l, i64 N) {
    if (N < 1 || N % 2 == 0 || !is_squarefree(N)) throw std::invalid_argument("gen_hurwitz: N must be odd and squarefree");
    if (l < 1 || N % l != 0) throw std::invalid_argument("gen_hurwitz: l must divide N");
}

}  // namespace

Rational hurwitz_H_forms(i64 n) {
    if (n < 0) throw std::invalid_argument("hurwitz_H_forms: n must be nonnegative");
    if (n == 0) return Rational(-1, 12);
    if (!is_plus_index(n)) return Rational(0);
    Rational total(0);
    for (const QuadForm& q : class_reps(-n, true)) {
        if (q.a == q.b && q.b == q.c)
            total += Rational(1, 3);
        else if (q.b == 0 && q.a == q.c)
            total += Rational(1, 2);
        else
            total += 1;
    }
    return total;
}

Rational hurwitz_H_lformula(i64 n) { return gen_hurwitz(1, 1, n); }

Rational gen_hurwitz(i64 l, i64 N, i64 n) {
    check_level(l, N);
    if (n < 0) throw std::invalid_argument("gen_hurwitz: n must be nonnegative");
    if (n == 0) {
        if (l != N) return Rational(0);
        return *L_incomplete(N, Real(-1), 1).exact;
    }
    if (!is_plus_index(n)) return Rational(0);
    const DiscSplit ds = fundamental_decomposition(-n);
    const i64 t = ds.t, m = ds.m;
    Rational value = *L_incomplete(l, Real(0), t).exact;
    if (l != N) {
        for (const auto& pp : factorize(N / l)) {
            const i64 q = pp.prime;
            value *= (1 - Rational(chi(t, q), q)) / (1 - Rational(1, q * q));
        }
    }
    Rational sum(0);
    for (i64 a : divisors(m)) {
        if (gcd(a, N) != 1) continue;
        const int mu = moebius(a);
        if (mu == 0) continue;
        sum += Rational(mu * chi(t, a)) * sigma_lns(l, N, 1, m / a);
    }
    return value * sum;
}

Real h_star(i64 n) {
    if (n <= 0 || !is_nonsquare_discriminant(n)) throw std::invalid_argument("h_star: n must be a positive nonsquare discriminant");
    Real total(0);
    for (i64 r = 1; r * r <= n; ++r) {
        if (n % (r * r) != 0) continue;
        const i64 d = n / (r * r);
        if (!is_nonsquare_discriminant(d)) continue;
        total += 2 * pell_automorph_unit(d).log_value() * narrow_class_number(d);
    }
    return total / (2 * const_pi());
}

VerificationReport verify_linear_relation(i64 p, i64 n) {
    Rational lhs = gen_hurwitz(p, p, n) / Rational(1 - p);
    Rational rhs = gen_hurwitz(1, 1, n) - Rational(p + 1, p) * gen_hurwitz(1, p, n);
    return make_exact_report("linear_relation", p, n, lhs, rhs);
}

}  // namespace qtv
