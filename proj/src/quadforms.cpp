#include "qtv/quadforms.hpp"

#include "qtv/arith_core.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace qtv {

i64 QuadForm::content() const { return gcd(gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c); }

std::string to_string(const QuadForm& q) {
    return "[" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + "]";
}

namespace {

i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("matrix entry overflow");
    return r;
}

i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("matrix entry overflow");
    return r;
}

// Matrix product with entries reduced modulo `modulus` (0 means exact).
Mat2 mul(const Mat2& x, const Mat2& y, i64 modulus) {
    auto dot = [&](i64 p, i64 q, i64 r, i64 s) {
        if (modulus == 0) return checked_add(checked_mul(p, q), checked_mul(r, s));
        return mod(mod(p, modulus) * mod(q, modulus) + mod(r, modulus) * mod(s, modulus), modulus);
    };
    return {dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c), dot(x.c, y.b, x.d, y.d)};
}

QuadForm negate(const QuadForm& q) { return {-q.a, -q.b, -q.c}; }

// floor(sqrt(D)) for D > 0 nonsquare.
i64 sqrt_floor(i64 D) { return isqrt(D); }

// Partner b' = -b mod 2|c| in the window selected by the size of |c|.
i64 partner_b(i64 b, i64 c, i64 D) {
    i64 m = 2 * (c < 0 ? -c : c);
    i64 s = sqrt_floor(D);
    if (c * c > D) {
        // Window (-|c|, |c|].
        i64 r = mod(-b, m);
        if (r > m / 2) r -= m;
        return r;
    }
    // Window (s - 2|c|, s].
    return s - mod(s + b, m);
}

Mat2 rho_matrix(i64 b, i64 bp, i64 c) {
    i64 t = (bp + b) / (2 * c);
    return {0, -1, 1, t};
}

QuadForm reduce_definite_impl(QuadForm q, Mat2* m) {
    Mat2 acc;
    for (int iter = 0; iter < 100000; ++iter) {
        // Translate b into (-a, a].
        i64 two_a = 2 * q.a;
        i64 k = 0;
        if (q.b > q.a || q.b <= -q.a) {
            i64 r = mod(q.b + q.a - 1, two_a) - q.a + 1;  // target in (-a, a]
            k = (r - q.b) / two_a;
            Mat2 t = mat_T(k);
            q = act(q, t);
            acc = acc * t;
        }
        if (q.a > q.c) {
            Mat2 s = mat_S();
            q = act(q, s);
            acc = acc * s;
            continue;
        }
        if (q.a == q.c && q.b < 0) {
            Mat2 s = mat_S();
            q = act(q, s);
            acc = acc * s;
            continue;
        }
        if (m) *m = acc;
        return q;
    }
    throw std::runtime_error("reduce_definite: no convergence");
}

// Walk from reduced form r1 along its cycle looking for r2; accumulates the
// step matrices modulo `modulus`.
bool walk_cycle(const QuadForm& r1, const QuadForm& r2, i64 modulus, Mat2& acc) {
    QuadForm cur = r1;
    acc = Mat2{};
    for (int step = 0; step < 1000000; ++step) {
        if (cur == r2) return true;
        Mat2 st;
        cur = rho_step(cur, &st);
        acc = mul(acc, st, modulus);
        if (cur == r1) return false;
    }
    throw std::runtime_error("walk_cycle: cycle too long");
}

// g with q1 o g = q2, entries reduced modulo `modulus` (0 means exact).
bool find_transform(const QuadForm& q1, const QuadForm& q2, i64 modulus, Mat2& g) {
    if (q1.disc() != q2.disc()) return false;
    const i64 D = q1.disc();
    if (D < 0) {
        bool neg1 = q1.a < 0, neg2 = q2.a < 0;
        if (neg1 != neg2) return false;
        Mat2 m1, m2;
        QuadForm r1 = reduce_definite_impl(neg1 ? negate(q1) : q1, &m1);
        QuadForm r2 = reduce_definite_impl(neg2 ? negate(q2) : q2, &m2);
        if (r1 != r2) return false;
        g = mul(m1, inverse(m2), modulus);
        return true;
    }
    Mat2 m1, m2, c;
    QuadForm r1 = reduce_indefinite(q1, &m1);
    QuadForm r2 = reduce_indefinite(q2, &m2);
    if (!walk_cycle(r1, r2, modulus, c)) return false;
    g = mul(mul(m1, c, modulus), inverse(m2), modulus);
    return true;
}

// Automorph of q with entries reduced mod p (the exact entries can exceed 64 bits).
Mat2 automorph_mod(const QuadForm& q, i64 p) {
    const i64 g = q.content();
    const QuadForm q0{q.a / g, q.b / g, q.c / g};
    PellUnit e = pell_automorph_unit(q0.disc());
    auto red = [p](const BigInt& x) {
        BigInt r = x % p;
        if (r < 0) r += p;
        return r.convert_to<i64>();
    };
    return {red((e.t - q0.b * e.u) / 2), red(-q0.c * e.u), red(q0.a * e.u), red((e.t + q0.b * e.u) / 2)};
}

// Gamma_0(p)-membership test over the stabilizer coset of g0: some h in
// Stab(q1) with h * g0 having lower-left entry 0 mod p.
bool coset_meets_gamma0(i64 p, const QuadForm& q1, const Mat2& g0) {
    if (q1.disc() < 0) {
        for (const Mat2& h : definite_stabilizer(q1))
            if (mod(mul(h, g0, p).c, p) == 0) return true;
        return false;
    }
    const Mat2 ap = automorph_mod(q1, p);
    Mat2 power;  // A^k mod p
    for (i64 k = 0; k <= p * p; ++k) {
        if (mod(mul(power, g0, p).c, p) == 0) return true;  // -I does not change the test
        power = mul(power, ap, p);
        if (power == Mat2{} || power == Mat2{p - 1, 0, 0, p - 1}) return false;
    }
    throw std::runtime_error("coset_meets_gamma0: automorph period not found");
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) { return mul(x, y, 0); }

Mat2 inverse(const Mat2& m) { return {m.d, -m.b, -m.c, m.a}; }

Mat2 mat_T(i64 k) { return {1, k, 0, 1}; }

Mat2 mat_S() { return {0, -1, 1, 0}; }

QuadForm act(const QuadForm& q, const Mat2& g) {
    auto val = [&](i64 x, i64 y) { return q.a * x * x + q.b * x * y + q.c * y * y; };
    QuadForm r;
    r.a = val(g.a, g.c);
    r.c = val(g.b, g.d);
    r.b = 2 * q.a * g.a * g.b + q.b * (g.a * g.d + g.b * g.c) + 2 * q.c * g.c * g.d;
    return r;
}

QuadForm reduce_definite(const QuadForm& q, Mat2* m) {
    if (q.disc() >= 0 || q.a <= 0) throw std::invalid_argument("reduce_definite: need D < 0 and a > 0");
    return reduce_definite_impl(q, m);
}

bool is_nonsquare_discriminant(i64 D) {
    i64 r = mod(D, 4);
    if (r != 0 && r != 1) return false;
    if (D == 0) return false;
    return D < 0 || !is_square(D);
}

bool is_reduced_indefinite(const QuadForm& q) {
    const i64 D = q.disc();
    const i64 a2 = 2 * (q.a < 0 ? -q.a : q.a);
    if (q.b <= 0 || q.b * q.b >= D) return false;
    if ((a2 + q.b) * (a2 + q.b) <= D) return false;
    i64 t = a2 - q.b;
    return t <= 0 || t * t < D;
}

QuadForm rho_step(const QuadForm& q, Mat2* m) {
    const i64 D = q.disc();
    i64 bp = partner_b(q.b, q.c, D);
    Mat2 st = rho_matrix(q.b, bp, q.c);
    QuadForm r = act(q, st);
    if (m) *m = st;
    return r;
}

QuadForm reduce_indefinite(const QuadForm& q, Mat2* m) {
    if (!is_nonsquare_discriminant(q.disc()) || q.disc() < 0)
        throw std::invalid_argument("reduce_indefinite: need positive nonsquare discriminant");
    QuadForm cur = q;
    Mat2 acc;
    for (int iter = 0; iter < 100000; ++iter) {
        if (is_reduced_indefinite(cur)) {
            if (m) *m = acc;
            return cur;
        }
        Mat2 st;
        cur = rho_step(cur, &st);
        acc = acc * st;
    }
    throw std::runtime_error("reduce_indefinite: no convergence");
}

std::vector<QuadForm> reduced_cycle(const QuadForm& reduced) {
    std::vector<QuadForm> cyc{reduced};
    QuadForm cur = rho_step(reduced);
    while (cur != reduced) {
        cyc.push_back(cur);
        cur = rho_step(cur);
        if (cyc.size() > 1000000) throw std::runtime_error("reduced_cycle: too long");
    }
    return cyc;
}

std::vector<QuadForm> class_reps(i64 D, bool allow_imprimitive) {
    if (!is_nonsquare_discriminant(D)) throw std::invalid_argument("class_reps: D must be a nonsquare discriminant");
    std::vector<QuadForm> reps;
    if (D < 0) {
        const i64 N = -D;
        for (i64 a = 1; 3 * a * a <= N; ++a) {
            for (i64 b = -a + 1; b <= a; ++b) {
                if (mod(b * b + N, 4 * a) != 0) continue;
                i64 c = (b * b + N) / (4 * a);
                if (c < a) continue;
                if (b < 0 && a == c) continue;
                QuadForm q{a, b, c};
                if (!allow_imprimitive && q.content() != 1) continue;
                reps.push_back(q);
            }
        }
        return reps;
    }
    const i64 s = isqrt(D);
    std::set<QuadForm> reduced;
    for (i64 b = 1; b <= s; ++b) {
        if (mod(b * b - D, 4) != 0) continue;
        i64 ac = (b * b - D) / 4;  // negative
        for (i64 a = 1; a <= -ac; ++a) {
            if (ac % a != 0) continue;
            for (i64 sa : {a, -a}) {
                QuadForm q{sa, b, ac / sa};
                if (!allow_imprimitive && q.content() != 1) continue;
                if (is_reduced_indefinite(q)) reduced.insert(q);
            }
        }
    }
    std::set<QuadForm> seen;
    for (const QuadForm& q : reduced) {
        if (seen.count(q)) continue;
        reps.push_back(q);
        for (const QuadForm& r : reduced_cycle(q)) seen.insert(r);
    }
    return reps;
}

i64 narrow_class_number(i64 D) {
    if (D <= 0) throw std::invalid_argument("narrow_class_number: D must be positive");
    return static_cast<i64>(class_reps(D, false).size());
}

i64 class_number(i64 D) {
    if (D < 0) return static_cast<i64>(class_reps(D, false).size());
    i64 h = narrow_class_number(D);
    return order_fundamental_unit(D).norm == -1 ? h : h / 2;
}

Real PellUnit::value() const {
    Real sd = bmp::sqrt(Real(D));
    return (to_real(t) + to_real(u) * sd) / 2;
}

Real PellUnit::log_value() const { return bmp::log(value()); }

PellUnit order_fundamental_unit(i64 D) {
    if (D <= 0 || !is_nonsquare_discriminant(D)) throw std::invalid_argument("unit: need positive nonsquare discriminant");
    // Continued fraction of (b0 + sqrt(D)) / 2 in the form (P + sqrt(D)) / Q.
    const i64 b0 = mod(D, 2);
    const i64 s = isqrt(D);
    i64 P = b0, Q = 2;
    BigInt p_prev = 0, p_cur = 1, q_prev = 1, q_cur = 0;
    for (int k = 0; k < 1000000; ++k) {
        i64 a = (P + s) / Q;
        BigInt p_next = a * p_cur + p_prev;
        BigInt q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        // Convergent p/q of omega gives the unit p - q * conj(omega).
        BigInt t = 2 * p_cur - b0 * q_cur;
        BigInt u = q_cur;
        BigInt nrm = t * t - D * u * u;
        if (nrm == 4 || nrm == -4) {
            PellUnit e;
            e.t = t;
            e.u = u;
            e.D = D;
            e.norm = nrm == 4 ? 1 : -1;
            return e;
        }
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw std::runtime_error("unit: continued fraction did not close");
}

PellUnit pell_automorph_unit(i64 D) {
    PellUnit e = order_fundamental_unit(D);
    if (e.norm == 1) return e;
    PellUnit sq;
    sq.D = D;
    sq.t = (e.t * e.t + D * e.u * e.u) / 2;
    sq.u = e.t * e.u;
    sq.norm = 1;
    return sq;
}

PellUnit field_fundamental_unit(i64 t) {
    bool fundamental = false;
    if (t > 1 && mod(t, 4) == 1) fundamental = is_squarefree(t);
    if (t > 1 && mod(t, 4) == 0) {
        i64 k = t / 4;
        fundamental = (mod(k, 4) == 2 || mod(k, 4) == 3) && is_squarefree(k);
    }
    if (!fundamental) throw std::invalid_argument("field_fundamental_unit: t must be a fundamental discriminant > 1");
    return order_fundamental_unit(t);
}

Mat2 automorph(const QuadForm& q) {
    const i64 g = q.content();
    const QuadForm q0{q.a / g, q.b / g, q.c / g};
    PellUnit e = pell_automorph_unit(q0.disc());
    BigInt t = e.t, u = e.u;
    BigInt aa = (t - q0.b * u) / 2, bb = -q0.c * u, cc = q0.a * u, dd = (t + q0.b * u) / 2;
    auto narrow = [](const BigInt& x) {
        if (bmp::abs(x) > BigInt(std::numeric_limits<i64>::max() / 4))
            throw std::overflow_error("automorph: entry exceeds 64 bits");
        return x.convert_to<i64>();
    };
    return {narrow(aa), narrow(bb), narrow(cc), narrow(dd)};
}

std::vector<Mat2> definite_stabilizer(const QuadForm& q) {
    if (q.disc() >= 0) throw std::invalid_argument("definite_stabilizer: need D < 0");
    const bool neg = q.a < 0;
    Mat2 m;
    QuadForm r = reduce_definite_impl(neg ? negate(q) : q, &m);
    std::vector<Mat2> out;
    for (i64 a = -1; a <= 1; ++a)
        for (i64 b = -1; b <= 1; ++b)
            for (i64 c = -1; c <= 1; ++c)
                for (i64 d = -1; d <= 1; ++d) {
                    Mat2 h{a, b, c, d};
                    if (h.det() != 1 || act(r, h) != r) continue;
                    out.push_back(m * h * inverse(m));
                }
    return out;
}

bool sl2_transform(const QuadForm& q1, const QuadForm& q2, Mat2& g0) { return find_transform(q1, q2, 0, g0); }

bool gamma0_equivalent(i64 p, const QuadForm& q1, const QuadForm& q2) {
    if (q1.disc() != q2.disc()) throw std::invalid_argument("gamma0_equivalent: discriminants differ");
    if (mod(q1.a, p) != 0 || mod(q2.a, p) != 0) throw std::invalid_argument("gamma0_equivalent: need p | a");
    if (q1 == q2) return true;
    Mat2 g0;
    if (!find_transform(q1, q2, p, g0)) return false;
    return coset_meets_gamma0(p, q1, g0);
}

std::vector<Mat2> gamma0_coset_reps(i64 p) {
    std::vector<Mat2> reps{Mat2{}};
    for (i64 j = 0; j < p; ++j) reps.push_back(mat_T(j) * mat_S());
    return reps;
}

std::vector<OrbitClass> gamma0_orbits(i64 p, i64 n, DefiniteConvention conv, const std::vector<int>& coset_order) {
    if (!is_nonsquare_discriminant(n)) throw std::invalid_argument("gamma0_orbits: n must be a nonsquare discriminant");
    std::vector<QuadForm> sl2_reps = class_reps(n, true);
    if (n < 0 && conv == DefiniteConvention::both_signs) {
        const std::size_t k = sl2_reps.size();
        for (std::size_t i = 0; i < k; ++i) sl2_reps.push_back(negate(sl2_reps[i]));
    }
    std::vector<Mat2> cosets = gamma0_coset_reps(p);
    if (!coset_order.empty()) {
        if (coset_order.size() != cosets.size()) throw std::invalid_argument("gamma0_orbits: bad coset permutation");
        std::vector<Mat2> perm;
        for (int idx : coset_order) perm.push_back(cosets.at(idx));
        cosets = perm;
    }
    std::vector<OrbitClass> orbits;
    int next_id = 0;
    for (const QuadForm& r : sl2_reps) {
        std::vector<std::size_t> mine;
        for (const Mat2& g : cosets) {
            QuadForm img = act(r, g);
            if (mod(img.a, p) != 0) continue;
            bool found = false;
            for (std::size_t idx : mine)
                if (gamma0_equivalent(p, orbits[idx].representative, img)) {
                    found = true;
                    break;
                }
            if (found) continue;
            OrbitClass oc;
            oc.representative = img;
            oc.orbit_id = next_id++;
            if (n < 0) {
                int count = 0;
                for (const Mat2& h : definite_stabilizer(img))
                    if (mod(h.c, p) == 0) ++count;
                oc.stabilizer_order = count / 2;
            } else {
                oc.infinite_stabilizer = true;
            }
            mine.push_back(orbits.size());
            orbits.push_back(oc);
        }
    }
    return orbits;
}

QuadratureResult geodesic_integral_numeric(const QuadForm& q, const Real& tol) {
    const i64 D = q.disc();
    if (D <= 0 || !is_nonsquare_discriminant(D) || q.a == 0)
        throw std::invalid_argument("geodesic_integral_numeric: need positive nonsquare discriminant and a != 0");
    const Real sd = bmp::sqrt(Real(D));
    const Real x0 = Real(-q.b) / (2 * q.a);
    const Real radius = sd / (2 * bmp::abs(Real(q.a)));
    const Mat2 A = automorph(q);
    // Image of the apex under the automorph, as a Moebius transformation.
    const Complex apex(x0, radius);
    const Complex image = (Complex(Real(A.a)) * apex + Complex(Real(A.b))) / (Complex(Real(A.c)) * apex + Complex(Real(A.d)));
    const Real theta0 = const_pi() / 2;
    const Real theta1 = arg(image - Complex(x0));
    const Complex qa(Real(q.a)), qb(Real(q.b)), qc(Real(q.c));
    RealFunction integrand = [&](const Real& theta) {
        Complex e = cis(theta);
        Complex tau = Complex(x0) + radius * e;
        Complex dtau = Complex(Real(0), radius) * e;
        Complex val = qa * tau * tau + qb * tau + qc;
        return (sd * dtau / val).re;
    };
    Real lo = theta0 < theta1 ? theta0 : theta1;
    Real hi = theta0 < theta1 ? theta1 : theta0;
    QuadratureResult res = integrate_gauss_adaptive(integrand, lo, hi, tol);
    res.value = bmp::abs(res.value);
    return res;
}

}  // namespace qtv
