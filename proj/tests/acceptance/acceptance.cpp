// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status 0 only when every criterion passes.

#include "qtv/arith_core.hpp"
#include "qtv/characters.hpp"
#include "qtv/classnumbers.hpp"
#include "qtv/coefficients.hpp"
#include "qtv/kloosterman.hpp"
#include "qtv/modular_eval.hpp"
#include "qtv/quadforms.hpp"
#include "qtv/specialfunctions.hpp"
#include "qtv/traces.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace qtv;

namespace {

constexpr unsigned kDigits = 64;

Real ten_to(int e) { return bmp::pow(Real(10), e); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string sci(const Real& x) { return to_string(x, 3); }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Class numbers by reduced forms and by the L-value formula, exactly.
Outcome class_number_routes() {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    long cases = 0, bad = 0;
    for (i64 n = 3; n <= 2000; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        ++cases;
        if (hurwitz_H_forms(n) != hurwitz_H_lformula(n)) ++bad;
    }
    const double secs = seconds_since(start);
    o.pass = bad == 0 && secs < 60;
    o.detail = std::to_string(cases) + " n, " + std::to_string(bad) + " mismatches, " + std::to_string(secs) + " s (limit 60)";
    return o;
}

// 2. Imaginary trace sweep under the convention pinned on the seed cases.
Outcome imaginary_sweep() {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    const DefiniteConvention conv = pin_convention(default_seed_cases()).convention;
    long cases = 0, bad = 0;
    for (i64 p : {3, 5, 7})
        for (i64 n = -400; n < 0; ++n) {
            if (-n % 4 != 0 && -n % 4 != 3) continue;
            ++cases;
            const VerificationReport r = verify_thm_imaginary(p, n, conv);
            if (!(r.pass && r.exact)) ++bad;
        }
    const double secs = seconds_since(start);
    o.pass = bad == 0 && secs < 300;
    o.detail = std::string("convention ") + (conv == DefiniteConvention::both_signs ? "both-signs" : "pos-def") + ", " +
               std::to_string(cases) + " cases, " + std::to_string(bad) + " failures, " + std::to_string(secs) + " s";
    return o;
}

// 3. Linear relation among the generalized class numbers, exactly.
Outcome linear_relation() {
    Outcome o;
    long cases = 0, bad = 0;
    for (i64 p : {3, 5, 7})
        for (i64 n = 0; n <= 500; ++n) {
            ++cases;
            const VerificationReport r = verify_linear_relation(p, n);
            if (!(r.pass && r.exact)) ++bad;
        }
    o.pass = bad == 0;
    o.detail = std::to_string(cases) + " cases, " + std::to_string(bad) + " failures";
    return o;
}

// 4. Real trace sweep; the L(1) values inside the unit side are checked
// against finite character sums.
Outcome real_sweep() {
    Outcome o;
    const Real tolerance = ten_to(-9);
    const Real l_tolerance = ten_to(-50);
    long cases = 0, bad = 0;
    Real worst(0);
    std::set<i64> fields;
    for (i64 p : {3, 5})
        for (i64 n = 1; n <= 300; ++n) {
            if (!is_nonsquare_discriminant(n)) continue;
            ++cases;
            const VerificationReport r = verify_thm_real(p, n);
            worst = std::max<Real>(worst, r.rel_err);
            if (!(r.pass && r.rel_err <= tolerance)) ++bad;
            fields.insert(fundamental_decomposition(n).t);
        }
    long l_bad = 0;
    for (i64 t : fields) {
        const Real unit_side = 2 * field_fundamental_unit(t).log_value() * class_number(t) / bmp::sqrt(Real(t));
        if (bmp::abs(unit_side - L_at_1(t)) > l_tolerance * L_at_1(t)) ++l_bad;
    }
    o.pass = bad == 0 && l_bad == 0;
    o.detail = std::to_string(cases) + " cases, worst rel " + sci(worst) + " (tol 1e-9), " + std::to_string(fields.size()) +
               " L(1) values, " + std::to_string(l_bad) + " off the class-number formula";
    return o;
}

// 5. Negative-index coefficients: L-value route against class numbers.
Outcome negative_coefficients() {
    Outcome o;
    const Real tolerance = ten_to(-9);
    Real worst(0);
    long cases = 0;
    for (i64 p : {3, 5, 7})
        for (i64 n = 1; n <= 200; ++n) {
            if (n % 4 != 0 && n % 4 != 3) continue;
            ++cases;
            const Complex a = plus_value_at_32(p, -n);
            const Complex b = c_negative(p, -n);
            worst = std::max<Real>(worst, abs(a - b) / abs(b));
        }
    o.pass = worst <= tolerance;
    o.detail = std::to_string(cases) + " cases, worst rel " + sci(worst) + " (tol 1e-9)";
    return o;
}

// 6. Closed-form square-index coefficients against the numerical derivative.
Outcome derivative_oracle() {
    Outcome o;
    const Real h = ten_to(-5);
    const Real tolerance = ten_to(-8);
    Real worst(0);
    for (i64 m = 1; m <= 12; ++m)
        worst = std::max<Real>(worst, bmp::abs(b_derivative_oracle(m, h).value.re - b_square(m)));
    for (i64 p : {3, 5}) {
        worst = std::max<Real>(worst, abs(c_derivative_oracle(p, 0, h).value - c_zero(p)));
        for (i64 m = 1; m <= 12; ++m) worst = std::max<Real>(worst, abs(c_derivative_oracle(p, m, h).value - c_square(p, m)));
    }
    o.pass = worst <= tolerance;
    o.detail = "worst abs " + sci(worst) + " (tol 1e-8, step 1e-5)";
    return o;
}

// 7. Constant-term system for all odd primes up to 50.
Outcome constant_terms() {
    Outcome o;
    const Real tolerance = ten_to(-12);
    Real worst(0);
    long primes = 0;
    bool exact_ok = true;
    for (i64 p = 3; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        ++primes;
        const auto r = constant_term_checks(p);
        exact_ok = exact_ok && r.size() == 3 && r[0].exact && r[0].pass && r[1].exact && r[1].pass;
        worst = std::max<Real>(worst, r[2].abs_err);
    }
    o.pass = exact_ok && worst <= tolerance;
    o.detail = std::to_string(primes) + " primes, rational bullets " + (exact_ok ? "exact" : "FAILED") +
               ", constant bullet worst " + sci(worst) + " (tol 1e-12)";
    return o;
}

// 8. The special-function relation on the 36-point grid.
Outcome special_relation() {
    Outcome o;
    const SpecialRelationSweep s = special_relation_sweep();
    o.pass = s.points == 36 && s.all_converged && s.worst <= ten_to(-8);
    o.detail = std::to_string(s.points) + " points, sup deviation " + sci(s.worst) + " (tol 1e-8)";
    return o;
}

// 9. Kloosterman zeta closed form at s = 5/4 and the factorization at s = 5/2.
Outcome kloosterman() {
    Outcome o;
    const Real s(1.25);
    std::ostringstream d;
    for (i64 p : {3, 5}) {
        const TruncatedSeries t = kzeta0_truncated(p, s, 1000000);
        const Real gap = kzeta0_closed(p, s) - t.value;
        // Positive terms: the closed form lies in [truncation, truncation + tail].
        const bool ok = gap >= 0 && gap <= t.tail_bound;
        o.pass = o.pass && ok;
        d << "p=" << p << " gap " << sci(gap) << "<=" << sci(t.tail_bound) << "; ";
    }
    long fact_ok = 0;
    for (i64 p : {3, 5})
        for (i64 n : {-4, -3, 5, 8}) {
            const KloostermanValue full = plus_zeta_truncated(p, n, 2.5, 2000);
            const std::complex<double> bad = plus_zeta_bad_part(p, n, 2.5, i64{1} << 24);
            const Complex product = Complex(Real(bad.real()), Real(bad.imag())) * plus_zeta_coprime_part(p, n, Real(2.5));
            if (full.decaying && abs(full.value - product) <= full.tail_bound) ++fact_ok;
        }
    o.pass = o.pass && fact_ok == 8;
    d << "factorization " << fact_ok << "/8 within tail bound";
    o.detail = d.str();
    return o;
}

// 10. Level-reduction character sum, exhaustively.
Outcome level_reduction() {
    Outcome o;
    long cases = 0, bad = 0;
    for (i64 N = 1; N <= 105; ++N) {
        if (!is_squarefree(N)) continue;
        for (i64 a = 1; a <= 210; ++a) {
            ++cases;
            if (level_reduction_sum(N, a) != (a % N == 0 ? 1 : 0)) ++bad;
        }
    }
    o.pass = bad == 0;
    o.detail = std::to_string(cases) + " (N, a) pairs, " + std::to_string(bad) + " failures";
    return o;
}

// Least t, u > 0 with t^2 - D u^2 = 4, by search over u.
Real pell_log_oracle(i64 D) {
    for (i64 u = 1;; ++u) {
        const i64 t2 = D * u * u + 4;
        const i64 t = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(t2))));
        if (t * t == t2) return bmp::log((Real(t) + u * bmp::sqrt(Real(D))) / 2);
    }
}

// 11. Closed-geodesic quadrature against twice the log of the unit.
Outcome geodesic_oracle() {
    Outcome o;
    const Real tolerance = ten_to(-8);
    std::mt19937 rng(20240611);
    Real worst(0);
    long forms = 0;
    for (i64 D : {5, 8, 13}) {
        const Real expect = 2 * pell_log_oracle(D);
        const i64 b = D % 2;
        const QuadForm principal{1, b, (b * b - D) / 4};
        for (int k = 0; k < 5; ++k) {
            Mat2 g;
            const int len = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < len; ++i) g = g * mat_T(static_cast<i64>(rng() % 5) - 2) * mat_S();
            const QuadForm q = act(principal, g);
            const QuadratureResult r = geodesic_integral_numeric(q, ten_to(-15));
            worst = std::max<Real>(worst, bmp::abs(r.value - expect));
            o.pass = o.pass && r.converged;
            ++forms;
        }
    }
    o.pass = o.pass && worst <= tolerance;
    o.detail = std::to_string(forms) + " forms, worst abs " + sci(worst) + " (tol 1e-8)";
    return o;
}

Complex point(const char* u, const char* v) { return Complex(real_from_string(u), real_from_string(v)); }

// 12. Numerical modularity of theta, Zagier's series, H_{3,3} and G.
Outcome modularity() {
    Outcome o;
    const Mat2 gens[4] = {mat_T(1), mat_T(-1), Mat2{1, 0, 4, 1}, Mat2{1, 0, -4, 1}};
    std::mt19937 rng(99);
    std::vector<Mat2> words;
    while (words.size() < 10) {
        const int len = 1 + static_cast<int>(rng() % 3);
        Mat2 g;
        for (int i = 0; i < len; ++i) g = g * gens[rng() % 4];
        if (g.c != 0) words.push_back(g);
    }
    const std::vector<Complex> points = {point("0.13", "0.9"), point("-0.27", "0.5"), point("0.41", "0.75"),
                                         point("0", "1.3"), point("-0.08", "0.6")};
    Real theta_worst(0), zagier_worst(0), cohen_worst(0);
    for (const Complex& tau : points)
        for (const Mat2& g : words) {
            const Real h = mobius(g, tau).im;
            const i64 nt = static_cast<i64>(std::sqrt(static_cast<double>(cutoff_for_height(h, ten_to(-16), 0)))) + 4;
            theta_worst = std::max<Real>(
                theta_worst, modularity_residual([nt](const Complex& z) { return eval_theta(z, nt); }, g, 1, tau).residual);
            const i64 nh = cutoff_for_height(h, ten_to(-9), 0.5);
            zagier_worst = std::max<Real>(
                zagier_worst, modularity_residual([nh](const Complex& z) { return eval_H_zagier(z, nh); }, g, 3, tau).residual);
        }
    const Complex tau = point("0.13", "0.9");
    for (const Mat2& g : {Mat2{1, 0, 12, 1}, Mat2{7, 2, 24, 7}}) {
        const i64 n = cutoff_for_height(mobius(g, tau).im, ten_to(-9), 0.5);
        cohen_worst = std::max<Real>(
            cohen_worst,
            modularity_residual([n](const Complex& z) { return eval_cohen_eisenstein(3, 3, z, n); }, g, 3, tau).residual);
    }
    // G at p = 3: tau = 0.21 + 1.1i, gamma = [1,0;12,1].
    const Complex tau_g = point("0.21", "1.1");
    const Mat2 g{1, 0, 12, 1};
    const i64 n = std::max<i64>(600, cutoff_for_height(mobius(g, tau_g).im, ten_to(-8), 0));
    const Real g_residual = modularity_residual([n](const Complex& z) { return eval_G(3, z, n); }, g, 1, tau_g).residual;
    o.pass = theta_worst <= ten_to(-10) && zagier_worst <= ten_to(-6) && cohen_worst <= ten_to(-5) &&
             g_residual <= ten_to(-4);
    o.detail = "theta " + sci(theta_worst) + " (1e-10), Zagier " + sci(zagier_worst) + " (1e-6), H_{3,3} " +
               sci(cohen_worst) + " (1e-5), G " + sci(g_residual) + " (1e-4)";
    return o;
}

// 13. Square-index real trace: unsimplified combination against the
// simplified right-hand side.
Outcome square_index_consistency() {
    Outcome o;
    Real worst(0);
    for (i64 p : {3, 5, 7})
        for (i64 m = 1; m <= 10; ++m) {
            const Complex lhs = square_trace_unsimplified(p, m);
            const Real rhs = square_trace_rhs(p, m);
            worst = std::max<Real>(worst, abs(lhs - Complex(rhs)) / std::max<Real>(Real(1), bmp::abs(rhs)));
        }
    o.pass = worst <= ten_to(-10);
    o.detail = "30 cases, worst rel " + sci(worst) + " (tol 1e-10)";
    return o;
}

}  // namespace

int main() {
    set_working_digits(kDigits);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"class numbers by two routes", class_number_routes},
        {"imaginary trace sweep", imaginary_sweep},
        {"generalized class-number linear relation", linear_relation},
        {"real trace sweep", real_sweep},
        {"negative-index coefficients by two routes", negative_coefficients},
        {"square-index coefficients vs derivative oracle", derivative_oracle},
        {"constant-term system", constant_terms},
        {"special-function relation grid", special_relation},
        {"Kloosterman zeta closed forms and factorization", kloosterman},
        {"level-reduction character sum", level_reduction},
        {"closed-geodesic quadrature", geodesic_oracle},
        {"numerical modularity", modularity},
        {"square-index trace consistency", square_index_consistency},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failed;
        std::printf("AC%02zu %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
