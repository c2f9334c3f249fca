#include "doctest.h"
#include "qtv/characters.hpp"
#include "qtv/classnumbers.hpp"
#include "qtv/coefficients.hpp"
#include "qtv/kloosterman.hpp"
#include "qtv/modular_eval.hpp"
#include "qtv/quadforms.hpp"
#include "qtv/quadrature.hpp"
#include "qtv/specialfunctions.hpp"

#include <cmath>
#include <random>

using namespace qtv;

namespace {

Real tol(int e) { return bmp::pow(Real(10), -e); }

Complex point(const char* u, const char* v) { return Complex(real_from_string(u), real_from_string(v)); }

// Words of length 1..3 in T, T^-1, U = [1,0;4,1], U^-1.
std::vector<Mat2> random_words(int count, unsigned seed) {
    const Mat2 gens[4] = {mat_T(1), mat_T(-1), Mat2{1, 0, 4, 1}, Mat2{1, 0, -4, 1}};
    std::mt19937 rng(seed);
    std::vector<Mat2> out;
    while (static_cast<int>(out.size()) < count) {
        const int len = 1 + static_cast<int>(rng() % 3);
        Mat2 g;
        for (int i = 0; i < len; ++i) g = g * gens[rng() % 4];
        if (g.c != 0) out.push_back(g);
    }
    return out;
}

const std::vector<Complex>& battery_points() {
    static const std::vector<Complex> pts = {point("0.13", "0.9"), point("-0.27", "0.5"), point("0.41", "0.75"),
                                             point("0", "1.3"), point("-0.08", "0.6")};
    return pts;
}

}  // namespace

TEST_CASE("theta values") {
    const SeriesEvaluation t = eval_theta(Complex(Real(0), Real(1)), 50);
    long double direct = 1;
    for (int n = 1; n <= 50; ++n) direct += 2 * std::exp(-2 * 3.14159265358979323846L * n * n);
    CHECK(std::abs(t.value.re.convert_to<long double>() - direct) < 1e-17L);
    CHECK(bmp::abs(t.value.im) < tol(60));
    CHECK(t.tail_bound < tol(60));
    // Constant coefficient 1.
    CHECK(abs(eval_theta(Complex(Real(0), Real(12)), 10).value - Complex(Real(1))) < tol(30));
    CHECK_THROWS(eval_theta(Complex(Real(0), Real(0)), 10));
    CHECK_THROWS(eval_theta(Complex(Real(0), Real(-1)), 10));
}

TEST_CASE("slash operator basics") {
    const Complex tau = point("0.2", "0.7");
    const Complex f(Real(3), Real(-1));
    CHECK(abs(slash_half(f, Mat2{}, 1, tau) - f) < tol(60));
    const Complex shifted = eval_theta(tau + Complex(Real(1)), 40).value;
    CHECK(abs(slash_half(shifted, mat_T(1), 1, tau) - eval_theta(tau, 40).value) < tol(50));
    CHECK_THROWS(slash_half(f, Mat2{1, 0, 2, 1}, 1, tau));
    CHECK_THROWS(slash_half(f, Mat2{1, 0, 4, 1}, 2, tau));
    // theta under [1,0;4,1].
    const ResidualResult r = modularity_residual([](const Complex& z) { return eval_theta(z, 60); }, Mat2{1, 0, 4, 1}, 1,
                                                 point("0.13", "0.9"));
    CHECK(r.residual <= Real(1e-10));
}

TEST_CASE("theta and Zagier's series under a Gamma_0(4) battery") {
    const std::vector<Mat2> words = random_words(10, 99);
    for (const Complex& tau : battery_points())
        for (const Mat2& g : words) {
            const Real h = mobius(g, tau).im;
            const i64 Nt = static_cast<i64>(std::sqrt(static_cast<double>(cutoff_for_height(h, tol(16), 0)))) + 4;
            const ResidualResult rt = modularity_residual([Nt](const Complex& z) { return eval_theta(z, Nt); }, g, 1, tau);
            CHECK(rt.residual <= Real(1e-10));
            const i64 Nh = cutoff_for_height(h, tol(9), 0.5);
            const ResidualResult rh = modularity_residual([Nh](const Complex& z) { return eval_H_zagier(z, Nh); }, g, 3, tau);
            CHECK(rh.residual <= Real(1e-6));
            CHECK(rh.residual <= rh.tail_bounds + tol(20));
        }
}

TEST_CASE("Zagier's series pieces") {
    // Far up the imaginary axis only -1/12 + 1/(8 pi sqrt v) survives.
    const Real v(6);
    const SeriesEvaluation e = eval_H_zagier(Complex(Real(0), v), 40);
    CHECK(abs(e.value - Complex(Real(-1) / 12 + 1 / (8 * const_pi() * bmp::sqrt(v)))) < tol(15));
    // Nonholomorphic kernel at v = 1, n = 1 against a quadrature of Gamma(-1/2, 4 pi).
    const Real x = 4 * const_pi();
    const QuadratureResult g = integrate_gauss_adaptive(
        [](const Real& t) { return bmp::exp(-t) / (t * bmp::sqrt(t)); }, x, x + 250, tol(40));
    const Real kernel = 2 * (bmp::exp(-x) / bmp::sqrt(x) - inc_gamma_half(x));
    CHECK(bmp::abs(kernel - g.value) < tol(35));
    // Class-number envelope used for the tail bound.
    for (i64 n = 3; n <= 4000; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        CHECK(to_real(hurwitz_H_forms(n)) <= bmp::sqrt(Real(n)) * (1 + bmp::log(Real(n))));
    }
}

TEST_CASE("generalized Cohen-Eisenstein series") {
    for (i64 p : {3, 5, 7}) CHECK(gen_hurwitz(p, p, 0) == Rational(p - 1, 12));
    for (i64 n = 1; n <= 200; ++n)
        if (n % 4 == 1 || n % 4 == 2) {
            CHECK(gen_hurwitz(3, 3, n) == 0);
            CHECK(gen_hurwitz(1, 3, n) == 0);
        }
    for (i64 n = 3; n <= 2000; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        CHECK(bmp::abs(to_real(gen_hurwitz(3, 3, n))) <= 12 * bmp::sqrt(Real(n)) * (1 + bmp::log(Real(n))));
    }
    const Complex tau = point("0.13", "0.9");
    for (const Mat2& g : {Mat2{1, 0, 12, 1}, Mat2{7, 2, 24, 7}}) {
        const i64 N = cutoff_for_height(mobius(g, tau).im, tol(9), 0.5);
        const ResidualResult r = modularity_residual([N](const Complex& z) { return eval_cohen_eisenstein(3, 3, z, N); }, g, 3, tau);
        CHECK(r.residual <= Real(1e-5));
        // H_{1,3} alone is not modular.
        const ResidualResult r1 = modularity_residual([N](const Complex& z) { return eval_cohen_eisenstein(1, 3, z, N); }, g, 3, tau);
        CHECK(r1.residual > Real(1e-3));
    }
}

TEST_CASE("E expansion") {
    const Real v(8);
    const Real pi = const_pi();
    const SeriesEvaluation e = eval_E(Complex(Real(0), v), 30);
    const Real constant = bmp::sqrt(v) / 3 - bmp::log(v) / (4 * pi) -
                          (2 * const_log2() - const_euler() - zeta_log_derivative_at_2()) / pi;
    CHECK(abs(e.value - Complex(constant)) < tol(12));
    CHECK(e.note.find("omitted") != std::string::npos);
    const SeriesEvaluation w = eval_E(Complex(Real(0), v), 30, NegativeIndexMode::hurwitz_weighted);
    CHECK(w.note.find("weighted") != std::string::npos);
    // Envelope of the coefficients used for the tail bound.
    for (i64 d = 5; d <= 600; ++d)
        if (is_nonsquare_discriminant(d)) CHECK(h_star(d) / bmp::sqrt(Real(d)) <= 4 * bmp::pow(1 + bmp::log(Real(d)), 2));
    for (i64 m = 1; m <= 24; ++m) CHECK(bmp::abs(b_square(m)) + 1 <= 4 * bmp::pow(1 + bmp::log(Real(m * m)), 2));
}

TEST_CASE("G expansion") {
    const i64 p = 3;
    const Real pi = const_pi();
    const Real v(8);
    const SeriesEvaluation e = eval_G(p, Complex(Real(0), v), 40);
    const Complex constant = Complex(2 * bmp::sqrt(v) / 3 - bmp::log(16 * v) / (2 * pi * (p + 1))) +
                             Complex(Real(2), Real(-2)) * (pi / 3) * c_zero(p);
    CHECK(abs(e.value - constant) < tol(12));
    // Envelope of the coefficients used for the tail bound.
    const Real norm = 2 * bmp::sqrt(Real(2)) * pi / 3;
    for (i64 n = 5; n <= 600; ++n) {
        const Real env = 10 * bmp::pow(1 + bmp::log(Real(n)), 2);
        if (is_nonsquare_discriminant(n)) CHECK(norm * abs(plus_value_at_32(p, n)) <= env);
        if (n % 4 == 0 || n % 4 == 3) CHECK(norm / bmp::sqrt(pi) * abs(c_negative(p, -n)) <= env);
    }
    // End-to-end modularity at the documented point.
    const Complex tau = point("0.21", "1.1");
    const Mat2 g{1, 0, 12, 1};
    const i64 N = std::max<i64>(600, cutoff_for_height(mobius(g, tau).im, tol(8), 0));
    const ResidualResult r = modularity_residual([N](const Complex& z) { return eval_G(3, z, N); }, g, 1, tau);
    CHECK(r.residual <= Real(1e-4));
}

TEST_CASE("coefficient-level shadow relation for negative indices") {
    for (i64 p : {3, 5, 7})
        for (i64 n = 3; n <= 120; ++n) {
            if (n % 4 != 0 && n % 4 != 3) continue;
            const Rational expect = Rational(12) / Rational(p) *
                                    (gen_hurwitz(1, p, n) + Rational(p) / Rational(1 - p) * gen_hurwitz(p, p, n));
            CHECK(c_negative_rational_part(p, -n) == expect);
        }
}

TEST_CASE("evaluations are reproducible") {
    const Complex tau = point("0.17", "0.8");
    const SeriesEvaluation a = eval_H_zagier(tau, 300);
    const SeriesEvaluation b = eval_H_zagier(tau, 300);
    CHECK(a.value.re == b.value.re);
    CHECK(a.value.im == b.value.im);
    const SeriesEvaluation c = eval_G(3, tau, 120);
    const SeriesEvaluation d = eval_G(3, tau, 120);
    CHECK(c.value.re == d.value.re);
    CHECK(c.value.im == d.value.im);
}
