#include "qtv/numeric.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <iomanip>
#include <stdexcept>

namespace qtv {

namespace {

unsigned g_digits = 64;

using MpfrUnary = int (*)(mpfr_ptr, mpfr_rnd_t);

Real cached_constant(std::map<unsigned, Real>& cache, std::mutex& mu, MpfrUnary fn) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g_digits);
    if (it != cache.end()) return it->second;
    Real r;
    fn(r.backend().data(), MPFR_RNDN);
    cache.emplace(g_digits, r);
    return r;
}

}  // namespace

void set_working_digits(unsigned digits) {
    if (digits < 10) throw std::invalid_argument("set_working_digits: need at least 10 digits");
    g_digits = digits;
    Real::default_precision(digits);
}

unsigned working_digits() { return g_digits; }

namespace {
// Library default precision, applied before any user code runs.
const bool g_default_applied = (set_working_digits(64), true);
}  // namespace

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(g_digits) {
    set_working_digits(digits);
}

PrecisionGuard::~PrecisionGuard() { set_working_digits(saved_); }

Real const_pi() {
    static std::map<unsigned, Real> cache;
    static std::mutex mu;
    return cached_constant(cache, mu, mpfr_const_pi);
}

Real const_euler() {
    static std::map<unsigned, Real> cache;
    static std::mutex mu;
    return cached_constant(cache, mu, mpfr_const_euler);
}

Real const_log2() {
    static std::map<unsigned, Real> cache;
    static std::mutex mu;
    return cached_constant(cache, mu, mpfr_const_log2);
}

Real working_epsilon() {
    Real ten(10);
    return bmp::pow(ten, -static_cast<int>(g_digits));
}

Real to_real(const Rational& q) {
    Real num(bmp::numerator(q).str());
    Real den(bmp::denominator(q).str());
    return num / den;
}

Real to_real(const BigInt& z) { return Real(z.str()); }

Real real_from_string(const std::string& s) { return Real(s); }

std::string to_string(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << std::scientific << x;
    return os.str();
}

std::string to_string(const Rational& q) { return q.str(); }

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    Real i = (im * o.re - re * o.im) / d;
    re = r;
    im = i;
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator*(const Real& s, const Complex& a) { return Complex(s * a.re, s * a.im); }
Complex operator*(const Complex& a, const Real& s) { return Complex(s * a.re, s * a.im); }
Complex operator/(const Complex& a, const Real& s) { return Complex(a.re / s, a.im / s); }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return bmp::sqrt(norm2(z)); }
Real arg(const Complex& z) { return bmp::atan2(z.im, z.re); }

Complex exp(const Complex& z) {
    Real m = bmp::exp(z.re);
    return Complex(m * bmp::cos(z.im), m * bmp::sin(z.im));
}

Complex log(const Complex& z) { return Complex(bmp::log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
    Real r = abs(z);
    if (r == 0) return Complex();
    Real a = bmp::sqrt((r + bmp::abs(z.re)) / 2);
    if (z.re >= 0) return Complex(a, z.im / (2 * a));
    Real b = z.im >= 0 ? a : Real(-a);
    return Complex(bmp::abs(z.im) / (2 * a), b);
}

Complex cis(const Real& theta) { return Complex(bmp::cos(theta), bmp::sin(theta)); }

Complex expi2pi(const Real& x) {
    // Reduce to [0,1) first so large arguments keep full relative accuracy.
    Real f = x - bmp::floor(x);
    return cis(2 * const_pi() * f);
}

Complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Complex(Real(1), Real(0));
        case 1: return Complex(Real(0), Real(1));
        case 2: return Complex(Real(-1), Real(0));
        default: return Complex(Real(0), Real(-1));
    }
}

const Complex& unit_i() {
    static thread_local Complex i;
    i = Complex(Real(0), Real(1));
    return i;
}

std::string to_string(const Complex& z, int digits) {
    std::string s = to_string(z.re, digits);
    s += z.im < 0 ? " - " : " + ";
    s += to_string(bmp::abs(z.im), digits);
    s += "i";
    return s;
}

}  // namespace qtv
