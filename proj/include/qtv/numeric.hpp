// Numeric carriers shared by every module: exact integers and rationals,
// variable-precision reals, and a small complex type over those reals.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace qtv {

namespace bmp = boost::multiprecision;

using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;
using BigInt = bmp::mpz_int;
using Rational = bmp::mpq_rational;
using i64 = std::int64_t;

// Working precision in decimal digits. Reals created afterwards use it.
void set_working_digits(unsigned digits);
unsigned working_digits();

// Temporarily raises the working precision; restores it on destruction.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Constants at the current working precision (cached per precision).
Real const_pi();
Real const_euler();
Real const_log2();

// 10^(-digits) at the current precision: the natural "zero" threshold.
Real working_epsilon();

Real to_real(const Rational& q);
Real to_real(const BigInt& z);
Real real_from_string(const std::string& s);

// Fixed-format rendering with the given number of significant digits.
std::string to_string(const Real& x, int digits = 20);
std::string to_string(const Rational& q);

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(const Real& r, const Real& i) : re(r), im(i) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator*(const Real& s, const Complex& a);
Complex operator*(const Complex& a, const Real& s);
Complex operator/(const Complex& a, const Real& s);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm2(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
// Principal square root (branch cut on the negative real axis).
Complex sqrt(const Complex& z);
// e^{2 pi i x}
Complex expi2pi(const Real& x);
// e^{i theta}
Complex cis(const Real& theta);
// Powers of i: i^k for integer k.
Complex i_pow(int k);
const Complex& unit_i();

std::string to_string(const Complex& z, int digits = 20);

}  // namespace qtv
