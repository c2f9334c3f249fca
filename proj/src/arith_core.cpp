#include "qtv/arith_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qtv {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    auto r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

Factorization factorize(i64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    Factorization f;
    i64 m = n < 0 ? -n : n;
    for (i64 q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
        if (m % q != 0) continue;
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        f.push_back({q, e});
    }
    if (m > 1) f.push_back({m, 1});
    return f;
}

int moebius(i64 n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int r = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return 0;
        r = -r;
    }
    return r;
}

i64 euler_phi(i64 n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    i64 r = n;
    for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
    return r;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].exponent == 1;
}

bool is_squarefree(i64 n) {
    if (n == 0) return false;
    for (const auto& pp : factorize(n))
        if (pp.exponent > 1) return false;
    return true;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> ds{1};
    for (const auto& pp : factorize(n)) {
        std::size_t base = ds.size();
        i64 pk = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t k = 0; k < base; ++k) ds.push_back(ds[k] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

i64 radical(i64 n) {
    i64 r = 1;
    for (const auto& pp : factorize(n)) r *= pp.prime;
    return r;
}

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, i64 n) {
    a = mod(a, n);
    int r = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 n8 = n % 8;
            if (n8 == 3 || n8 == 5) r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

}  // namespace

int kronecker(i64 a, i64 b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    int r = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) r = -r;
    }
    while (b % 2 == 0) {
        b /= 2;
        if (a % 2 == 0) return 0;
        i64 a8 = mod(a, 8);
        if (a8 == 3 || a8 == 5) r = -r;
    }
    if (b == 1) return r;
    return r * jacobi(a, b);
}

int valuation(i64 n, i64 p) {
    if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
    if (p < 2) throw std::invalid_argument("valuation: p must be prime");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

EpsD eps_odd(i64 d) {
    if (d % 2 == 0) throw std::invalid_argument("eps_odd: d must be odd");
    return mod(d, 4) == 1 ? EpsD::one : EpsD::i;
}

Complex eps_value(EpsD e) {
    return e == EpsD::one ? Complex(Real(1), Real(0)) : Complex(Real(0), Real(1));
}

int level_reduction_sum(i64 N, i64 a) {
    if (N < 1 || !is_squarefree(N)) throw std::invalid_argument("level_reduction_sum: N must be squarefree");
    int s = 0;
    for (i64 l : divisors(N)) {
        int k = kronecker(a, l);
        s += moebius(l) * k * k;
    }
    return s;
}

}  // namespace qtv
