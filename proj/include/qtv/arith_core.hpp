// Exact integer primitives: factorization, multiplicative functions,
// the Kronecker symbol and the odd theta-multiplier constant.
#pragma once

#include "qtv/numeric.hpp"

#include <vector>

namespace qtv {

struct PrimePower {
    i64 prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

// Sorted by prime; product of prime^exponent equals |n|.
using Factorization = std::vector<PrimePower>;

// Trial division; throws std::invalid_argument for n == 0.
Factorization factorize(i64 n);

int moebius(i64 n);
i64 euler_phi(i64 n);
bool is_prime(i64 n);
bool is_squarefree(i64 n);
// All positive divisors of |n| in increasing order.
std::vector<i64> divisors(i64 n);
// Product of the distinct primes dividing |n|.
i64 radical(i64 n);

// Full Kronecker symbol (a/b), including b <= 0 and even b.
int kronecker(i64 a, i64 b);

// Largest e with p^e | n; throws for n == 0 or p < 2.
int valuation(i64 n, i64 p);

// Theta multiplier for odd d: 1 when d = 1 mod 4, i when d = 3 mod 4.
enum class EpsD { one, i };
EpsD eps_odd(i64 d);
Complex eps_value(EpsD e);

i64 ipow(i64 base, int exp);
i64 gcd(i64 a, i64 b);
// Integer square root floor(sqrt(n)) for n >= 0.
i64 isqrt(i64 n);
bool is_square(i64 n);
// Nonnegative residue of a mod m (m > 0).
i64 mod(i64 a, i64 m);

// Sum over squarefree-level divisors: sum_{l | N} mu(l) * chi_l(a)^2, with
// chi_l(a)^2 the principal character modulo l computed via Kronecker symbols.
int level_reduction_sum(i64 N, i64 a);

}  // namespace qtv
