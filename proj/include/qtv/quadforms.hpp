// Integral binary quadratic forms: reduction, class enumeration, units,
// Gamma_0(p)-orbits and numerical geodesic lengths.
#pragma once

#include "qtv/numeric.hpp"
#include "qtv/quadrature.hpp"

#include <string>
#include <vector>

namespace qtv {

// Desk-scale coefficients fit in 64 bits; units (which grow exponentially)
// are carried as BigInt in PellUnit.
struct QuadForm {
    i64 a = 0, b = 0, c = 0;
    i64 disc() const { return b * b - 4 * a * c; }
    i64 content() const;
    bool operator==(const QuadForm&) const = default;
    auto operator<=>(const QuadForm&) const = default;
};

std::string to_string(const QuadForm& q);

// Integer 2x2 matrix acting on column vectors (x, y).
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;
    i64 det() const { return a * d - b * c; }
    bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 inverse(const Mat2& m);  // for det 1
Mat2 mat_T(i64 k = 1);        // [1 k; 0 1]
Mat2 mat_S();                 // [0 -1; 1 0]

// (Q o g)(x, y) = Q(g (x, y)); so (Q o g) o h = Q o (g h).
QuadForm act(const QuadForm& q, const Mat2& g);

// Gauss reduction of a positive definite form: |b| <= a <= c and b >= 0
// when |b| = a or a = c. The optional matrix m satisfies q o m = result.
QuadForm reduce_definite(const QuadForm& q, Mat2* m = nullptr);

// Indefinite (nonsquare discriminant) reduction: 0 < b < sqrt(D) and
// sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced_indefinite(const QuadForm& q);
// One step of the cycle: q o [0 -1; 1 t] with the partner b chosen in
// (sqrt(D) - 2|c|, sqrt(D)). Returns the step matrix in m if given.
QuadForm rho_step(const QuadForm& q, Mat2* m = nullptr);
// Reaches a reduced form by normalized rho steps; q o m = result.
QuadForm reduce_indefinite(const QuadForm& q, Mat2* m = nullptr);
// The full cycle of reduced forms starting at a reduced form.
std::vector<QuadForm> reduced_cycle(const QuadForm& reduced);

// True when D = 0, 1 mod 4 and D is not a perfect square (D may be negative).
bool is_nonsquare_discriminant(i64 D);

// One representative per SL2(Z)-class of discriminant D. For D < 0 the
// positive definite reduced forms; for D > 0 the first form of each cycle.
// Imprimitive forms are included iff allow_imprimitive.
std::vector<QuadForm> class_reps(i64 D, bool allow_imprimitive);

// Number of primitive classes: for D < 0 the usual count; for D > 0 the
// class number in the wide sense (see narrow_class_number).
i64 class_number(i64 D);
// For D > 0: number of SL2(Z)-classes of primitive forms (cycles).
i64 narrow_class_number(i64 D);

struct PellUnit {
    BigInt t, u;
    i64 D = 0;
    int norm = 1;  // +1 when t^2 - D u^2 = 4, -1 when it is -4
    Real value() const;      // (t + u sqrt(D)) / 2
    Real log_value() const;  // log of value(), computed stably
};

// Minimal t, u > 0 with t^2 - D u^2 = 4 (the generator of the automorphs).
PellUnit pell_automorph_unit(i64 D);
// Minimal unit of the order of discriminant D with t^2 - D u^2 = +-4.
PellUnit order_fundamental_unit(i64 D);
// As above, restricted to fundamental discriminants t > 1.
PellUnit field_fundamental_unit(i64 t);

// The automorph [ (t-bu)/2, -cu; au, (t+bu)/2 ] of q for the norm +1 unit;
// q must be primitive of content 1 scaled, so use the primitive part's unit.
Mat2 automorph(const QuadForm& q);

// Stabilizer of q in SL2(Z) (finite case only, D < 0): all g with q o g = q.
std::vector<Mat2> definite_stabilizer(const QuadForm& q);

// Some g0 in SL2(Z) with q1 o g0 = q2, or false when not SL2-equivalent.
bool sl2_transform(const QuadForm& q1, const QuadForm& q2, Mat2& g0);

// Is there gamma in Gamma_0(p) with q1 o gamma = q2?
bool gamma0_equivalent(i64 p, const QuadForm& q1, const QuadForm& q2);

enum class DefiniteConvention { positive_only, both_signs };

struct OrbitClass {
    QuadForm representative;
    int stabilizer_order = 1;  // in the projective image; 1 for indefinite
    bool infinite_stabilizer = false;
    int orbit_id = 0;
};

// Gamma_0(p)-orbits on forms of discriminant n with p | a (imprimitive
// forms included). coset_order permutes the p + 1 coset representatives
// (identity permutation when empty); used to test order independence.
std::vector<OrbitClass> gamma0_orbits(i64 p, i64 n, DefiniteConvention conv = DefiniteConvention::both_signs,
                                      const std::vector<int>& coset_order = {});

// Left coset representatives of Gamma_0(p) in SL2(Z): their first columns
// run over the projective line mod p.
std::vector<Mat2> gamma0_coset_reps(i64 p);

// Hyperbolic length of one period of the closed geodesic of q, by
// quadrature of sqrt(D) dtau / q(tau, 1) along the semicircle between the
// roots, from the apex to its image under the automorph.
QuadratureResult geodesic_integral_numeric(const QuadForm& q, const Real& tol);

}  // namespace qtv
