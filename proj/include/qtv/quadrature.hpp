// Numerical integration on finite intervals at the working precision.
// Two independent schemes so results can be cross-checked against each other.
#pragma once

#include "qtv/numeric.hpp"

#include <functional>

namespace qtv {

struct QuadratureResult {
    Real value;
    Real error_bound;
    long evaluations = 0;
    bool converged = false;
};

using RealFunction = std::function<Real(const Real&)>;

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], computed by
// Newton iteration on the Legendre recurrence and cached per precision.
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussRule& gauss_legendre_rule(int n);

// Adaptive bisection with a 20/40-point Gauss-Legendre pair per panel.
// The panel error estimate is the difference of the two rules.
QuadratureResult integrate_gauss_adaptive(const RealFunction& f, const Real& a, const Real& b,
                                          const Real& tol, int max_depth = 40);

// Double-exponential (tanh-sinh) rule with step halving until successive
// levels agree; tolerates integrable endpoint singularities.
QuadratureResult integrate_tanh_sinh(const RealFunction& f, const Real& a, const Real& b,
                                     const Real& tol, int max_level = 12);

}  // namespace qtv
