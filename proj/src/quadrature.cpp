#include "qtv/quadrature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qtv {

namespace {

GaussRule build_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real pi = const_pi();
    const Real tol = working_epsilon() * 10;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-like initial guess for the i-th largest root.
        Real x = bmp::cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        Real dp;
        for (int it = 0; it < 100; ++it) {
            Real p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (bmp::abs(dx) < tol) break;
        }
        // Recompute the derivative at the converged node.
        Real p0(1), p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = x;
        rule.nodes[n - 1 - i] = -x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

Real apply_rule(const GaussRule& rule, const RealFunction& f, const Real& a, const Real& b) {
    Real half = (b - a) / 2;
    Real mid = (a + b) / 2;
    Real s(0);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) s += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return s * half;
}

}  // namespace

const GaussRule& gauss_legendre_rule(int n) {
    static std::map<std::pair<int, unsigned>, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, working_digits());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_rule(n)).first;
    return it->second;
}

QuadratureResult integrate_gauss_adaptive(const RealFunction& f, const Real& a, const Real& b,
                                          const Real& tol, int max_depth) {
    const GaussRule& coarse = gauss_legendre_rule(20);
    const GaussRule& fine = gauss_legendre_rule(40);
    QuadratureResult res;
    res.value = 0;
    res.error_bound = 0;
    res.converged = true;
    const Real total = bmp::abs(b - a);
    struct Panel {
        Real lo, hi;
        int depth;
    };
    std::vector<Panel> stack{{a, b, 0}};
    while (!stack.empty()) {
        Panel pn = stack.back();
        stack.pop_back();
        Real g1 = apply_rule(coarse, f, pn.lo, pn.hi);
        Real g2 = apply_rule(fine, f, pn.lo, pn.hi);
        res.evaluations += 60;
        Real err = bmp::abs(g2 - g1);
        Real share = tol * bmp::abs(pn.hi - pn.lo) / total;
        if (err <= share || pn.depth >= max_depth) {
            if (err > share) res.converged = false;
            res.value += g2;
            res.error_bound += err;
            continue;
        }
        Real mid = (pn.lo + pn.hi) / 2;
        // Push the right half first so panels are processed left to right.
        stack.push_back({mid, pn.hi, pn.depth + 1});
        stack.push_back({pn.lo, mid, pn.depth + 1});
    }
    return res;
}

QuadratureResult integrate_tanh_sinh(const RealFunction& f, const Real& a, const Real& b,
                                     const Real& tol, int max_level) {
    const Real half_pi = const_pi() / 2;
    const Real half = (b - a) / 2;
    const Real mid = (a + b) / 2;
    const Real tiny = working_epsilon();
    // Abscissae beyond |t| = tmax map to within working precision of an endpoint.
    const Real tmax(6);

    auto term = [&](const Real& t, bool& usable) -> Real {
        Real u = half_pi * bmp::sinh(t);
        Real cu = bmp::cosh(u);
        Real w = half_pi * bmp::cosh(t) / (cu * cu);
        // Distance to the nearer endpoint, computed without cancellation.
        Real gap = 1 / (bmp::exp(2 * bmp::abs(u)) + 1) * 2;
        usable = gap > tiny;
        if (!usable) return Real(0);
        Real xp = t >= 0 ? Real(b - half * gap) : Real(a + half * gap);
        return w * f(xp);
    };

    QuadratureResult res;
    res.converged = false;
    Real h(1);
    bool ok = true;
    Real sum = term(Real(0), ok);
    res.evaluations = 1;
    for (Real t = h; t <= tmax; t += h) {
        bool up = true, un = true;
        sum += term(t, up) + term(-t, un);
        res.evaluations += 2;
    }
    Real prev = sum * h * half;
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        // Only the new odd-indexed abscissae need evaluating.
        for (Real t = h; t <= tmax; t += 2 * h) {
            bool up = true, un = true;
            sum += term(t, up) + term(-t, un);
            res.evaluations += 2;
        }
        Real cur = sum * h * half;
        Real diff = bmp::abs(cur - prev);
        res.value = cur;
        res.error_bound = diff;
        if (level >= 3 && diff <= tol) {
            res.converged = true;
            break;
        }
        prev = cur;
    }
    return res;
}

}  // namespace qtv
