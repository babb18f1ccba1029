// Test-only reference implementations, kept independent of the solver
// paths they are used to check.

#ifndef TPSOLVE_TESTS_ORACLES_HPP
#define TPSOLVE_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "tpsolve/second_order.hpp"
#include "tpsolve/series.hpp"

namespace oracles {

/// Series exponential via the Taylor sum exp(s0) * sum (s - s0)^k / k!,
/// a different route than the production coefficient recurrence.
inline tps::Series taylor_exp(const tps::Series& s) {
    const int n = s.order();
    const tps::Series t = s - tps::Series::constant(s[0], s.base_point(), n);
    tps::Series power = tps::Series::one(s.base_point(), n);
    tps::Series acc = power;
    double inv_factorial = 1.0;
    for (int k = 1; k <= n; ++k) {
        power = power * t;
        inv_factorial /= k;
        acc = acc + power * inv_factorial;
    }
    return acc * std::exp(s[0]);
}

/// Power-series solution of y'' + p y' + q y = f with given initial data,
/// by direct coefficient recursion:
///   (k+1)(k+2) c_{k+2} = f_k - sum_j p_j (k-j+1) c_{k-j+1} - sum_j q_j c_{k-j}.
inline tps::Series frobenius_solution(const tps::SecondOrderProblem& prob, double y0, double dy0) {
    const int n = prob.order();
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[0] = y0;
    if (n >= 1)
        c[1] = dy0;
    for (int k = 0; k + 2 <= n; ++k) {
        double rhs = prob.f[k];
        for (int j = 0; j <= k; ++j) {
            rhs -= prob.p[j] * (k - j + 1) * c[static_cast<std::size_t>(k - j + 1)];
            rhs -= prob.q[j] * c[static_cast<std::size_t>(k - j)];
        }
        c[static_cast<std::size_t>(k + 2)] = rhs / ((k + 1.0) * (k + 2.0));
    }
    return tps::Series(prob.base_point(), std::move(c));
}

/// Classic fixed-step RK4 on y'' = f(x) - p(x) y' - q(x) y from (y0, dy0)
/// at x0; returns y(x_end).
inline double rk4_second_order(const std::function<double(double)>& p,
                               const std::function<double(double)>& q,
                               const std::function<double(double)>& f, double x0, double y0,
                               double dy0, double x_end, int steps) {
    const double h = (x_end - x0) / steps;
    double x = x0, y = y0, v = dy0;
    const auto accel = [&](double xx, double yy, double vv) {
        return f(xx) - p(xx) * vv - q(xx) * yy;
    };
    for (int i = 0; i < steps; ++i) {
        const double k1y = v, k1v = accel(x, y, v);
        const double k2y = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h, y + 0.5 * h * k1y, v + 0.5 * h * k1v);
        const double k3y = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h, y + 0.5 * h * k2y, v + 0.5 * h * k2v);
        const double k4y = v + h * k3v, k4v = accel(x + h, y + h * k3y, v + h * k3v);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        x += h;
    }
    return y;
}

/// Random series whose coefficients above `degree` are zero.
inline tps::Series random_polynomial(std::mt19937_64& rng, int degree, int order,
                                     double base_point = 0.0, double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = 0; k <= degree && k <= order; ++k)
        c[static_cast<std::size_t>(k)] = dist(rng);
    return tps::Series(base_point, std::move(c));
}

} // namespace oracles

#endif
