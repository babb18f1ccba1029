#ifndef TPSOLVE_FIRST_ORDER_HPP
#define TPSOLVE_FIRST_ORDER_HPP

#include <functional>
#include <utility>

#include "tpsolve/residual.hpp"
#include "tpsolve/series.hpp"

namespace tps {

/// y' + p(x) y = f(x) with integration constant c1, so y(x0) = c1.
/// p and f must share base point and order (order >= 1).
struct FirstOrderProblem {
    Series p;
    Series f;
    double c1 = 0.0;

    FirstOrderProblem(Series p_in, Series f_in, double c1_in);

    double base_point() const { return p.base_point(); }
    int order() const { return p.order(); }
};

/// Classical closed form: y = c1 exp(-P) + exp(-P) * I(exp(P) f) with
/// P = I(p), all integrals taken from the base point.
Series solve_integrating_factor(const FirstOrderProblem& prob);

/// Fixed-point iteration of the integral form y = c1 + I(f - p y), started
/// from the constant series c1. Each round freezes at least one further
/// degree, so the iterate becomes bit-stationary within order+1 rounds.
/// Returns the stationary series and the number of iterations performed;
/// throws IterationLimitError when max_iters rounds were not enough.
///
/// `observer`, when set, is called with (iteration index, iterate) after
/// every round; used by property tests to watch degrees freeze.
std::pair<Series, int> solve_recursive(
    const FirstOrderProblem& prob, int max_iters,
    const std::function<void(int, const Series&)>& observer = {});

/// Substitutes y into y' + p y - f. One derivative is taken, so the report
/// certifies degrees 0..order-1.
ResidualReport residual_first_order(const FirstOrderProblem& prob, const Series& y, double tol);

/// Checks the iterated-integral identity
///   J_i = I(p J_{i-1}), J_0 = 1   versus   (I p)^i / i!
/// on degrees 0..order-i, within 1e-10 relative to scale. Requires i >= 1;
/// meaningful while i <= order / (deg p + 1).
bool nested_integral_identity_check(const Series& p, int i);

} // namespace tps

#endif
