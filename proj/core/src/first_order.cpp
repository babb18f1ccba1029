#include "tpsolve/first_order.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpsolve/errors.hpp"

namespace tps {

FirstOrderProblem::FirstOrderProblem(Series p_in, Series f_in, double c1_in)
    : p(std::move(p_in)), f(std::move(f_in)), c1(c1_in) {
    if (p.base_point() != f.base_point() || p.order() != f.order())
        throw ContractError("FirstOrderProblem: p and f must share base point and order");
    if (p.order() < 1)
        throw ContractError("FirstOrderProblem: order must be >= 1");
    if (!std::isfinite(c1))
        throw ContractError("FirstOrderProblem: c1 must be finite");
}

Series solve_integrating_factor(const FirstOrderProblem& prob) {
    const Series P = antiderivative(prob.p);
    const Series decay = exp_series(P * -1.0); // exp(-I p), equals 1 at x0
    const Series grow = exp_series(P);
    return decay * prob.c1 + decay * antiderivative(grow * prob.f);
}

std::pair<Series, int> solve_recursive(const FirstOrderProblem& prob, int max_iters,
                                       const std::function<void(int, const Series&)>& observer) {
    if (max_iters < 1)
        throw ContractError("solve_recursive: max_iters must be >= 1");

    const Series c1 = Series::constant(prob.c1, prob.base_point(), prob.order());
    Series y = c1;
    for (int it = 1; it <= max_iters; ++it) {
        Series next = c1 + antiderivative(prob.f - prob.p * y);
        if (observer)
            observer(it, next);
        // Degree m of the next iterate depends only on degrees < m of the
        // current one, so the map is bit-stationary once all degrees froze.
        if (next == y)
            return {std::move(next), it};
        y = std::move(next);
    }
    throw IterationLimitError("solve_recursive: no stabilization within " +
                              std::to_string(max_iters) + " iterations (order " +
                              std::to_string(prob.order()) + " is guaranteed within order+1)");
}

ResidualReport residual_first_order(const FirstOrderProblem& prob, const Series& y, double tol) {
    if (y.base_point() != prob.base_point() || y.order() != prob.order())
        throw ContractError("residual_first_order: y must share base point and order with problem");

    const Series dy = derivative(y);
    const Series py = prob.p * y;
    const Series r = dy + py - prob.f;

    ResidualReport rep;
    rep.verified_degree = prob.order() - 1;
    rep.tolerance_used = tol;
    rep.scale = std::max({1.0, dy.max_abs_coeff(), py.max_abs_coeff(), prob.f.max_abs_coeff()});
    for (int k = 0; k <= rep.verified_degree; ++k) {
        rep.residual_coeffs.push_back(std::abs(r[k]));
        rep.max_residual = std::max(rep.max_residual, rep.residual_coeffs.back());
    }
    return rep;
}

bool nested_integral_identity_check(const Series& p, int i) {
    if (i < 1)
        throw ContractError("nested_integral_identity_check: i must be >= 1");
    const int n = p.order();

    Series lhs = Series::one(p.base_point(), n);
    for (int m = 0; m < i; ++m)
        lhs = antiderivative(p * lhs);

    const Series P = antiderivative(p);
    Series rhs = Series::one(p.base_point(), n);
    double inv_factorial = 1.0;
    for (int m = 1; m <= i; ++m) {
        rhs = rhs * P;
        inv_factorial /= m;
    }
    rhs = rhs * inv_factorial;

    const int window = std::max(0, n - i);
    return approx_equal(lhs, rhs, 1e-10, window).equal;
}

} // namespace tps
