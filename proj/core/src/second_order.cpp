#include "tpsolve/second_order.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpsolve/errors.hpp"

namespace tps {

SecondOrderProblem::SecondOrderProblem(Series p_in, Series q_in, Series f_in)
    : p(std::move(p_in)), q(std::move(q_in)), f(std::move(f_in)) {
    if (p.base_point() != q.base_point() || p.base_point() != f.base_point() ||
        p.order() != q.order() || p.order() != f.order())
        throw ContractError("SecondOrderProblem: p, q, f must share base point and order");
    if (p.order() < 2)
        throw ContractError("SecondOrderProblem: order must be >= 2");
}

SecondOrderProblem SecondOrderProblem::homogeneous() const {
    return SecondOrderProblem(p, q, Series::zero(base_point(), order()));
}

Series compute_beta(const Series& p) {
    return exp_series(antiderivative(p * 0.5));
}

Series compute_h(const Series& p, const Series& q) {
    if (p.base_point() != q.base_point() || p.order() != q.order())
        throw ContractError("compute_h: p and q must share base point and order");
    return derivative(p) * 0.5 + (p * p) * 0.25 - q;
}

std::pair<Series, int> compute_alpha(const Series& h, int max_iters) {
    if (max_iters < 1)
        throw ContractError("compute_alpha: max_iters must be >= 1");

    const Series one = Series::one(h.base_point(), h.order());
    Series alpha = one;
    for (int it = 1; it <= max_iters; ++it) {
        Series next = one + antiderivative(antiderivative(h * alpha));
        if (next == alpha)
            return {std::move(next), it};
        alpha = std::move(next);
    }
    throw IterationLimitError("compute_alpha: no stabilization within " +
                              std::to_string(max_iters) + " iterations (order " +
                              std::to_string(h.order()) +
                              " is guaranteed within ceil(order/2)+1)");
}

std::pair<Series, Series> homogeneous_solutions(const FactorBundle& factors) {
    const Series y1 = factors.alpha * reciprocal(factors.beta);
    const Series v = antiderivative(reciprocal(factors.alpha * factors.alpha));
    return {y1, y1 * v};
}

Series particular_solution(const FactorBundle& factors, const Series& f) {
    const Series y1 = factors.alpha * reciprocal(factors.beta);
    const Series inner = antiderivative(factors.alpha * factors.beta * f);
    const Series inv_alpha_sq = reciprocal(factors.alpha * factors.alpha);
    return y1 * antiderivative(inv_alpha_sq * inner);
}

namespace {

int alpha_iteration_budget(int order) {
    return (order + 1) / 2 + 1; // ceil(order/2) + 1
}

} // namespace

std::pair<SolutionBundle, FactorBundle> solve_with_factors(const SecondOrderProblem& prob) {
    FactorBundle factors{
        Series::one(prob.base_point(), prob.order()),
        compute_beta(prob.p),
        compute_h(prob.p, prob.q),
        0,
    };
    auto [alpha, iters] = compute_alpha(factors.h, alpha_iteration_budget(prob.order()));
    factors.alpha = std::move(alpha);
    factors.alpha_iterations = iters;

    auto [y1, y2] = homogeneous_solutions(factors);
    SolutionBundle sol{
        std::move(y1),
        std::move(y2),
        particular_solution(factors, prob.f),
        exp_series(antiderivative(prob.p) * -1.0),
    };
    return {std::move(sol), std::move(factors)};
}

SolutionBundle solve(const SecondOrderProblem& prob) {
    return solve_with_factors(prob).first;
}

ResidualReport residual_second_order(const SecondOrderProblem& prob, const Series& y, double tol) {
    if (y.base_point() != prob.base_point() || y.order() != prob.order())
        throw ContractError("residual_second_order: y must share base point and order with problem");

    const Series ddy = derivative(derivative(y));
    const Series pdy = prob.p * derivative(y);
    const Series qy = prob.q * y;
    const Series r = ddy + pdy + qy - prob.f;

    ResidualReport rep;
    rep.verified_degree = prob.order() - 2;
    rep.tolerance_used = tol;
    rep.scale = std::max({1.0, ddy.max_abs_coeff(), pdy.max_abs_coeff(), qy.max_abs_coeff(),
                          prob.f.max_abs_coeff()});
    for (int k = 0; k <= rep.verified_degree; ++k) {
        rep.residual_coeffs.push_back(std::abs(r[k]));
        rep.max_residual = std::max(rep.max_residual, rep.residual_coeffs.back());
    }
    return rep;
}

Series wronskian(const Series& y1, const Series& y2) {
    return y1 * derivative(y2) - derivative(y1) * y2;
}

} // namespace tps
