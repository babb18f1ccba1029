#ifndef TPSOLVE_SECOND_ORDER_HPP
#define TPSOLVE_SECOND_ORDER_HPP

#include <utility>

#include "tpsolve/residual.hpp"
#include "tpsolve/series.hpp"

namespace tps {

/// y'' + p(x) y' + q(x) y = f(x); p, q, f share base point and order
/// (order >= 2).
struct SecondOrderProblem {
    Series p;
    Series q;
    Series f;

    SecondOrderProblem(Series p_in, Series q_in, Series f_in);

    double base_point() const { return p.base_point(); }
    int order() const { return p.order(); }

    /// The same equation with zero right-hand side, for residual checks of
    /// homogeneous solutions.
    SecondOrderProblem homogeneous() const;
};

/// The two integrating factors and the auxiliary function they derive from.
/// beta(x0) = 1, alpha(x0) = 1 and alpha'(x0) = 0 by construction.
struct FactorBundle {
    Series alpha;
    Series beta;
    Series h;
    int alpha_iterations = 0;
};

/// Canonical solution basis: y1(x0) = 1, y2(x0) = 0, y2'(x0) = 1; the
/// particular solution has yp(x0) = yp'(x0) = 0. abel_reference holds
/// exp(-I p), the Wronskian predicted by Abel's identity.
struct SolutionBundle {
    Series y1;
    Series y2;
    Series yp;
    Series abel_reference;
};

/// beta = exp(I(p/2)); satisfies beta' = beta p/2 and beta(x0) = 1.
Series compute_beta(const Series& p);

/// h = -q + p'/2 + p^2/4. One derivative of p is taken, so h carries
/// information only through degree order-1.
Series compute_h(const Series& p, const Series& q);

/// Fixed point of alpha = 1 + I(I(h alpha)) from alpha = 1. The double
/// integral raises the first affected degree by two per round, so the
/// iterate is bit-stationary within ceil(order/2)+1 rounds. The result
/// solves alpha'' = h alpha with alpha(x0) = 1, alpha'(x0) = 0.
std::pair<Series, int> compute_alpha(const Series& h, int max_iters);

/// y1 = alpha/beta and y2 = y1 * I(1/alpha^2). Throws SingularPointError
/// if alpha or beta vanish at the base point (they equal 1 by construction
/// when produced by this module).
std::pair<Series, Series> homogeneous_solutions(const FactorBundle& factors);

/// yp = y1 * I( (1/alpha^2) * I(alpha beta f) ); yp and yp' vanish at the
/// base point.
Series particular_solution(const FactorBundle& factors, const Series& f);

/// Full pipeline: beta, h, alpha, then the basis and particular solution.
SolutionBundle solve(const SecondOrderProblem& prob);

/// Variant that also returns the factors.
std::pair<SolutionBundle, FactorBundle> solve_with_factors(const SecondOrderProblem& prob);

/// Substitutes y into y'' + p y' + q y - f. Two derivatives are taken, so
/// the report certifies degrees 0..order-2. Pass prob.homogeneous() when y
/// is a homogeneous solution.
ResidualReport residual_second_order(const SecondOrderProblem& prob, const Series& y, double tol);

/// W = y1 y2' - y1' y2; meaningful through degree order-1.
Series wronskian(const Series& y1, const Series& y2);

} // namespace tps

#endif
