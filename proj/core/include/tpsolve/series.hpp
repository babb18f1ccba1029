#ifndef TPSOLVE_SERIES_HPP
#define TPSOLVE_SERIES_HPP

#include <span>
#include <vector>

namespace tps {

/// Truncated power series about a base point x0: sum of c_k (x - x0)^k
/// for k = 0..order. Immutable after construction; all operations are
/// pure and return new values.
///
/// Every binary operation requires both operands to share base point and
/// order. Operations never grow the order: degrees above the truncation
/// order are discarded.
class Series {
public:
    /// Builds a series from its coefficient list; order = coeffs.size() - 1.
    /// Throws ContractError if coeffs is empty or contains NaN/Inf.
    Series(double base_point, std::vector<double> coeffs);

    static Series zero(double base_point, int order);
    static Series constant(double value, double base_point, int order);
    static Series one(double base_point, int order) { return constant(1.0, base_point, order); }

    /// The identity function x, expanded about base_point: [x0, 1, 0, ...].
    static Series variable(double base_point, int order);

    /// c * (x - x0)^degree.
    static Series monomial(double coefficient, int degree, double base_point, int order);

    double base_point() const { return base_point_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coeffs() const { return coeffs_; }

    /// Coefficient of (x - x0)^k; zero for k > order.
    double operator[](int k) const;

    /// Horner evaluation of the truncated polynomial at x.
    double eval(double x) const;

    /// Largest absolute coefficient.
    double max_abs_coeff() const;

    /// Bit-exact comparison (same base point, order, and coefficients).
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    double base_point_;
    std::vector<double> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& s);
Series operator*(const Series& a, double k);
Series operator*(double k, const Series& a);

/// Cauchy product truncated at the shared order.
Series operator*(const Series& a, const Series& b);

/// Derivative at the same order: out_k = (k+1) c_{k+1}, out_N = 0. The top
/// degree carries no information; callers doing residual checks must narrow
/// their claims accordingly. Requires order >= 1.
Series derivative(const Series& s);

/// Definite integral from the base point, truncated at the same order:
/// out_0 = 0, out_k = c_{k-1} / k. The input's top coefficient is dropped.
Series antiderivative(const Series& s);

/// Series exponential. e_0 = exp(s_0) and k e_k = sum_{j=1..k} j s_j e_{k-j},
/// the coefficient form of e' = s' e. Throws NumericRangeError when exp(s_0)
/// overflows.
Series exp_series(const Series& s);

/// Series reciprocal. Requires s(x0) != 0, otherwise SingularPointError.
/// r_0 = 1/s_0 and r_k = -(1/s_0) sum_{j=1..k} s_j r_{k-j}; s * reciprocal(s)
/// is the one-series up to the truncation order in exact arithmetic.
Series reciprocal(const Series& s);

/// Result of a relative-to-scale coefficient comparison.
struct SeriesMatch {
    bool equal = true;
    int first_failing_degree = -1; ///< -1 when equal
    double max_abs_diff = 0.0;
    double scale = 1.0; ///< max(1, largest |coeff| of either operand)
};

/// Compares coefficients of degrees 0..up_to: equal iff every
/// |a_k - b_k| <= tol * max(1, max|a_i|, max|b_i|). Requires a shared base
/// point and up_to <= min(order a, order b).
SeriesMatch approx_equal(const Series& a, const Series& b, double tol, int up_to);

} // namespace tps

#endif
