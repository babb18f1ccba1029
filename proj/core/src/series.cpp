#include "tpsolve/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpsolve/errors.hpp"

namespace tps {

namespace {

// Neumaier-compensated accumulator for the convolution loops. Series stay
// short (order <= a few hundred) so the extra flops are irrelevant, while
// the residual certificates gain roughly one digit.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

void require_compatible(const Series& a, const Series& b, const char* op) {
    if (a.base_point() != b.base_point())
        throw ContractError(std::string(op) + ": base point mismatch (" +
                            std::to_string(a.base_point()) + " vs " +
                            std::to_string(b.base_point()) + ")");
    if (a.order() != b.order())
        throw ContractError(std::string(op) + ": order mismatch (" +
                            std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()) + ")");
}

} // namespace

Series::Series(double base_point, std::vector<double> coeffs)
    : base_point_(base_point), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw ContractError("Series: coefficient list must not be empty");
    if (!std::isfinite(base_point_))
        throw ContractError("Series: base point must be finite");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!std::isfinite(coeffs_[k]))
            throw ContractError("Series: non-finite coefficient at degree " + std::to_string(k));
}

Series Series::zero(double base_point, int order) {
    return constant(0.0, base_point, order);
}

Series Series::constant(double value, double base_point, int order) {
    if (order < 0)
        throw ContractError("Series: order must be non-negative");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return Series(base_point, std::move(c));
}

Series Series::variable(double base_point, int order) {
    if (order < 1)
        throw ContractError("Series::variable: order must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = base_point;
    c[1] = 1.0;
    return Series(base_point, std::move(c));
}

Series Series::monomial(double coefficient, int degree, double base_point, int order) {
    if (degree < 0 || degree > order)
        throw ContractError("Series::monomial: degree must lie in [0, order]");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[static_cast<std::size_t>(degree)] = coefficient;
    return Series(base_point, std::move(c));
}

double Series::operator[](int k) const {
    if (k < 0)
        throw ContractError("Series: negative coefficient index");
    if (k > order())
        return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double Series::eval(double x) const {
    const double t = x - base_point_;
    double acc = coeffs_.back();
    for (int k = order() - 1; k >= 0; --k)
        acc = acc * t + coeffs_[static_cast<std::size_t>(k)];
    return acc;
}

double Series::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

Series operator+(const Series& a, const Series& b) {
    require_compatible(a, b, "Series::add");
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (int k = 0; k <= b.order(); ++k)
        c[static_cast<std::size_t>(k)] += b[k];
    return Series(a.base_point(), std::move(c));
}

Series operator-(const Series& a, const Series& b) {
    require_compatible(a, b, "Series::sub");
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (int k = 0; k <= b.order(); ++k)
        c[static_cast<std::size_t>(k)] -= b[k];
    return Series(a.base_point(), std::move(c));
}

Series operator-(const Series& s) {
    std::vector<double> c(s.coeffs().begin(), s.coeffs().end());
    for (double& x : c)
        x = -x;
    return Series(s.base_point(), std::move(c));
}

Series operator*(const Series& a, double k) {
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (double& x : c)
        x *= k;
    return Series(a.base_point(), std::move(c));
}

Series operator*(double k, const Series& a) { return a * k; }

Series operator*(const Series& a, const Series& b) {
    require_compatible(a, b, "Series::mul");
    const int n = a.order();
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        CompensatedSum acc;
        for (int i = 0; i <= k; ++i)
            acc.add(a[i] * b[k - i]);
        out[static_cast<std::size_t>(k)] = acc.value();
    }
    return Series(a.base_point(), std::move(out));
}

Series derivative(const Series& s) {
    const int n = s.order();
    if (n < 1)
        throw ContractError("derivative: order must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = (k + 1) * s[k + 1];
    return Series(s.base_point(), std::move(out));
}

Series antiderivative(const Series& s) {
    const int n = s.order();
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k)
        out[static_cast<std::size_t>(k)] = s[k - 1] / k;
    return Series(s.base_point(), std::move(out));
}

Series exp_series(const Series& s) {
    const int n = s.order();
    const double e0 = std::exp(s[0]);
    if (!std::isfinite(e0))
        throw NumericRangeError("exp_series: exp(" + std::to_string(s[0]) + ") overflows");
    std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
    e[0] = e0;
    for (int k = 1; k <= n; ++k) {
        CompensatedSum acc;
        for (int j = 1; j <= k; ++j)
            acc.add(j * s[j] * e[static_cast<std::size_t>(k - j)]);
        e[static_cast<std::size_t>(k)] = acc.value() / k;
    }
    return Series(s.base_point(), std::move(e));
}

Series reciprocal(const Series& s) {
    if (s[0] == 0.0)
        throw SingularPointError("reciprocal: series vanishes at its base point " +
                                 std::to_string(s.base_point()));
    const int n = s.order();
    std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
    const double inv = 1.0 / s[0];
    r[0] = inv;
    for (int k = 1; k <= n; ++k) {
        CompensatedSum acc;
        for (int j = 1; j <= k; ++j)
            acc.add(s[j] * r[static_cast<std::size_t>(k - j)]);
        r[static_cast<std::size_t>(k)] = -inv * acc.value();
    }
    return Series(s.base_point(), std::move(r));
}

SeriesMatch approx_equal(const Series& a, const Series& b, double tol, int up_to) {
    if (a.base_point() != b.base_point())
        throw ContractError("approx_equal: base point mismatch");
    if (up_to < 0 || up_to > std::min(a.order(), b.order()))
        throw ContractError("approx_equal: up_to must lie in [0, min order]");

    SeriesMatch m;
    m.scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
    for (int k = 0; k <= up_to; ++k) {
        const double d = std::abs(a[k] - b[k]);
        m.max_abs_diff = std::max(m.max_abs_diff, d);
        if (m.equal && d > tol * m.scale) {
            m.equal = false;
            m.first_failing_degree = k;
        }
    }
    return m;
}

} // namespace tps
