#ifndef TPSOLVE_CATALOG_HPP
#define TPSOLVE_CATALOG_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpsolve/second_order.hpp"

namespace tps {

/// Which series of a solve a golden coefficient refers to.
enum class SeriesRole { alpha, beta, y1, y2, yp };

std::string to_string(SeriesRole role);

/// An expected series coefficient with a note on where the value comes from.
struct GoldenCoefficient {
    SeriesRole role;
    int degree;
    double expected;
    std::string note;
};

/// Closed-form solution pair for value-level comparison. The stored values
/// and slopes are taken at the entry's base point and are used to match
/// initial conditions before comparing.
struct ReferenceEvaluator {
    std::function<double(double)> u1;
    std::function<double(double)> u2;
    double u1_value = 1.0;
    double u1_slope = 0.0;
    double u2_value = 0.0;
    double u2_slope = 1.0;
};

/// A named second-order equation: problem builder, golden coefficients,
/// optional closed-form reference, and the x-interval on which value-level
/// checks are meaningful (clear of singular points, truncation tail small).
///
/// `make_problem(order, base_point)` expands the coefficient functions about
/// an arbitrary regular base point; golden data and the reference evaluator
/// are tied to the entry's canonical `base_point`.
struct CatalogEntry {
    std::string name;
    std::map<std::string, double> params;
    double base_point = 0.0;
    std::array<double, 2> interval{-1.0, 1.0};
    std::function<SecondOrderProblem(int order, double base_point)> make_problem;
    std::vector<GoldenCoefficient> golden;
    std::optional<ReferenceEvaluator> reference;
};

/// y'' + (b/a) y' + (c/a) y = f. Reference basis from the characteristic
/// roots when b^2 - 4ac != 0 (real pair, or damped cos/sin); none for a
/// repeated root. Throws InvalidParameterError when a = 0.
///
/// `f_coeffs` is the coefficient prefix of the right-hand side about the
/// entry's base point; missing degrees are zero.
CatalogEntry make_constant_coefficients(double a, double b, double c,
                                        std::vector<double> f_coeffs = {});

/// y'' + (b/(a x)) y' + (c/(a x^2)) y = f, expanded about x0 = 1 where the
/// coefficients are analytic. Reference basis x^r1, x^r2 from the indicial
/// equation a r(r-1) + b r + c = 0 when its roots are real and distinct;
/// residual-only otherwise (repeated root brings in a log branch).
CatalogEntry make_cauchy_euler(double a, double b, double c,
                               std::vector<double> f_coeffs = {});

/// y'' - x y = f.
CatalogEntry make_airy(std::vector<double> f_coeffs = {});

/// y'' - (2x/(1-x^2)) y' + (l(l+1)/(1-x^2)) y = f.
CatalogEntry make_legendre(double l, std::vector<double> f_coeffs = {});

/// y'' - 2x y' + a y = f.
CatalogEntry make_hermite(double a, std::vector<double> f_coeffs = {});

/// y'' - (x/(1-x^2)) y' + (a^2/(1-x^2)) y = f. Reference pair
/// cos(a asin x), sin(a asin x)/a.
CatalogEntry make_chebyshev(double a, std::vector<double> f_coeffs = {});

/// The six stock entries with their default parameters.
std::vector<CatalogEntry> default_catalog();

/// Builds an entry by name, overlaying `params` onto the entry's defaults.
/// Throws InvalidParameterError for unknown names or parameters.
CatalogEntry make_entry(const std::string& name, const std::map<std::string, double>& params,
                        std::vector<double> f_coeffs = {});

/// One verification check with its worst observed error. For residual-family
/// checks the error is already divided by the report scale, so `pass` is
/// always `worst_error <= tolerance`.
struct CheckRow {
    std::string check;
    double worst_error = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct VerificationReport {
    std::string entry;
    std::vector<CheckRow> rows;
    bool all_passed() const;
};

/// Solves the entry at the given order and checks golden coefficients
/// (tolerance 1e-12 relative), residuals of y1/y2/yp, the Abel identity,
/// the defining identities beta' = beta p/2 and alpha'' = h alpha (all at
/// `tol` relative to scale), and reference agreement at 9 evenly spaced
/// points of the entry interval after initial-condition matching
/// (tolerance 1e-8). Requires order >= 12 so every golden degree exists;
/// check failures become report rows, not exceptions.
VerificationReport verify_entry(const CatalogEntry& entry, int order, double tol);

bool all_passed(const std::vector<VerificationReport>& reports);

} // namespace tps

#endif
