#ifndef TPSOLVE_ERRORS_HPP
#define TPSOLVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tps {

/// Violated API contract: mismatched base points/orders, bad arguments,
/// non-finite coefficients.
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// A series reciprocal was requested for a series that vanishes at its
/// base point, i.e. the expansion point sits on a singularity.
class SingularPointError : public std::domain_error {
public:
    explicit SingularPointError(const std::string& what) : std::domain_error(what) {}
};

/// A fixed-point iteration did not stabilize within the caller-provided
/// iteration budget.
class IterationLimitError : public std::runtime_error {
public:
    explicit IterationLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric operation left the representable range (e.g. exp overflow).
class NumericRangeError : public std::range_error {
public:
    explicit NumericRangeError(const std::string& what) : std::range_error(what) {}
};

/// A constructor parameter is outside its admissible set (e.g. a = 0 in
/// a catalog equation that requires a != 0).
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace tps

#endif
