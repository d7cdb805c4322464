#pragma once

#include <cstddef>
#include <span>

#include "spray/spray.hpp"

namespace spray {

/// Value of p at point x. Throws SingularityError when a zero coordinate
/// meets a negative exponent.
double evaluate(const Spray& p, std::span<const double> x);

/// Sets variable `dim` (1-based) to `value` and removes that dimension, so
/// the result has arity(p) - 1. Requires arity(p) >= 2.
Spray substitute(const Spray& p, std::size_t dim, double value);

/// order-fold partial derivative with respect to variable `dim` (1-based).
/// Negative exponents follow the Laurent power rule.
Spray deriv(const Spray& p, std::size_t dim, unsigned order = 1);

/// Mixed partial derivative; orders[i] is the order in variable i+1.
Spray aderiv(const Spray& p, std::span<const unsigned> orders);

/// Callable wrapper: as_function(p)(x) == evaluate(p, x).
class PolyFunction {
public:
    explicit PolyFunction(Spray p) : p_(std::move(p)) {}
    double operator()(std::span<const double> x) const { return evaluate(p_, x); }

private:
    Spray p_;
};

inline PolyFunction as_function(Spray p) { return PolyFunction(std::move(p)); }

}  // namespace spray
