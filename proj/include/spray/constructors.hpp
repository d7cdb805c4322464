#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "spray/spray.hpp"

namespace spray {

/// The single variable x_i (1-based) among `arity` variables.
Spray lone(std::size_t i, std::size_t arity, Backend backend = default_backend);

Spray unit(std::size_t arity, Backend backend = default_backend);
Spray zero(std::size_t arity, Backend backend = default_backend);

/// sum_i coeffs[i] * x_{i+1}; arity is coeffs.size().
Spray linear(std::span<const double> coeffs, Backend backend = default_backend);

/// x_1 * x_2 * ... * x_arity.
Spray xyz(std::size_t arity, Backend backend = default_backend);

/// Every monomial of total degree `degree` in `arity` variables, coefficient 1.
Spray homog(std::size_t arity, unsigned degree, Backend backend = default_backend);

struct RsprayOptions {
    std::size_t rows = 7;
    std::size_t arity = 3;
    Exponent max_exponent = 2;
    int max_value = 9;
    std::uint64_t seed = 0;
    Backend backend = default_backend;
};

/// Random spray: `rows` index rows with exponents uniform in 0..max_exponent
/// and integer values uniform in 1..max_value. Duplicate rows are summed.
/// Deterministic for a given seed.
Spray rspray(const RsprayOptions& opts = {});

/// Moves of a d-dimensional knight: +-2 along one axis and +-1 along another.
/// 4*d*(d-1) terms, all with coefficient 1. Requires d >= 2.
Spray knight(std::size_t d, Backend backend = default_backend);

/// Lazy random walk step: stay or move to one of the 2d neighbours, each with
/// probability 1/(2d+1).
Spray walk_kernel(std::size_t d, Backend backend = default_backend);

/// a*b^2 + b*c^2 + ... + y*z^2 + z*a^2 in 26 variables.
Spray cyclic_squares(Backend backend = default_backend);

}  // namespace spray
