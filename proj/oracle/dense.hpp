#pragma once

// Naive dense-array reference implementations. They share nothing with the
// sparse code paths beyond the Spray type used at the boundary, and exist only
// to cross-check those paths in tests.

#include <cstddef>
#include <vector>

#include "spray/applications.hpp"
#include "spray/spray.hpp"

namespace spray::oracle {

constexpr std::size_t kMaxCells = 1'000'000;

/// Row-major array over the box [offsets, offsets + extents).
struct DenseArray {
    std::vector<long> offsets;
    std::vector<std::size_t> extents;
    std::vector<double> data;

    std::size_t arity() const { return extents.size(); }
};

DenseArray to_dense(const Spray& p);
Spray from_dense(const DenseArray& a, Backend backend = default_backend);

DenseArray dense_add(const DenseArray& a, const DenseArray& b);
DenseArray dense_multiply(const DenseArray& a, const DenseArray& b);
DenseArray dense_power(const DenseArray& a, long n);

/// Full probability vector on (Z/nZ)^d after cfg.steps steps, row-major.
std::vector<double> dense_walk_state(const WalkConfig& cfg);
/// Total mass of dense_walk_state(cfg), summed in flat-index order.
double dense_walk(const WalkConfig& cfg);

}  // namespace spray::oracle
