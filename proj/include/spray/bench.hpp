#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spray/spray.hpp"

namespace spray {

enum class BenchOp { Multiply, Power };

struct BenchOptions {
    BenchOp op = BenchOp::Power;
    std::size_t dim = 4;
    long moves = 6;
    std::vector<Backend> backends{Backend::Ordered, Backend::Hashed};
    int repeat = 3;
};

struct BenchRow {
    Backend backend;
    BenchOp op;
    std::size_t size;  ///< terms in the result
    double median_seconds;
};

/// Raised when backends disagree on a benchmark result.
class BackendMismatchError : public Error {
public:
    using Error::Error;
};

/// Times knight(dim)^moves (Power) or the product of knight(dim)^ceil(moves/2)
/// and knight(dim)^floor(moves/2) (Multiply) under each backend. Results are
/// compared for equality before any timing is returned.
std::vector<BenchRow> run_bench(const BenchOptions& opts);

/// CSV with header "backend,op,size,median_seconds".
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace spray
