#include "spray/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>

#include "spray/algebra.hpp"
#include "spray/constructors.hpp"

namespace spray {

namespace {

std::string_view op_name(BenchOp op) { return op == BenchOp::Multiply ? "mul" : "power"; }

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
    if (opts.repeat < 1) throw DomainError("repeat must be at least 1");
    if (opts.moves < 0) throw DomainError("moves must be nonnegative");
    if (opts.backends.empty()) throw DomainError("no backend selected");

    std::vector<BenchRow> rows;
    std::optional<Spray> reference;
    for (Backend backend : opts.backends) {
        const Spray k = knight(opts.dim, backend);
        Spray lhs = k, rhs = k;
        if (opts.op == BenchOp::Multiply) {
            lhs = power(k, (opts.moves + 1) / 2);
            rhs = power(k, opts.moves / 2);
        }
        std::vector<double> times;
        std::optional<Spray> result;
        for (int r = 0; r < opts.repeat; ++r) {
            const auto start = std::chrono::steady_clock::now();
            result = opts.op == BenchOp::Multiply ? multiply(lhs, rhs) : power(k, opts.moves);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(stop - start).count());
        }
        if (!reference)
            reference = result;
        else if (!(*reference == *result))
            throw BackendMismatchError(std::string("backend ") + std::string(to_string(backend)) +
                                       " disagrees with " + std::string(to_string(opts.backends.front())));
        std::sort(times.begin(), times.end());
        const std::size_t m = times.size();
        const double median = m % 2 ? times[m / 2] : 0.5 * (times[m / 2 - 1] + times[m / 2]);
        rows.push_back({backend, opts.op, result->size(), median});
    }
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "backend,op,size,median_seconds\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.median_seconds);
        out += std::string(to_string(r.backend)) + ',' + std::string(op_name(r.op)) + ',' +
               std::to_string(r.size) + ',' + buf + '\n';
    }
    return out;
}

}  // namespace spray
