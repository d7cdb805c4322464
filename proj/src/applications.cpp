#include "spray/applications.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spray/algebra.hpp"
#include "spray/constructors.hpp"
#include "spray/views.hpp"

namespace spray {

void WalkConfig::validate() const {
    if (d < 1) throw DomainError("lattice dimension must be positive");
    if (n < 1) throw DomainError("lattice side must be positive, got " + std::to_string(n));
    if (steps < 0) throw DomainError("negative step count " + std::to_string(steps));
    if (kernel.arity() != d) throw ArityError(d, kernel.arity());
    if (initial.size() != d) throw ArityError(d, initial.size());
    for (const auto& t : traps) {
        if (t.size() != d) throw ArityError(d, t.size());
        for (auto e : t)
            if (e < 0 || e >= n)
                throw DomainError("trap coordinate " + std::to_string(e) + " outside 0.." +
                                  std::to_string(n - 1));
    }
    if (sum(coeffs(kernel)) > 1.0 + 1e-12) throw DomainError("kernel mass exceeds 1");
}

WalkConfig WalkConfig::reference(Backend backend) {
    WalkConfig cfg;
    cfg.d = 2;
    cfg.n = 17;
    cfg.traps = {MultiIndex{2, 3}, MultiIndex{3, 5}};
    cfg.kernel = walk_kernel(2, backend);
    cfg.initial = MultiIndex{10, 10};
    cfg.steps = 100;
    return cfg;
}

Spray timestep(const Spray& state, const WalkConfig& cfg) {
    if (state.arity() != cfg.d) throw ArityError(cfg.d, state.arity());
    return wrap_mod(multiply(state, cfg.kernel), cfg.n).set(cfg.traps, 0.0);
}

WalkResult run_walk(const WalkConfig& cfg) {
    cfg.validate();
    Spray state = Spray::monomial(cfg.initial, 1.0, cfg.kernel.backend());
    for (long i = 0; i < cfg.steps; ++i) state = timestep(state, cfg);
    const double survival = sum(coeffs(state));
    return {std::move(state), survival};
}

Spray free_walk_pmf(const MultiIndex& initial, const Spray& kernel, long steps) {
    if (initial.size() != kernel.arity()) throw ArityError(kernel.arity(), initial.size());
    return multiply(Spray::monomial(initial, 1.0, kernel.backend()), power(kernel, steps));
}

double knight_closed_walks(std::size_t d, long moves, bool allow_pause, Backend backend) {
    Spray k = knight(d, backend);
    if (allow_pause) k = scalar_add(k, 1.0);
    const Spray walks = power(k, moves);
    // All coefficients are positive integers, so every partial sum is bounded
    // by the final maximum; below 2^53 the whole computation is exact.
    constexpr double exact_limit = 9007199254740992.0;
    double largest = 0.0;
    walks.for_each([&](const MultiIndex&, double v) { largest = std::max(largest, v); });
    if (largest > exact_limit)
        throw OverflowError("knight walk count exceeds 2^53 and is no longer exact");
    return constant(walks);
}

}  // namespace spray
