#pragma once

#include <cstddef>
#include <vector>

#include "spray/spray.hpp"

namespace spray {

/// A random walk on the periodic lattice (Z/nZ)^d with absorbing traps.
struct WalkConfig {
    std::size_t d = 2;
    long n = 17;
    std::vector<MultiIndex> traps;
    Spray kernel{2};
    MultiIndex initial;
    long steps = 0;

    /// Throws on inconsistent lengths, traps off the lattice, or a kernel
    /// whose total mass exceeds 1.
    void validate() const;

    /// 17x17 lattice, lazy kernel, start (10,10), traps (2,3) and (3,5), 100 steps.
    static WalkConfig reference(Backend backend = default_backend);
};

/// One step: propagate by the kernel, wrap onto the lattice, zero the traps.
Spray timestep(const Spray& state, const WalkConfig& cfg);

struct WalkResult {
    Spray final_state;
    double survival;
};

/// Runs cfg.steps timesteps from unit mass at cfg.initial. Survival is the
/// total remaining probability mass.
WalkResult run_walk(const WalkConfig& cfg);

/// Distribution after `steps` moves on the unbounded lattice (no wrap, no traps).
Spray free_walk_pmf(const MultiIndex& initial, const Spray& kernel, long steps);

/// Number of closed walks of a d-dimensional knight with `moves` moves; with
/// `allow_pause` each move may also be "stay put". Throws OverflowError when
/// the count cannot be represented exactly in a double.
double knight_closed_walks(std::size_t d, long moves, bool allow_pause,
                           Backend backend = default_backend);

}  // namespace spray
