#include "dense.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace spray::oracle {

namespace {

std::size_t checked_cells(const std::vector<std::size_t>& extents) {
    std::size_t cells = 1;
    for (auto e : extents) {
        if (e == 0 || cells > kMaxCells / e)
            throw OracleCapacityError("dense array would exceed " + std::to_string(kMaxCells) + " cells");
        cells *= e;
    }
    return cells;
}

// Decodes a flat row-major position into per-dimension coordinates.
std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::size_t>& extents) {
    std::vector<std::size_t> coord(extents.size());
    for (std::size_t k = extents.size(); k-- > 0;) {
        coord[k] = flat % extents[k];
        flat /= extents[k];
    }
    return coord;
}

std::size_t flatten(const std::vector<std::size_t>& coord, const std::vector<std::size_t>& extents) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < extents.size(); ++k) flat = flat * extents[k] + coord[k];
    return flat;
}

DenseArray zeros(std::vector<long> offsets, std::vector<std::size_t> extents) {
    DenseArray out{std::move(offsets), std::move(extents), {}};
    out.data.assign(checked_cells(out.extents), 0.0);
    return out;
}

}  // namespace

DenseArray to_dense(const Spray& p) {
    const std::size_t d = p.arity();
    if (p.is_zero()) return zeros(std::vector<long>(d, 0), std::vector<std::size_t>(d, 1));
    std::vector<long> lo(d, std::numeric_limits<long>::max());
    std::vector<long> hi(d, std::numeric_limits<long>::min());
    p.for_each([&](const MultiIndex& idx, double) {
        for (std::size_t k = 0; k < d; ++k) {
            lo[k] = std::min<long>(lo[k], idx[k]);
            hi[k] = std::max<long>(hi[k], idx[k]);
        }
    });
    std::vector<std::size_t> extents(d);
    for (std::size_t k = 0; k < d; ++k) extents[k] = static_cast<std::size_t>(hi[k] - lo[k] + 1);
    DenseArray out = zeros(lo, extents);
    std::vector<std::size_t> coord(d);
    p.for_each([&](const MultiIndex& idx, double v) {
        for (std::size_t k = 0; k < d; ++k) coord[k] = static_cast<std::size_t>(idx[k] - lo[k]);
        out.data[flatten(coord, extents)] = v;
    });
    return out;
}

Spray from_dense(const DenseArray& a, Backend backend) {
    Spray out(a.arity(), backend);
    for (std::size_t flat = 0; flat < a.data.size(); ++flat) {
        if (a.data[flat] == 0.0) continue;
        const auto coord = unflatten(flat, a.extents);
        MultiIndex idx(a.arity());
        for (std::size_t k = 0; k < a.arity(); ++k)
            idx[k] = static_cast<Exponent>(static_cast<long>(coord[k]) + a.offsets[k]);
        out.assign(idx, a.data[flat]);
    }
    return out;
}

DenseArray dense_add(const DenseArray& a, const DenseArray& b) {
    if (a.arity() != b.arity()) throw ArityError(a.arity(), b.arity());
    const std::size_t d = a.arity();
    std::vector<long> lo(d);
    std::vector<std::size_t> extents(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = std::min(a.offsets[k], b.offsets[k]);
        const long hi = std::max(a.offsets[k] + static_cast<long>(a.extents[k]),
                                 b.offsets[k] + static_cast<long>(b.extents[k]));
        extents[k] = static_cast<std::size_t>(hi - lo[k]);
    }
    DenseArray out = zeros(lo, extents);
    for (const DenseArray* src : {&a, &b}) {
        for (std::size_t flat = 0; flat < src->data.size(); ++flat) {
            auto coord = unflatten(flat, src->extents);
            for (std::size_t k = 0; k < d; ++k)
                coord[k] += static_cast<std::size_t>(src->offsets[k] - lo[k]);
            out.data[flatten(coord, extents)] += src->data[flat];
        }
    }
    return out;
}

DenseArray dense_multiply(const DenseArray& a, const DenseArray& b) {
    if (a.arity() != b.arity()) throw ArityError(a.arity(), b.arity());
    const std::size_t d = a.arity();
    std::vector<long> lo(d);
    std::vector<std::size_t> extents(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = a.offsets[k] + b.offsets[k];
        extents[k] = a.extents[k] + b.extents[k] - 1;
    }
    DenseArray out = zeros(lo, extents);
    std::vector<std::size_t> coord(d);
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        if (a.data[i] == 0.0) continue;
        const auto ci = unflatten(i, a.extents);
        for (std::size_t j = 0; j < b.data.size(); ++j) {
            if (b.data[j] == 0.0) continue;
            const auto cj = unflatten(j, b.extents);
            for (std::size_t k = 0; k < d; ++k) coord[k] = ci[k] + cj[k];
            out.data[flatten(coord, extents)] += a.data[i] * b.data[j];
        }
    }
    return out;
}

DenseArray dense_power(const DenseArray& a, long n) {
    if (n < 0) throw DomainError("negative power");
    DenseArray out = zeros(std::vector<long>(a.arity(), 0), std::vector<std::size_t>(a.arity(), 1));
    out.data[0] = 1.0;
    for (long i = 0; i < n; ++i) out = dense_multiply(out, a);
    return out;
}

std::vector<double> dense_walk_state(const WalkConfig& cfg) {
    const std::size_t d = cfg.d;
    const auto n = static_cast<std::size_t>(cfg.n);
    const std::vector<std::size_t> extents(d, n);
    const std::size_t cells = checked_cells(extents);

    // Transition list: (displacement, probability) pairs taken from the kernel.
    std::vector<std::pair<std::vector<long>, double>> moves;
    cfg.kernel.for_each([&](const MultiIndex& idx, double p) {
        moves.emplace_back(std::vector<long>(idx.begin(), idx.end()), p);
    });
    std::vector<std::size_t> trap_cells;
    for (const auto& t : cfg.traps) {
        std::vector<std::size_t> c(t.begin(), t.end());
        trap_cells.push_back(flatten(c, extents));
    }

    std::vector<double> state(cells, 0.0);
    std::vector<std::size_t> start(d);
    for (std::size_t k = 0; k < d; ++k) {
        const long r = ((cfg.initial[k] % cfg.n) + cfg.n) % cfg.n;
        start[k] = static_cast<std::size_t>(r);
    }
    state[flatten(start, extents)] = 1.0;

    std::vector<double> next(cells);
    std::vector<std::size_t> target(d);
    for (long step = 0; step < cfg.steps; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t cell = 0; cell < cells; ++cell) {
            if (state[cell] == 0.0) continue;
            const auto from = unflatten(cell, extents);
            for (const auto& [disp, p] : moves) {
                for (std::size_t k = 0; k < d; ++k) {
                    const long t = ((static_cast<long>(from[k]) + disp[k]) % cfg.n + cfg.n) % cfg.n;
                    target[k] = static_cast<std::size_t>(t);
                }
                next[flatten(target, extents)] += state[cell] * p;
            }
        }
        for (auto c : trap_cells) next[c] = 0.0;
        state.swap(next);
    }
    return state;
}

double dense_walk(const WalkConfig& cfg) {
    double total = 0.0;
    for (double v : dense_walk_state(cfg)) total += v;
    return total;
}

}  // namespace spray::oracle
