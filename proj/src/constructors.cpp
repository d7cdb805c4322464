#include "spray/constructors.hpp"

#include <random>
#include <string>
#include <vector>

#include "spray/algebra.hpp"

namespace spray {

Spray lone(std::size_t i, std::size_t arity, Backend backend) {
    if (i < 1 || i > arity)
        throw DomainError("variable " + std::to_string(i) + " out of range 1.." + std::to_string(arity));
    MultiIndex idx(arity);
    idx[i - 1] = 1;
    return Spray::monomial(idx, 1.0, backend);
}

Spray unit(std::size_t arity, Backend backend) {
    if (arity < 1) throw DomainError("arity must be at least 1");
    return Spray::monomial(MultiIndex(arity), 1.0, backend);
}

Spray zero(std::size_t arity, Backend backend) {
    return Spray(arity, backend);
}

Spray linear(std::span<const double> coeffs, Backend backend) {
    Spray out(coeffs.size(), backend);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        MultiIndex idx(coeffs.size());
        idx[i] = 1;
        out.add_term(idx, coeffs[i]);
    }
    return out;
}

Spray xyz(std::size_t arity, Backend backend) {
    if (arity < 1) throw DomainError("arity must be at least 1");
    MultiIndex idx(arity);
    for (auto& e : idx) e = 1;
    return Spray::monomial(idx, 1.0, backend);
}

namespace {

// Enumerates compositions of `remaining` into the slots idx[k..].
void fill_homog(Spray& out, MultiIndex& idx, std::size_t k, Exponent remaining) {
    if (k + 1 == idx.size()) {
        idx[k] = remaining;
        out.assign(idx, 1.0);
        return;
    }
    for (Exponent e = remaining; e >= 0; --e) {
        idx[k] = e;
        fill_homog(out, idx, k + 1, remaining - e);
    }
}

}  // namespace

Spray homog(std::size_t arity, unsigned degree, Backend backend) {
    Spray out(arity, backend);
    MultiIndex idx(arity);
    fill_homog(out, idx, 0, static_cast<Exponent>(degree));
    return out;
}

Spray rspray(const RsprayOptions& opts) {
    if (opts.rows < 1 || opts.max_exponent < 0 || opts.max_value < 1)
        throw DomainError("rspray: rows and max_value must be positive, max_exponent nonnegative");
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Exponent> exps(0, opts.max_exponent);
    std::uniform_int_distribution<int> vals(1, opts.max_value);
    std::vector<MultiIndex> rows;
    std::vector<double> values;
    rows.reserve(opts.rows);
    values.reserve(opts.rows);
    for (std::size_t r = 0; r < opts.rows; ++r) {
        MultiIndex idx(opts.arity);
        for (auto& e : idx) e = exps(rng);
        rows.push_back(std::move(idx));
        values.push_back(vals(rng));
    }
    return Spray(rows, values, opts.arity, opts.backend);
}

Spray knight(std::size_t d, Backend backend) {
    if (d < 2) throw DomainError("a knight needs at least 2 dimensions, got " + std::to_string(d));
    Spray out(d, backend);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            for (Exponent two : {2, -2}) {
                for (Exponent one : {1, -1}) {
                    MultiIndex idx(d);
                    idx[i] = two;
                    idx[j] = one;
                    out.assign(idx, 1.0);
                }
            }
        }
    }
    return out;
}

Spray walk_kernel(std::size_t d, Backend backend) {
    Spray moves = unit(d, backend);
    for (std::size_t i = 0; i < d; ++i) {
        MultiIndex step(d);
        step[i] = 1;
        moves.assign(step, 1.0);
        moves.assign(-step, 1.0);
    }
    return scalar_div(moves, static_cast<double>(2 * d + 1));
}

Spray cyclic_squares(Backend backend) {
    constexpr std::size_t n = 26;
    Spray out(n, backend);
    for (std::size_t i = 0; i < n; ++i) {
        MultiIndex idx(n);
        idx[i] = 1;
        idx[(i + 1) % n] = 2;
        out.assign(idx, 1.0);
    }
    return out;
}

}  // namespace spray
