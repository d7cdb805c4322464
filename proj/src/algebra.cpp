#include "spray/algebra.hpp"

#include <algorithm>
#include <string>

namespace spray {

namespace {

void require_same_arity(const Spray& p, const Spray& q) {
    if (p.arity() != q.arity()) throw ArityError(p.arity(), q.arity());
}

constexpr std::size_t kMaxProductReserve = std::size_t{1} << 20;

}  // namespace

Spray add(const Spray& p, const Spray& q) {
    require_same_arity(p, q);
    Spray out = p;
    out.reserve(p.size() + q.size());
    q.for_each([&](const MultiIndex& idx, double v) { out.add_term(idx, v); });
    return out;
}

Spray negate(const Spray& p) {
    Spray out(p.arity(), p.backend());
    out.reserve(p.size());
    p.for_each([&](const MultiIndex& idx, double v) { out.assign(idx, -v); });
    return out;
}

Spray subtract(const Spray& p, const Spray& q) {
    require_same_arity(p, q);
    Spray out = p;
    q.for_each([&](const MultiIndex& idx, double v) { out.add_term(idx, -v); });
    return out;
}

Spray multiply(const Spray& p, const Spray& q) {
    require_same_arity(p, q);
    Spray out(p.arity(), p.backend());
    out.reserve(std::min(p.size() * q.size(), kMaxProductReserve));
    const auto rhs = q.terms();
    MultiIndex sum(p.arity());
    p.for_each([&](const MultiIndex& i, double a) {
        for (const auto& [j, b] : rhs) {
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = i[k] + j[k];
            out.add_term(sum, a * b);
        }
    });
    return out;
}

Spray power(const Spray& p, long n) {
    if (n < 0) throw DomainError("negative power " + std::to_string(n));
    Spray out = Spray::monomial(MultiIndex(p.arity()), 1.0, p.backend());
    for (long i = 0; i < n; ++i) out = multiply(out, p);
    return out;
}

Spray scalar_add(const Spray& p, double c) {
    Spray out = p;
    out.add_term(MultiIndex(p.arity()), c);
    return out;
}

Spray scalar_mul(const Spray& p, double c) {
    Spray out(p.arity(), p.backend());
    if (c == 0.0) return out;
    out.reserve(p.size());
    p.for_each([&](const MultiIndex& idx, double v) { out.assign(idx, v * c); });
    return out;
}

Spray scalar_div(const Spray& p, double c) {
    if (c == 0.0) throw DomainError("division by zero");
    Spray out(p.arity(), p.backend());
    out.reserve(p.size());
    p.for_each([&](const MultiIndex& idx, double v) { out.assign(idx, v / c); });
    return out;
}

Spray wrap_mod(const Spray& p, long n) {
    if (n < 1) throw DomainError("modulus must be positive, got " + std::to_string(n));
    Spray out(p.arity(), p.backend());
    out.reserve(p.size());
    MultiIndex wrapped(p.arity());
    p.for_each([&](const MultiIndex& idx, double v) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            long r = idx[k] % n;
            if (r < 0) r += n;
            wrapped[k] = static_cast<Exponent>(r);
        }
        out.add_term(wrapped, v);
    });
    return out;
}

}  // namespace spray
