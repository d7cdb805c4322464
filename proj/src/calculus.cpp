#include "spray/calculus.hpp"

#include <string>

namespace spray {

namespace {

// x^e by repeated squaring; negative e through the reciprocal.
double int_pow(double x, long e) {
    if (e < 0) {
        if (x == 0.0) throw SingularityError("zero raised to negative power " + std::to_string(e));
        return 1.0 / int_pow(x, -e);
    }
    double result = 1.0;
    double base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

void check_dim(const Spray& p, std::size_t dim) {
    if (dim < 1 || dim > p.arity())
        throw DomainError("dimension " + std::to_string(dim) + " out of range 1.." +
                          std::to_string(p.arity()));
}

}  // namespace

double evaluate(const Spray& p, std::span<const double> x) {
    if (x.size() != p.arity()) throw ArityError(p.arity(), x.size());
    double total = 0.0;
    p.for_each([&](const MultiIndex& idx, double c) {
        double term = c;
        for (std::size_t k = 0; k < idx.size(); ++k) term *= int_pow(x[k], idx[k]);
        total += term;
    });
    return total;
}

Spray substitute(const Spray& p, std::size_t dim, double value) {
    check_dim(p, dim);
    if (p.arity() < 2) throw DomainError("substitution would leave a polynomial of arity 0");
    const std::size_t drop = dim - 1;
    Spray out(p.arity() - 1, p.backend());
    MultiIndex reduced(p.arity() - 1);
    p.for_each([&](const MultiIndex& idx, double c) {
        for (std::size_t k = 0, j = 0; k < idx.size(); ++k)
            if (k != drop) reduced[j++] = idx[k];
        out.add_term(reduced, c * int_pow(value, idx[drop]));
    });
    return out;
}

Spray deriv(const Spray& p, std::size_t dim, unsigned order) {
    check_dim(p, dim);
    const std::size_t k = dim - 1;
    Spray out = p;
    for (unsigned step = 0; step < order; ++step) {
        Spray next(p.arity(), p.backend());
        MultiIndex lowered;
        out.for_each([&](const MultiIndex& idx, double c) {
            if (idx[k] == 0) return;
            lowered = idx;
            lowered[k] -= 1;
            next.add_term(lowered, c * idx[k]);
        });
        out = std::move(next);
        if (out.is_zero()) break;
    }
    return out;
}

Spray aderiv(const Spray& p, std::span<const unsigned> orders) {
    if (orders.size() != p.arity()) throw ArityError(p.arity(), orders.size());
    Spray out = p;
    for (std::size_t k = 0; k < orders.size(); ++k)
        if (orders[k] > 0) out = deriv(out, k + 1, orders[k]);
    return out;
}

}  // namespace spray
