#pragma once

#include "spray/spray.hpp"

namespace spray {

// Ring operations. Binary operations require equal arity (ArityError
// otherwise) and return a result on the left operand's backend.

Spray add(const Spray& p, const Spray& q);
Spray negate(const Spray& p);
Spray subtract(const Spray& p, const Spray& q);
Spray multiply(const Spray& p, const Spray& q);

/// p^n by iterated multiplication; power(p, 0) is the unit of arity(p).
Spray power(const Spray& p, long n);

/// Adds c to the constant (all-zeros index) term.
Spray scalar_add(const Spray& p, double c);
Spray scalar_mul(const Spray& p, double c);
/// Throws DomainError when c == 0.
Spray scalar_div(const Spray& p, double c);

/// Reduces every exponent into 0..n-1 (nonnegative remainder), summing
/// coefficients of indices that collide. Enforces periodicity on a lattice
/// of side n.
Spray wrap_mod(const Spray& p, long n);

inline Spray operator+(const Spray& p, const Spray& q) { return add(p, q); }
inline Spray operator-(const Spray& p, const Spray& q) { return subtract(p, q); }
inline Spray operator-(const Spray& p) { return negate(p); }
inline Spray operator*(const Spray& p, const Spray& q) { return multiply(p, q); }

inline Spray operator+(const Spray& p, double c) { return scalar_add(p, c); }
inline Spray operator+(double c, const Spray& p) { return scalar_add(p, c); }
inline Spray operator-(const Spray& p, double c) { return scalar_add(p, -c); }
inline Spray operator-(double c, const Spray& p) { return scalar_add(negate(p), c); }
inline Spray operator*(const Spray& p, double c) { return scalar_mul(p, c); }
inline Spray operator*(double c, const Spray& p) { return scalar_mul(p, c); }
inline Spray operator/(const Spray& p, double c) { return scalar_div(p, c); }

}  // namespace spray
