#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spray/spray.hpp"

namespace spray {

/// Immutable snapshot of a spray's coefficients or indices, in the order the
/// backend happened to iterate them.
///
/// The order is not meaningful on its own. The attached hash identifies the
/// exact (index, value) sequence the snapshot was taken from, so two views
/// may be combined positionally only when their hashes agree.
template <typename T>
class UnorderedView {
public:
    UnorderedView(std::vector<T> elements, std::string order_hash)
        : elements_(std::move(elements)), hash_(std::move(order_hash)) {}

    const std::vector<T>& elements() const noexcept { return elements_; }
    const std::string& order_hash() const noexcept { return hash_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

private:
    std::vector<T> elements_;
    std::string hash_;
};

using CoeffView = UnorderedView<double>;
using IndexView = UnorderedView<MultiIndex>;

/// Hex SHA-256 digest of the spray's (index, value) iteration sequence.
std::string order_hash(const Spray& p);

CoeffView coeffs(const Spray& p);
IndexView indices(const Spray& p);

/// Order-independent sum: elements are sorted before compensated summation,
/// so any permutation of the same multiset gives a bit-identical result.
double sum(const CoeffView& v);

/// True iff the two views come from the same extraction state.
template <typename T, typename U>
bool compatible(const UnorderedView<T>& a, const UnorderedView<U>& b) {
    return a.order_hash() == b.order_hash();
}

/// Rebuilds a spray from positionally aligned views. Throws
/// HashMismatchError unless the views are compatible.
Spray zip(const IndexView& idx, const CoeffView& vals, std::size_t arity,
          Backend backend = default_backend);

/// Coefficient of the all-zeros index, 0.0 if absent.
double constant(const Spray& p);
/// The constant term as a spray of the same arity (zero or one term).
Spray constant_term(const Spray& p);

}  // namespace spray
