#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "spray/errors.hpp"
#include "spray/multi_index.hpp"

namespace spray {

/// Associative container holding the terms of a Spray.
enum class Backend {
    Ordered,  ///< std::map; terms iterate in lexicographic index order
    Hashed,   ///< std::unordered_map; iteration order unspecified
};

constexpr Backend default_backend = Backend::Hashed;

std::string_view to_string(Backend b) noexcept;
/// Accepts "ordered" or "hashed"; throws DomainError otherwise.
Backend parse_backend(std::string_view name);

using Term = std::pair<MultiIndex, double>;

/// Sparse array of fixed arity mapping exponent vectors to nonzero reals.
///
/// Read as a multivariate Laurent polynomial, each stored index is a monomial
/// and its value the coefficient. No stored value is ever exactly 0.0; the
/// zero polynomial is the empty map, and still carries an arity.
class Spray {
public:
    using OrderedMap = std::map<MultiIndex, double>;
    using HashedMap = std::unordered_map<MultiIndex, double, MultiIndexHash>;

    /// The zero polynomial of the given arity. Arity must be at least 1.
    explicit Spray(std::size_t arity, Backend backend = default_backend);

    /// Builds from index rows and values. Repeated rows are summed and
    /// resulting zeros dropped. An empty `values` gives every row value 1.
    Spray(std::span<const MultiIndex> rows, std::span<const double> values, std::size_t arity,
          Backend backend = default_backend);

    /// Single term with value `value` at `idx`; arity is idx.size().
    static Spray monomial(const MultiIndex& idx, double value = 1.0, Backend backend = default_backend);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept;
    bool is_zero() const noexcept { return size() == 0; }
    Backend backend() const noexcept { return static_cast<Backend>(terms_.index()); }

    /// Value at `idx`, or 0.0 when absent.
    double get(const MultiIndex& idx) const;
    double operator[](const MultiIndex& idx) const { return get(idx); }

    /// Copy with every listed index mapped to `value`; 0.0 removes them.
    Spray set(std::span<const MultiIndex> rows, double value) const;

    /// In-place accumulate: terms[idx] += value, erasing on exact cancellation.
    void add_term(const MultiIndex& idx, double value);
    /// In-place overwrite: terms[idx] = value, erasing when value is 0.0.
    void assign(const MultiIndex& idx, double value);
    void reserve(std::size_t n);

    /// Visits (index, value) pairs in backend iteration order.
    template <typename F>
    void for_each(F&& f) const {
        std::visit(
            [&](const auto& m) {
                for (const auto& [idx, val] : m) f(idx, val);
            },
            terms_);
    }

    /// Terms in backend iteration order.
    std::vector<Term> terms() const;
    /// Terms in lexicographic index order, independent of backend.
    std::vector<Term> sorted_terms() const;

    Spray with_backend(Backend backend) const;

    /// Same arity and identical term sets; backend and order are irrelevant.
    friend bool operator==(const Spray& a, const Spray& b);

private:
    void check_index(const MultiIndex& idx) const;

    std::size_t arity_;
    std::variant<OrderedMap, HashedMap> terms_;
};

}  // namespace spray
