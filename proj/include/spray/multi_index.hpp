#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace spray {

using Exponent = std::int32_t;

/// A signed exponent vector: one row of a sparse array's index matrix.
///
/// Negative entries are allowed (Laurent monomials). Ordering is
/// lexicographic, which is the iteration order of the ordered backend.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t arity) : exps_(arity, 0) {}
    MultiIndex(std::initializer_list<Exponent> exps) : exps_(exps) {}
    explicit MultiIndex(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    explicit MultiIndex(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }

    auto begin() const noexcept { return exps_.begin(); }
    auto end() const noexcept { return exps_.end(); }
    auto begin() noexcept { return exps_.begin(); }
    auto end() noexcept { return exps_.end(); }

    std::span<const Exponent> exponents() const noexcept { return exps_; }

    bool is_origin() const noexcept {
        for (auto e : exps_)
            if (e != 0) return false;
        return true;
    }

    /// Componentwise sum; both operands must have the same length.
    MultiIndex& operator+=(const MultiIndex& rhs) {
        for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += rhs.exps_[i];
        return *this;
    }
    friend MultiIndex operator+(MultiIndex lhs, const MultiIndex& rhs) { return lhs += rhs; }

    friend MultiIndex operator-(MultiIndex v) {
        for (auto& e : v.exps_) e = -e;
        return v;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<Exponent> exps_;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& idx) const noexcept {
        // 64-bit FNV-1a over the exponents, then a final avalanche.
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto e : idx) {
            h ^= static_cast<std::uint32_t>(e);
            h *= 0x100000001b3ULL;
        }
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

}  // namespace spray
