#include "spray/spray.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spray {

std::string_view to_string(Backend b) noexcept {
    return b == Backend::Ordered ? "ordered" : "hashed";
}

Backend parse_backend(std::string_view name) {
    if (name == "ordered") return Backend::Ordered;
    if (name == "hashed") return Backend::Hashed;
    throw DomainError("unknown backend '" + std::string(name) + "' (expected ordered or hashed)");
}

namespace {

std::variant<Spray::OrderedMap, Spray::HashedMap> make_terms(Backend backend) {
    if (backend == Backend::Ordered) return Spray::OrderedMap{};
    return Spray::HashedMap{};
}

void check_finite(double value) {
    if (!std::isfinite(value)) throw ValueError("coefficient is not finite: " + std::to_string(value));
}

}  // namespace

Spray::Spray(std::size_t arity, Backend backend) : arity_(arity), terms_(make_terms(backend)) {
    if (arity == 0) throw DomainError("arity must be at least 1");
}

Spray::Spray(std::span<const MultiIndex> rows, std::span<const double> values, std::size_t arity,
             Backend backend)
    : Spray(arity, backend) {
    if (!values.empty() && values.size() != rows.size())
        throw DomainError("got " + std::to_string(values.size()) + " values for " +
                          std::to_string(rows.size()) + " index rows");
    reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double v = values.empty() ? 1.0 : values[i];
        check_index(rows[i]);
        check_finite(v);
        add_term(rows[i], v);
    }
}

Spray Spray::monomial(const MultiIndex& idx, double value, Backend backend) {
    Spray out(idx.size(), backend);
    out.assign(idx, value);
    return out;
}

std::size_t Spray::size() const noexcept {
    return std::visit([](const auto& m) { return m.size(); }, terms_);
}

void Spray::check_index(const MultiIndex& idx) const {
    if (idx.size() != arity_) throw ArityError(arity_, idx.size());
}

double Spray::get(const MultiIndex& idx) const {
    check_index(idx);
    return std::visit(
        [&](const auto& m) {
            auto it = m.find(idx);
            return it == m.end() ? 0.0 : it->second;
        },
        terms_);
}

Spray Spray::set(std::span<const MultiIndex> rows, double value) const {
    for (const auto& r : rows) check_index(r);
    check_finite(value);
    Spray out = *this;
    for (const auto& r : rows) out.assign(r, value);
    return out;
}

void Spray::add_term(const MultiIndex& idx, double value) {
    check_index(idx);
    if (value == 0.0) return;
    check_finite(value);
    std::visit(
        [&](auto& m) {
            auto [it, inserted] = m.try_emplace(idx, value);
            if (inserted) return;
            it->second += value;
            if (it->second == 0.0)
                m.erase(it);
            else
                check_finite(it->second);
        },
        terms_);
}

void Spray::assign(const MultiIndex& idx, double value) {
    check_index(idx);
    check_finite(value);
    std::visit(
        [&](auto& m) {
            if (value == 0.0)
                m.erase(idx);
            else
                m.insert_or_assign(idx, value);
        },
        terms_);
}

void Spray::reserve(std::size_t n) {
    if (auto* h = std::get_if<HashedMap>(&terms_)) h->reserve(n);
}

std::vector<Term> Spray::terms() const {
    std::vector<Term> out;
    out.reserve(size());
    for_each([&](const MultiIndex& idx, double v) { out.emplace_back(idx, v); });
    return out;
}

std::vector<Term> Spray::sorted_terms() const {
    auto out = terms();
    if (backend() != Backend::Ordered)
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return out;
}

Spray Spray::with_backend(Backend backend) const {
    if (backend == this->backend()) return *this;
    Spray out(arity_, backend);
    out.reserve(size());
    for_each([&](const MultiIndex& idx, double v) { out.assign(idx, v); });
    return out;
}

bool operator==(const Spray& a, const Spray& b) {
    if (a.arity_ != b.arity_ || a.size() != b.size()) return false;
    bool same = true;
    a.for_each([&](const MultiIndex& idx, double v) {
        if (same && b.get(idx) != v) same = false;
    });
    return same;
}

}  // namespace spray
