#include "spray/textio.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace spray {

std::vector<std::string> default_variable_names(std::size_t arity) {
    if (arity <= 3) return std::vector<std::string>{"x", "y", "z"};
    std::vector<std::string> out;
    out.reserve(arity);
    for (std::size_t i = 1; i <= arity; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

std::vector<std::string> letters() {
    std::vector<std::string> out;
    for (char c = 'a'; c <= 'z'; ++c) out.emplace_back(1, c);
    return out;
}

namespace {

const std::vector<std::string>& names_for(const FormatOptions& opts, std::size_t arity,
                                          std::vector<std::string>& storage) {
    if (!opts.variable_names.empty()) return opts.variable_names;
    storage = default_variable_names(arity);
    return storage;
}

std::string shortest(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

std::string null_line(std::size_t arity) {
    return "the NULL multinomial of arity " + std::to_string(arity);
}

std::string render_polyform(const std::vector<Term>& terms, const std::vector<std::string>& names) {
    std::string out;
    bool first = true;
    for (const auto& [idx, v] : terms) {
        const bool constant = idx.is_origin();
        const double mag = std::abs(v);
        if (!first) out += ' ';
        if (v < 0)
            out += '-';
        else if (!(first && constant))
            out += '+';
        std::string body;
        if (constant || mag != 1.0) body = shortest(mag);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] == 0) continue;
            if (!body.empty()) body += '*';
            body += names[k];
            if (idx[k] != 1) body += '^' + std::to_string(idx[k]);
        }
        out += body;
        first = false;
    }
    return out;
}

std::string render_table(const std::vector<Term>& terms, std::size_t arity) {
    std::vector<std::size_t> widths(arity, 1);
    std::size_t vwidth = 4;
    for (const auto& [idx, v] : terms) {
        for (std::size_t k = 0; k < arity; ++k)
            widths[k] = std::max(widths[k], std::to_string(idx[k]).size());
        vwidth = std::max(vwidth, shortest(v).size());
    }
    std::size_t iwidth = 0;
    for (auto w : widths) iwidth += w + 1;

    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    std::string out = std::string(iwidth + 4 + vwidth - 3, ' ') + "val\n";
    for (const auto& [idx, v] : terms) {
        for (std::size_t k = 0; k < arity; ++k) out += ' ' + pad(std::to_string(idx[k]), widths[k]);
        out += "  = " + pad(shortest(v), vwidth) + '\n';
    }
    return out;
}

}  // namespace

std::string render(const Spray& p, const FormatOptions& opts) {
    if (p.is_zero()) return null_line(p.arity());
    std::vector<std::string> storage;
    const auto& names = names_for(opts, p.arity(), storage);
    if (opts.polyform && names.size() < p.arity())
        throw FormatError("need " + std::to_string(p.arity()) + " variable names, have " +
                          std::to_string(names.size()));
    const auto terms = opts.sort_terms ? p.sorted_terms() : p.terms();
    return opts.polyform ? render_polyform(terms, names) : render_table(terms, p.arity());
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t arity, const std::vector<std::string>& names,
           Backend backend)
        : text_(text), arity_(arity), result_(arity, backend) {
        for (std::size_t i = 0; i < names.size() && i < arity; ++i) lookup_.emplace(names[i], i);
    }

    Spray run() {
        skip_ws();
        if (try_null_line()) return result_;
        if (at_end()) fail("empty expression");
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            term(sign);
            first = false;
        }
        return result_;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool try_null_line() {
        static constexpr std::string_view prefix = "the NULL multinomial of arity";
        if (text_.substr(pos_, prefix.size()) != prefix) return false;
        pos_ += prefix.size();
        skip_ws();
        const long n = integer();
        skip_ws();
        if (!at_end()) fail("trailing characters");
        if (n < 1 || static_cast<std::size_t>(n) != arity_)
            throw ArityError(arity_, static_cast<std::size_t>(std::max(n, 0L)));
        return true;
    }

    long integer() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        long value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{}) fail("expected integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    double number() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        double value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
        if (ec != std::errc{}) fail("expected number");
        if (!std::isfinite(value)) fail("coefficient is not finite");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    long exponent() {
        skip_ws();
        const bool paren = peek() == '(';
        if (paren) {
            ++pos_;
            skip_ws();
        }
        // from_chars rejects a leading '+'
        if (peek() == '+') ++pos_;
        const long e = integer();
        if (e > std::numeric_limits<Exponent>::max() || e < std::numeric_limits<Exponent>::min())
            fail("exponent out of range");
        if (paren) {
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        return e;
    }

    void term(double sign) {
        double coeff = sign;
        MultiIndex idx(arity_);
        while (true) {
            skip_ws();
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                coeff *= number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const std::size_t start = pos_;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    ++pos_;
                const std::string name(text_.substr(start, pos_ - start));
                auto it = lookup_.find(name);
                if (it == lookup_.end()) throw NameError("unknown variable '" + name + "'");
                long e = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    e = exponent();
                }
                const long total = static_cast<long>(idx[it->second]) + e;
                if (total > std::numeric_limits<Exponent>::max() ||
                    total < std::numeric_limits<Exponent>::min())
                    fail("exponent out of range");
                idx[it->second] = static_cast<Exponent>(total);
            } else {
                fail("expected coefficient or variable");
            }
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        result_.add_term(idx, coeff);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t arity_;
    std::unordered_map<std::string, std::size_t> lookup_;
    Spray result_;
};

}  // namespace

Spray parse(std::string_view text, std::size_t arity, const FormatOptions& opts, Backend backend) {
    std::vector<std::string> storage;
    const auto& names = names_for(opts, arity, storage);
    return Parser(text, arity, names, backend).run();
}

}  // namespace spray
