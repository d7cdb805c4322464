#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "spray/spray.hpp"

namespace spray {

struct FormatOptions {
    /// Signed monomial list when true; index/value table when false.
    bool polyform = true;
    /// Names for variables 1..arity. Empty selects default_variable_names().
    std::vector<std::string> variable_names;
    /// Lexicographic term order when true; backend iteration order otherwise.
    bool sort_terms = true;
};

/// "x", "y", "z" for arity <= 3, otherwise "x1".."xN".
std::vector<std::string> default_variable_names(std::size_t arity);
/// "a".."z".
std::vector<std::string> letters();

/// Polyform, e.g. "-3*z +13*z^2 +17*x^6*y^-7*z^8", or the index table.
/// The zero polynomial renders as "the NULL multinomial of arity N".
/// Coefficients use the shortest decimal form that reads back exactly.
std::string render(const Spray& p, const FormatOptions& opts = {});

/// Reads polyform text: a signed sum of terms, each an optional coefficient
/// times '*'-joined factors `name` or `name^e` (e may be written "-7" or "(-7)").
/// Also accepts "0" and the NULL multinomial line. Throws ParseError on bad
/// syntax and NameError on an unknown variable.
Spray parse(std::string_view text, std::size_t arity, const FormatOptions& opts = {},
            Backend backend = default_backend);

}  // namespace spray
