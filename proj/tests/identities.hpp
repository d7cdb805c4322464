#pragma once

#include <array>
#include <vector>

#include "spray.hpp"

namespace spray::testing {

// Bilinear-form table: each row lists (sign, i, j) meaning sign * a_i * b_j.
struct Bilinear {
    int sign;
    int i;
    int j;
};

// Sum of (sum_k sign*a_i*b_j)^2 over the table rows, with a_i = x_i and
// b_j = x_{n+j} in 2n variables.
inline Spray sum_of_bilinear_squares(const std::vector<std::vector<Bilinear>>& table, std::size_t n) {
    const std::size_t arity = 2 * n;
    Spray total = zero(arity);
    for (const auto& row : table) {
        Spray form = zero(arity);
        for (const auto& [sign, i, j] : row)
            form = form + sign * (lone(i, arity) * lone(n + j, arity));
        total = total + form * form;
    }
    return total;
}

inline Spray product_of_sums_of_squares(std::size_t n) {
    const std::size_t arity = 2 * n;
    Spray a = zero(arity), b = zero(arity);
    for (std::size_t i = 1; i <= n; ++i) {
        a = a + power(lone(i, arity), 2);
        b = b + power(lone(n + i, arity), 2);
    }
    return a * b;
}

inline const std::vector<std::vector<Bilinear>> kEulerFour = {
    {{1, 1, 1}, {-1, 2, 2}, {-1, 3, 3}, {-1, 4, 4}},
    {{1, 1, 2}, {1, 2, 1}, {1, 3, 4}, {-1, 4, 3}},
    {{1, 1, 3}, {-1, 2, 4}, {1, 3, 1}, {1, 4, 2}},
    {{1, 1, 4}, {1, 2, 3}, {-1, 3, 2}, {1, 4, 1}},
};

inline const std::vector<std::vector<Bilinear>> kDegenEight = {
    {{1, 1, 1}, {-1, 2, 2}, {-1, 3, 3}, {-1, 4, 4}, {-1, 5, 5}, {-1, 6, 6}, {-1, 7, 7}, {-1, 8, 8}},
    {{1, 1, 2}, {1, 2, 1}, {1, 3, 4}, {-1, 4, 3}, {1, 5, 6}, {-1, 6, 5}, {-1, 7, 8}, {1, 8, 7}},
    {{1, 1, 3}, {-1, 2, 4}, {1, 3, 1}, {1, 4, 2}, {1, 5, 7}, {1, 6, 8}, {-1, 7, 5}, {-1, 8, 6}},
    {{1, 1, 4}, {1, 2, 3}, {-1, 3, 2}, {1, 4, 1}, {1, 5, 8}, {-1, 6, 7}, {1, 7, 6}, {-1, 8, 5}},
    {{1, 1, 5}, {-1, 2, 6}, {-1, 3, 7}, {-1, 4, 8}, {1, 5, 1}, {1, 6, 2}, {1, 7, 3}, {1, 8, 4}},
    {{1, 1, 6}, {1, 2, 5}, {-1, 3, 8}, {1, 4, 7}, {-1, 5, 2}, {1, 6, 1}, {-1, 7, 4}, {1, 8, 3}},
    {{1, 1, 7}, {1, 2, 8}, {1, 3, 5}, {-1, 4, 6}, {-1, 5, 3}, {1, 6, 4}, {1, 7, 1}, {-1, 8, 2}},
    {{1, 1, 8}, {-1, 2, 7}, {1, 3, 6}, {1, 4, 5}, {-1, 5, 4}, {-1, 6, 3}, {1, 7, 2}, {1, 8, 1}},
};

inline Spray euler_four_square_difference() {
    return product_of_sums_of_squares(4) - sum_of_bilinear_squares(kEulerFour, 4);
}

inline Spray degen_eight_square_difference() {
    return product_of_sums_of_squares(8) - sum_of_bilinear_squares(kDegenEight, 8);
}

}  // namespace spray::testing
