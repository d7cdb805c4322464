#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "fixtures.hpp"

namespace spray {
namespace {

using namespace spray::testing;

// Brute force: every vector in {-2..2}^d with exactly one |2| and one |1|.
std::vector<MultiIndex> enumerate_knight_moves(std::size_t d) {
    std::vector<MultiIndex> out;
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
        MultiIndex v(d);
        std::size_t c = code;
        int twos = 0, ones = 0;
        for (std::size_t k = 0; k < d; ++k) {
            v[k] = static_cast<Exponent>(c % 5) - 2;
            c /= 5;
            const int a = std::abs(v[k]);
            twos += a == 2;
            ones += a == 1;
        }
        if (twos == 1 && ones == 1) out.push_back(v);
    }
    return out;
}

std::size_t enumerate_homog_count(std::size_t d, int n) {
    std::size_t count = 0;
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= static_cast<std::size_t>(n + 1);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        int s = 0;
        for (std::size_t k = 0; k < d; ++k) {
            s += static_cast<int>(c % static_cast<std::size_t>(n + 1));
            c /= static_cast<std::size_t>(n + 1);
        }
        count += s == n;
    }
    return count;
}

TEST(Constructors, Lone) {
    EXPECT_EQ(lone(1, 3), Spray::monomial({1, 0, 0}));
    EXPECT_EQ(lone(3, 3), Spray::monomial({0, 0, 1}));
    EXPECT_THROW(lone(0, 3), DomainError);
    EXPECT_THROW(lone(4, 3), DomainError);
}

TEST(Constructors, UnitAndZero) {
    EXPECT_EQ(unit(2), Spray::monomial({0, 0}));
    EXPECT_TRUE(zero(3).is_zero());
    EXPECT_EQ(zero(2) + zero(2), zero(2));
    EXPECT_THROW(unit(0), DomainError);
    EXPECT_THROW(zero(0), DomainError);
}

TEST(Constructors, Linear) {
    const std::vector<double> c{1, 2, 3};
    const Spray l = linear(c);
    EXPECT_EQ(l.size(), 3u);
    EXPECT_EQ(l.get({1, 0, 0}), 1.0);
    EXPECT_EQ(l.get({0, 1, 0}), 2.0);
    EXPECT_EQ(l.get({0, 0, 1}), 3.0);
    const std::vector<double> ones{1, 1, 1};
    EXPECT_EQ(evaluate(l, ones), 6.0);
    const std::vector<double> zeros{0, 0};
    EXPECT_EQ(linear(zeros), zero(2));
}

TEST(Constructors, Xyz) {
    EXPECT_EQ(xyz(3), Spray::monomial({1, 1, 1}));
    EXPECT_EQ(xyz(1), lone(1, 1));
}

TEST(Constructors, Homog) {
    EXPECT_EQ(homog(3, 3).size(), 10u);
    EXPECT_EQ(homog(3, 3), parse(kHomog33, 3));
    EXPECT_EQ(homog(4, 0), unit(4));
    EXPECT_EQ(homog(4, 2).size(), enumerate_homog_count(4, 2));
    EXPECT_EQ(homog(4, 2).size(), 10u);
}

TEST(Constructors, HomogProperty) {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (unsigned n = 0; n <= 5; ++n) {
            const Spray h = homog(d, n);
            EXPECT_EQ(h.size(), enumerate_homog_count(d, static_cast<int>(n)));
            h.for_each([&](const MultiIndex& idx, double v) {
                EXPECT_EQ(v, 1.0);
                int s = 0;
                for (auto e : idx) {
                    EXPECT_GE(e, 0);
                    s += e;
                }
                EXPECT_EQ(s, static_cast<int>(n));
            });
        }
    }
}

TEST(Constructors, RsprayDeterministic) {
    const RsprayOptions opts{.seed = 42};
    EXPECT_EQ(rspray(opts), rspray(opts));
    const Spray r = rspray(opts);
    EXPECT_EQ(r.arity(), 3u);
    EXPECT_LE(r.size(), 7u);
    r.for_each([](const MultiIndex& idx, double v) {
        for (auto e : idx) {
            EXPECT_GE(e, 0);
            EXPECT_LE(e, 2);
        }
        EXPECT_GE(v, 1.0);
    });
    EXPECT_GE(sum(coeffs(r)), 7.0);
    EXPECT_THROW(rspray({.rows = 0}), DomainError);
}

TEST(Constructors, RspraySeedsDiffer) {
    int distinct = 0;
    for (std::uint64_t s = 1; s <= 10; ++s)
        distinct += !(rspray({.seed = s}) == rspray({.seed = 0}));
    EXPECT_GT(distinct, 5);
}

TEST(Constructors, ChessKnight) {
    const Spray k = knight(2);
    EXPECT_EQ(k.size(), 8u);
    EXPECT_EQ(k, parse(kChessKnight, 2));
    const std::vector<MultiIndex> rows{{1, 2},  {1, -2}, {-1, 2}, {-1, -2},
                                       {2, 1},  {2, -1}, {-2, 1}, {-2, -1}};
    EXPECT_EQ(k, Spray(rows, {}, 2));
    EXPECT_THROW(knight(1), DomainError);
}

TEST(Constructors, KnightMatchesEnumeration) {
    for (std::size_t d = 2; d <= 5; ++d) {
        const auto moves = enumerate_knight_moves(d);
        const Spray k = knight(d);
        EXPECT_EQ(k.size(), moves.size());
        EXPECT_EQ(k.size(), 4 * d * (d - 1));
        EXPECT_EQ(k, Spray(moves, {}, d));
    }
    EXPECT_EQ(knight(3).size(), 24u);
    EXPECT_EQ(knight(4).size(), 48u);
}

TEST(Constructors, KnightClosedUnderInversion) {
    for (std::size_t d = 2; d <= 5; ++d) {
        const Spray k = knight(d);
        k.for_each([&](const MultiIndex& idx, double v) { EXPECT_EQ(k.get(-idx), v); });
    }
}

TEST(Constructors, KnightSquaredConstant) {
    // 64 ordered move pairs; count those summing to zero.
    const auto moves = enumerate_knight_moves(2);
    int returns = 0;
    for (const auto& a : moves)
        for (const auto& b : moves) returns += (a + b).is_origin();
    EXPECT_EQ(returns, 8);
    EXPECT_EQ(power(knight(2), 2).get({0, 0}), static_cast<double>(returns));
}

TEST(Constructors, WalkKernel) {
    const Spray k = walk_kernel(2);
    EXPECT_EQ(k.size(), 5u);
    for (const MultiIndex& idx : {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{-1, 0},
                                  MultiIndex{0, 1}, MultiIndex{0, -1}})
        EXPECT_EQ(k.get(idx), 0.2);
    const std::vector<double> ones{1, 1};
    EXPECT_NEAR(evaluate(k, ones), 1.0, 1e-15);
    for (std::size_t d = 1; d <= 6; ++d) {
        EXPECT_EQ(walk_kernel(d).size(), 2 * d + 1);
        EXPECT_NEAR(sum(coeffs(walk_kernel(d))), 1.0, 1e-15);
    }
}

TEST(Constructors, CyclicSquares) {
    const Spray c = cyclic_squares();
    EXPECT_EQ(c.arity(), 26u);
    EXPECT_EQ(c.size(), 26u);
    MultiIndex ab2(26);
    ab2[0] = 1;
    ab2[1] = 2;
    EXPECT_EQ(c.get(ab2), 1.0);
    MultiIndex a2z(26);
    a2z[0] = 2;
    a2z[25] = 1;
    EXPECT_EQ(c.get(a2z), 1.0);
    EXPECT_EQ(c, parse(kCyclic, 26, {.variable_names = letters()}));
}

TEST(Constructors, BackendSelection) {
    EXPECT_EQ(knight(3, Backend::Ordered).backend(), Backend::Ordered);
    EXPECT_EQ(knight(3, Backend::Hashed).backend(), Backend::Hashed);
    EXPECT_EQ(knight(3, Backend::Ordered), knight(3, Backend::Hashed));
    EXPECT_EQ(homog(3, 4, Backend::Ordered), homog(3, 4, Backend::Hashed));
}

}  // namespace
}  // namespace spray
