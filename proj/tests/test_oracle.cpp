#include <gtest/gtest.h>

#include <random>

#include "dense.hpp"
#include "fixtures.hpp"

namespace spray {
namespace {

using namespace spray::testing;

TEST(Oracle, RoundTrip) {
    EXPECT_EQ(oracle::from_dense(oracle::to_dense(s1_final())), s1_final());
    const auto z = oracle::to_dense(zero(2));
    EXPECT_EQ(z.data.size(), 1u);
    EXPECT_EQ(z.data[0], 0.0);
    EXPECT_EQ(oracle::from_dense(z), zero(2));
}

TEST(Oracle, RandomRoundTrip) {
    std::mt19937_64 rng(1616);
    for (int trial = 0; trial < 1000; ++trial) {
        const Spray p = random_spray(rng, {.arity = 1 + static_cast<std::size_t>(trial % 3)});
        EXPECT_EQ(oracle::from_dense(oracle::to_dense(p)), p);
    }
}

TEST(Oracle, PaperProduct) {
    const auto prod = oracle::dense_multiply(oracle::to_dense(s1_final()), oracle::to_dense(s2()));
    EXPECT_EQ(oracle::from_dense(prod), parse(kS1TimesS2, 3));
}

TEST(Oracle, UnitIsIdentity) {
    const auto p = oracle::to_dense(s4());
    EXPECT_EQ(oracle::from_dense(oracle::dense_multiply(p, oracle::to_dense(unit(2)))), s4());
}

TEST(Oracle, Capacity) {
    EXPECT_THROW(oracle::to_dense(Spray::monomial({0, 0}) + Spray::monomial({2000, 2000})),
                 OracleCapacityError);
    WalkConfig cfg = WalkConfig::reference();
    cfg.n = 1001;
    cfg.traps.clear();
    EXPECT_THROW(oracle::dense_walk(cfg), OracleCapacityError);
}

TEST(Oracle, DenseWalk) {
    EXPECT_NEAR(oracle::dense_walk(WalkConfig::reference()), 0.9006642, 1e-7);
    WalkConfig cfg = WalkConfig::reference();
    cfg.steps = 0;
    EXPECT_EQ(oracle::dense_walk(cfg), 1.0);
}

}  // namespace
}  // namespace spray
