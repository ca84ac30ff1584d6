#include <gtest/gtest.h>

#include <random>

#include "drep/homology.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace drep;
using testsupport::fixture;

TEST(Betti, Simplices)
{
    for (int n = 0; n <= 5; ++n) {
        auto b = betti_z2(simplex(n));
        EXPECT_EQ(b, std::vector<long>(static_cast<std::size_t>(n + 1), 0)) << n;
    }
}

TEST(Betti, SimplexBoundaries)
{
    for (int n = 1; n <= 5; ++n) {
        auto b = betti_z2(simplex_boundary(n));
        std::vector<long> want(static_cast<std::size_t>(n), 0);
        want[n - 1] = 1;
        EXPECT_EQ(b, want) << n;
    }
}

TEST(Betti, Fixtures)
{
    EXPECT_EQ(betti_z2(fixture("fig2")), (std::vector<long>{0, 0, 0}));
    EXPECT_EQ(betti_z2(fixture("mobius")), (std::vector<long>{0, 1, 0}));
    EXPECT_EQ(betti_z2(fixture("triangle_boundary")), (std::vector<long>{0, 1}));
}

TEST(Betti, AgreesWithDenseOracle)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        auto K = testsupport::random_complex(rng, 7, 7, 4);
        EXPECT_EQ(betti_z2(K), oracle::betti(K));
    }
    for (const auto& n : testsupport::fixture_names())
        if (n != "km")
            EXPECT_EQ(betti_z2(fixture(n)), oracle::betti(fixture(n))) << n;
}

TEST(Leray, Examples)
{
    EXPECT_FALSE(is_d_leray(fixture("fig2"), 1));
    auto w = is_d_leray(simplex_boundary(2), 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->vertices, (Face{0, 1, 2}));
    EXPECT_EQ(w->dimension, 1);
    EXPECT_FALSE(is_d_leray(fixture("mobius"), 2));
    EXPECT_TRUE(is_d_leray(fixture("mobius"), 1));
}

TEST(Leray, WitnessIsGenuine)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 150; ++i) {
        auto K = testsupport::random_complex(rng, 6);
        for (int d = 0; d <= 2; ++d) {
            auto w = is_d_leray(K, d);
            EXPECT_EQ(!w, oracle::leray(K, d));
            if (w) {
                auto b = betti_z2(induced_subcomplex(K, w->vertices));
                ASSERT_LT(static_cast<std::size_t>(w->dimension), b.size());
                EXPECT_GE(w->dimension, d);
                EXPECT_NE(b[w->dimension], 0);
            }
        }
    }
}

TEST(Leray, GuardOnVertexCount)
{
    EXPECT_THROW(is_d_leray(fixture("km"), 2), GuardExceeded);
}
