#include <gtest/gtest.h>

#include <random>

#include "drep/collapse.hpp"
#include "drep/homology.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace drep;
using testsupport::fixture;

namespace {

CollapseSequence sequence_of(const SimplicialComplex& K, int d,
                             const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& steps)
{
    CollapseSequence s{d, {}};
    for (const auto& [f, j] : steps)
        s.steps.push_back({K.face(f), K.face(j)});
    return s;
}

} // namespace

TEST(ElementaryCollapse, Examples)
{
    auto K = fixture("fig2");
    auto after = elementary_collapse(K, K.face({"4"}), 1);
    EXPECT_EQ(after, testsupport::complex_of({{"1", "2", "3"}, {"2", "5"}, {"3", "6"}}));

    auto T = simplex(2);
    EXPECT_EQ(elementary_collapse(T, T.face({"1"}), 1), testsupport::complex_of({{"2", "3"}}));

    auto B = simplex_boundary(2);
    try {
        elementary_collapse(B, B.face({"1"}), 1);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), Errc::NotFree);
    }
    EXPECT_THROW(elementary_collapse(K, K.face({"1", "4"}), 1), InputError);
    EXPECT_THROW(elementary_collapse(K, K.face({"4", "5"}), 1), InputError);
}

TEST(VerifyCollapse, Examples)
{
    auto K = fixture("fig2");
    auto good = sequence_of(K, 1,
                            {{{"4"}, {"1", "4"}},
                             {{"5"}, {"2", "5"}},
                             {{"6"}, {"3", "6"}},
                             {{"1"}, {"1", "2", "3"}},
                             {{"2"}, {"2", "3"}},
                             {{"3"}, {"3"}}});
    EXPECT_TRUE(verify_collapse(K, good));
    auto bad = good;
    std::swap(bad.steps[0], bad.steps[3]);
    EXPECT_FALSE(verify_collapse(K, bad));
    EXPECT_TRUE(verify_collapse(SimplicialComplex{}, CollapseSequence{1, {}}));
    auto big = good;
    big.d = 0;
    EXPECT_FALSE(verify_collapse(K, big));
}

TEST(IsCollapsible, Fixtures)
{
    for (auto mode : {CollapseMode::Greedy, CollapseMode::Exhaustive}) {
        auto r = is_d_collapsible(fixture("fig2"), 1, mode);
        ASSERT_TRUE(r.collapsible);
        EXPECT_TRUE(verify_collapse(fixture("fig2"), *r.sequence));
    }
    auto m = is_d_collapsible(fixture("mobius"), 2, CollapseMode::Exhaustive);
    ASSERT_TRUE(m.collapsible);
    EXPECT_TRUE(verify_collapse(fixture("mobius"), *m.sequence));
    auto b = is_d_collapsible(simplex_boundary(2), 1, CollapseMode::Exhaustive);
    EXPECT_FALSE(b.collapsible);
    EXPECT_TRUE(b.authoritative);
    auto s = is_d_collapsible(fixture("spider"), 1, CollapseMode::Exhaustive);
    ASSERT_TRUE(s.collapsible);
    EXPECT_TRUE(verify_collapse(fixture("spider"), *s.sequence));
    EXPECT_THROW(is_d_collapsible(fixture("fig2"), 0, CollapseMode::Greedy), InputError);
}

TEST(IsCollapsible, GuardOnStates)
{
    Guards g;
    g.collapse_max_states = 2;
    EXPECT_THROW(is_d_collapsible(fixture("mobius"), 2, CollapseMode::Exhaustive, g), GuardExceeded);
}

TEST(IsCollapsible, AgreesWithUnmemoizedSearch)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 150; ++i) {
        auto K = testsupport::random_complex(rng, 6, 5, 4);
        auto facets = oracle::facet_sets(K);
        for (int d = 1; d <= 3; ++d) {
            auto r = is_d_collapsible(K, d, CollapseMode::Exhaustive);
            EXPECT_EQ(r.collapsible, oracle::collapsible(facets, d));
            if (r.collapsible)
                EXPECT_TRUE(verify_collapse(K, *r.sequence));
        }
    }
}

TEST(IsCollapsible, MonotoneInDAndImpliesLeray)
{
    std::mt19937_64 rng(10);
    for (int i = 0; i < 150; ++i) {
        auto K = testsupport::random_complex(rng, 7, 6, 4);
        bool prev = false;
        for (int d = 1; d <= 4; ++d) {
            bool now = is_d_collapsible(K, d, CollapseMode::Exhaustive).collapsible;
            if (prev)
                EXPECT_TRUE(now);
            if (now)
                EXPECT_FALSE(is_d_leray(K, d));
            prev = now;
        }
    }
}

TEST(IsCollapsible, GreedyYesIsCorrect)
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 150; ++i) {
        auto K = testsupport::random_complex(rng, 6);
        auto g = is_d_collapsible(K, 2, CollapseMode::Greedy);
        if (g.collapsible) {
            EXPECT_TRUE(verify_collapse(K, *g.sequence));
        } else {
            EXPECT_FALSE(g.authoritative);
        }
    }
}
