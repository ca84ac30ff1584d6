#include <gtest/gtest.h>

#include <random>

#include "drep/config_space.hpp"
#include "drep/geometry.hpp"
#include "drep/lp.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace drep;
using testsupport::fixture;

namespace {

QPoint pt(std::initializer_list<long> xs)
{
    QPoint p;
    for (long x : xs)
        p.emplace_back(x);
    return p;
}

PointSet random_set(std::mt19937_64& rng, std::size_t dim, std::size_t max_points)
{
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<std::size_t> count(1, max_points);
    PointSet s(count(rng));
    for (auto& p : s)
        for (std::size_t k = 0; k < dim; ++k)
            p.emplace_back(coord(rng));
    return s;
}

} // namespace

TEST(Lp, FeasiblePointSatisfiesSystem)
{
    // x + y = 2, x - y = 0 has the unique nonnegative solution (1, 1)
    std::vector<std::vector<Rational>> A{{1, 1}, {1, -1}};
    std::vector<Rational> b{2, 0};
    auto x = lp_feasible_point(A, b);
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], 1);
    EXPECT_EQ((*x)[1], 1);
    // x + y = -1 has no nonnegative solution
    EXPECT_FALSE(lp_feasible({{1, 1}}, {Rational(-1)}));
}

TEST(HullsIntersect, Examples)
{
    EXPECT_TRUE(hulls_intersect({{pt({0, 0})}, {pt({0, 0})}}));
    EXPECT_FALSE(hulls_intersect({{pt({0})}, {pt({1})}}));
    auto p = hulls_common_point({{pt({0, 0}), pt({2, 2})}, {pt({0, 2}), pt({2, 0})}});
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, pt({1, 1}));
    EXPECT_THROW(hulls_intersect({{pt({0, 0})}, {pt({1})}}), InputError);
    EXPECT_THROW(hulls_intersect({{pt({0})}, {}}), InputError);
}

TEST(HullsIntersect, AgreesWithFourierMotzkin)
{
    std::mt19937_64 rng(31);
    int meets = 0, total = 0;
    for (std::size_t dim = 1; dim <= 3; ++dim)
        for (int i = 0; i < 150; ++i) {
            std::uniform_int_distribution<int> k(2, 3);
            std::vector<PointSet> sets(k(rng));
            for (auto& s : sets)
                s = random_set(rng, dim, 4);
            bool got = hulls_intersect(sets);
            EXPECT_EQ(got, oracle::hulls_meet(sets));
            if (auto p = hulls_common_point(sets)) {
                EXPECT_TRUE(got);
                for (const auto& s : sets)
                    EXPECT_TRUE(hulls_intersect({s, {*p}}));
            }
            meets += got;
            ++total;
        }
    EXPECT_GT(meets, 0);
    EXPECT_LT(meets, total);
}

TEST(HullsIntersect, InvariantUnderSymmetries)
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        std::vector<PointSet> sets(3);
        for (auto& s : sets)
            s = random_set(rng, 2, 3);
        const bool base = hulls_intersect(sets);
        auto perm = sets;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& s : perm)
            std::shuffle(s.begin(), s.end(), rng);
        EXPECT_EQ(hulls_intersect(perm), base);
        auto moved = sets;
        for (auto& s : moved)
            for (auto& p : s) {
                p[0] += Rational(7, 3);
                p[1] -= Rational(5);
            }
        EXPECT_EQ(hulls_intersect(moved), base);
        auto scaled = sets;
        for (auto& s : scaled)
            for (auto& p : s)
                for (auto& c : p)
                    c *= Rational(5, 2);
        EXPECT_EQ(hulls_intersect(scaled), base);
    }
}

TEST(NerveOfHulls, Examples)
{
    HullFamily path{{"1", {pt({1})}}, {"2", {pt({1}), pt({2})}}, {"3", {pt({2}), pt({3})}}, {"4", {pt({3})}}};
    EXPECT_EQ(nerve_of_hulls(path), fixture("path4"));
    HullFamily three{{"a", {pt({0, 0}), pt({2, 2})}}, {"b", {pt({0, 2}), pt({2, 0})}}, {"c", {pt({1, 0}), pt({1, 2})}}};
    auto N = nerve_of_hulls(three);
    EXPECT_EQ(N.num_facets(), 1u);
    EXPECT_EQ(N.dimension(), 2);
    auto K = fixture("fig2");
    EXPECT_EQ(nerve_of_hulls(convex_sets_of(K, moment_curve_realization(K, 3))), K);
}

TEST(ConvexSets, Examples)
{
    auto K = fixture("fig2");
    auto R = moment_curve_realization(K, 3);
    auto fam = convex_sets_of(K, R);
    // vertex order 1..6, facet order 123, 14, 25, 36
    EXPECT_EQ(fam[3].first, "4");
    EXPECT_EQ(fam[3].second, (PointSet{pt({2, 4, 8})}));
    EXPECT_EQ(fam[0].second, (PointSet{pt({1, 1, 1}), pt({2, 4, 8})}));

    auto T = simplex(2);
    LinearRealization zero{1, {{{"1", "2", "3"}, pt({0})}}};
    for (const auto& [name, s] : convex_sets_of(T, zero))
        EXPECT_EQ(s, (PointSet{pt({0})}));

    auto F1 = fixture("fig1");
    auto fam1 = convex_sets_of(F1, moment_curve_realization(F1, 2));
    EXPECT_EQ(fam1[4].first, "5");
    EXPECT_EQ(fam1[4].second.size(), 3u);
}

TEST(Realization, FacetMismatch)
{
    auto K = fixture("fig2");
    LinearRealization R{1, {{{"1", "2", "3"}, pt({0})}}};
    EXPECT_THROW(is_faithful(K, R), InputError);
    R.points.push_back({{"1", "4"}, pt({0})});
    R.points.push_back({{"2", "5"}, pt({0})});
    R.points.push_back({{"3", "6"}, pt({0, 1})});
    EXPECT_THROW(is_faithful(K, R), InputError);
    R.points.back().second = pt({0});
    R.points.push_back({{"4", "5"}, pt({0})});
    EXPECT_THROW(is_faithful(K, R), InputError);
}

TEST(IsFaithful, Examples)
{
    auto K = fixture("fig2");
    EXPECT_FALSE(is_faithful(K, moment_curve_realization(K, 3)));
    LinearRealization zero{1, {}};
    for (const auto& f : K.facets())
        zero.points.push_back({K.labels(f), pt({0})});
    auto bad = is_faithful(K, zero);
    ASSERT_TRUE(bad);
    EXPECT_FALSE(K.contains(*bad));
    EXPECT_EQ(bad->size(), 2u);

    auto T = simplex(2);
    EXPECT_FALSE(is_faithful(T, LinearRealization{1, {{{"1", "2", "3"}, pt({5})}}}));
}

TEST(MomentCurve, Examples)
{
    auto K = fixture("fig2");
    auto R = moment_curve_realization(K, 3);
    ASSERT_EQ(R.points.size(), 4u);
    for (std::size_t j = 0; j < 4; ++j) {
        long t = static_cast<long>(j) + 1;
        EXPECT_EQ(R.points[j].second, pt({t, t * t, t * t * t}));
    }
    EXPECT_EQ(moment_curve_bound(K), 3);
    auto T = simplex(2);
    EXPECT_EQ(moment_curve_realization(T, 1).points[0].second, pt({1}));
    auto M = fixture("mobius");
    EXPECT_EQ(moment_curve_bound(M), 9);
    auto RM = moment_curve_realization(M, 9);
    EXPECT_EQ(RM.points.size(), 8u);
    EXPECT_TRUE(verify_realization(M, RM));
}

TEST(MomentCurve, FaithfulAtTheBoundOnRandomComplexes)
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 60; ++i) {
        auto K = testsupport::random_complex(rng, 6, 5, 3);
        auto R = moment_curve_realization(K, std::max(moment_curve_bound(K), 1));
        EXPECT_TRUE(verify_realization(K, R)) << format_complex(K);
    }
}

TEST(ConfigurationLemma, FaithfulRealizationsSeparateMaximalCells)
{
    std::vector<SimplicialComplex> cases{fixture("fig2"), fixture("path4"), fixture("triangle_boundary"),
                                         fixture("spider")};
    std::mt19937_64 rng(34);
    for (int i = 0; i < 30; ++i)
        cases.push_back(testsupport::random_complex(rng, 5, 4, 3));
    for (const auto& K : cases) {
        auto R = moment_curve_realization(K, std::max(moment_curve_bound(K), 1));
        ASSERT_FALSE(is_faithful(K, R));
        auto pts = realization_points(K, R);
        auto Z = config_space(K);
        for (const auto& c : Z.maximal_cells) {
            PointSet a, b;
            for (int v : c.first)
                a.push_back(pts[Z.facet_of[v]]);
            for (int v : c.second)
                b.push_back(pts[Z.facet_of[v]]);
            EXPECT_FALSE(hulls_intersect({a, b}));
        }
    }
}
