#include <gtest/gtest.h>

#include "drep/collapse.hpp"
#include "drep/report.hpp"
#include "drep/serialize.hpp"
#include "support.hpp"

using namespace drep;
using testsupport::fixture;

namespace {

/// Print and reparse, so the round trip goes through text.
Json reparse(const Json& j)
{
    return Json::parse(j.dump());
}

} // namespace

TEST(SerializeJson, ComplexRoundTrip)
{
    for (const auto& n : testsupport::fixture_names()) {
        auto K = fixture(n);
        EXPECT_EQ(complex_from_json(reparse(complex_json(K))), K);
    }
}

TEST(SerializeJson, RationalForms)
{
    EXPECT_EQ(rational_from_json(rational_json(Rational(-7, 3))), Rational(-7, 3));
    EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
    EXPECT_EQ(rational_from_json(Json("3/6")), Rational(1, 2));
    EXPECT_THROW(rational_from_json(Json("1/0")), InputError);
    EXPECT_THROW(rational_from_json(Json("abc")), InputError);
    EXPECT_THROW(rational_from_json(Json::array()), InputError);
}

TEST(SerializeJson, RealizationAndIntervals)
{
    auto K = fixture("path4");
    auto r = decide_1_representable(K);
    auto R = arrangement_realization(K, r.arrangement);
    auto R2 = realization_from_json(reparse(realization_json(R)));
    EXPECT_EQ(R2.d, R.d);
    EXPECT_EQ(R2.points, R.points);
    EXPECT_TRUE(verify_realization(K, R2));
    auto iv = intervals_from_json(K, reparse(intervals_json(K, *r.intervals)));
    EXPECT_EQ(iv.intervals, r.intervals->intervals);
    EXPECT_TRUE(verify_intervals(K, iv));
}

TEST(SerializeJson, ObstructionsAndAsteroidalMaps)
{
    for (const auto& K : {fixture("fig2"), fixture("fig1"), simplex_boundary(2), fixture("spider")}) {
        auto r = decide_1_representable(K);
        ASSERT_FALSE(r.representable);
        auto o = obstruction_from_json(K, reparse(obstruction_json(K, *r.obstruction)));
        EXPECT_EQ(o.kind, r.obstruction->kind);
        EXPECT_EQ(o.vertices, r.obstruction->vertices);
        EXPECT_TRUE(verify_obstruction(K, o));
        auto m = build_asteroidal_map(K, o);
        auto m2 = asteroidal_from_json(K, reparse(asteroidal_json(K, m)));
        EXPECT_EQ(m2.F, m.F);
        EXPECT_EQ(m2.pi, m.pi);
        EXPECT_TRUE(verify_asteroidal_map(K, m2));
    }
}

TEST(SerializeJson, DrawingAndKuratowski)
{
    auto F = fixture("fig2");
    auto d = decide_2_representable_cograph(F);
    const auto& base = d.dual.complex;
    auto D2 = drawing_from_json(base, reparse(drawing_json(base, *d.drawing)));
    EXPECT_TRUE(verify_drawing(one_skeleton(base), D2));
    auto R2 = realization_from_json(reparse(realization_json(*d.realization)));
    EXPECT_TRUE(verify_realization(F, R2));

    for (const char* name : {"vkf1", "k33_classified"}) {
        auto V = fixture(name);
        auto n = decide_2_representable_cograph(V);
        const auto& b = n.dual.complex;
        auto k = kuratowski_from_json(b, reparse(kuratowski_json(b, *n.kuratowski)));
        EXPECT_EQ(k.kind, n.kuratowski->kind);
        EXPECT_TRUE(verify_kuratowski(one_skeleton(b), k));
    }
}

TEST(SerializeJson, CollapseSequence)
{
    auto K = fixture("mobius");
    auto c = is_d_collapsible(K, 3, CollapseMode::Exhaustive);
    ASSERT_TRUE(c.collapsible);
    auto s = collapse_from_json(K, reparse(collapse_json(K, *c.sequence)));
    EXPECT_EQ(s.d, 3);
    EXPECT_TRUE(verify_collapse(K, s));
}

TEST(SerializeJson, SymmetricCycle)
{
    auto K = fixture("fig2");
    auto Z = config_space(K);
    auto c = *find_symmetric_cycle(Z);
    auto c2 = cycle_from_json(Z.base, reparse(cycle_json(Z.base, c)));
    EXPECT_EQ(c2.half, c.half);
    EXPECT_EQ(c2.nodes, c.nodes);
    EXPECT_TRUE(verify_symmetric_cycle(Z, c2));
}

TEST(SerializeJson, RejectsUnknownLabelsAndShapes)
{
    auto K = fixture("fig2");
    EXPECT_THROW(face_from_json(K, Json::parse(R"(["9"])")), InputError);
    EXPECT_THROW(face_from_json(K, Json::parse(R"("1")")), InputError);
    EXPECT_THROW(obstruction_from_json(K, Json::parse(R"({"kind":"Bogus","vertices":[]})")), InputError);
    EXPECT_THROW(realization_from_json(Json::parse(R"({"d":2})")), InputError);
    auto base = dual(K).complex;
    EXPECT_THROW(drawing_from_json(base, Json::parse(R"([{"vertex":"123","x":0,"y":0}])")), InputError);
}

TEST(SerializeJson, ReportIsDeterministic)
{
    auto K = fixture("fig2");
    auto a = report_json(K, report(K, 3)).dump(2);
    auto b = report_json(K, report(K, 3)).dump(2);
    EXPECT_EQ(a, b);
    auto j = Json::parse(a);
    EXPECT_TRUE(j.is_object());
}
