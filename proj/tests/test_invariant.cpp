#include <gtest/gtest.h>

#include "support.hpp"

using namespace eves;

namespace {

WeightedPoint pt(std::vector<Rational> coords, std::vector<long> parts)
{
    return WeightedPoint(std::move(coords), Weight(std::move(parts)));
}

Vector affine(Rational x, Rational y)
{
    return {1, std::move(x), std::move(y)};
}

/// Twice the signed area of the affine triangle (a, b, c).
Rational doubled_area(const Vector& a, const Vector& b, const Vector& c)
{
    return (b[1] - a[1]) * (c[2] - a[2]) - (c[1] - a[1]) * (b[2] - a[2]);
}

} // namespace

TEST(Bracket, UnitTriangleAndSegment)
{
    auto id3 = Matrix::identity(3).row_vectors();
    EXPECT_EQ(bracket({affine(0, 0), affine(1, 0), affine(0, 1)}, id3), 1);
    auto id2 = Matrix::identity(2).row_vectors();
    EXPECT_EQ(bracket({{1, 0}, {1, 1}}, id2), 1);
}

TEST(Bracket, MultilinearAndAntisymmetric)
{
    auto id2 = Matrix::identity(2).row_vectors();
    Vector a{2, 3}, b{-1, 5};
    Rational base = bracket({a, b}, id2);
    Vector a7{14, 21};
    EXPECT_EQ(bracket({a7, b}, id2), 7 * base);
    EXPECT_EQ(bracket({b, a}, id2), -base);
}

TEST(Bracket, BasisMustSpan)
{
    std::vector<Vector> basis{{1, 0, 0}, {0, 1, 0}};
    EXPECT_THROW(bracket({{1, 0, 0}, {0, 0, 1}}, basis), InvalidInput);
    EXPECT_THROW(bracket({{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {2, 0, 0}}), InvalidInput);
}

TEST(EvesInvariant, SegmentPairs)
{
    auto s = eves_invariant(gen::load_fixture("segments_S"));
    auto t = eves_invariant(gen::load_fixture("segments_T"));
    EXPECT_TRUE(wps_equivalent(s.point(), pt({1, 1}, {2, 2})));
    EXPECT_TRUE(wps_equivalent(t.point(), pt({-1, -1}, {2, 2})));
    EXPECT_FALSE(equivalent(s, t));
}

TEST(EvesInvariant, MidpointTriangle)
{
    auto s = eves_invariant(gen::load_fixture("midpoint_S"));
    auto t = eves_invariant(gen::load_fixture("midpoint_T"));
    EXPECT_TRUE(wps_equivalent(s.point(), pt({1, 1, 1}, {2, 2, 4})));
    EXPECT_TRUE(wps_equivalent(t.point(), pt({-1, -1, 1}, {2, 2, 4})));
    EXPECT_FALSE(equivalent(s, t));
}

TEST(EvesInvariant, RequiresHConfiguration)
{
    std::vector<ProjPoint> pts = {{"a", {1, 0}}, {"b", {1, 1}}, {"c", {1, 2}}};
    auto cfg = build_configuration(Weight({1, 1}), 2, 1, {{RTuple{{"a", "b"}}}, {RTuple{{"a", "c"}}}}, pts);
    try {
        eves_invariant(cfg);
        FAIL() << "expected NotHConfiguration";
    } catch (const NotHConfiguration& e) {
        EXPECT_NE(std::string(e.what()).find("point 'b'"), std::string::npos);
    }
}

TEST(EvesInvariant, CanonicalChoicesReproduceDefault)
{
    auto cfg = gen::load_fixture("midpoint_S");
    EXPECT_EQ(eves_invariant_with_choices(cfg, canonical_choices(cfg)).point().coords(),
              eves_invariant(cfg).point().coords());
}

TEST(EvesInvariant, RescaledRepresentative)
{
    auto cfg = gen::load_fixture("cross_ratio_0123");
    auto choice = canonical_choices(cfg);
    for (auto& x : choice.representatives.at("beta"))
        x *= 5;
    auto scaled = eves_invariant_with_choices(cfg, choice);
    EXPECT_NE(scaled.point().coords(), eves_invariant(cfg).point().coords());
    EXPECT_TRUE(equivalent(scaled, eves_invariant(cfg)));
}

TEST(EvesInvariant, ChangedLineBasis)
{
    auto cfg = gen::load_fixture("midpoint_S");
    auto choice = canonical_choices(cfg);
    auto& basis = choice.bases.begin()->second;
    basis = {basis[0], {basis[0][0] * 2 + basis[1][0] * 3, basis[0][1] * 2 + basis[1][1] * 3,
                        basis[0][2] * 2 + basis[1][2] * 3}};
    EXPECT_TRUE(equivalent(eves_invariant_with_choices(cfg, choice), eves_invariant(cfg)));
}

TEST(EvesInvariant, InvalidChoicesRejected)
{
    auto cfg = gen::load_fixture("cross_ratio_0123");
    auto choice = canonical_choices(cfg);
    choice.representatives.at("beta") = {1, 5};
    EXPECT_THROW(eves_invariant_with_choices(cfg, choice), InvalidInput);
    auto other = canonical_choices(cfg);
    other.bases.begin()->second = {{1, 0}, {2, 0}};
    EXPECT_THROW(eves_invariant_with_choices(cfg, other), InvalidInput);
}

TEST(EvesInvariant, ChoiceIndependenceOnRandomConfigurations)
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto cfg = gen::random_h_configuration(rng);
        auto base = eves_invariant(cfg);
        for (int k = 0; k < 3; ++k)
            ASSERT_TRUE(equivalent(eves_invariant_with_choices(cfg, gen::random_choices(rng, cfg)), base));
    }
}

TEST(EvesInvariant, AlwaysInGenericLocus)
{
    gen::Rng rng(42);
    for (int trial = 0; trial < 100; ++trial)
        ASSERT_TRUE(eves_invariant(gen::random_h_configuration(rng)).point().in_generic_locus());
}

TEST(EvesInvariant, FlippingTwoTuplesNegatesTwoCoordinates)
{
    gen::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto cfg = gen::random_h_configuration(rng);
        auto base = eves_invariant(cfg).point();
        auto [i, j] = index_pairs(cfg.color_count())[0];
        auto lists = cfg.colors();
        std::swap(lists[i][0].members[0], lists[i][0].members[1]);
        std::swap(lists[j][0].members[0], lists[j][0].members[1]);
        std::vector<ProjPoint> pts;
        for (const auto& [name, p] : cfg.points())
            pts.push_back(p);
        auto flipped = eves_invariant(build_configuration(cfg.weight(), 2, cfg.dim(), lists, pts)).point();
        Vector expected = base.coords();
        expected[i] = -expected[i];
        expected[j] = -expected[j];
        ASSERT_EQ(flipped.coords(), expected);
        bool same_class = wps_equivalent(base, flipped);
        bool lambda_minus_one = cfg.weight()[i] % 2 == 1 && cfg.weight()[j] % 2 == 1;
        bool others_even = true;
        for (std::size_t c = 0; c < cfg.color_count(); ++c)
            if (c != i && c != j && cfg.weight()[c] % 2 == 1)
                others_even = false;
        if (lambda_minus_one && others_even) {
            ASSERT_TRUE(same_class);
        }
    }
}

TEST(ApplyMorphism, IdentityKeepsInvariant)
{
    auto cfg = gen::load_fixture("six_point_triangles");
    auto image = apply_morphism(cfg, LinearMorphism{Matrix::identity(3)});
    EXPECT_EQ(eves_invariant(image).point().coords(), eves_invariant(cfg).point().coords());
}

TEST(ApplyMorphism, InvertiblePlaneMaps)
{
    gen::Rng rng(44);
    auto cfg = gen::load_fixture("six_point_triangles");
    auto base = eves_invariant(cfg);
    for (int trial = 0; trial < 20; ++trial) {
        auto image = apply_morphism(cfg, LinearMorphism{gen::random_invertible(rng, 3)});
        ASSERT_TRUE(equivalent(eves_invariant(image), base));
    }
    auto fixed = apply_morphism(cfg, LinearMorphism{io::load_matrix(gen::fixture("plane_map"))});
    EXPECT_TRUE(equivalent(eves_invariant(fixed), base));
}

TEST(ApplyMorphism, ProjectionMergingPoints)
{
    auto cfg = gen::load_fixture("three_lines_3d");
    auto image = apply_morphism(cfg, LinearMorphism{io::load_matrix(gen::fixture("drop_last"))});
    EXPECT_TRUE(validate_h(image).h_valid);
    EXPECT_EQ(image.dim(), 2u);
    EXPECT_TRUE(image.points().count("A+E"));
    EXPECT_TRUE(equivalent(eves_invariant(image), eves_invariant(cfg)));
}

TEST(ApplyMorphism, RandomConfigurationsKeepTheirClass)
{
    gen::Rng rng(45);
    for (int trial = 0; trial < 40; ++trial) {
        auto cfg = gen::random_h_configuration(rng);
        auto base = eves_invariant(cfg);
        for (int k = 0; k < 5; ++k) {
            auto image = apply_morphism(cfg, LinearMorphism{gen::random_invertible(rng, cfg.dim() + 1)});
            ASSERT_TRUE(equivalent(eves_invariant(image), base));
        }
    }
}

TEST(ApplyMorphism, RankDeficiencyNamesTheSubspace)
{
    auto cfg = gen::load_fixture("cross_ratio_0123");
    Matrix collapse = Matrix::from_rows({{1, 1}, {2, 2}});
    try {
        apply_morphism(cfg, LinearMorphism{collapse});
        FAIL() << "expected MorphismError";
    } catch (const MorphismError& e) {
        EXPECT_NE(std::string(e.what()).find("span{"), std::string::npos);
    }
    EXPECT_THROW(apply_morphism(cfg, LinearMorphism{Matrix::identity(3)}), MorphismError);
}

TEST(CrossRatio, AffineZeroOneTwoThree)
{
    auto v = cross_ratio({"a", {1, 0}}, {"b", {1, 1}}, {"c", {1, 2}}, {"d", {1, 3}});
    EXPECT_EQ(v.coords(), (Vector{3, 4}));
    EXPECT_TRUE(wps_equivalent(v, eves_invariant(gen::load_fixture("cross_ratio_0123")).point()));
}

TEST(CrossRatio, HarmonicQuadruple)
{
    auto v = cross_ratio({"a", {1, 0}}, {"b", {1, 2}}, {"c", {1, 1}}, {"d", {0, 1}});
    EXPECT_TRUE(wps_equivalent(v, pt({-1, 1}, {1, 1})));
}

TEST(CrossRatio, InvariantUnderLineMaps)
{
    gen::Rng rng(46);
    ProjPoint a{"a", {1, 0}}, b{"b", {1, 1}}, c{"c", {1, 2}}, d{"d", {1, 3}};
    auto base = cross_ratio(a, b, c, d);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = gen::random_invertible(rng, 2);
        auto v = cross_ratio({"a", m * a.coords}, {"b", m * b.coords}, {"c", m * c.coords}, {"d", m * d.coords});
        ASSERT_TRUE(wps_equivalent(v, base));
    }
}

TEST(CrossRatio, MatchesDeterminantFormula)
{
    gen::Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vector> pts;
        while (pts.size() < 4) {
            Vector v{gen::random_rational(rng, 9), gen::random_rational(rng, 9)};
            if (is_zero(v))
                continue;
            bool fresh = true;
            for (const auto& q : pts)
                fresh = fresh && rank({q, v}) == 2;
            if (fresh)
                pts.push_back(v);
        }
        auto v = cross_ratio({"a", pts[0]}, {"b", pts[1]}, {"c", pts[2]}, {"d", pts[3]});
        ASSERT_TRUE(wps_equivalent(v, oracle::cross_ratio_formula(pts[0], pts[1], pts[2], pts[3])));
    }
}

TEST(CrossRatio, RejectsDegenerateInput)
{
    EXPECT_THROW(cross_ratio({"a", {1, 0}}, {"b", {2, 0}}, {"c", {1, 2}}, {"d", {1, 3}}), InvalidInput);
    EXPECT_THROW(cross_ratio({"a", {1, 0, 0}}, {"b", {1, 1, 0}}, {"c", {1, 0, 1}}, {"d", {1, 2, 0}}), InvalidInput);
}

TEST(TriangleRatio, SixPointsGiveAreaRatio)
{
    std::vector<Vector> p = {affine(0, 0), affine(4, 0), affine(1, 3), affine(5, 2), affine(2, 5), affine(-1, 2)};
    auto v = triangle_ratio(p, TrianglePattern::SixPoint);
    Rational num = doubled_area(p[0], p[1], p[2]) * doubled_area(p[3], p[4], p[5]);
    Rational den = doubled_area(p[0], p[1], p[3]) * doubled_area(p[2], p[4], p[5]);
    EXPECT_TRUE(wps_equivalent(v, pt({den, num}, {1, 1})));
    EXPECT_TRUE(wps_equivalent(v, eves_invariant(gen::load_fixture("six_point_triangles")).point()));
}

TEST(TriangleRatio, FivePoints)
{
    std::vector<Vector> p = {affine(0, 0), affine(4, 0), affine(1, 3), affine(5, 2), affine(2, 5)};
    auto v = triangle_ratio(p, TrianglePattern::FivePoint);
    Rational num = doubled_area(p[0], p[1], p[2]) * doubled_area(p[3], p[4], p[0]);
    Rational den = doubled_area(p[0], p[1], p[3]) * doubled_area(p[2], p[4], p[0]);
    EXPECT_TRUE(wps_equivalent(v, pt({den, num}, {1, 1})));
    EXPECT_TRUE(wps_equivalent(v, eves_invariant(gen::load_fixture("five_point_triangles")).point()));
}

TEST(TriangleRatio, OctahedralSignPhenomenon)
{
    std::vector<Vector> p = {affine(0, 0), affine(4, 0), affine(1, 3), affine(5, 2), affine(2, 5), affine(-1, 2)};
    Weight w22({2, 2});
    auto s = triangle_ratio(p, TrianglePattern::Octahedral, w22);
    auto t = triangle_ratio(p, TrianglePattern::Octahedral, w22, true);
    EXPECT_EQ(t.coords(), (Vector{-s[0], -s[1]}));
    EXPECT_FALSE(wps_equivalent(s, t));
    auto s1 = triangle_ratio(p, TrianglePattern::Octahedral);
    auto t1 = triangle_ratio(p, TrianglePattern::Octahedral, unit_weight(), true);
    EXPECT_TRUE(wps_equivalent(s1, t1));
}

TEST(TriangleRatio, ConicGivesOne)
{
    std::vector<Vector> p;
    for (long x : {0, 1, 2, -1, 3, -2})
        p.push_back(affine(x, x * x));
    EXPECT_TRUE(wps_equivalent(triangle_ratio(p, TrianglePattern::Octahedral), pt({1, 1}, {1, 1})));
}

TEST(TriangleRatio, CollinearTripleRejected)
{
    std::vector<Vector> p = {affine(0, 0), affine(1, 1), affine(2, 2), affine(5, 2), affine(2, 5), affine(-1, 2)};
    EXPECT_THROW(triangle_ratio(p, TrianglePattern::SixPoint), ConfigError);
}

TEST(SignedLength, ChartBasis)
{
    auto line = Subspace::span({{1, 0}, {0, 1}});
    std::vector<Vector> basis{{1, 0}, {1, 1}};
    EXPECT_EQ(signed_length_bracket(line, {"p", {1, 0}}, {"q", {1, 1}}, basis), 1);
    EXPECT_EQ(signed_length_bracket(line, {"p", {1, 2}}, {"q", {1, 5}}, basis), 3);
    EXPECT_EQ(signed_length_bracket(line, {"q", {1, 5}}, {"p", {1, 2}}, basis), -3);
    EXPECT_THROW(signed_length_bracket(line, {"p", {0, 1}}, {"q", {1, 5}}, basis), UndefinedPoint);
}

TEST(SignedLength, RatiosIndependentOfChartBasis)
{
    gen::Rng rng(48);
    for (int trial = 0; trial < 100; ++trial) {
        // A line in the plane through two chart points.
        Vector u = affine(gen::random_rational(rng, 5), gen::random_rational(rng, 5));
        Vector v = affine(gen::random_rational(rng, 5), gen::random_rational(rng, 5));
        if (rank({u, v}) != 2)
            continue;
        auto line = Subspace::span({u, v});
        auto on_line = [&](const Rational& t) {
            Vector out(3);
            for (std::size_t k = 0; k < 3; ++k)
                out[k] = u[k] + t * (v[k] - u[k]);
            return out;
        };
        std::vector<Rational> ts;
        for (int k = 0; k < 4; ++k)
            ts.push_back(gen::random_rational(rng, 7));
        if (ts[0] == ts[1] || ts[2] == ts[3])
            continue;
        auto basis_from = [&](const Rational& s0, const Rational& s1) {
            return std::vector<Vector>{on_line(s0), on_line(s1)};
        };
        Rational s0 = gen::random_rational(rng, 4), s1 = s0 + gen::random_nonzero(rng, 4);
        auto b1 = basis_from(0, 1);
        auto b2 = basis_from(s0, s1);
        auto len = [&](const std::vector<Vector>& b, int i, int j) {
            return signed_length_bracket(line, {"x", on_line(ts[i])}, {"y", on_line(ts[j])}, b);
        };
        ASSERT_EQ(len(b1, 0, 1) / len(b1, 2, 3), len(b2, 0, 1) / len(b2, 2, 3));
        ASSERT_EQ(len(b1, 0, 1), ts[1] - ts[0]);
    }
}
