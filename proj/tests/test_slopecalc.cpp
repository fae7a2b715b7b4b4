#include "canred/error.hpp"
#include "canred/slopecalc.hpp"

#include <gtest/gtest.h>

using namespace canred;

namespace {

const RootSystem& sys(Family f, int n)
{
    static std::map<std::pair<char, int>, RootSystem> cache;
    auto key = std::make_pair(static_cast<char>(f), n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, RootSystem::build(LieType::make(f, n))).first;
    return it->second;
}

const RootSystem& g2() { return sys(Family::G, 2); }

SlopeDatum sd(const char* text) { return SlopeDatum::parse(text); }

WeightVec wv(std::initializer_list<std::pair<long, long>> xs)
{
    std::vector<Rational> c;
    for (auto [n, d] : xs)
        c.push_back(make_rational(n, d));
    return WeightVec(c);
}

}  // namespace

TEST(SlopeDatum, Parse)
{
    EXPECT_EQ(sd("0,1").delta, (std::vector<Rational>{0, 1}));
    EXPECT_EQ(sd(" 1/2 , -3 ").delta, (std::vector<Rational>{make_rational(1, 2), -3}));
    EXPECT_THROW(sd(""), InputError);
    EXPECT_THROW(sd("1,,2"), InputError);
    EXPECT_THROW(sd("0.5"), InputError);
}

TEST(Degree, Linear)
{
    EXPECT_EQ(degree(sd("0,1"), WeightVec(-RootVec{3, 2})), Rational(-2));
    EXPECT_EQ(degree(sd("0,1"), WeightVec(RootVec{3, 1})), Rational(1));
    EXPECT_EQ(degree(sd("0,0"), WeightVec(RootVec{1, 1})), Rational(0));
}

TEST(ParabolicOfSlope, Examples)
{
    EXPECT_EQ(parabolic_of_slope(g2(), sd("0,1")), (IndexSet{1}));
    EXPECT_EQ(parabolic_of_slope(sys(Family::E, 6), sd("1,0,0,0,0,2")), (IndexSet{0, 5}));
    EXPECT_EQ(parabolic_of_slope(g2(), sd("0,0")), std::nullopt);
    EXPECT_THROW(parabolic_of_slope(g2(), sd("-1,1")), InputError);
    EXPECT_THROW(parabolic_of_slope(g2(), sd("1,1,1")), InputError);
}

TEST(NumericalInvariants, Examples)
{
    const auto g = numerical_invariants(Parabolic(g2(), {1}), sd("0,1"));
    EXPECT_EQ(g, (InvariantMap{{IndexSet{1}, Rational(4)}}));
    const auto a = numerical_invariants(Parabolic(sys(Family::A, 3), {0, 2}), sd("1,0,1"));
    EXPECT_EQ(a, (InvariantMap{{IndexSet{0}, Rational(2)}, {IndexSet{2}, Rational(2)}}));
    for (const auto& [o, n] : numerical_invariants(Parabolic(sys(Family::E, 6), {0, 2, 5}), sd("0,0,0,0,0,0")))
        EXPECT_EQ(n, Rational(0));
}

TEST(NumericalInvariants, EnlargementModes)
{
    const Parabolic p(sys(Family::A, 3), {0, 1});
    EXPECT_EQ(invariant_index(p, Enlargement::single_root), (std::vector<IndexSet>{{0}, {1}}));
    EXPECT_EQ(invariant_index(p, Enlargement::component), (std::vector<IndexSet>{{0, 1}}));
    const auto n = numerical_invariants(p, sd("1,2,0"), Enlargement::component);
    ASSERT_EQ(n.size(), 1u);
    EXPECT_EQ(n[0].second, Rational(1 + 2 + 2));  // alpha_1, alpha_2, alpha_2 + alpha_3
}

TEST(CheckCanonical, G2Canonical)
{
    const auto v = check_canonical(Parabolic(g2(), {1}), sd("0,1"));
    EXPECT_TRUE(v.is_canonical);
    EXPECT_TRUE(v.violations.empty());
    std::vector<Rational> degs;
    for (const auto& pd : v.gp_degrees)
        for (const auto& x : pd.weight_degrees)
            degs.push_back(x);
    EXPECT_EQ(degs, (std::vector<Rational>{-1, -1, -1, -1, -2}));
}

TEST(CheckCanonical, LeviConditionFails)
{
    const auto v = check_canonical(Parabolic(g2(), {1}), sd("1,1"));
    EXPECT_FALSE(v.is_canonical);
    EXPECT_FALSE(v.levi_semistable);
    EXPECT_TRUE(v.type_positive);
    EXPECT_FALSE(v.violations.empty());
}

TEST(CheckCanonical, ZeroInvariantFails)
{
    const auto v = check_canonical(Parabolic(sys(Family::A, 2), {0}), sd("0,0"));
    EXPECT_FALSE(v.is_canonical);
    EXPECT_FALSE(v.invariants_positive);
    EXPECT_FALSE(v.type_positive);
}

TEST(CheckCanonical, CanonicalImpliesSignConditions)
{
    const Parabolic p(sys(Family::E, 6), {0, 5});
    const auto v = check_canonical(p, sd("1,0,0,0,0,2"));
    ASSERT_TRUE(v.is_canonical);
    for (const auto& [o, n] : v.invariants)
        EXPECT_GT(n, 0);
    for (const auto& pd : v.gp_degrees)
        EXPECT_LT(pd.total, 0);
}

TEST(ChiCharacter, Examples)
{
    EXPECT_EQ(chi_character(Parabolic(g2(), {0, 1}), {0}), WeightVec(-RootVec{1, 0}));
    EXPECT_EQ(chi_character(Parabolic(g2(), {1}), {1}), WeightVec(-RootVec{9, 6}));
    EXPECT_EQ(chi_character(Parabolic(sys(Family::A, 2), {0, 1}), {1}), WeightVec(-RootVec{0, 1}));
    EXPECT_THROW(chi_character(Parabolic(g2(), {1}), {0}), InputError);
}

TEST(ChiProjection, G2S2)
{
    const auto c = chi_projection_check(Parabolic(g2(), {1}), {1});
    EXPECT_TRUE(c.ok);
    EXPECT_TRUE(c.levi_orthogonal);
    EXPECT_EQ(c.c, Rational(6));
    EXPECT_EQ(c.projection, wv({{3, 2}, {1, 1}}));
    EXPECT_EQ(c.residual, WeightVec(2));
}

TEST(ChiProjection, Borel)
{
    const auto c = chi_projection_check(Parabolic(g2(), {0, 1}), {0});
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.c, Rational(1));
}

TEST(ChiProjection, G2S1)
{
    const auto c = chi_projection_check(Parabolic(g2(), {0}), {0});
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.chi, WeightVec(-RootVec{10, 5}));
    EXPECT_EQ(c.c, Rational(10));
}

TEST(ChiProjection, A3Middle)
{
    const auto c = chi_projection_check(Parabolic(sys(Family::A, 3), {1}), {1});
    EXPECT_TRUE(c.ok);
    EXPECT_GT(c.c, 0);
}

TEST(ChiProjection, ComponentReadingFailsOnA3)
{
    const Parabolic p(sys(Family::A, 3), {0, 1});
    const auto c = chi_projection_check(p, {0, 1});
    EXPECT_EQ(c.chi, WeightVec(-RootVec{3, 4, 2}));
    EXPECT_EQ(c.projection, wv({{1, 1}, {1, 1}, {1, 2}}));
    EXPECT_FALSE(c.ok);
    EXPECT_FALSE(n_deg_relation_check(p, {0, 1}, random_slope_data(3, 10, 0)).ok);
}

TEST(DegreeRelation, G2S2)
{
    const Parabolic p(g2(), {1});
    auto samples = random_slope_data(2, 10, 7);
    samples.insert(samples.begin(), sd("0,1"));
    const auto r = n_deg_relation_check(p, {1}, samples);
    EXPECT_TRUE(r.ok) << r.witness;
    ASSERT_TRUE(r.c_prime.has_value());
    EXPECT_EQ(*r.c_prime, make_rational(2, 3));
}

TEST(DegreeRelation, A2)
{
    const auto r = n_deg_relation_check(Parabolic(sys(Family::A, 2), {0}), {0}, random_slope_data(2, 10, 1));
    EXPECT_TRUE(r.ok);
}

TEST(DegreeRelation, ZeroSampleSkipped)
{
    const Parabolic p(g2(), {1});
    const auto r = n_deg_relation_check(p, {1}, {sd("0,0"), sd("0,1")});
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.skipped, 1);
    EXPECT_EQ(r.used, 1);
}

TEST(RandomSlopeData, DeterministicAndBounded)
{
    const auto a = random_slope_data(4, 10, 42);
    const auto b = random_slope_data(4, 10, 42);
    ASSERT_EQ(a.size(), 10u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].delta, b[i].delta);
        ASSERT_EQ(a[i].delta.size(), 4u);
        for (const auto& x : a[i].delta) {
            EXPECT_LE(abs(x), 9);
            EXPECT_LE(x.get_den(), 6);
        }
    }
}
