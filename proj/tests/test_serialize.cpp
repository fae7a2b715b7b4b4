#include "canred/serialize.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace canred;

namespace {

// Walks every value; fails on any JSON float.
void expect_no_floats(const Json& j)
{
    EXPECT_FALSE(j.is_number_float()) << j.dump();
    if (j.is_structured())
        for (const auto& child : j)
            expect_no_floats(child);
}

}  // namespace

TEST(Serialize, Rationals)
{
    EXPECT_EQ(json_rational(make_rational(-1, 2)), Json("-1/2"));
    EXPECT_EQ(json_rational(Rational(3)), Json("3"));
    EXPECT_EQ(json_nodes({0, 2}), Json::parse("[1,3]"));
}

TEST(Serialize, RootSystem)
{
    const auto j = to_json(RootSystem::build(LieType::make(Family::G, 2)));
    EXPECT_EQ(j["command"], "roots");
    EXPECT_EQ(j["count"], 6);
    EXPECT_EQ(j["positive_roots"].size(), 6u);
    EXPECT_EQ(j["fundamental_weight_matrix"][0], Json::parse(R"(["2","1"])"));
    EXPECT_EQ(j["cartan"][0], Json::parse("[2,-3]"));
    expect_no_floats(j);
}

TEST(Serialize, Heights)
{
    const auto rs = RootSystem::build(LieType::make(Family::F, 4));
    const auto j = to_json(rs, ht_table(rs), min_safe_char(rs));
    EXPECT_EQ(j["rows"][0]["omega_norm"], "11/2");
    EXPECT_EQ(j["rows"][0]["k"], 1);
    EXPECT_EQ(j["min_safe_char"], 11);
    expect_no_floats(j);
}

TEST(Serialize, Canonical)
{
    const auto rs = RootSystem::build(LieType::make(Family::G, 2));
    const Parabolic p(rs, {1});
    const auto d = SlopeDatum::parse("0,1");
    const auto j = to_json(p, d, check_canonical(p, d));
    EXPECT_EQ(j["is_canonical"], true);
    EXPECT_EQ(j["S"], Json::parse("[2]"));
    EXPECT_EQ(j["invariants"][0]["n"], "4");
    EXPECT_EQ(j["verdicts"].size(), 4u);
    expect_no_floats(j);
}

TEST(Serialize, LedgerCitations)
{
    const auto j = to_json(counterexample_report(2));
    EXPECT_EQ(j["status"], "VIOLATION");
    EXPECT_EQ(j["ledger"]["slope_value"], "-1/2");
    EXPECT_EQ(j["ledger"]["slope_of_twist"], "1/2-1/2g");
    bool saw_assumed = false;
    for (const auto& v : j["verdicts"]) {
        if (v["status"] == "assumed-from-paper") {
            saw_assumed = true;
            EXPECT_TRUE(v.contains("citation"));
        } else {
            EXPECT_FALSE(v.contains("citation"));
        }
    }
    EXPECT_TRUE(saw_assumed);
    expect_no_floats(j);
}

TEST(Serialize, G2Reports)
{
    expect_no_floats(to_json(verify_torus_weights(2)));
    expect_no_floats(to_json(homomorphism_check(FiniteField::parse("F4"), 5, 0)));
    expect_no_floats(to_json(adjoint_block_check(2, 0)));
    const auto j = to_json(one_param_check(FiniteField::parse("F4")));
    EXPECT_EQ(j["command"], "g2 one-param");
    EXPECT_EQ(j["pairs"], 16);
}

TEST(Serialize, StableDump)
{
    const auto rs = RootSystem::build(LieType::make(Family::E, 6));
    EXPECT_EQ(to_json(rs).dump(), to_json(RootSystem::build(LieType::make(Family::E, 6))).dump());
}
