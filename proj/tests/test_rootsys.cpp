#include "canred/error.hpp"
#include "canred/rootsys.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace canred;

namespace {

std::vector<LieType> all_types_up_to_rank(int max_rank)
{
    std::vector<LieType> out;
    for (int n = 1; n <= max_rank; ++n)
        out.push_back(LieType::make(Family::A, n));
    for (int n = 2; n <= max_rank; ++n) {
        out.push_back(LieType::make(Family::B, n));
        out.push_back(LieType::make(Family::C, n));
    }
    for (int n = 3; n <= max_rank; ++n)
        out.push_back(LieType::make(Family::D, n));
    for (int n = 6; n <= std::min(8, max_rank); ++n)
        out.push_back(LieType::make(Family::E, n));
    out.push_back(LieType::make(Family::F, 4));
    out.push_back(LieType::make(Family::G, 2));
    return out;
}

}  // namespace

TEST(LieType, ParseAndValidate)
{
    EXPECT_EQ(LieType::parse("E8"), LieType::make(Family::E, 8));
    EXPECT_EQ(LieType::parse("b3").name(), "B3");
    for (const char* bad : {"X9", "E9", "E5", "A0", "B1", "C1", "D2", "F3", "G3", "", "E", "E8x"})
        EXPECT_THROW(LieType::parse(bad), InputError) << bad;
}

TEST(RootSystem, PositiveRootCountMatchesDimension)
{
    for (const auto& t : all_types_up_to_rank(8)) {
        const auto rs = RootSystem::build(t);
        EXPECT_EQ(static_cast<int>(rs.positive_roots().size()), (t.dimension() - t.rank) / 2) << t.name();
    }
}

TEST(RootSystem, RootsAgreeWithReflectionOrbit)
{
    for (const auto& t : all_types_up_to_rank(8)) {
        const auto rs = RootSystem::build(t);
        std::set<std::vector<int>> lib;
        for (const auto& r : rs.positive_roots())
            lib.insert(r.coords());
        EXPECT_EQ(lib, oracle::positive_roots(rs.cartan())) << t.name();
    }
}

TEST(RootSystem, OrderedByHeightThenLex)
{
    const auto rs = RootSystem::build(LieType::make(Family::E, 7));
    const auto& roots = rs.positive_roots();
    for (std::size_t i = 1; i < roots.size(); ++i) {
        const bool ordered = roots[i - 1].height() < roots[i].height() ||
                             (roots[i - 1].height() == roots[i].height() && roots[i - 1] < roots[i]);
        EXPECT_TRUE(ordered) << i;
    }
}

TEST(RootSystem, G2CartanConvention)
{
    const auto rs = RootSystem::build(LieType::make(Family::G, 2));
    EXPECT_EQ(rs.cartan(), (IntMatrix{{2, -3}, {-1, 2}}));
    EXPECT_EQ(rs.pairing(RootVec{0, 1}, 0), -3);  // <alpha_2, alpha_1^vee>
    EXPECT_EQ(rs.pairing(RootVec{1, 0}, 1), -1);
    EXPECT_EQ(rs.symmetrizer(), (std::vector<Rational>{1, 3}));
    EXPECT_EQ(rs.highest_root(), (RootVec{3, 2}));
}

TEST(RootSystem, BourbakiConventions)
{
    EXPECT_EQ(RootSystem::build(LieType::make(Family::B, 3)).symmetrizer(), (std::vector<Rational>{2, 2, 1}));
    EXPECT_EQ(RootSystem::build(LieType::make(Family::C, 3)).symmetrizer(), (std::vector<Rational>{1, 1, 2}));
    EXPECT_EQ(RootSystem::build(LieType::make(Family::F, 4)).symmetrizer(), (std::vector<Rational>{2, 2, 1, 1}));
    EXPECT_EQ(RootSystem::build(LieType::make(Family::E, 8)).highest_root(), (RootVec{2, 3, 4, 6, 5, 4, 3, 2}));
    EXPECT_EQ(RootSystem::build(LieType::make(Family::E, 6)).highest_root(), (RootVec{1, 2, 2, 3, 2, 1}));
    EXPECT_EQ(RootSystem::build(LieType::make(Family::F, 4)).highest_root(), (RootVec{2, 3, 4, 2}));
    // E-series branch node is 2: adjacent to 4 only
    const auto e8 = RootSystem::build(LieType::make(Family::E, 8));
    EXPECT_TRUE(e8.adjacent(1, 3));
    EXPECT_FALSE(e8.adjacent(1, 2));
}

TEST(RootSystem, FundamentalWeightsMatchOracle)
{
    for (const auto& t : all_types_up_to_rank(8)) {
        const auto rs = RootSystem::build(t);
        const auto ref = oracle::fundamental_weights(rs.cartan());
        for (int i = 0; i < rs.rank(); ++i)
            EXPECT_EQ(rs.fundamental_weight(i), ref[i]) << t.name() << " omega_" << i + 1;
    }
}

TEST(RootSystem, FundamentalWeightMatrixInvertsCartanTranspose)
{
    for (const auto& t : all_types_up_to_rank(8)) {
        const auto rs = RootSystem::build(t);
        RationalMatrix ct(rs.rank(), rs.rank());
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                ct(i, j) = rs.cartan()[j][i];
        EXPECT_EQ(rs.fundamental_weights() * ct, RationalMatrix::identity(rs.rank())) << t.name();
    }
}

TEST(RootSystem, CorootPairingWithItselfIsTwo)
{
    for (const auto& t : all_types_up_to_rank(6)) {
        const auto rs = RootSystem::build(t);
        for (const auto& r : rs.positive_roots())
            EXPECT_EQ(rs.coroot_pairing(WeightVec(r), r), Rational(2)) << t.name();
    }
}

TEST(RootSystem, SumOfPositiveRootsIsTwiceRho)
{
    for (const auto& t : all_types_up_to_rank(8)) {
        const auto rs = RootSystem::build(t);
        WeightVec sum(rs.rank());
        for (const auto& r : rs.positive_roots())
            sum = sum + WeightVec(r);
        WeightVec rho(rs.rank());
        for (int i = 0; i < rs.rank(); ++i)
            rho = rho + rs.fundamental_weight(i);
        EXPECT_EQ(sum, rho * Rational(2)) << t.name();
        for (int i = 0; i < rs.rank(); ++i)
            EXPECT_EQ(rs.pairing(sum, i), Rational(2));
    }
}

TEST(RootSystem, RootMembership)
{
    const auto rs = RootSystem::build(LieType::make(Family::G, 2));
    EXPECT_TRUE(rs.is_root(RootVec{-3, -1}));
    EXPECT_TRUE(rs.is_positive_root(RootVec{3, 1}));
    EXPECT_FALSE(rs.is_positive_root(RootVec{-3, -1}));
    EXPECT_FALSE(rs.is_root(RootVec{2, 2}));
    EXPECT_FALSE(rs.is_root(RootVec{0, 0}));
}

TEST(RootSystem, DominanceOnLevi)
{
    const auto rs = RootSystem::build(LieType::make(Family::G, 2));
    EXPECT_TRUE(rs.is_dominant(WeightVec(RootVec{3, 1}), IndexSet{0}));   // <(3,1), a1^vee> = 3
    EXPECT_FALSE(rs.is_dominant(WeightVec(RootVec{0, 1}), IndexSet{0}));  // -3
    EXPECT_TRUE(rs.is_dominant(WeightVec(RootVec{0, 1}), IndexSet{}));
}

TEST(RootSystem, FromCartanRejectsInvalid)
{
    EXPECT_THROW(RootSystem::from_cartan({{2, -1}, {0, 2}}, "bad"), InputError);
    EXPECT_THROW(RootSystem::from_cartan({{2, -2}, {-2, 2}}, "affine"), InputError);
    EXPECT_THROW(RootSystem::from_cartan({{1}}, "diag"), InputError);
    EXPECT_NO_THROW(RootSystem::from_cartan({{2, 0}, {0, 2}}, "A1xA1"));
    EXPECT_EQ(RootSystem::from_cartan({{2, 0}, {0, 2}}, "A1xA1").positive_roots().size(), 2u);
}

TEST(RootSystem, LeviSubsystem)
{
    const auto e8 = RootSystem::build(LieType::make(Family::E, 8));
    const auto l = levi_subsystem(e8, complement(e8, IndexSet{7}));
    EXPECT_EQ(l.rank(), 7);
    EXPECT_EQ(l.positive_roots().size(), 63u);  // E7
    const auto d = levi_subsystem(e8, complement(e8, IndexSet{0}));
    EXPECT_EQ(d.positive_roots().size(), 42u);  // D7
}

TEST(RootSystem, FromNodes)
{
    EXPECT_EQ(from_nodes({3, 1, 3}), (IndexSet{0, 2}));
    EXPECT_THROW(from_nodes({0}), InputError);
}
