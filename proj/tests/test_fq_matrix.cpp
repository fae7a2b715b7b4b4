#include "canred/error.hpp"
#include "canred/fq_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace canred;

namespace {

FqMatrix random_matrix(const FiniteField& f, std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    FqMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = f.element(pick(rng));
    return m;
}

}  // namespace

TEST(FqMatrix, ConstructionReducesModP)
{
    const auto& f = FiniteField::get(3, 1);
    const FqMatrix m(f, {{4, -1}, {3, 2}});
    EXPECT_EQ(m(0, 0), f.one());
    EXPECT_EQ(m(0, 1), f.from_int(2));
    EXPECT_EQ(m(1, 0), f.zero());
    EXPECT_EQ(m.format(), "1 2; 0 2");
}

TEST(FqMatrix, DeterminantIsMultiplicative)
{
    std::mt19937_64 rng(3);
    for (const char* name : {"F2", "F4", "F9", "F16", "F49"}) {
        const auto& f = FiniteField::parse(name);
        for (int t = 0; t < 20; ++t) {
            const auto a = random_matrix(f, 4, rng), b = random_matrix(f, 4, rng);
            EXPECT_EQ((a * b).determinant(), f.mul(a.determinant(), b.determinant())) << name;
        }
    }
}

TEST(FqMatrix, InverseRoundTrip)
{
    std::mt19937_64 rng(5);
    const auto& f = FiniteField::parse("F16");
    int inverted = 0;
    for (int t = 0; t < 30; ++t) {
        const auto a = random_matrix(f, 5, rng);
        if (!a.invertible()) {
            EXPECT_THROW(a.inverse(), InputError);
            continue;
        }
        EXPECT_EQ(a * a.inverse(), FqMatrix::identity(f, 5));
        EXPECT_EQ(a.inverse() * a, FqMatrix::identity(f, 5));
        ++inverted;
    }
    EXPECT_GT(inverted, 0);
}

TEST(FqMatrix, RankAndNullspace)
{
    const auto& f = FiniteField::get(5, 1);
    const FqMatrix m(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    EXPECT_EQ(m.rank(), 2u);
    const auto ns = m.nullspace();
    ASSERT_EQ(ns.size(), 1u);
    for (std::size_t i = 0; i < 3; ++i) {
        Fq s = f.zero();
        for (std::size_t j = 0; j < 3; ++j)
            s = f.add(s, f.mul(m(i, j), ns[0][j]));
        EXPECT_EQ(s, f.zero());
    }
    EXPECT_EQ(m.determinant(), f.zero());
    EXPECT_TRUE(FqMatrix::identity(f, 3).nullspace().empty());
}

TEST(FqMatrix, BlocksAndDirectSum)
{
    const auto& f = FiniteField::get(7, 1);
    const FqMatrix a(f, {{1, 2}, {3, 4}});
    const FqMatrix b(f, {{5}});
    const auto d = FqMatrix::direct_sum({a, b});
    EXPECT_EQ(d, FqMatrix(f, {{1, 2, 0}, {3, 4, 0}, {0, 0, 5}}));
    EXPECT_EQ(d.block(0, 0, 2, 2), a);
    FqMatrix z(f, 3, 3);
    z.set_block(1, 1, a);
    EXPECT_EQ(z.block(1, 1, 2, 2), a);
    EXPECT_EQ(z(0, 0), f.zero());
    EXPECT_EQ(FqMatrix::diagonal(f, {f.one(), f.from_int(3)}), FqMatrix(f, {{1, 0}, {0, 3}}));
}

TEST(FqMatrix, TransposeFrobeniusScale)
{
    const auto& f = FiniteField::parse("F4");
    FqMatrix m(f, 2, 2);
    m(0, 1) = f.generator();
    EXPECT_EQ(m.transposed()(1, 0), f.generator());
    EXPECT_EQ(m.frobenius()(0, 1), f.mul(f.generator(), f.generator()));
    EXPECT_EQ(m.scaled(f.generator())(0, 1), f.mul(f.generator(), f.generator()));
    EXPECT_EQ(m + m, FqMatrix(f, 2, 2));
}

TEST(FqMatrix, MixedFieldsRejected)
{
    const FqMatrix a = FqMatrix::identity(FiniteField::get(2, 1), 2);
    const FqMatrix b = FqMatrix::identity(FiniteField::get(3, 1), 2);
    EXPECT_ANY_THROW(a * b);
    EXPECT_ANY_THROW(a * FqMatrix::identity(FiniteField::get(2, 1), 3));
}
