#include "canred/error.hpp"
#include "canred/rational.hpp"

#include <gtest/gtest.h>

using namespace canred;

TEST(Rational, ParsesIntegersAndFractions)
{
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational(" -1/2 "), Rational(-1, 2));
    EXPECT_EQ(parse_rational("+6/4"), Rational(3, 2));
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("4/2")), "2");
}

TEST(Rational, RejectsMalformedInput)
{
    for (const char* bad : {"", "1/0", "a", "1.5", "1/-2", "--1", "1/2/3"})
        EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(Rational, IntegerTest)
{
    EXPECT_TRUE(is_integer(make_rational(4, 2)));
    EXPECT_FALSE(is_integer(Rational(1, 2)));
}

TEST(RationalMatrix, InverseAndSolve)
{
    RationalMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = -3;
    m(1, 0) = -1;
    m(1, 1) = 2;
    const auto inv = m.inverse();
    EXPECT_EQ(m * inv, RationalMatrix::identity(2));
    EXPECT_EQ(inv(0, 0), Rational(2));
    EXPECT_EQ(inv(0, 1), Rational(3));
    const auto x = solve(m, {Rational(1), Rational(0)});
    EXPECT_EQ(x[0], Rational(2));
    EXPECT_EQ(x[1], Rational(1));
}

TEST(RationalMatrix, SingularThrows)
{
    RationalMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    EXPECT_THROW(m.inverse(), std::domain_error);
    EXPECT_THROW(solve(m, {Rational(1), Rational(1)}), std::domain_error);
}

TEST(RationalMatrix, Transpose)
{
    RationalMatrix m(2, 3);
    m(0, 2) = Rational(5, 7);
    const auto t = m.transposed();
    EXPECT_EQ(t.rows(), 3u);
    EXPECT_EQ(t(2, 0), Rational(5, 7));
}
