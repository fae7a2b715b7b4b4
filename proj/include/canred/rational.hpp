#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace canred {

/// Exact rational number. Always kept in canonical form (no common factors,
/// positive denominator) by the helpers below.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Throws InputError on anything else (no decimals).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Dense rational matrix in row-major order.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix transposed() const;

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    RationalMatrix inverse() const;

    bool operator==(const RationalMatrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Solves the square system M x = b exactly. Throws std::domain_error when M is singular.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b);

}  // namespace canred
