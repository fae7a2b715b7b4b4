#include "canred/rational.hpp"

#include "canred/error.hpp"

#include <regex>
#include <stdexcept>
#include <utility>

namespace canred {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(^\s*[+-]?\d+(/\d+)?\s*$)");
    std::string s(text);
    if (!std::regex_match(s, pattern))
        throw InputError("malformed rational '" + s + "' (expected p or p/q)");
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    s = s.substr(first, last - first + 1);
    if (s.front() == '+')
        s.erase(0, 1);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        if (mpz_class(s.substr(slash + 1)) == 0)
            throw InputError("zero denominator in '" + s + "'");
    }
    Rational q(s, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::inverse() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a(*this);
    RationalMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw std::domain_error("singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational scale = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0)
                continue;
            const Rational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b)
{
    if (m.rows() != b.size())
        throw std::invalid_argument("solve: shape mismatch");
    const RationalMatrix inv = m.inverse();
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            x[i] += inv(i, j) * b[j];
    return x;
}

}  // namespace canred
