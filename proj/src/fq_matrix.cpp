#include "canred/fq_matrix.hpp"

#include "canred/error.hpp"

#include <stdexcept>
#include <utility>

namespace canred {

FqMatrix::FqMatrix(const FiniteField& f, std::size_t rows, std::size_t cols)
    : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, f.zero())
{
}

FqMatrix::FqMatrix(const FiniteField& f, std::initializer_list<std::initializer_list<long>> rows)
    : f_(&f), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : row)
            a_.push_back(f.from_int(v));
    }
}

FqMatrix FqMatrix::identity(const FiniteField& f, std::size_t n)
{
    FqMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = f.one();
    return m;
}

FqMatrix FqMatrix::diagonal(const FiniteField& f, const std::vector<Fq>& d)
{
    FqMatrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

FqMatrix FqMatrix::direct_sum(const std::vector<FqMatrix>& blocks)
{
    if (blocks.empty())
        throw std::invalid_argument("direct sum of no blocks");
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square())
            throw std::invalid_argument("direct sum needs square blocks");
        blocks.front().same_field(b);
        n += b.rows();
    }
    FqMatrix m(blocks.front().field(), n, n);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        m.set_block(at, at, b);
        at += b.rows();
    }
    return m;
}

void FqMatrix::same_field(const FqMatrix& o) const
{
    if (f_ != o.f_)
        throw std::invalid_argument("matrices over different fields");
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const
{
    same_field(o);
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in product");
    FqMatrix m(*f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Fq a = (*this)(i, k);
            if (a.v == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m(i, j) = f_->add(m(i, j), f_->mul(a, o(k, j)));
        }
    return m;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const
{
    same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    FqMatrix m(*this);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = f_->add(a_[i], o.a_[i]);
    return m;
}

FqMatrix FqMatrix::scaled(Fq s) const
{
    FqMatrix m(*this);
    for (auto& x : m.a_)
        x = f_->mul(x, s);
    return m;
}

FqMatrix FqMatrix::transposed() const
{
    FqMatrix m(*f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

FqMatrix FqMatrix::frobenius() const
{
    FqMatrix m(*this);
    for (auto& x : m.a_)
        x = f_->frobenius(x);
    return m;
}

namespace {

// Row reduction in place; returns the pivot columns and the determinant factor
// accumulated from swaps and pivots (meaningful only for square input).
std::vector<std::size_t> row_reduce(FqMatrix& m, Fq* det)
{
    const FiniteField& f = m.field();
    std::vector<std::size_t> pivots;
    Fq d = f.one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).v == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(r, j));
            d = f.neg(d);
        }
        const Fq pv = m(r, c);
        d = f.mul(d, pv);
        const Fq pinv = f.inv(pv);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) = f.mul(m(r, j), pinv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).v == 0)
                continue;
            const Fq factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    if (det)
        *det = d;
    return pivots;
}

}  // namespace

Fq FqMatrix::determinant() const
{
    if (!is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    FqMatrix m(*this);
    Fq d;
    const auto pivots = row_reduce(m, &d);
    return pivots.size() == rows_ ? d : f_->zero();
}

FqMatrix FqMatrix::inverse() const
{
    if (!is_square())
        throw InputError("inverse of a non-square matrix");
    FqMatrix aug(*f_, rows_, 2 * cols_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, cols_, identity(*f_, rows_));
    const auto pivots = row_reduce(aug, nullptr);
    if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_)
        throw InputError("matrix is singular over " + f_->name());
    return aug.block(0, cols_, rows_, cols_);
}

std::size_t FqMatrix::rank() const
{
    FqMatrix m(*this);
    return row_reduce(m, nullptr).size();
}

std::vector<std::vector<Fq>> FqMatrix::nullspace() const
{
    FqMatrix m(*this);
    const auto pivots = row_reduce(m, nullptr);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Fq>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Fq> x(cols_, f_->zero());
        x[free] = f_->one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = f_->neg(m(r, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

FqMatrix FqMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("block outside matrix");
    FqMatrix m(*f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void FqMatrix::set_block(std::size_t r0, std::size_t c0, const FqMatrix& b)
{
    same_field(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw std::out_of_range("block outside matrix");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

bool FqMatrix::operator==(const FqMatrix& o) const
{
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string FqMatrix::format() const
{
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            out += "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += " ";
            out += f_->format((*this)(i, j));
        }
    }
    return out;
}

}  // namespace canred
