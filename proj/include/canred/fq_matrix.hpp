#pragma once

#include "canred/finite_field.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace canred {

/// Dense matrix over a finite field. All operands of a binary operation must
/// share the same field (checked).
class FqMatrix {
public:
    FqMatrix(const FiniteField& f, std::size_t rows, std::size_t cols);
    /// Rows of small integers reduced mod p.
    FqMatrix(const FiniteField& f, std::initializer_list<std::initializer_list<long>> rows);

    static FqMatrix identity(const FiniteField& f, std::size_t n);
    static FqMatrix diagonal(const FiniteField& f, const std::vector<Fq>& d);
    /// Block-diagonal matrix with the given square blocks.
    static FqMatrix direct_sum(const std::vector<FqMatrix>& blocks);

    const FiniteField& field() const { return *f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Fq& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Fq operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix scaled(Fq s) const;
    FqMatrix transposed() const;
    /// Entrywise p-th power (Frobenius twist of the matrix).
    FqMatrix frobenius() const;

    Fq determinant() const;
    bool invertible() const { return determinant().v != 0; }
    /// Throws InputError if singular.
    FqMatrix inverse() const;
    std::size_t rank() const;
    /// Basis of {x : M x = 0}, one column vector per entry.
    std::vector<std::vector<Fq>> nullspace() const;

    FqMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const FqMatrix& b);

    bool operator==(const FqMatrix& o) const;

    /// Rows separated by ';', entries by ' ', entries via FiniteField::format.
    std::string format() const;

private:
    void same_field(const FqMatrix& o) const;

    const FiniteField* f_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Fq> a_;
};

}  // namespace canred
