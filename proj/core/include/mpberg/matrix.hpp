#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP-backed) and dense row-major matrices over them. Everything here is a
// pure value: operations return new matrices and never mutate arguments.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mpberg/errors.hpp"

namespace mpberg {

using BigInt = mpz_class;
using Rational = mpq_class;

// Multi-index: integer row vector (Laurent exponents, coset representatives).
using MultiIndex = std::vector<BigInt>;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Reduced rational with positive denominator; rejects zero denominators.
Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "p/q" or a plain integer string (base 10).
Rational rational_from_string(const std::string& s);

std::string to_string(const BigInt& v);
// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& v);

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionError("matrix data size does not match shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const = default;

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_,
                              data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product: inner dimensions differ");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

// Elementwise (Hadamard–Schur) product; shapes must match.
template <typename T>
Matrix<T> hadamard(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("hadamard: shapes differ");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
    return c;
}

RatMatrix to_rational(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det(const IntMatrix& m);

// Transposed cofactor matrix; adjugate(m) * m == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

// Exact inverse over the rationals; throws SingularMatrixError when det == 0.
RatMatrix inverse(const IntMatrix& m);

// Positive gcd of the entries; throws DegenerateInputError on the zero vector.
BigInt gcd_vector(std::span<const BigInt> v);

// row * m for an integer row vector (multi-index) and matching matrix.
MultiIndex row_times(const MultiIndex& row, const IntMatrix& m);

// row * m for a rational row vector.
std::vector<Rational> row_times(const std::vector<Rational>& row,
                                const IntMatrix& m);

// dot product of an integer row with an integer column vector.
BigInt dot(const MultiIndex& row, const std::vector<BigInt>& col);

// Column sums of m as a row vector (the all-ones row times m).
MultiIndex ones_times(const IntMatrix& m);

inline MultiIndex multi_index_of(std::initializer_list<long> entries) {
    MultiIndex v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

bool lex_less(const MultiIndex& a, const MultiIndex& b);

}  // namespace mpberg
