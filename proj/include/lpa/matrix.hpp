#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

/// Dense matrix over a Field, row-major.
class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    /// Builds from integer entries (reduced into the field).
    static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    std::vector<Scalar> column(std::size_t c) const;
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Incrementally maintained span of vectors of fixed length, kept in echelon form.
class SpanBuilder {
public:
    SpanBuilder(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    /// Adds v; returns true if it enlarged the span.
    bool add(const std::vector<Scalar>& v);
    bool contains(const std::vector<Scalar>& v) const;
    /// v reduced against the stored echelon rows.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    /// The stored echelon vectors (a basis of the span).
    const std::vector<std::vector<Scalar>>& basis() const { return rows_; }

private:
    Field field_;
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0}, one vector per column of the result.
Matrix nullspace(const Matrix& m);

/// Some x with M x = b, or nullopt.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

std::optional<Matrix> inverse(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Basis (as columns) of the column space, chosen among the given columns.
Matrix column_space(const Matrix& m);

/// Indices of columns that form a basis of the column space (greedy, left to right).
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Characteristic polynomial det(xI - M), coefficients lowest degree first.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// f(M) for a polynomial given lowest degree first.
Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& m);

}  // namespace lpa
