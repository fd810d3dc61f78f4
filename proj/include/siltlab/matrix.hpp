#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "siltlab/field.hpp"

namespace siltlab {

/// Dense matrix over an exact Field, row-major. Everything is computed
/// exactly; there is no floating point anywhere in the toolkit.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

    static Matrix identity(std::size_t n, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = std::move(v); }

    bool is_zero() const;
    bool is_identity() const;
    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix neg() const;
    Matrix scale(const Scalar& c) const;
    Matrix mul(const Matrix& o) const;
    Matrix transpose() const;

    /// [this | o] side by side (equal row counts).
    Matrix hstack(const Matrix& o) const;
    /// [this; o] stacked (equal column counts).
    Matrix vstack(const Matrix& o) const;

    /// Copies src into this with top-left corner at (i0, j0).
    void paste(std::size_t i0, std::size_t j0, const Matrix& src);
    Matrix submatrix(std::size_t i0, std::size_t j0, std::size_t nrows, std::size_t ncols) const;

    Matrix row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }
    Matrix col(std::size_t j) const { return submatrix(0, j, rows_, 1); }

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref_in_place();
    std::size_t rank() const;

    /// Columns spanning the right kernel {x : A x = 0}.
    Matrix kernel_basis() const;

    /// Solves A X = B exactly. Empty result when inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    /// Inverse of a square invertible matrix (empty when singular).
    std::optional<Matrix> inverse() const;

    /// Indices of a maximal independent set of columns.
    std::vector<std::size_t> independent_columns() const;
    /// The corresponding columns as a matrix (a basis of the column space).
    Matrix column_space_basis() const;

    /// Row-major flattening as a 1 x (rows*cols) row vector.
    Matrix flatten_row() const;

    bool equals(const Matrix& o) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

/// Incremental row-echelon space: supports rank bookkeeping, membership
/// tests and reduction of new rows against the rows seen so far.
class RowSpace {
public:
    explicit RowSpace(std::size_t width, const Field& f) : width_(width), field_(f) {}

    /// Reduces v against the current rows; if a nonzero residual remains it
    /// is added (normalized) and true is returned.
    bool add(std::vector<Scalar> v);
    /// Residual of v after reduction (not inserted).
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(std::vector<Scalar> v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

private:
    void reduce_in_place(std::vector<Scalar>& v) const;

    std::size_t width_;
    Field field_;
    std::vector<std::vector<Scalar>> rows_;    // normalized echelon rows
    std::vector<std::size_t> pivots_;          // pivot column of each row
};

}  // namespace siltlab
