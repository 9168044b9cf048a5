/**
 * @file matrix.hpp
 * @brief Dense matrices over Q(zeta_N) and exact elimination routines.
 *
 * Everything here is exact: ranks, kernels and solves are decided by
 * Gauss-Jordan elimination with exact field inverses, never by a tolerance.
 * SparseEchelon is the incremental variant used for the large, very sparse
 * intertwiner systems.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uqsl/cyclotomic.hpp"

namespace uqsl {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n, int order = 1);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix column(const std::vector<CycNum>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CycNum& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const CycNum& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool operator==(const Matrix& b) const;
    bool operator!=(const Matrix& b) const { return !(*this == b); }

    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix operator*(const Matrix& b) const;
    Matrix operator-() const;
    Matrix scaled(const CycNum& c) const;
    Matrix transpose() const;
    Matrix pow(int e) const;

    std::vector<CycNum> col(int j) const;
    std::vector<CycNum> row(int i) const;
    void set_col(int j, const std::vector<CycNum>& v);
    Matrix select_cols(const std::vector<int>& idx) const;
    Matrix select_rows(const std::vector<int>& idx) const;
    /// Copy b into this matrix with its top-left corner at (r, c).
    void place(const Matrix& b, int r, int c);

    /// Number of nonzero entries.
    long nonzeros() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<CycNum> data_;
};

Matrix hstack(const std::vector<Matrix>& blocks, int rows);
Matrix vstack(const std::vector<Matrix>& blocks, int cols);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix kronecker(const Matrix& a, const Matrix& b);
std::vector<CycNum> mat_vec(const Matrix& a, const std::vector<CycNum>& v);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<int> rref_in_place(Matrix& m);
int rank(Matrix m);
/// Basis of {x : m x = 0}, as the columns of the result.
Matrix nullspace(const Matrix& m);
/// Basis of the column space as columns (a subset of the original columns).
Matrix column_basis(const Matrix& m);
/// Indices of a maximal independent set of columns, chosen greedily left to right.
std::vector<int> independent_columns(const Matrix& m);
/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
/// For a full-column-rank matrix b, a matrix l with l b = identity.
Matrix left_inverse(const Matrix& b);

/// One row of a sparse system: (column, value) pairs sorted by column.
using SparseRow = std::vector<std::pair<int, CycNum>>;

/**
 * Incremental row echelon form over a fixed number of columns. Rows are
 * reduced against existing pivots on insertion, so rank() is always current.
 */
class SparseEchelon {
public:
    explicit SparseEchelon(int cols);

    /// Reduces and inserts; returns true if the row increased the rank.
    bool add_row(const SparseRow& row);
    bool add_dense(const std::vector<CycNum>& row);
    /// True if the row lies in the current row space.
    bool contains(const SparseRow& row) const;

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(pivot_rows_.size()); }
    /// Basis of the null space of the accumulated rows, as columns.
    Matrix nullspace() const;
    const std::vector<int>& pivot_of_col() const { return pivot_of_col_; }

private:
    int cols_;
    std::vector<SparseRow> pivot_rows_;  // leading entry 1
    std::vector<int> pivot_of_col_;      // -1 if the column is free
    mutable std::vector<CycNum> acc_;

    bool reduce(std::vector<CycNum>& acc, std::vector<int>& touched) const;
};

}  // namespace uqsl
