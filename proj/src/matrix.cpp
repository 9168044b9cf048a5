#include "uqsl/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace uqsl {

Matrix Matrix::identity(int n, int order) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = CycNum(order, 1L);
    return m;
}

Matrix Matrix::column(const std::vector<CycNum>& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const CycNum& x) { return x.is_zero(); });
}

bool Matrix::operator==(const Matrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
}

Matrix Matrix::operator+(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!b.data_[i].is_zero()) r.data_[i] += b.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!b.data_[i].is_zero()) r.data_[i] -= b.data_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.data_)
        if (!x.is_zero()) x = -x;
    return r;
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix r(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const CycNum& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const CycNum& y = b(k, j);
                if (y.is_zero()) continue;
                r(i, j) += a * y;
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const CycNum& c) const {
    Matrix r(*this);
    for (auto& x : r.data_)
        if (!x.is_zero()) x = x * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::pow(int e) const {
    if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
    Matrix acc = identity(rows_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::vector<CycNum> Matrix::col(int j) const {
    std::vector<CycNum> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<CycNum> Matrix::row(int i) const {
    return std::vector<CycNum>(data_.begin() + static_cast<long>(i) * cols_,
                               data_.begin() + static_cast<long>(i + 1) * cols_);
}

void Matrix::set_col(int j, const std::vector<CycNum>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
    Matrix r(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, static_cast<int>(j)) = (*this)(i, idx[j]);
    return r;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
    Matrix r(static_cast<int>(idx.size()), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) r(static_cast<int>(i), j) = (*this)(idx[i], j);
    return r;
}

void Matrix::place(const Matrix& b, int r, int c) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) (*this)(r + i, c + j) = b(i, j);
}

long Matrix::nonzeros() const {
    return std::count_if(data_.begin(), data_.end(), [](const CycNum& x) { return !x.is_zero(); });
}

Matrix hstack(const std::vector<Matrix>& blocks, int rows) {
    int cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
        cols += b.cols();
    }
    Matrix r(rows, cols);
    int c = 0;
    for (const auto& b : blocks) {
        r.place(b, 0, c);
        c += b.cols();
    }
    return r;
}

Matrix vstack(const std::vector<Matrix>& blocks, int cols) {
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
        rows += b.rows();
    }
    Matrix r(rows, cols);
    int at = 0;
    for (const auto& b : blocks) {
        r.place(b, at, 0);
        at += b.rows();
    }
    return r;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix r(rows, cols);
    int ri = 0, ci = 0;
    for (const auto& b : blocks) {
        r.place(b, ri, ci);
        ri += b.rows();
        ci += b.cols();
    }
    return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const CycNum& x = a(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    const CycNum& y = b(k, l);
                    if (y.is_zero()) continue;
                    r(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return r;
}

std::vector<CycNum> mat_vec(const Matrix& a, const std::vector<CycNum>& v) {
    std::vector<CycNum> r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += a(i, j) * v[j];
        }
    return r;
}

// ---------------------------------------------------------------------------

std::vector<int> rref_in_place(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
        // prefer a rational pivot: its inverse is cheap
        int sel = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            if (sel < 0) sel = i;
            if (m(i, c).is_rational()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const CycNum inv = m(row, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c).is_zero()) continue;
            const CycNum f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref_in_place(m).size()); }

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(m.cols(), static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis(f, static_cast<int>(k)) = CycNum(1, 1L);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!r(static_cast<int>(i), f).is_zero()) basis(pivots[i], static_cast<int>(k)) = -r(static_cast<int>(i), f);
    }
    return basis;
}

std::vector<int> independent_columns(const Matrix& m) {
    Matrix r = m;
    return rref_in_place(r);
}

Matrix column_basis(const Matrix& m) { return m.select_cols(independent_columns(m)); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    Matrix aug = hstack({a, b}, a.rows());
    const auto pivots = rref_in_place(aug);
    for (int c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(static_cast<int>(i), a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) return std::nullopt;
    auto x = solve(a, Matrix::identity(a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

Matrix left_inverse(const Matrix& b) {
    // pick independent rows, invert the square block
    const auto rows = independent_columns(b.transpose());
    if (static_cast<int>(rows.size()) != b.cols()) throw std::invalid_argument("left_inverse: columns are dependent");
    auto inv = inverse(b.select_rows(rows));
    Matrix l(b.cols(), b.rows());
    for (int i = 0; i < b.cols(); ++i)
        for (std::size_t k = 0; k < rows.size(); ++k) l(i, rows[k]) = (*inv)(i, static_cast<int>(k));
    return l;
}

// ---------------------------------------------------------------------------

SparseEchelon::SparseEchelon(int cols) : cols_(cols), pivot_of_col_(cols, -1), acc_(cols) {}

bool SparseEchelon::reduce(std::vector<CycNum>& acc, std::vector<int>& touched) const {
    std::sort(touched.begin(), touched.end());
    const int start = touched.empty() ? cols_ : touched.front();
    bool nonzero = false;
    for (int c = start; c < cols_; ++c) {
        if (acc[c].is_zero()) continue;
        const int pr = pivot_of_col_[c];
        if (pr < 0) {
            nonzero = true;
            continue;
        }
        const CycNum f = acc[c];
        for (const auto& [col, val] : pivot_rows_[pr]) acc[col] -= f * val;
    }
    return nonzero;
}

bool SparseEchelon::add_row(const SparseRow& row) {
    std::vector<int> touched;
    for (const auto& [c, v] : row) {
        if (v.is_zero()) continue;
        acc_[c] += v;
        touched.push_back(c);
    }
    if (!reduce(acc_, touched)) {
        for (int c = touched.empty() ? cols_ : *std::min_element(touched.begin(), touched.end()); c < cols_; ++c)
            acc_[c] = CycNum();
        return false;
    }
    SparseRow out;
    int lead = -1;
    CycNum inv;
    for (int c = touched.front(); c < cols_; ++c) {
        if (acc_[c].is_zero()) continue;
        if (lead < 0) {
            lead = c;
            inv = acc_[c].inverse();
        }
        out.emplace_back(c, c == lead ? CycNum(acc_[c].order(), 1L) : acc_[c] * inv);
        acc_[c] = CycNum();
    }
    pivot_of_col_[lead] = static_cast<int>(pivot_rows_.size());
    pivot_rows_.push_back(std::move(out));
    return true;
}

bool SparseEchelon::add_dense(const std::vector<CycNum>& row) {
    SparseRow s;
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
        if (!row[c].is_zero()) s.emplace_back(c, row[c]);
    return add_row(s);
}

bool SparseEchelon::contains(const SparseRow& row) const {
    std::vector<CycNum> acc(cols_);
    std::vector<int> touched;
    for (const auto& [c, v] : row) {
        acc[c] += v;
        touched.push_back(c);
    }
    return !reduce(acc, touched);
}

Matrix SparseEchelon::nullspace() const {
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (pivot_of_col_[c] < 0) free_cols.push_back(c);
    std::vector<int> pivot_cols;
    for (int c = 0; c < cols_; ++c)
        if (pivot_of_col_[c] >= 0) pivot_cols.push_back(c);
    Matrix basis(cols_, static_cast<int>(free_cols.size()));
    std::vector<CycNum> x(cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::fill(x.begin(), x.end(), CycNum());
        x[free_cols[k]] = CycNum(1, 1L);
        for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
            const auto& prow = pivot_rows_[pivot_of_col_[*it]];
            CycNum v;
            for (const auto& [col, val] : prow) {
                if (col == *it || x[col].is_zero()) continue;
                v -= val * x[col];
            }
            x[*it] = v;
        }
        for (int c = 0; c < cols_; ++c) basis(c, static_cast<int>(k)) = x[c];
    }
    return basis;
}

}  // namespace uqsl
