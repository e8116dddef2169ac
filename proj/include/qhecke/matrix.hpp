#ifndef QHECKE_MATRIX_HPP
#define QHECKE_MATRIX_HPP

#include "qhecke/errors.hpp"

#include <cassert>
#include <functional>
#include <vector>

namespace qhecke {

// Dense matrix over an exact field (Rational or RatFunc).  The element type
// must support +, -, *, /, unary -, is_zero().
template <typename F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const F &fill = F())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(int n, const F &one, const F &zero = F()) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F &at(int i, int j) { return data_[i * cols_ + j]; }
    const F &at(int i, int j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto &x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix &a, const Matrix &b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix &a, const Matrix &b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto &x : r.data_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F &aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const F &bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + aik * bkj;
                }
            }
        return r;
    }
    template <typename S>
    Matrix scaled(const S &s) const {
        Matrix r = *this;
        for (auto &x : r.data_) x = x * s;
        return r;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a - b).is_zero();
    }

    std::vector<F> apply(const std::vector<F> &v) const {
        assert((int)v.size() == cols_);
        std::vector<F> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    // In-place Gauss-Jordan; returns pivot columns.  Optionally reduces an
    // attached right-hand side with the same row operations.
    std::vector<int> row_reduce(Matrix *rhs = nullptr) {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!at(i, col).is_zero()) { p = i; break; }
            if (p < 0) continue;
            swap_rows(p, row);
            if (rhs) rhs->swap_rows(p, row);
            F inv = at(row, col);
            for (int j = 0; j < cols_; ++j)
                if (!at(row, j).is_zero()) at(row, j) = at(row, j) / inv;
            if (rhs)
                for (int j = 0; j < rhs->cols_; ++j)
                    if (!rhs->at(row, j).is_zero()) rhs->at(row, j) = rhs->at(row, j) / inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                F m = at(i, col);
                for (int j = 0; j < cols_; ++j)
                    if (!at(row, j).is_zero()) at(i, j) = at(i, j) - m * at(row, j);
                if (rhs)
                    for (int j = 0; j < rhs->cols_; ++j)
                        if (!rhs->at(row, j).is_zero())
                            rhs->at(i, j) = rhs->at(i, j) - m * rhs->at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

  private:
    int rows_, cols_;
    std::vector<F> data_;
};

// Exact solve of M x = b.  M may be rectangular; the system must determine x
// uniquely and be consistent, otherwise Singular is thrown with the rank.
template <typename F>
std::vector<F> solve_linear(const Matrix<F> &M, const std::vector<F> &b) {
    assert((int)b.size() == M.rows());
    Matrix<F> A = M;
    Matrix<F> rhs(M.rows(), 1);
    for (int i = 0; i < M.rows(); ++i) rhs.at(i, 0) = b[i];
    auto pivots = A.row_reduce(&rhs);
    int rank = (int)pivots.size();
    if (rank < M.cols())
        throw Singular(rank, "underdetermined system");
    for (int i = rank; i < M.rows(); ++i)
        if (!rhs.at(i, 0).is_zero())
            throw Singular(rank, "inconsistent system");
    std::vector<F> x(M.cols());
    for (int i = 0; i < rank; ++i) x[pivots[i]] = rhs.at(i, 0);
    return x;
}

// Basis of the kernel of M; `one` supplies the field unit.
template <typename F>
std::vector<std::vector<F>> nullspace(const Matrix<F> &M, const F &one) {
    Matrix<F> A = M;
    auto pivots = A.row_reduce();
    std::vector<char> is_pivot(M.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(M.cols());
        v[free] = one;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -A.at((int)i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename F>
Matrix<F> inverse(const Matrix<F> &M, const F &one) {
    assert(M.rows() == M.cols());
    Matrix<F> A = M;
    Matrix<F> rhs = Matrix<F>::identity(M.rows(), one);
    auto pivots = A.row_reduce(&rhs);
    if ((int)pivots.size() < M.rows())
        throw Singular((int)pivots.size(), "matrix not invertible");
    return rhs;
}

template <typename F>
F det(const Matrix<F> &M) {
    assert(M.rows() == M.cols());
    Matrix<F> A = M;
    F d;
    bool first = true;
    int row = 0;
    int sign = 1;
    for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
        int p = -1;
        for (int i = row; i < A.rows(); ++i)
            if (!A.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) return F(); // singular: det 0
        if (p != row) { A.swap_rows(p, row); sign = -sign; }
        F pivot = A.at(row, col);
        if (first) { d = pivot; first = false; }
        else d = d * pivot;
        for (int i = row + 1; i < A.rows(); ++i) {
            if (A.at(i, col).is_zero()) continue;
            F m = A.at(i, col) / pivot;
            for (int j = col; j < A.cols(); ++j)
                if (!A.at(row, j).is_zero()) A.at(i, j) = A.at(i, j) - m * A.at(row, j);
        }
        ++row;
    }
    if (sign < 0) d = -d;
    return d;
}

} // namespace qhecke

#endif
