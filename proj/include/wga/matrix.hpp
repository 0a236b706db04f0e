#pragma once

#include <functional>
#include <vector>

#include "wga/common.hpp"

namespace wga {

// Dense square-capable matrix over an exact ring T. Only the operations the
// library actually needs: arithmetic, equality, and (for fields) Gaussian
// elimination helpers.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix r(a);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix r(a);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix r(a.rows_, b.cols_, a.a_.empty() ? T() : a.a_[0] - a.a_[0]);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + aik * bkj;
                }
            }
        return r;
    }
    friend Matrix operator*(const Matrix& a, const T& s) {
        Matrix r(a);
        for (auto& x : r.a_) x = x * s;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, a_.empty() ? T() : a_[0]);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }
    size_t rows_, cols_;
    std::vector<T> a_;
};

// In-place row echelon over a field (T provides inverse()); returns the rank
// and records pivot columns. Deterministic: first nonzero entry scanning
// rows top-down, columns left-right.
template <class T>
size_t row_echelon(Matrix<T>& m, std::vector<size_t>* pivot_cols = nullptr) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t sel = rank;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != rank)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(rank, j));
        T inv = m.at(rank, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            T f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

template <class T>
size_t matrix_rank(Matrix<T> m) {
    return row_echelon(m);
}

// Basis of the right null space { v : m v = 0 }.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m, const T& zero, const T& one) {
    if (m.cols() == 0) return {};
    std::vector<size_t> piv;
    size_t rank = m.rows() ? row_echelon(m, &piv) : 0;
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : piv) is_pivot[p] = true;
    std::vector<std::vector<T>> out;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), zero);
        v[f] = one;
        for (size_t r = 0; r < rank; ++r) v[piv[r]] = zero - m.at(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

// Span bookkeeping for vectors over a field: incremental reduced echelon
// basis used for rank and membership questions on coordinate vectors.
template <class T>
class SpanBasis {
public:
    explicit SpanBasis(size_t dim) : dim_(dim) {}

    // Returns true when v enlarged the span.
    bool insert(std::vector<T> v) {
        reduce(v);
        size_t lead = leading(v);
        if (lead == dim_) return false;
        T inv = v[lead].inverse();
        for (auto& x : v) x = x * inv;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }
    bool contains(std::vector<T> v) const {
        reduce(v);
        return leading(v) == dim_;
    }
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    const std::vector<std::vector<T>>& rows() const { return rows_; }

private:
    void reduce(std::vector<T>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const T& c = v[leads_[r]];
            if (c.is_zero()) continue;
            T f = c;
            for (size_t j = 0; j < dim_; ++j)
                if (!rows_[r][j].is_zero()) v[j] = v[j] - f * rows_[r][j];
        }
    }
    size_t leading(const std::vector<T>& v) const {
        for (size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) return j;
        return dim_;
    }
    size_t dim_;
    std::vector<std::vector<T>> rows_;
    std::vector<size_t> leads_;
};

}  // namespace wga
