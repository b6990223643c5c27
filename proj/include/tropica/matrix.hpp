#pragma once

#include <initializer_list>
#include <vector>

#include "tropica/errors.hpp"

namespace tropica {

/// Dense rectangular matrix over a semiring scalar type. operator+ is the
/// entrywise semiring sum and operator* the semiring product.
template <class S>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, S::zero()) {
        if (rows < 0 || cols < 0) throw ShapeMismatch("negative dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        e_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw ShapeMismatch("ragged initializer");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<S> row(int i) const {
        std::vector<S> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<S> col(int j) const {
        std::vector<S> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
        Matrix s(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
        for (std::size_t a = 0; a < ri.size(); ++a)
            for (std::size_t b = 0; b < ci.size(); ++b) s(static_cast<int>(a), static_cast<int>(b)) = (*this)(ri[a], ci[b]);
        return s;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("sum of " + shape_str(a) + " and " + shape_str(b));
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("product of " + shape_str(a) + " and " + shape_str(b));
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                S acc = S::zero();
                for (int k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
                c(i, j) = acc;
            }
        return c;
    }
    friend Matrix operator*(const S& s, const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
        return c;
    }

    /// Horizontal union (A | B).
    friend Matrix hconcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_)
            throw ShapeMismatch("union of " + shape_str(a) + " and " + shape_str(b));
        Matrix c(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
            for (int j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
        }
        return c;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    static std::string shape_str(const Matrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }
    int rows_;
    int cols_;
    std::vector<S> e_;
};

/// Matrix power by repeated multiplication (k >= 0; A^0 = identity).
template <class S>
Matrix<S> mat_pow(const Matrix<S>& a, int k) {
    if (!a.is_square()) throw ShapeMismatch("power of non-square matrix");
    Matrix<S> r = Matrix<S>::identity(a.rows());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

}  // namespace tropica
