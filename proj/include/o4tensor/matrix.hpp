#pragma once

#include "o4tensor/exact_complex.hpp"

#include <stdexcept>
#include <vector>

namespace o4tensor {

// Dense matrix of exact complex entries.  Sized at construction; the
// generator algebra uses 4x4, the explicit-representation code whatever the
// product space needs.  Multiplication skips zero operands, which is what
// keeps the larger coupled-basis transforms cheap.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = ExactComplex::one();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    ExactComplex& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const ExactComplex& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = -a.a_[i];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix m(a.rows_, b.cols_);
        for (size_t r = 0; r < a.rows_; ++r)
            for (size_t k = 0; k < a.cols_; ++k) {
                const ExactComplex& ark = a.at(r, k);
                if (ark.is_zero()) continue;
                for (size_t c = 0; c < b.cols_; ++c) {
                    const ExactComplex& bkc = b.at(k, c);
                    if (bkc.is_zero()) continue;
                    m.at(r, c) = m.at(r, c) + ark * bkc;
                }
            }
        return m;
    }

    friend Matrix operator*(const ExactComplex& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = s * a.a_[i];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const ExactSum& s) {
        Matrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] * s;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<ExactComplex> a_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace o4tensor
