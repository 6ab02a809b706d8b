#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieco/scalar.hpp"

namespace lieco {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> data) : r_(r), c_(c), a_(std::move(data)) {
        if (a_.size() != r * c) throw std::invalid_argument("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    // E_{ij}
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
        Matrix m(n, n);
        m(i, j) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<T>& data() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& b) {
        check_same(b);
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!b.a_[k].is_zero()) a_[k] += b.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& b) {
        check_same(b);
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!b.a_[k].is_zero()) a_[k] -= b.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : a_)
            if (!x.is_zero()) x *= s;
        return *this;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    const T& y = b(k, j);
                    if (!y.is_zero()) m(i, j) += x * y;
                }
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same(const Matrix& b) const {
        if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using ExactMatrix = Matrix<Scalar>;
using Vec = std::vector<Scalar>;

template <class T>
Matrix<T> bracket(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

}  // namespace lieco
