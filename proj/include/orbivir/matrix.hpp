#pragma once

#include <cstddef>
#include <vector>

#include "orbivir/rational.hpp"

namespace orbivir {

// Dense rational matrix. Elimination is plain rational Gaussian elimination;
// with cpp_rational entries everything stays exact.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    RatMatrix& operator+=(const RatMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }

    RatMatrix& operator-=(const RatMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }

    friend RatMatrix operator*(const Rational& s, RatMatrix m) {
        for (auto& x : m.data_)
            x *= s;
        return m;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_)
            throw shape_error("matrix product shape mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_)
            throw shape_error("matrix-vector shape mismatch");
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0)
                    out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Rational determinant() const {
        if (rows_ != cols_)
            throw shape_error("determinant of non-square matrix");
        RatMatrix m = *this;
        Rational det = 1;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && m(pivot, col) == 0)
                ++pivot;
            if (pivot == rows_)
                return Rational(0);
            if (pivot != col) {
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(m(pivot, j), m(col, j));
                det = -det;
            }
            det *= m(col, col);
            for (std::size_t r = col + 1; r < rows_; ++r) {
                if (m(r, col) == 0)
                    continue;
                Rational f = m(r, col) / m(col, col);
                for (std::size_t j = col; j < cols_; ++j)
                    m(r, j) -= f * m(col, j);
            }
        }
        return det;
    }

    // Solves A x = b exactly; throws on singular systems.
    std::vector<Rational> solve(std::vector<Rational> b) const {
        if (rows_ != cols_)
            throw shape_error("solve needs a square matrix");
        if (b.size() != rows_)
            throw shape_error("solve rhs size mismatch");
        RatMatrix m = *this;
        std::size_t n = rows_;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && m(pivot, col) == 0)
                ++pivot;
            if (pivot == n)
                throw singular_system_error("singular linear system");
            if (pivot != col) {
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(m(pivot, j), m(col, j));
                std::swap(b[pivot], b[col]);
            }
            for (std::size_t r = col + 1; r < n; ++r) {
                if (m(r, col) == 0)
                    continue;
                Rational f = m(r, col) / m(col, col);
                for (std::size_t j = col; j < n; ++j)
                    m(r, j) -= f * m(col, j);
                b[r] -= f * b[col];
            }
        }
        std::vector<Rational> x(n);
        for (std::size_t i = n; i-- > 0;) {
            Rational acc = b[i];
            for (std::size_t j = i + 1; j < n; ++j)
                acc -= m(i, j) * x[j];
            x[i] = acc / m(i, i);
        }
        return x;
    }

    RatMatrix inverse() const {
        if (rows_ != cols_)
            throw shape_error("inverse of non-square matrix");
        RatMatrix inv(rows_, cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::vector<Rational> e(rows_);
            e[c] = 1;
            std::vector<Rational> x = solve(std::move(e));
            for (std::size_t r = 0; r < rows_; ++r)
                inv(r, c) = x[r];
        }
        return inv;
    }

  private:
    void require_same_shape(const RatMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw shape_error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace orbivir
