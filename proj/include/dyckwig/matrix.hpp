#pragma once

// Dense matrices over an exact ring (Rational, GaussianRational, MultiPoly).

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace dyckwig {

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    /// Row-major construction; every row must have the same length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <typename F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    static std::string shape(const Matrix& m) { return std::to_string(m.rows_) + "x" + std::to_string(m.cols_); }

    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch(shape(*this) + " vs " + shape(o));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b;
}

/// Square-and-multiply power, m >= 0.
template <typename T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned m) {
    if (!a.is_square()) throw DimensionMismatch("power of a non-square matrix");
    Matrix<T> result = Matrix<T>::identity(a.rows());
    Matrix<T> base = a;
    while (m > 0) {
        if (m & 1U) result = result * base;
        m >>= 1U;
        if (m > 0) base = base * base;
    }
    return result;
}

/// Successive powers a^0 .. a^max_power, one product per step.
template <typename T>
std::vector<Matrix<T>> mat_powers(const Matrix<T>& a, unsigned max_power) {
    if (!a.is_square()) throw DimensionMismatch("power of a non-square matrix");
    std::vector<Matrix<T>> out;
    out.reserve(max_power + 1);
    out.push_back(Matrix<T>::identity(a.rows()));
    for (unsigned k = 1; k <= max_power; ++k) out.push_back(out.back() * a);
    return out;
}

/// Exact inverse by fraction-free Gauss-Jordan (Bareiss) elimination.
///
/// Rows are first scaled to integers, A' = S A. Elimination on [A' | I] keeps every
/// entry an integer (each is a minor) and ends at [d I | d A'^-1]; then A^-1 = A'^-1 S.
inline Matrix<Rational> mat_inverse(const Matrix<Rational>& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const std::size_t w = 2 * n;

    std::vector<Integer> scale(n);
    std::vector<Integer> m(n * w, 0);
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * w + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        scale[i] = l;
        for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
        at(i, n + i) = 1;
    }

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && at(pivot, k) == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != k)
            for (std::size_t j = 0; j < w; ++j) std::swap(at(k, j), at(pivot, j));
        const Integer pkk = at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Integer factor = at(i, k);
            for (std::size_t j = 0; j < w; ++j) {
                Integer v = pkk * at(i, j) - factor * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = std::move(v);
            }
        }
        prev = pkk;
    }

    Matrix<Rational> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = make_rational(at(i, n + j) * scale[j], at(i, i));
    return inv;
}

} // namespace dyckwig
