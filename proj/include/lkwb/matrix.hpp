#ifndef LKWB_MATRIX_HPP
#define LKWB_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace lkwb {

/// Dense row-major matrix over a field (or ring) F.
template <class F>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<F>& data() const noexcept { return data_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<F> column(std::size_t j) const {
        std::vector<F> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    bool is_zero_matrix() const {
        for (auto& x : data_)
            if (!detail::coeff_is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(std::span<const std::size_t> rs, std::span<const std::size_t> cs) const {
        Matrix s(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
        return s;
    }

    template <class Fn>
    auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const F&>()))> {
        using G = decltype(fn(std::declval<const F&>()));
        std::vector<G> out;
        out.reserve(data_.size());
        for (auto& x : data_) out.push_back(fn(x));
        return Matrix<G>(rows_, cols_, std::move(out));
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!detail::coeff_is_zero(o.data_[k])) data_[k] = data_[k] + o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!detail::coeff_is_zero(o.data_[k])) data_[k] = data_[k] - o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_)
            if (!detail::coeff_is_zero(x)) x = s * x;
        return r;
    }

    /// Product skipping zero entries on both sides, so sparse factors (the
    /// braid generators) multiply cheaply.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        std::vector<std::vector<std::size_t>> nz(b.rows_);
        for (std::size_t k = 0; k < b.rows_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!detail::coeff_is_zero(b(k, j))) nz[k].push_back(j);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (detail::coeff_is_zero(aik)) continue;
                for (std::size_t j : nz[k]) c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }

    std::vector<F> apply(std::span<const F> v) const {
        if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
        std::vector<F> out(rows_, F(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (detail::coeff_is_zero(v[j])) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const F& x = (*this)(i, j);
                if (!detail::coeff_is_zero(x)) out[i] = out[i] + x * v[j];
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
bool is_zero_vector(std::span<const F> v) {
    for (auto& x : v)
        if (!detail::coeff_is_zero(x)) return false;
    return true;
}

/// Evaluate a polynomial with scalar coefficients at a square matrix (Horner).
template <class F>
Matrix<F> eval_matrix_poly(const Poly<F>& p, const Matrix<F>& a) {
    Matrix<F> acc(a.rows(), a.cols());
    const Matrix<F> id = Matrix<F>::identity(a.rows());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * a + (*it) * id;
    return acc;
}

}  // namespace lkwb

#endif
