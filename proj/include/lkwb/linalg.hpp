#ifndef LKWB_LINALG_HPP
#define LKWB_LINALG_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "ratfunc.hpp"
#include "uni_ratfunc.hpp"

namespace lkwb {

/// Reduced row-echelon form with pivot bookkeeping. `source_rows[i]` is the
/// original index of the row that ended up at position i.
template <class F>
struct RowEchelon {
    Matrix<F> rref;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> source_rows;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. Columns are processed left to right; within a
/// column the pivot is chosen by `pivot_better`, ties going to the first row.
template <class F>
RowEchelon<F> row_echelon(Matrix<F> m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> src(R);
    std::iota(src.begin(), src.end(), std::size_t{0});
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::optional<std::size_t> best;
        for (std::size_t i = row; i < R; ++i) {
            if (detail::coeff_is_zero(m(i, col))) continue;
            if (!best || pivot_better(m(i, col), m(*best, col))) best = i;
        }
        if (!best) continue;
        if (*best != row) {
            for (std::size_t j = 0; j < C; ++j) std::swap(m(row, j), m(*best, j));
            std::swap(src[row], src[*best]);
        }
        F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < C; ++j)
            if (!detail::coeff_is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || detail::coeff_is_zero(m(i, col))) continue;
            F f = m(i, col);
            for (std::size_t j = col; j < C; ++j)
                if (!detail::coeff_is_zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots), std::move(src)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return row_echelon(m).rank();
}

/// Basis of the right null space read off the reduced row-echelon form: one
/// vector per free column, with a 1 in that column.
template <class F>
std::vector<std::vector<F>> nullspace_vectors(const Matrix<F>& m) {
    auto ech = row_echelon(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> out;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(C, F(0));
        v[free] = F(1);
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            const F& x = ech.rref(i, free);
            if (!detail::coeff_is_zero(x)) v[ech.pivot_cols[i]] = -x;
        }
        out.push_back(std::move(v));
    }
    return out;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto ech = row_echelon(std::move(aug));
    if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1)
        throw Error(ErrorKind::DivisionByZero, "matrix is singular");
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.rref(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Fraction-free determinants.

namespace detail {

template <class F>
struct FractionTraits {
    static constexpr bool is_fraction = false;
};

template <>
struct FractionTraits<UniRatFunc> {
    static constexpr bool is_fraction = true;
    using Ring = LaurentPoly1;
    static const Ring& num(const UniRatFunc& x) { return x.num(); }
    static const Ring& den(const UniRatFunc& x) { return x.den(); }
    static Ring lcm(const Ring& a, const Ring& b) {
        if (a == b || b.is_one()) return a;
        if (a.is_one()) return b;
        QPoly g = QPoly::gcd(a.poly(), b.poly());
        return LaurentPoly1(0, a.poly() * QPoly::exact_div(b.poly(), g));
    }
    static UniRatFunc make(const Ring& n, const Ring& d) { return UniRatFunc(n, d); }
};

template <>
struct FractionTraits<RatFunc> {
    static constexpr bool is_fraction = true;
    using Ring = LaurentPolyLR;
    static const Ring& num(const RatFunc& x) { return x.num(); }
    static const Ring& den(const RatFunc& x) { return x.den(); }
    static Ring lcm(const Ring& a, const Ring& b) {
        if (a == b || b.is_one()) return a;
        if (a.is_one()) return b;
        Ring g = polynomial_gcd(a, b);
        return a * Ring::exact_div(b, g);
    }
    static RatFunc make(const Ring& n, const Ring& d) { return RatFunc(n, d); }
};

template <class R>
std::size_t ring_weight(const R& x) {
    return x.term_count();
}

}  // namespace detail

/// Bareiss fraction-free determinant over an integral domain R with exact
/// division `R::exact_div`. The pivot in each column is the sparsest nonzero
/// candidate.
template <class R>
R bareiss_det(Matrix<R> m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    R prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::optional<std::size_t> best;
        for (std::size_t i = k; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            if (!best || detail::ring_weight(m(i, k)) < detail::ring_weight(m(*best, k))) best = i;
        }
        if (!best) return R(0);
        if (*best != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(*best, j));
            negate = !negate;
        }
        const R& piv = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const R& f = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = piv * m(i, j);
                if (!f.is_zero() && !m(k, j).is_zero()) t = t - f * m(k, j);
                m(i, j) = prev.is_one() ? std::move(t) : R::exact_div(t, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? -d : d;
}

/// Clears denominators row by row. Returns the polynomial matrix and the
/// product of the row multipliers.
template <class F>
std::pair<Matrix<typename detail::FractionTraits<F>::Ring>, typename detail::FractionTraits<F>::Ring>
clear_denominators(const Matrix<F>& m) {
    using T = detail::FractionTraits<F>;
    using Ring = typename T::Ring;
    Matrix<Ring> out(m.rows(), m.cols());
    Ring total(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Ring l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) l = T::lcm(l, T::den(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            out(i, j) = T::num(m(i, j)) * Ring::exact_div(l, T::den(m(i, j)));
        }
        total = total * l;
    }
    return {std::move(out), std::move(total)};
}

/// Exact determinant: fraction-free (Bareiss) for rational-function entries,
/// Gaussian elimination over the field otherwise.
template <class F>
F det(const Matrix<F>& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
    if constexpr (detail::FractionTraits<F>::is_fraction) {
        auto [poly, mult] = clear_denominators(m);
        auto d = bareiss_det(std::move(poly));
        return detail::FractionTraits<F>::make(d, mult);
    } else {
        Matrix<F> a = m;
        const std::size_t n = a.rows();
        F acc(1);
        for (std::size_t k = 0; k < n; ++k) {
            std::optional<std::size_t> best;
            for (std::size_t i = k; i < n; ++i) {
                if (detail::coeff_is_zero(a(i, k))) continue;
                if (!best || pivot_better(a(i, k), a(*best, k))) best = i;
            }
            if (!best) return F(0);
            if (*best != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(*best, j));
                acc = -acc;
            }
            acc = acc * a(k, k);
            F inv = F(1) / a(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                if (detail::coeff_is_zero(a(i, k))) continue;
                F f = a(i, k) * inv;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!detail::coeff_is_zero(a(k, j))) a(i, j) = a(i, j) - f * a(k, j);
            }
        }
        return acc;
    }
}

}  // namespace lkwb

#endif
