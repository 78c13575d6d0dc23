#ifndef LKWB_COMMUTANT_HPP
#define LKWB_COMMUTANT_HPP

#include <cstddef>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace lkwb {

/// Basis of {X : XA = AX for all A in ops}, from the N² homogeneous system.
template <class F>
std::vector<Matrix<F>> commutant_basis(const std::vector<Matrix<F>>& ops) {
    if (ops.empty()) throw Error(ErrorKind::DimensionMismatch, "commutant of an empty operator set");
    const std::size_t n = ops.front().rows();
    for (auto& a : ops)
        if (a.rows() != n || a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "operators must be square of equal size");
    const std::size_t unknowns = n * n;
    Matrix<F> sys(ops.size() * unknowns, unknowns);
    std::size_t row = 0;
    for (auto& a : ops) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                // (XA - AX)_{ij} = sum_k X_{ik} A_{kj} - A_{ik} X_{kj}
                for (std::size_t k = 0; k < n; ++k) {
                    if (!detail::coeff_is_zero(a(k, j))) sys(row, i * n + k) = sys(row, i * n + k) + a(k, j);
                    if (!detail::coeff_is_zero(a(i, k))) sys(row, k * n + j) = sys(row, k * n + j) - a(i, k);
                }
            }
    }
    std::vector<Matrix<F>> out;
    for (auto& v : nullspace_vectors(sys)) out.emplace_back(n, n, std::move(v));
    return out;
}

/// Characteristic polynomial det(xI - M) by reduction to Hessenberg form.
template <class F>
Poly<F> charpoly(const Matrix<F>& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> h = m;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && detail::coeff_is_zero(h(piv, j))) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
        }
        F inv = F(1) / h(j + 1, j);
        for (std::size_t k = j + 2; k < n; ++k) {
            if (detail::coeff_is_zero(h(k, j))) continue;
            F u = h(k, j) * inv;
            for (std::size_t c = 0; c < n; ++c)
                if (!detail::coeff_is_zero(h(j + 1, c))) h(k, c) = h(k, c) - u * h(j + 1, c);
            for (std::size_t r = 0; r < n; ++r)
                if (!detail::coeff_is_zero(h(r, k))) h(r, j + 1) = h(r, j + 1) + u * h(r, k);
        }
    }
    std::vector<Poly<F>> p;
    p.reserve(n + 1);
    p.emplace_back(F(1));
    const Poly<F> x = Poly<F>::x();
    for (std::size_t k = 0; k < n; ++k) {
        Poly<F> next = (x - Poly<F>(h(k, k))) * p[k];
        F t(1);
        for (std::size_t i = k; i-- > 0;) {
            t = t * h(i + 1, i);
            if (detail::coeff_is_zero(t)) break;
            if (!detail::coeff_is_zero(h(i, k))) next -= p[i] * (h(i, k) * t);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

}  // namespace lkwb

#endif
