#ifndef LKWB_TESTS_SUPPORT_HPP
#define LKWB_TESTS_SUPPORT_HPP

#include <random>

#include "lkwb/certify.hpp"

namespace lkwb::test {

inline BigRational rand_q(std::mt19937_64& rng, long mag = 20) {
    std::uniform_int_distribution<long> num(-mag, mag), den(1, mag);
    return BigRational(num(rng), den(rng));
}

inline BigRational rand_nonzero_q(std::mt19937_64& rng, long mag = 20) {
    for (;;)
        if (auto x = rand_q(rng, mag); !x.is_zero()) return x;
}

inline LaurentPolyLR rand_lr(std::mt19937_64& rng, int terms = 3) {
    std::uniform_int_distribution<long> ex(-2, 2);
    LaurentPolyLR p;
    for (int i = 0; i < terms; ++i) p = p + LaurentPolyLR::monomial(rand_q(rng, 5), ex(rng), ex(rng));
    return p;
}

inline LaurentPoly1 rand_l1(std::mt19937_64& rng, int terms = 3) {
    std::uniform_int_distribution<long> ex(-3, 3);
    LaurentPoly1 p;
    for (int i = 0; i < terms; ++i) p = p + LaurentPoly1::monomial(rand_q(rng, 5), ex(rng));
    return p;
}

template <class F>
F rand_elem(std::mt19937_64& rng, const ModulusPtr& mod = nullptr);

template <>
inline BigRational rand_elem<BigRational>(std::mt19937_64& rng, const ModulusPtr&) {
    return rand_q(rng, 1000);
}

template <>
inline RatFunc rand_elem<RatFunc>(std::mt19937_64& rng, const ModulusPtr&) {
    auto den = rand_lr(rng, 2);
    while (den.is_zero()) den = rand_lr(rng, 2);
    return RatFunc(rand_lr(rng), den);
}

template <>
inline UniRatFunc rand_elem<UniRatFunc>(std::mt19937_64& rng, const ModulusPtr&) {
    auto den = rand_l1(rng, 2);
    while (den.is_zero()) den = rand_l1(rng, 2);
    return UniRatFunc(rand_l1(rng), den);
}

template <>
inline AlgebraicNumber rand_elem<AlgebraicNumber>(std::mt19937_64& rng, const ModulusPtr& mod) {
    std::vector<BigRational> cs;
    for (int i = 0; i < mod->degree(); ++i) cs.push_back(rand_q(rng, 9));
    return AlgebraicNumber(mod, QPoly(std::move(cs)));
}

template <class F>
Matrix<F> rand_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, const ModulusPtr& mod = nullptr) {
    Matrix<F> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_elem<F>(rng, mod);
    return m;
}

inline ModulusPtr phi12() { return cyclotomic_modulus(12); }

// Schoolbook Gaussian elimination on a dense copy: first nonzero entry as
// pivot, no fraction-free steps, no pivot heuristics.
template <class F>
struct NaiveElimination {
    std::size_t rank = 0;
    F det = F(1);
};

template <class F>
NaiveElimination<F> naive_eliminate(const Matrix<F>& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<F>> a(R, std::vector<F>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j);
    NaiveElimination<F> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t p = row;
        while (p < R && a[p][col] == F(0)) ++p;
        if (p == R) {
            out.det = F(0);
            continue;
        }
        if (p != row) {
            std::swap(a[p], a[row]);
            out.det = -out.det;
        }
        out.det = out.det * a[row][col];
        for (std::size_t i = row + 1; i < R; ++i) {
            F f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < C; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        ++row;
    }
    out.rank = row;
    if (R != C || row < R) out.det = F(0);
    return out;
}

// det(xI - X) interpolated from naive determinants at x = 0..N.
inline QPoly naive_charpoly(const Matrix<BigRational>& X) {
    const std::size_t N = X.rows();
    std::vector<BigRational> xs, ys;
    for (std::size_t k = 0; k <= N; ++k) {
        BigRational x(static_cast<long>(k));
        xs.push_back(x);
        ys.push_back(naive_eliminate(x * Matrix<BigRational>::identity(N) - X).det);
    }
    QPoly out;
    for (std::size_t i = 0; i <= N; ++i) {
        QPoly basis(BigRational(1));
        BigRational denom(1);
        for (std::size_t j = 0; j <= N; ++j) {
            if (j == i) continue;
            basis = basis * QPoly{-xs[j], BigRational(1)};
            denom = denom * (xs[i] - xs[j]);
        }
        out = out + basis * (ys[i] / denom);
    }
    return out;
}

}  // namespace lkwb::test

#endif
