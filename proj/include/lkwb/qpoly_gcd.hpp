#ifndef LKWB_QPOLY_GCD_HPP
#define LKWB_QPOLY_GCD_HPP

#include <vector>

#include <gmpxx.h>

#include "big_rational.hpp"
#include "poly.hpp"

namespace lkwb {

namespace detail {

using ZPoly = std::vector<mpz_class>;

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void zprimitive(ZPoly& p) {
    mpz_class g = 0;
    for (auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline ZPoly to_zpoly(const Poly<BigRational>& p) {
    mpz_class den = 1;
    for (auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
    ZPoly out;
    out.reserve(p.size());
    for (auto& c : p.coeffs()) out.push_back(c.raw().get_num() * (den / c.raw().get_den()));
    zprimitive(out);
    return out;
}

/// Pseudo-remainder over Z, scaling by lc(b) / gcd(lc(a), lc(b)) per step.
inline ZPoly zprem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    mpz_class g, fa, fb;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
        fb = lb / g;
        fa = a.back() / g;
        for (auto& c : a) c *= fb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= fa * b[j];
        ztrim(a);
    }
    return a;
}

}  // namespace detail

/// Over Q the gcd runs as a primitive remainder sequence on integer
/// polynomials, which keeps coefficient sizes polynomial in the degree.
template <>
inline Poly<BigRational> Poly<BigRational>::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(BigRational(1));
    auto A = detail::to_zpoly(a), B = detail::to_zpoly(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (true) {
        auto R = detail::zprem(A, B);
        if (R.empty()) break;
        if (R.size() == 1) return Poly(BigRational(1));
        detail::zprimitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    std::vector<BigRational> cs;
    cs.reserve(B.size());
    for (auto& c : B) cs.emplace_back(c);
    return Poly(std::move(cs)).monic();
}

}  // namespace lkwb

#endif
