#ifndef LKWB_BIVARIATE_GCD_HPP
#define LKWB_BIVARIATE_GCD_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "laurent2.hpp"

namespace lkwb {
namespace detail {

/// Polynomial in l with coefficients in Q[r]; index = power of l.
using RecPoly = std::vector<QPoly>;

inline void trim(RecPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Requires nonnegative exponents.
inline RecPoly to_recursive(const LaurentPolyLR& p) {
    RecPoly out;
    for (auto& t : p.terms()) {
        auto a = static_cast<std::size_t>(t.e.a);
        if (out.size() <= a) out.resize(a + 1);
        out[a] += QPoly::monomial(t.c, static_cast<std::size_t>(t.e.b));
    }
    trim(out);
    return out;
}

inline LaurentPolyLR from_recursive(const RecPoly& p) {
    std::vector<LaurentPolyLR::Term> ts;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p[a].size(); ++b)
            if (!p[a].coeffs()[b].is_zero())
                ts.push_back({{static_cast<long>(a), static_cast<long>(b)}, p[a].coeffs()[b]});
    return LaurentPolyLR(std::move(ts));
}

inline QPoly content(const RecPoly& p) {
    QPoly g;
    for (auto& c : p) {
        g = QPoly::gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

inline RecPoly divide_coeffs(const RecPoly& p, const QPoly& c) {
    RecPoly out;
    out.reserve(p.size());
    for (auto& x : p) out.push_back(QPoly::exact_div(x, c));
    return out;
}

inline int r_degree(const RecPoly& p) {
    int d = 0;
    for (auto& c : p) d = std::max(d, c.degree());
    return d;
}

inline RecPoly primitive_part(const RecPoly& p) {
    if (p.empty()) return p;
    return divide_coeffs(p, content(p));
}

/// Quotient a / b in Q[r][l], or nullopt when b does not divide a.
inline std::optional<RecPoly> exact_quotient(RecPoly a, const RecPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.empty()) return RecPoly{};
    if (a.size() < b.size()) return std::nullopt;
    RecPoly q(a.size() - db);
    while (!a.empty() && a.size() - 1 >= db) {
        auto [qc, rc] = QPoly::divmod(a.back(), b.back());
        if (!rc.is_zero()) return std::nullopt;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= qc * b[j];
        q[shift] = std::move(qc);
        trim(a);
    }
    if (!a.empty()) return std::nullopt;
    trim(q);
    return q;
}

inline QPoly specialize_r(const RecPoly& p, const BigRational& x) {
    std::vector<BigRational> cs;
    cs.reserve(p.size());
    for (auto& c : p) cs.push_back(c.eval(x));
    return QPoly(std::move(cs));
}

/// Gcd of l-primitive a, b in Q[r][l] by evaluation at r = 1, 2, 3, ... and
/// Newton interpolation. Each image gcd is scaled by gamma = gcd(lc a, lc b),
/// which the leading coefficient of the true gcd divides; images of larger
/// l-degree are unlucky and dropped. The interpolant is accepted once its
/// primitive part divides both inputs.
inline RecPoly interpolated_gcd(const RecPoly& a, const RecPoly& b) {
    const QPoly gamma = QPoly::gcd(a.back(), b.back());
    const int bound = std::min(r_degree(a), r_degree(b)) + gamma.degree();
    int best = static_cast<int>(std::min(a.size(), b.size()));
    RecPoly G;
    QPoly P(BigRational(1));
    int count = 0;
    for (long xi = 1;; ++xi) {
        BigRational x(xi);
        if (a.back().eval(x).is_zero() || b.back().eval(x).is_zero()) continue;
        QPoly g = QPoly::gcd(specialize_r(a, x), specialize_r(b, x));
        if (g.degree() == 0) return RecPoly{QPoly(BigRational(1))};
        if (g.degree() > best) continue;
        if (g.degree() < best) {
            best = g.degree();
            G.clear();
            P = QPoly(BigRational(1));
            count = 0;
        }
        g = g * gamma.eval(x);
        // Newton step: G += (g - G(x)) / P(x) * P
        G.resize(std::max(G.size(), g.size()));
        const BigRational px_inv = P.eval(x).inverse();
        for (std::size_t i = 0; i < G.size(); ++i) {
            BigRational delta = (g.coeff(i) - G[i].eval(x)) * px_inv;
            if (!delta.is_zero()) G[i] += P * delta;
        }
        trim(G);
        P = P * QPoly{-x, BigRational(1)};
        if (++count > bound) {
            RecPoly H = primitive_part(G);
            if (exact_quotient(a, H) && exact_quotient(b, H)) return H;
        }
    }
}

/// Gcd of two ordinary (nonnegative-exponent) bivariate polynomials: gcd of
/// the r-contents times the gcd of the l-primitive parts; result normalized
/// to a monic leading coefficient in lex order.
inline LaurentPolyLR polynomial_gcd(const LaurentPolyLR& x, const LaurentPolyLR& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    RecPoly a = to_recursive(x), b = to_recursive(y);
    QPoly ca = content(a), cb = content(b);
    QPoly cg = QPoly::gcd(ca, cb);
    a = divide_coeffs(a, ca);
    b = divide_coeffs(b, cb);
    RecPoly g = (a.size() == 1 || b.size() == 1) ? RecPoly{QPoly(BigRational(1))} : interpolated_gcd(a, b);
    for (auto& c : g) c = c * cg;
    LaurentPolyLR out = from_recursive(g);
    return out * out.lead().c.inverse();
}

}  // namespace detail
}  // namespace lkwb

#endif
