#ifndef LKWB_POLY_HPP
#define LKWB_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lkwb {

namespace detail {
template <class F>
bool coeff_is_zero(const F& a) {
    return is_zero(a);
}
}  // namespace detail

/// Dense univariate polynomial over a field F, coefficients stored low to high
/// with no trailing zeros. The zero polynomial has degree -1.
template <class F>
class Poly {
   public:
    Poly() = default;
    explicit Poly(F c) {
        if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
    }
    Poly(std::initializer_list<F> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<F> cs) : c_(std::move(cs)) { trim(); }

    static Poly monomial(F c, std::size_t deg) {
        if (detail::coeff_is_zero(c)) return {};
        std::vector<F> v(deg + 1, F(0));
        v[deg] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(F(1), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<F>& coeffs() const noexcept { return c_; }

    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    const F& lead() const { return c_.back(); }

    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const F& a) { return !is_zero_coeff(a); }));
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
        return acc;
    }
    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> d(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<int>(i));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (is_zero()) return {};
        F inv = F(1) / lead();
        Poly p = *this;
        for (auto& a : p.c_) a = a * inv;
        return p;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const F& s) {
        if (is_zero_coeff(s)) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (is_zero_coeff(b.c_[j])) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Shift by x^k for k >= 0.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<F> v(k, F(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    /// Quotient and remainder of Euclidean division; the divisor's leading
    /// coefficient must be invertible.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly{}, a};
        std::vector<F> rem = a.c_;
        std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0));
        F inv = F(1) / b.lead();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = rem.size(); k-- > db;) {
            if (is_zero_coeff(rem[k])) continue;
            F f = rem[k] * inv;
            std::size_t shift = k - db;
            for (std::size_t j = 0; j <= db; ++j) {
                if (!is_zero_coeff(b.c_[j])) rem[shift + j] -= f * b.c_[j];
            }
            q[shift] = std::move(f);
        }
        rem.resize(db);
        return {Poly(std::move(q)), Poly(std::move(rem))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    /// Exact division; throws if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw Error(ErrorKind::InternalCheckFailed, "inexact polynomial division");
        return q;
    }

    /// Monic gcd (zero if both inputs are zero).
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    struct ExtGcd {
        Poly g, s, t;  // g = s*a + t*b, g monic
    };
    static ExtGcd ext_gcd(const Poly& a, const Poly& b) {
        Poly r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Poly s2 = s0 - q * s1;
            Poly t2 = t0 - q * t1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        F inv = F(1) / r0.lead();
        return {r0 * inv, s0 * inv, t0 * inv};
    }

    /// Square-free part: p / gcd(p, p').
    Poly squarefree_part() const {
        if (degree() <= 0) return monic();
        Poly g = gcd(*this, derivative());
        return exact_div(*this, g).monic();
    }

    Poly pow(unsigned e) const {
        Poly acc(F(1)), base = *this;
        while (e) {
            if (e & 1U) acc *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return acc;
    }

    /// Text form `c*x^k + ...`, highest degree first; "0" for zero.
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (is_zero_coeff(c_[k])) continue;
            if (!s.empty()) s += " + ";
            s += to_text(c_[k]) + "*" + var + "^" + std::to_string(k);
        }
        return s;
    }

   private:
    static bool is_zero_coeff(const F& a) { return detail::coeff_is_zero(a); }
    void trim() {
        while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

}  // namespace lkwb

#include "qpoly_gcd.hpp"

#endif
