#ifndef LKWB_LAURENT1_HPP
#define LKWB_LAURENT1_HPP

#include <string>
#include <utility>
#include <vector>

#include "big_rational.hpp"
#include "config.hpp"
#include "poly.hpp"

namespace lkwb {

using QPoly = Poly<BigRational>;

/// Univariate Laurent polynomial r^low * p(r) over Q, with p(0) != 0 unless
/// the value is zero (then low == 0).
class LaurentPoly1 {
   public:
    LaurentPoly1() = default;
    LaurentPoly1(int c) : LaurentPoly1(BigRational(c)) {}
    LaurentPoly1(const BigRational& c) : p_(c) {}
    LaurentPoly1(long low, QPoly p) : low_(low), p_(std::move(p)) { normalize(); }

    static LaurentPoly1 monomial(const BigRational& c, long e) { return LaurentPoly1(e, QPoly(c)); }
    static LaurentPoly1 var() { return monomial(BigRational(1), 1); }

    bool is_zero() const noexcept { return p_.is_zero(); }
    bool is_one() const { return low_ == 0 && p_.degree() == 0 && p_.lead().is_one(); }
    long low() const noexcept { return low_; }
    long high() const noexcept { return low_ + p_.degree(); }
    const QPoly& poly() const noexcept { return p_; }
    std::size_t term_count() const { return p_.term_count(); }

    BigRational coeff(long e) const {
        if (e < low_) return BigRational(0);
        return p_.coeff(static_cast<std::size_t>(e - low_));
    }

    /// Monomial term list (exponent, coefficient), ascending.
    std::vector<std::pair<long, BigRational>> terms() const {
        std::vector<std::pair<long, BigRational>> out;
        for (std::size_t i = 0; i < p_.size(); ++i)
            if (!p_.coeffs()[i].is_zero()) out.emplace_back(low_ + static_cast<long>(i), p_.coeffs()[i]);
        return out;
    }

    LaurentPoly1& operator+=(const LaurentPoly1& o) { return *this = add(*this, o, false); }
    LaurentPoly1& operator-=(const LaurentPoly1& o) { return *this = add(*this, o, true); }
    friend LaurentPoly1 operator+(const LaurentPoly1& a, const LaurentPoly1& b) { return add(a, b, false); }
    friend LaurentPoly1 operator-(const LaurentPoly1& a, const LaurentPoly1& b) { return add(a, b, true); }
    friend LaurentPoly1 operator-(const LaurentPoly1& a) {
        LaurentPoly1 r = a;
        r.p_ = -r.p_;
        return r;
    }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return LaurentPoly1(checked_exponent(a.low_ + b.low_), a.p_ * b.p_);
    }
    LaurentPoly1& operator*=(const LaurentPoly1& o) { return *this = *this * o; }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const BigRational& s) {
        LaurentPoly1 r = a;
        r.p_ *= s;
        if (r.p_.is_zero()) r.low_ = 0;
        return r;
    }

    friend bool operator==(const LaurentPoly1& a, const LaurentPoly1& b) { return a.low_ == b.low_ && a.p_ == b.p_; }

    /// Multiply by r^k.
    LaurentPoly1 shifted(long k) const {
        if (is_zero()) return {};
        LaurentPoly1 r = *this;
        r.low_ = checked_exponent(r.low_ + k);
        return r;
    }

    /// Exact division in Q[r, 1/r]; throws if b does not divide a.
    static LaurentPoly1 exact_div(const LaurentPoly1& a, const LaurentPoly1& b) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "Laurent division by zero");
        if (a.is_zero()) return {};
        return LaurentPoly1(checked_exponent(a.low_ - b.low_), QPoly::exact_div(a.p_, b.p_));
    }

    /// Evaluate at a nonzero element of any field V constructible from BigRational.
    template <class V>
    V eval(const V& x) const {
        if (is_zero()) return V(0);
        V acc(0);
        for (auto it = p_.coeffs().rbegin(); it != p_.coeffs().rend(); ++it) acc = acc * x + V(*it);
        return acc * power(x, low_);
    }

    template <class V>
    static V power(const V& x, long e) {
        if (e < 0) return power(V(1) / x, -e);
        V acc(1), base = x;
        while (e) {
            if (e & 1L) acc = acc * base;
            e >>= 1L;
            if (e) base = base * base;
        }
        return acc;
    }

    /// Text form: terms `c*r^b` ascending by exponent, joined by " + ".
    std::string to_string(const std::string& var = "r") const {
        if (is_zero()) return "0";
        std::string s;
        for (auto& [e, c] : terms()) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "*" + var + "^" + std::to_string(e);
        }
        return s;
    }

   private:
    static LaurentPoly1 add(const LaurentPoly1& a, const LaurentPoly1& b, bool negate_b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return negate_b ? -b : b;
        long low = std::min(a.low_, b.low_);
        QPoly pa = a.p_.shifted(static_cast<std::size_t>(a.low_ - low));
        QPoly pb = b.p_.shifted(static_cast<std::size_t>(b.low_ - low));
        return LaurentPoly1(low, negate_b ? pa - pb : pa + pb);
    }

    void normalize() {
        if (p_.is_zero()) {
            low_ = 0;
            return;
        }
        std::size_t z = 0;
        while (p_.coeffs()[z].is_zero()) ++z;
        if (z) {
            std::vector<BigRational> v(p_.coeffs().begin() + static_cast<long>(z), p_.coeffs().end());
            p_ = QPoly(std::move(v));
            low_ += static_cast<long>(z);
        }
        checked_exponent(low_);
        checked_exponent(low_ + p_.degree());
    }

    long low_ = 0;
    QPoly p_;
};

inline bool is_zero(const LaurentPoly1& x) noexcept { return x.is_zero(); }

}  // namespace lkwb

#endif
