#ifndef LKWB_RATFUNC_HPP
#define LKWB_RATFUNC_HPP

#include <string>
#include <utility>

#include "bivariate_gcd.hpp"
#include "laurent2.hpp"
#include "uni_ratfunc.hpp"

namespace lkwb {

/// Total-degree ceiling above which bivariate fractions are reduced only by
/// monomial factors and rational content.
inline constexpr long kFullGcdDegreeLimit = 32;

/// Element of Q(l, r) as num/den over Q[l^±, r^±]. The denominator is free of
/// monomial factors and has lex-leading coefficient 1; when degrees permit it
/// the fraction is fully reduced. Equality is decided by cross-multiplication,
/// so it never depends on the representation being canonical.
class RatFunc {
   public:
    RatFunc() : den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const BigRational& c) : num_(c), den_(1) {}
    RatFunc(LaurentPolyLR p) : num_(std::move(p)), den_(1) {}
    RatFunc(LaurentPolyLR num, LaurentPolyLR den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
        normalize();
    }

    static RatFunc var_l() { return RatFunc(LaurentPolyLR::var_l()); }
    static RatFunc var_r() { return RatFunc(LaurentPolyLR::var_r()); }

    const LaurentPolyLR& num() const noexcept { return num_; }
    const LaurentPolyLR& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    std::size_t term_count() const { return num_.term_count() + den_.term_count(); }

    RatFunc inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return combine(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return combine(a, b, true); }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
        if (b.is_polynomial()) return RatFunc(a.num_ * b.num_, a.den_);
        if (a.is_polynomial()) return RatFunc(a.num_ * b.num_, b.den_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    /// Substitute l -> sign * r^k.
    UniRatFunc substitute_l(int sign, long k) const {
        LaurentPoly1 d = den_.substitute_l(sign, k);
        if (d.is_zero())
            throw Error(ErrorKind::DenominatorVanishesIdentically, "denominator vanishes under locus substitution");
        return UniRatFunc(num_.substitute_l(sign, k), std::move(d));
    }

    template <class V>
    V eval(const V& l, const V& r) const {
        V d = den_.eval(l, r);
        if (detail::coeff_is_zero(d)) throw Error(ErrorKind::PoleAtSpecialization, "denominator vanishes at (l, r)");
        return num_.eval(l, r) / d;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

   private:
    static RatFunc combine(const RatFunc& a, const RatFunc& b, bool sub) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return sub ? -b : b;
        if (a.den_ == b.den_) {
            LaurentPolyLR n = sub ? a.num_ - b.num_ : a.num_ + b.num_;
            if (a.is_polynomial()) return RatFunc(std::move(n));
            return RatFunc(std::move(n), a.den_);
        }
        LaurentPolyLR n = sub ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
        return RatFunc(std::move(n), a.den_ * b.den_);
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPolyLR(1);
            return;
        }
        Exponent sd = den_.min_exponents();
        den_ = den_.shifted({-sd.a, -sd.b});
        num_ = num_.shifted({-sd.a, -sd.b});
        if (!den_.is_monomial()) {
            long deg = std::max(num_.shifted_total_degree(), den_.shifted_total_degree());
            if (deg <= kFullGcdDegreeLimit) {
                Exponent sn = num_.min_exponents();
                LaurentPolyLR np = num_.shifted({-sn.a, -sn.b});
                LaurentPolyLR g = detail::polynomial_gcd(np, den_);
                if (!g.is_monomial()) {
                    num_ = LaurentPolyLR::exact_div(num_, g);
                    den_ = LaurentPolyLR::exact_div(den_, g);
                }
            }
        }
        BigRational lc = den_.lead().c;
        if (!lc.is_one()) {
            BigRational inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    LaurentPolyLR num_;
    LaurentPolyLR den_;
};

inline bool is_zero(const RatFunc& x) noexcept { return x.is_zero(); }
inline std::string to_text(const RatFunc& x) { return x.to_string(); }
inline bool pivot_better(const RatFunc& a, const RatFunc& b) { return a.term_count() < b.term_count(); }

}  // namespace lkwb

#endif
