#ifndef LKWB_UNI_RATFUNC_HPP
#define LKWB_UNI_RATFUNC_HPP

#include <string>
#include <utility>

#include "laurent1.hpp"

namespace lkwb {

/// Element of Q(r): num/den with den a monic polynomial, den(0) != 0 and
/// gcd(num, den) = 1. The representation is canonical.
class UniRatFunc {
   public:
    UniRatFunc() : den_(1) {}
    UniRatFunc(int c) : num_(c), den_(1) {}
    UniRatFunc(const BigRational& c) : num_(c), den_(1) {}
    UniRatFunc(LaurentPoly1 p) : num_(std::move(p)), den_(1) {}
    UniRatFunc(LaurentPoly1 num, LaurentPoly1 den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
        normalize();
    }

    static UniRatFunc var() { return UniRatFunc(LaurentPoly1::var()); }

    const LaurentPoly1& num() const noexcept { return num_; }
    const LaurentPoly1& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    std::size_t term_count() const { return num_.term_count() + den_.term_count(); }

    UniRatFunc inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
        return UniRatFunc(den_, num_);
    }

    friend UniRatFunc operator+(const UniRatFunc& a, const UniRatFunc& b) { return combine(a, b, false); }
    friend UniRatFunc operator-(const UniRatFunc& a, const UniRatFunc& b) { return combine(a, b, true); }
    friend UniRatFunc operator-(const UniRatFunc& a) {
        UniRatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend UniRatFunc operator*(const UniRatFunc& a, const UniRatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return UniRatFunc(a.num_ * b.num_);
        // cross-cancel before multiplying to keep sizes small
        UniRatFunc x(a.num_, b.den_), y(b.num_, a.den_);
        UniRatFunc r;
        r.num_ = x.num_ * y.num_;
        r.den_ = x.den_ * y.den_;
        return r;
    }
    friend UniRatFunc operator/(const UniRatFunc& a, const UniRatFunc& b) { return a * b.inverse(); }
    UniRatFunc& operator+=(const UniRatFunc& o) { return *this = *this + o; }
    UniRatFunc& operator-=(const UniRatFunc& o) { return *this = *this - o; }
    UniRatFunc& operator*=(const UniRatFunc& o) { return *this = *this * o; }
    UniRatFunc& operator/=(const UniRatFunc& o) { return *this = *this / o; }

    friend bool operator==(const UniRatFunc& a, const UniRatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    template <class V>
    V eval(const V& x) const {
        V d = den_.eval(x);
        if (detail::coeff_is_zero(d)) throw Error(ErrorKind::PoleAtSpecialization, "denominator vanishes at evaluation point");
        return num_.eval(x) / d;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

   private:
    static UniRatFunc combine(const UniRatFunc& a, const UniRatFunc& b, bool sub) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return sub ? -b : b;
        if (a.den_ == b.den_) {
            LaurentPoly1 n = sub ? a.num_ - b.num_ : a.num_ + b.num_;
            if (a.is_polynomial()) return UniRatFunc(std::move(n));
            return UniRatFunc(std::move(n), a.den_);
        }
        LaurentPoly1 n = sub ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
        return UniRatFunc(std::move(n), a.den_ * b.den_);
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly1(1);
            return;
        }
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
        if (den_.poly().degree() > 0) {
            QPoly g = QPoly::gcd(num_.poly(), den_.poly());
            if (g.degree() > 0) {
                num_ = LaurentPoly1(num_.low(), QPoly::exact_div(num_.poly(), g));
                den_ = LaurentPoly1(0, QPoly::exact_div(den_.poly(), g));
            }
        }
        BigRational lc = den_.poly().lead();
        if (!lc.is_one()) {
            BigRational inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    LaurentPoly1 num_;
    LaurentPoly1 den_;
};

inline bool is_zero(const UniRatFunc& x) noexcept { return x.is_zero(); }
inline std::string to_text(const UniRatFunc& x) { return x.to_string(); }
/// Sparsest entry wins.
inline bool pivot_better(const UniRatFunc& a, const UniRatFunc& b) { return a.term_count() < b.term_count(); }

}  // namespace lkwb

#endif
