#ifndef LKWB_BIG_RATIONAL_HPP
#define LKWB_BIG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace lkwb {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class BigRational {
   public:
    BigRational() = default;
    BigRational(int v) : v_(v) {}
    BigRational(long v) : v_(v) {}
    BigRational(long long v) : v_(mpz_class(std::to_string(v))) {}
    explicit BigRational(const mpz_class& z) : v_(z) {}
    explicit BigRational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    BigRational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

    /// Accepts `p/q` or `p` with optional sign.
    static BigRational parse(std::string_view s) {
        std::string str(s);
        while (!str.empty() && str.front() == ' ') str.erase(str.begin());
        while (!str.empty() && str.back() == ' ') str.pop_back();
        if (str.empty()) throw Error(ErrorKind::ParseError, "empty rational");
        auto slash = str.find('/');
        mpz_class num, den(1);
        auto valid = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        std::string ns = str.substr(0, slash);
        if (!ns.empty() && ns[0] == '+') ns.erase(ns.begin());
        if (!valid(ns)) throw Error(ErrorKind::ParseError, "bad rational: " + str);
        num = mpz_class(ns);
        if (slash != std::string::npos) {
            std::string ds = str.substr(slash + 1);
            if (!valid(ds) || ds[0] == '-' || ds[0] == '+') throw Error(ErrorKind::ParseError, "bad rational: " + str);
            den = mpz_class(ds);
        }
        return BigRational(num, den);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }

    BigRational inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational");
        return BigRational(mpq_class(1) / v_);
    }

    /// Canonical text form `p/q`; integers are written with denominator 1.
    std::string to_string() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

   private:
    mpq_class v_;
};

inline bool is_zero(const BigRational& x) noexcept { return x.is_zero(); }
inline std::string to_text(const BigRational& x) { return x.to_string(); }

/// Pivot preference over Q: larger numerator magnitude wins.
inline bool pivot_better(const BigRational& a, const BigRational& b) {
    return mpz_cmpabs(a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t()) > 0;
}

inline BigRational pow(const BigRational& x, int e) {
    if (e < 0) return pow(x.inverse(), -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(n, d);
}

}  // namespace lkwb

template <>
struct std::hash<lkwb::BigRational> {
    std::size_t operator()(const lkwb::BigRational& q) const noexcept {
        return std::hash<std::string>{}(q.to_string());
    }
};

#endif
