#ifndef LKWB_LAURENT2_HPP
#define LKWB_LAURENT2_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "big_rational.hpp"
#include "config.hpp"
#include "laurent1.hpp"

namespace lkwb {

/// Exponent pair of the monomial l^a r^b.
struct Exponent {
    long a = 0;
    long b = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
    friend Exponent operator+(Exponent x, Exponent y) { return {x.a + y.a, x.b + y.b}; }
    friend Exponent operator-(Exponent x, Exponent y) { return {x.a - y.a, x.b - y.b}; }
};

/// Sparse Laurent polynomial in l and r over Q. Terms are kept sorted
/// lexicographically by (a, b) with no zero coefficients, so equality is
/// structural.
class LaurentPolyLR {
   public:
    struct Term {
        Exponent e;
        BigRational c;
        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPolyLR() = default;
    LaurentPolyLR(int c) : LaurentPolyLR(BigRational(c)) {}
    LaurentPolyLR(const BigRational& c) {
        if (!c.is_zero()) terms_.push_back({{0, 0}, c});
    }
    /// Takes arbitrary terms; sorts and merges them.
    explicit LaurentPolyLR(std::vector<Term> ts) : terms_(std::move(ts)) { canonicalize(); }

    static LaurentPolyLR monomial(const BigRational& c, long a, long b) {
        LaurentPolyLR p;
        if (!c.is_zero()) p.terms_.push_back({{checked_exponent(a), checked_exponent(b)}, c});
        return p;
    }
    static LaurentPolyLR var_l() { return monomial(BigRational(1), 1, 0); }
    static LaurentPolyLR var_r() { return monomial(BigRational(1), 0, 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].e == Exponent{0, 0} && terms_[0].c.is_one(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    /// Lexicographically largest term.
    const Term& lead() const { return terms_.back(); }

    Exponent min_exponents() const {
        Exponent m{std::numeric_limits<long>::max(), std::numeric_limits<long>::max()};
        for (auto& t : terms_) {
            m.a = std::min(m.a, t.e.a);
            m.b = std::min(m.b, t.e.b);
        }
        return terms_.empty() ? Exponent{} : m;
    }
    Exponent max_exponents() const {
        Exponent m{std::numeric_limits<long>::min(), std::numeric_limits<long>::min()};
        for (auto& t : terms_) {
            m.a = std::max(m.a, t.e.a);
            m.b = std::max(m.b, t.e.b);
        }
        return terms_.empty() ? Exponent{} : m;
    }
    /// Total degree after shifting to an ordinary polynomial.
    long shifted_total_degree() const {
        if (terms_.empty()) return 0;
        Exponent mn = min_exponents();
        long d = 0;
        for (auto& t : terms_) d = std::max(d, (t.e.a - mn.a) + (t.e.b - mn.b));
        return d;
    }

    LaurentPolyLR shifted(Exponent s) const {
        LaurentPolyLR r = *this;
        for (auto& t : r.terms_) t.e = {checked_exponent(t.e.a + s.a), checked_exponent(t.e.b + s.b)};
        return r;
    }

    friend LaurentPolyLR operator+(const LaurentPolyLR& x, const LaurentPolyLR& y) { return merge(x, y, false); }
    friend LaurentPolyLR operator-(const LaurentPolyLR& x, const LaurentPolyLR& y) { return merge(x, y, true); }
    friend LaurentPolyLR operator-(const LaurentPolyLR& x) {
        LaurentPolyLR r = x;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }
    friend LaurentPolyLR operator*(const LaurentPolyLR& x, const LaurentPolyLR& y) {
        if (x.is_zero() || y.is_zero()) return {};
        if (x.is_monomial()) return y.times_term(x.terms_[0]);
        if (y.is_monomial()) return x.times_term(y.terms_[0]);
        std::vector<Term> out;
        out.reserve(x.terms_.size() * y.terms_.size());
        for (auto& s : x.terms_)
            for (auto& t : y.terms_) out.push_back({s.e + t.e, s.c * t.c});
        LaurentPolyLR r(std::move(out));
        r.check_bounds();
        return r;
    }
    friend LaurentPolyLR operator*(const LaurentPolyLR& x, const BigRational& s) {
        if (s.is_zero()) return {};
        LaurentPolyLR r = x;
        for (auto& t : r.terms_) t.c *= s;
        return r;
    }
    LaurentPolyLR& operator+=(const LaurentPolyLR& o) { return *this = *this + o; }
    LaurentPolyLR& operator-=(const LaurentPolyLR& o) { return *this = *this - o; }
    LaurentPolyLR& operator*=(const LaurentPolyLR& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPolyLR& x, const LaurentPolyLR& y) { return x.terms_ == y.terms_; }

    /// Exact division in Q[l^±, r^±]. Throws InternalCheckFailed when the
    /// divisor does not divide.
    static LaurentPolyLR exact_div(const LaurentPolyLR& num, const LaurentPolyLR& den) {
        if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "Laurent division by zero");
        if (num.is_zero()) return {};
        if (den.is_monomial()) {
            const Term& d = den.terms_[0];
            BigRational inv = d.c.inverse();
            LaurentPolyLR r = num;
            for (auto& t : r.terms_) {
                t.e = {checked_exponent(t.e.a - d.e.a), checked_exponent(t.e.b - d.e.b)};
                t.c *= inv;
            }
            return r;
        }
        // Work with ordinary polynomials (no monomial factors); the quotient is
        // then a polynomial as well, and lex division terminates.
        Exponent sn = num.min_exponents(), sd = den.min_exponents();
        LaurentPolyLR a = num.shifted({-sn.a, -sn.b});
        LaurentPolyLR b = den.shifted({-sd.a, -sd.b});
        std::vector<Term> q;
        const Term lb = b.lead();
        BigRational inv = lb.c.inverse();
        while (!a.is_zero()) {
            const Term& la = a.lead();
            Exponent e = la.e - lb.e;
            if (e.a < 0 || e.b < 0) throw Error(ErrorKind::InternalCheckFailed, "inexact bivariate division");
            Term t{e, la.c * inv};
            a = a - b.times_term(t);
            q.push_back(std::move(t));
        }
        LaurentPolyLR quot(std::move(q));
        return quot.shifted(sn - sd);
    }

    /// Substitute l -> sign * r^k, producing a univariate Laurent polynomial.
    LaurentPoly1 substitute_l(int sign, long k) const {
        std::vector<std::pair<long, BigRational>> acc;
        acc.reserve(terms_.size());
        for (auto& t : terms_) {
            BigRational c = (sign < 0 && (t.e.a % 2 != 0)) ? -t.c : t.c;
            acc.emplace_back(checked_exponent(k * t.e.a + t.e.b), std::move(c));
        }
        if (acc.empty()) return {};
        long lo = acc[0].first, hi = acc[0].first;
        for (auto& [e, c] : acc) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        std::vector<BigRational> dense(static_cast<std::size_t>(hi - lo + 1), BigRational(0));
        for (auto& [e, c] : acc) dense[static_cast<std::size_t>(e - lo)] += c;
        return LaurentPoly1(lo, QPoly(std::move(dense)));
    }

    /// Evaluate at (l, r) in any field V.
    template <class V>
    V eval(const V& l, const V& r) const {
        V acc(0);
        if (terms_.empty()) return acc;
        // group by l-exponent: terms are sorted by a, then b
        std::size_t i = 0;
        while (i < terms_.size()) {
            long a = terms_[i].e.a;
            V inner(0);
            for (; i < terms_.size() && terms_[i].e.a == a; ++i)
                inner = inner + V(terms_[i].c) * LaurentPoly1::power(r, terms_[i].e.b);
            acc = acc + inner * LaurentPoly1::power(l, a);
        }
        return acc;
    }

    /// Text form: terms `c*l^a*r^b` in ascending lexicographic order joined by " + ".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += t.c.to_string() + "*l^" + std::to_string(t.e.a) + "*r^" + std::to_string(t.e.b);
        }
        return s;
    }

    LaurentPolyLR times_term(const Term& m) const {
        LaurentPolyLR r = *this;
        for (auto& t : r.terms_) {
            t.e = {checked_exponent(t.e.a + m.e.a), checked_exponent(t.e.b + m.e.b)};
            t.c *= m.c;
        }
        return r;
    }

   private:
    static LaurentPolyLR merge(const LaurentPolyLR& x, const LaurentPolyLR& y, bool sub) {
        LaurentPolyLR r;
        r.terms_.reserve(x.terms_.size() + y.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < x.terms_.size() || j < y.terms_.size()) {
            if (j == y.terms_.size() || (i < x.terms_.size() && x.terms_[i].e < y.terms_[j].e)) {
                r.terms_.push_back(x.terms_[i++]);
            } else if (i == x.terms_.size() || y.terms_[j].e < x.terms_[i].e) {
                r.terms_.push_back({y.terms_[j].e, sub ? -y.terms_[j].c : y.terms_[j].c});
                ++j;
            } else {
                BigRational c = sub ? x.terms_[i].c - y.terms_[j].c : x.terms_[i].c + y.terms_[j].c;
                if (!c.is_zero()) r.terms_.push_back({x.terms_[i].e, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& u, const Term& v) { return u.e < v.e; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().e == t.e)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.c.is_zero(); });
        terms_ = std::move(out);
    }

    void check_bounds() const {
        for (auto& t : terms_) {
            checked_exponent(t.e.a);
            checked_exponent(t.e.b);
        }
    }

    std::vector<Term> terms_;
};

inline bool is_zero(const LaurentPolyLR& x) noexcept { return x.is_zero(); }
inline std::string to_text(const LaurentPolyLR& x) { return x.to_string(); }

}  // namespace lkwb

#endif
