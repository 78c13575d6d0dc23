#ifndef LKWB_SCALAR_HPP
#define LKWB_SCALAR_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "algebraic.hpp"
#include "ratfunc.hpp"
#include "uni_ratfunc.hpp"

namespace lkwb {

enum class FieldTag { Rational, Bivariate, Univariate, Algebraic };

inline std::string to_string(FieldTag t) {
    switch (t) {
        case FieldTag::Rational: return "rational";
        case FieldTag::Bivariate: return "bivariate";
        case FieldTag::Univariate: return "univariate";
        case FieldTag::Algebraic: return "algebraic";
    }
    return "?";
}

inline FieldTag parse_field_tag(std::string_view s) {
    if (s == "rational") return FieldTag::Rational;
    if (s == "bivariate") return FieldTag::Bivariate;
    if (s == "univariate") return FieldTag::Univariate;
    if (s == "algebraic") return FieldTag::Algebraic;
    throw Error(ErrorKind::ParseError, "unknown field tag '" + std::string(s) + "'");
}

template <class F>
constexpr FieldTag field_tag_of() {
    if constexpr (std::is_same_v<F, BigRational>) return FieldTag::Rational;
    else if constexpr (std::is_same_v<F, RatFunc>) return FieldTag::Bivariate;
    else if constexpr (std::is_same_v<F, UniRatFunc>) return FieldTag::Univariate;
    else {
        static_assert(std::is_same_v<F, AlgebraicNumber>);
        return FieldTag::Algebraic;
    }
}

/// x^e for any field element, negative e through the inverse.
template <class F>
F field_pow(const F& x, long e) {
    return LaurentPoly1::power<F>(x, e);
}

/// The substitution l -> sign * r^k.
struct LocusMonomial {
    int sign = 1;
    long k = 0;
    friend bool operator==(const LocusMonomial&, const LocusMonomial&) = default;

    template <class F>
    F apply(const F& r) const {
        F v = field_pow(r, k);
        return sign < 0 ? -v : v;
    }
    std::string to_string() const {
        return std::string(sign < 0 ? "-" : "") + "r^" + std::to_string(k);
    }
};

using Scalar = std::variant<BigRational, RatFunc, UniRatFunc, AlgebraicNumber>;

inline FieldTag field_tag(const Scalar& s) { return static_cast<FieldTag>(s.index()); }

enum class ArithOp { Add, Sub, Mul, Div };

inline Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    if (a.index() != b.index())
        throw Error(ErrorKind::FieldMismatch, "operands from " + to_string(field_tag(a)) + " and " + to_string(field_tag(b)));
    return std::visit(
        [&](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            switch (op) {
                case ArithOp::Add: return x + y;
                case ArithOp::Sub: return x - y;
                case ArithOp::Mul: return x * y;
                case ArithOp::Div:
                    if (detail::coeff_is_zero(y)) throw Error(ErrorKind::DivisionByZero, "division by zero scalar");
                    return x / y;
            }
            throw Error(ErrorKind::InternalCheckFailed, "unknown arithmetic op");
        },
        a);
}

/// m = 1/r - r.
template <class F>
F m_of_r(const F& r) {
    if (detail::coeff_is_zero(r)) throw Error(ErrorKind::DivisionByZero, "m(r) needs r != 0");
    return F(1) / r - r;
}

inline Scalar m_of_r(const Scalar& r) {
    return std::visit([](const auto& x) -> Scalar { return m_of_r(x); }, r);
}

inline UniRatFunc substitute_locus(const RatFunc& p, const LocusMonomial& loc) { return p.substitute_l(loc.sign, loc.k); }

/// Evaluate p at (l, r) in the common field of l and r (rational or algebraic).
inline Scalar specialize(const RatFunc& p, const Scalar& r_val, const Scalar& l_val) {
    if (r_val.index() != l_val.index()) throw Error(ErrorKind::FieldMismatch, "l and r from different fields");
    if (auto r = std::get_if<BigRational>(&r_val)) return p.eval(std::get<BigRational>(l_val), *r);
    if (auto r = std::get_if<AlgebraicNumber>(&r_val)) return p.eval(std::get<AlgebraicNumber>(l_val), *r);
    throw Error(ErrorKind::FieldMismatch, "specialization target must be rational or algebraic");
}

// ---------------------------------------------------------------------------
// Text form.

namespace detail {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

/// Splits a sum into signed terms. '-' separates terms unless it follows
/// '^', '*', '/' or starts a term.
inline std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+') {
            if (cur.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + s + "'");
            out.push_back(cur);
            cur.clear();
            continue;
        }
        if (c == '-' && !cur.empty()) {
            char p = cur.back();
            if (p != '^' && p != '*' && p != '/' && p != '-') {
                out.push_back(cur);
                cur = "-";
                continue;
            }
        }
        cur += c;
    }
    if (cur.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + s + "'");
    out.push_back(cur);
    return out;
}

inline long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad exponent '" + s + "'");
    }
    if (used != s.size()) throw Error(ErrorKind::ParseError, "bad exponent '" + s + "'");
    return v;
}

/// A term is '*'-separated factors: rationals and var[^exp] for var in `vars`.
/// Returns the coefficient and one exponent per variable.
inline std::pair<BigRational, std::vector<long>> parse_term(std::string term, const std::string& vars) {
    BigRational c(1);
    if (!term.empty() && term[0] == '-') {
        c = BigRational(-1);
        term.erase(0, 1);
    }
    std::vector<long> exps(vars.size(), 0);
    std::size_t start = 0;
    while (start <= term.size()) {
        std::size_t stop = term.find('*', start);
        std::string f = term.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
        if (f.empty()) throw Error(ErrorKind::ParseError, "empty factor in term");
        auto vi = vars.find(f[0]);
        if (vi != std::string::npos && (f.size() == 1 || f[1] == '^')) {
            exps[vi] = checked_exponent(exps[vi] + (f.size() == 1 ? 1 : parse_long(f.substr(2))));
        } else {
            c = c * BigRational::parse(f);
        }
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return {c, exps};
}

/// Splits "(num)/(den)" at the top-level "/(" ; returns false for a bare numerator.
inline bool split_fraction(const std::string& s, std::string& num, std::string& den) {
    if (s.empty() || s.front() != '(') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) {
            if (i + 2 < s.size() && s[i + 1] == '/' && s[i + 2] == '(' && s.back() == ')') {
                num = s.substr(1, i - 1);
                den = s.substr(i + 3, s.size() - i - 4);
                return true;
            }
            if (i + 1 == s.size()) {
                num = s.substr(1, i - 1);
                den = "1";
                return true;
            }
            throw Error(ErrorKind::ParseError, "malformed fraction '" + s + "'");
        }
    }
    throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + s + "'");
}

}  // namespace detail

inline LaurentPolyLR parse_laurent_lr(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
    std::vector<LaurentPolyLR::Term> ts;
    for (auto& t : detail::split_terms(s)) {
        auto [c, e] = detail::parse_term(t, "lr");
        ts.push_back({{e[0], e[1]}, c});
    }
    return LaurentPolyLR(std::move(ts));
}

inline LaurentPoly1 parse_laurent1(std::string_view text, char var = 'r') {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
    LaurentPoly1 acc;
    for (auto& t : detail::split_terms(s)) {
        auto [c, e] = detail::parse_term(t, std::string(1, var));
        acc = acc + LaurentPoly1::monomial(c, checked_exponent(e[0]));
    }
    return acc;
}

inline RatFunc parse_ratfunc(std::string_view text) {
    std::string s = detail::strip_spaces(text), num, den;
    if (!detail::split_fraction(s, num, den)) return RatFunc(parse_laurent_lr(s));
    return RatFunc(parse_laurent_lr(num), parse_laurent_lr(den));
}

inline UniRatFunc parse_uni_ratfunc(std::string_view text) {
    std::string s = detail::strip_spaces(text), num, den;
    if (!detail::split_fraction(s, num, den)) return UniRatFunc(parse_laurent1(s));
    return UniRatFunc(parse_laurent1(num), parse_laurent1(den));
}

/// Parses a `mod: x^d - ...` header (or the bare polynomial after "mod:").
inline ModulusPtr parse_modulus(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s.rfind("mod:", 0) == 0) s.erase(0, 4);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty modulus");
    std::vector<BigRational> cs;
    for (auto& t : detail::split_terms(s)) {
        auto [c, e] = detail::parse_term(t, "x");
        if (e[0] < 0) throw Error(ErrorKind::ParseError, "negative exponent in modulus");
        auto k = static_cast<std::size_t>(e[0]);
        if (cs.size() <= k) cs.resize(k + 1, BigRational(0));
        cs[k] = cs[k] + c;
    }
    return std::make_shared<const Modulus>(QPoly(std::move(cs)));
}

inline AlgebraicNumber parse_algebraic(std::string_view text, const ModulusPtr& mod) {
    std::string s = detail::strip_spaces(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw Error(ErrorKind::ParseError, "algebraic element must be [c0,...]");
    s = s.substr(1, s.size() - 2);
    std::vector<BigRational> cs;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t stop = s.find(',', start);
        cs.push_back(BigRational::parse(s.substr(start, stop == std::string::npos ? std::string::npos : stop - start)));
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    if (!mod) {
        if (cs.size() != 1) throw Error(ErrorKind::ParseError, "algebraic element without modulus must be constant");
        return AlgebraicNumber(cs[0]);
    }
    if (cs.size() != static_cast<std::size_t>(mod->degree()))
        throw Error(ErrorKind::ParseError, "coefficient list length differs from modulus degree");
    return AlgebraicNumber(mod, QPoly(std::move(cs)));
}

inline std::string to_text(const Scalar& s) {
    return std::visit([](const auto& x) { return x.to_string(); }, s);
}

inline Scalar parse_scalar(FieldTag tag, std::string_view text, const ModulusPtr& mod = nullptr) {
    switch (tag) {
        case FieldTag::Rational: return BigRational::parse(detail::strip_spaces(text));
        case FieldTag::Bivariate: return parse_ratfunc(text);
        case FieldTag::Univariate: return parse_uni_ratfunc(text);
        case FieldTag::Algebraic: return parse_algebraic(text, mod);
    }
    throw Error(ErrorKind::ParseError, "unknown field tag");
}

template <class F>
F parse_as(std::string_view text, const ModulusPtr& mod = nullptr) {
    return std::get<F>(parse_scalar(field_tag_of<F>(), text, mod));
}

}  // namespace lkwb

#endif
