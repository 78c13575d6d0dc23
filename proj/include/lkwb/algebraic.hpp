#ifndef LKWB_ALGEBRAIC_HPP
#define LKWB_ALGEBRAIC_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "laurent1.hpp"

namespace lkwb {

/// Defining polynomial of a quotient ring Q[x]/(f). Irreducibility is the
/// caller's responsibility.
class Modulus {
   public:
    Modulus(QPoly f, std::string name = {}) : f_(std::move(f)), name_(std::move(name)) {
        if (f_.degree() < 1) throw Error(ErrorKind::InvalidConfig, "modulus must have degree >= 1");
        if (!f_.lead().is_one()) throw Error(ErrorKind::InvalidConfig, "modulus must be monic");
    }

    const QPoly& poly() const noexcept { return f_; }
    const std::string& name() const noexcept { return name_; }
    int degree() const noexcept { return f_.degree(); }

    /// Header form `mod: x^d + c*x^k - c*x^k ...` with |c| written as p/q.
    std::string header() const {
        std::string s = "mod: x^" + std::to_string(f_.degree());
        for (int k = f_.degree() - 1; k >= 0; --k) {
            const BigRational& c = f_.coeffs()[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            s += c.sign() < 0 ? " - " : " + ";
            s += (c.sign() < 0 ? -c : c).to_string() + "*x^" + std::to_string(k);
        }
        return s;
    }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.f_ == b.f_; }

   private:
    QPoly f_;
    std::string name_;
};

using ModulusPtr = std::shared_ptr<const Modulus>;

/// k-th cyclotomic polynomial, by dividing x^k - 1 by the cyclotomic factors
/// of its proper divisors.
inline QPoly cyclotomic_polynomial(int k) {
    if (k < 1) throw Error(ErrorKind::InvalidConfig, "cyclotomic index must be positive");
    QPoly p = QPoly::monomial(BigRational(1), static_cast<std::size_t>(k)) - QPoly(BigRational(1));
    for (int d = 1; d < k; ++d)
        if (k % d == 0) p = QPoly::exact_div(p, cyclotomic_polynomial(d));
    return p;
}

inline ModulusPtr cyclotomic_modulus(int k) {
    return std::make_shared<const Modulus>(cyclotomic_polynomial(k), "cyclotomic:" + std::to_string(k));
}

/// Element of Q[x]/(f), kept reduced to degree < deg f. An element without a
/// modulus is a rational constant; it adopts the modulus of whatever it is
/// combined with.
class AlgebraicNumber {
   public:
    AlgebraicNumber() = default;
    AlgebraicNumber(int c) : rep_(BigRational(c)) {}
    AlgebraicNumber(const BigRational& c) : rep_(c) {}
    AlgebraicNumber(ModulusPtr mod, QPoly rep) : mod_(std::move(mod)), rep_(std::move(rep)) { reduce(); }

    /// The class of x in Q[x]/(f).
    static AlgebraicNumber generator(const ModulusPtr& mod) { return AlgebraicNumber(mod, QPoly::x()); }

    const ModulusPtr& modulus() const noexcept { return mod_; }
    const QPoly& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.is_zero(); }
    std::size_t term_count() const { return rep_.term_count(); }

    /// Inverse via extended gcd with the modulus; a nonzero non-unit raises
    /// ZeroDivisorEncountered.
    AlgebraicNumber inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero algebraic number");
        if (!mod_ || rep_.degree() == 0) return AlgebraicNumber(mod_, QPoly(rep_.lead().inverse()));
        auto eg = QPoly::ext_gcd(rep_, mod_->poly());
        if (eg.g.degree() != 0)
            throw Error(ErrorKind::ZeroDivisorEncountered, "element shares a factor with the modulus");
        return AlgebraicNumber(mod_, eg.s);
    }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return AlgebraicNumber(common(a, b), a.rep_ + b.rep_, true);
    }
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return AlgebraicNumber(common(a, b), a.rep_ - b.rep_, true);
    }
    friend AlgebraicNumber operator-(const AlgebraicNumber& a) { return AlgebraicNumber(a.mod_, -a.rep_, true); }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return AlgebraicNumber(common(a, b), a.rep_ * b.rep_);
    }
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        ModulusPtr m = common(a, b);
        AlgebraicNumber bb = b;
        if (!bb.mod_) bb.mod_ = m;
        return a * bb.inverse();
    }
    AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
    AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
    AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
    AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        common(a, b);
        return a.rep_ == b.rep_;
    }

    /// Coefficient list `[c0,c1,...]`, padded to deg f entries when a modulus is known.
    std::string to_string() const {
        std::size_t n = mod_ ? static_cast<std::size_t>(mod_->degree()) : std::max<std::size_t>(1, rep_.size());
        std::string s = "[";
        for (std::size_t i = 0; i < n; ++i) {
            if (i) s += ",";
            s += rep_.coeff(i).to_string();
        }
        return s + "]";
    }

   private:
    AlgebraicNumber(ModulusPtr mod, QPoly rep, bool /*already_reduced*/) : mod_(std::move(mod)), rep_(std::move(rep)) {}

    static ModulusPtr common(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (!a.mod_) return b.mod_;
        if (!b.mod_ || a.mod_ == b.mod_ || *a.mod_ == *b.mod_) return a.mod_;
        throw Error(ErrorKind::FieldMismatch, "algebraic numbers over different moduli");
    }

    void reduce() {
        if (mod_ && rep_.degree() >= mod_->degree()) rep_ = rep_ % mod_->poly();
        if (!mod_ && rep_.degree() > 0) throw Error(ErrorKind::FieldMismatch, "non-constant algebraic element without modulus");
    }

    ModulusPtr mod_;
    QPoly rep_;
};

inline bool is_zero(const AlgebraicNumber& x) noexcept { return x.is_zero(); }
inline std::string to_text(const AlgebraicNumber& x) { return x.to_string(); }
inline bool pivot_better(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.term_count() < b.term_count(); }

}  // namespace lkwb

#endif
