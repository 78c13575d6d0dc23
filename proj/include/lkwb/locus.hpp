#ifndef LKWB_LOCUS_HPP
#define LKWB_LOCUS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scalar.hpp"

namespace lkwb {

enum class LocusKind { Generic, LEqR, LEqMinusR3, LEqR3m2n, LEqPlusR3mn, LEqMinusR3mn, Custom };

/// A choice of l, either a monomial l = sign r^k depending on n, or a fixed
/// rational value (Generic and Custom).
struct Locus {
    LocusKind kind = LocusKind::Generic;
    std::optional<LocusMonomial> custom_monomial;
    std::optional<BigRational> value;

    static Locus of(LocusKind k) { return Locus{k, std::nullopt, std::nullopt}; }
    static Locus generic(BigRational l) { return Locus{LocusKind::Generic, std::nullopt, std::move(l)}; }
    static Locus custom(LocusMonomial m) { return Locus{LocusKind::Custom, m, std::nullopt}; }
    static Locus custom(BigRational l) { return Locus{LocusKind::Custom, std::nullopt, std::move(l)}; }

    std::string name() const {
        switch (kind) {
            case LocusKind::Generic: return "generic";
            case LocusKind::LEqR: return "l=r";
            case LocusKind::LEqMinusR3: return "l=-r3";
            case LocusKind::LEqR3m2n: return "l=r3-2n";
            case LocusKind::LEqPlusR3mn: return "l=+r3-n";
            case LocusKind::LEqMinusR3mn: return "l=-r3-n";
            case LocusKind::Custom: return "custom";
        }
        return "?";
    }

    /// l as a monomial in r for strand count n, if it is one.
    std::optional<LocusMonomial> monomial(int n) const {
        switch (kind) {
            case LocusKind::LEqR: return LocusMonomial{1, 1};
            case LocusKind::LEqMinusR3: return LocusMonomial{-1, 3};
            case LocusKind::LEqR3m2n: return LocusMonomial{1, 3 - 2L * n};
            case LocusKind::LEqPlusR3mn: return LocusMonomial{1, 3L - n};
            case LocusKind::LEqMinusR3mn: return LocusMonomial{-1, 3L - n};
            case LocusKind::Custom: return custom_monomial;
            case LocusKind::Generic: return std::nullopt;
        }
        return std::nullopt;
    }

    bool is_catalog() const { return kind != LocusKind::Generic && kind != LocusKind::Custom; }

    std::string describe(int n) const {
        if (auto m = monomial(n)) return "l = " + m->to_string();
        if (value) return "l = " + value->to_string();
        return "l unspecified";
    }

    template <class F>
    F l_value(int n, const F& r) const {
        if (auto m = monomial(n)) return m->apply(r);
        if (value) return F(*value);
        throw Error(ErrorKind::InvalidConfig, "locus '" + name() + "' needs an explicit l value");
    }
};

inline LocusKind parse_locus_kind(std::string_view s) {
    if (s == "generic") return LocusKind::Generic;
    if (s == "l=r") return LocusKind::LEqR;
    if (s == "l=-r3") return LocusKind::LEqMinusR3;
    if (s == "l=r3-2n") return LocusKind::LEqR3m2n;
    if (s == "l=+r3-n") return LocusKind::LEqPlusR3mn;
    if (s == "l=-r3-n") return LocusKind::LEqMinusR3mn;
    if (s == "custom") return LocusKind::Custom;
    throw Error(ErrorKind::InvalidConfig, "unknown locus '" + std::string(s) + "'");
}

/// Reducibility loci: five for n >= 4; for n = 3 the set {-r^3, r^-3, 1, -1}.
inline std::vector<Locus> catalog(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidConfig, "n must be at least 3");
    std::vector<Locus> out;
    if (n >= 4) out.push_back(Locus::of(LocusKind::LEqR));
    for (auto k : {LocusKind::LEqMinusR3, LocusKind::LEqR3m2n, LocusKind::LEqPlusR3mn, LocusKind::LEqMinusR3mn})
        out.push_back(Locus::of(k));
    return out;
}

/// Dimension of the irreducible invariant subspace predicted at a catalog
/// locus, and the kernel dimension where it is pinned down as well.
struct Expectation {
    std::optional<std::size_t> min_dim;
    std::optional<std::size_t> k;
};

inline Expectation expected_at(int n, LocusKind kind) {
    const auto N = static_cast<std::size_t>(n);
    switch (kind) {
        case LocusKind::LEqR:
            if (n >= 4) return {N * (N - 3) / 2, N * (N - 3) / 2};
            return {};
        case LocusKind::LEqMinusR3:
            if (n == 3) return {1, std::nullopt};
            if (n == 4) return {3, std::nullopt};
            return {(N - 1) * (N - 2) / 2, (N - 1) * (N - 2) / 2};
        case LocusKind::LEqR3m2n: return {1, std::nullopt};
        case LocusKind::LEqPlusR3mn:
        case LocusKind::LEqMinusR3mn: return {N - 1, std::nullopt};
        case LocusKind::Generic: return {std::nullopt, 0};
        case LocusKind::Custom: return {};
    }
    return {};
}

}  // namespace lkwb

#endif
