#ifndef LKWB_LK_REP_HPP
#define LKWB_LK_REP_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace lkwb {

struct Pair {
    int s = 0;
    int t = 0;
    friend bool operator==(const Pair&, const Pair&) = default;
};

/// The basis x_{s,t}, 1 <= s < t <= n, in lexicographic order.
class PairIndex {
   public:
    explicit PairIndex(int n) : n_(n) {
        if (n < 2) throw Error(ErrorKind::InvalidConfig, "need at least two strands");
        for (int s = 1; s <= n; ++s)
            for (int t = s + 1; t <= n; ++t) pairs_.push_back({s, t});
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const Pair& pair(std::size_t i) const { return pairs_.at(i); }
    const std::vector<Pair>& pairs() const noexcept { return pairs_; }

    std::size_t index(int s, int t) const {
        if (!(1 <= s && s < t && t <= n_))
            throw Error(ErrorKind::DimensionMismatch, "pair (" + std::to_string(s) + "," + std::to_string(t) + ") out of range");
        auto before = static_cast<std::size_t>((s - 1) * n_ - (s - 1) * s / 2);
        return before + static_cast<std::size_t>(t - s - 1);
    }

   private:
    int n_;
    std::vector<Pair> pairs_;
};

inline std::size_t lk_dimension(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

/// Indices in V^(n) of the pairs with t <= k, listed in V^(k) order.
inline std::vector<std::size_t> embedding_indices(int k, int n) {
    if (k > n) throw Error(ErrorKind::DimensionMismatch, "cannot embed V^(k) into a smaller V^(n)");
    PairIndex small(k), big(n);
    std::vector<std::size_t> out;
    for (auto& p : small.pairs()) out.push_back(big.index(p.s, p.t));
    return out;
}

template <class F>
std::vector<F> embed_vector(const std::vector<F>& v, int k, int n) {
    auto idx = embedding_indices(k, n);
    if (v.size() != idx.size()) throw Error(ErrorKind::DimensionMismatch, "vector is not in V^(k)");
    std::vector<F> out(lk_dimension(n), F(0));
    for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = v[i];
    return out;
}

/// Matrices of sigma_1..sigma_{n-1}; column (s,t) holds the image of x_{s,t}.
template <class F>
std::vector<Matrix<F>> build_sigma(int n, const F& q, const F& tau) {
    if (detail::coeff_is_zero(q) || detail::coeff_is_zero(tau))
        throw Error(ErrorKind::ParameterZero, "q and tau must be nonzero");
    PairIndex idx(n);
    const std::size_t N = idx.size();
    const F one(1), one_minus_q = one - q, q_minus_1 = q - one;
    std::vector<Matrix<F>> out;
    for (int k = 1; k < n; ++k) {
        Matrix<F> m(N, N);
        for (std::size_t col = 0; col < N; ++col) {
            const auto [s, t] = idx.pair(col);
            auto add = [&](int a, int b, const F& c) {
                auto row = idx.index(a, b);
                m(row, col) = m(row, col) + c;
            };
            if (k < s - 1 || k > t) {
                add(s, t, one);
            } else if (k == s - 1) {
                add(s - 1, t, one);
                add(s, t, one_minus_q);
            } else if (k == s && s < t - 1) {
                add(s, s + 1, tau * q * q_minus_1);
                add(s + 1, t, q);
            } else if (k == s) {
                add(s, t, tau * q * q);
            } else if (k < t - 1) {
                add(s, t, one);
                add(k, k + 1, tau * field_pow(q, k - s) * q_minus_1 * q_minus_1);
            } else if (k == t - 1) {
                add(s, t - 1, one);
                add(t - 1, t, tau * field_pow(q, t - s) * q_minus_1);
            } else {
                add(s, t, one_minus_q);
                add(s, t + 1, q);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// True iff r^{2k} != 1 for 1 <= k <= n.
template <class F>
bool semisimplicity_guard(const F& r, int n) {
    if (detail::coeff_is_zero(r)) throw Error(ErrorKind::ParameterZero, "r must be nonzero");
    const F r2 = r * r;
    F p = r2;
    for (int k = 1; k <= n; ++k, p = p * r2)
        if (p == F(1)) return false;
    return true;
}

template <class F>
struct LKParams {
    int n = 3;
    F l;
    F r;

    F m() const { return m_of_r(r); }
    F q() const { return F(1) / (r * r); }
    F tau() const { return r * r * r / l; }
    /// (1/l - l)/m + 1; e_i^2 = delta e_i.
    F delta() const { return (F(1) / l - l) / m() + F(1); }

    void validate() const {
        if (n < 3) throw Error(ErrorKind::InvalidConfig, "n must be at least 3");
        if (detail::coeff_is_zero(l) || detail::coeff_is_zero(r)) throw Error(ErrorKind::ParameterZero, "l and r must be nonzero");
        if (detail::coeff_is_zero(m())) throw Error(ErrorKind::ParameterZero, "m = 1/r - r vanishes");
        if (!semisimplicity_guard(r, n))
            throw Error(ErrorKind::SemisimplicityViolation, "r^{2k} = 1 for some 1 <= k <= n");
    }
};

template <class F>
struct LKRep {
    LKParams<F> params;
    std::vector<Matrix<F>> g;
    std::vector<Matrix<F>> g_inv;
    std::vector<Matrix<F>> e;
    bool gate_passed = false;

    int n() const noexcept { return params.n; }
    std::size_t dim() const noexcept { return lk_dimension(params.n); }

    /// g_1..g_{n-1} followed by their inverses.
    std::vector<Matrix<F>> generators_with_inverses() const {
        auto ops = g;
        ops.insert(ops.end(), g_inv.begin(), g_inv.end());
        return ops;
    }
};

template <class F>
Matrix<F> e_from_g(const LKParams<F>& p, const Matrix<F>& g) {
    const F m = p.m();
    return (p.l / m) * (g * g + m * g - Matrix<F>::identity(g.rows()));
}

/// Fills inverses and e_i from given g_i.
template <class F>
LKRep<F> complete_rep(LKParams<F> params, std::vector<Matrix<F>> g) {
    LKRep<F> rep;
    rep.params = std::move(params);
    rep.g = std::move(g);
    const auto id = Matrix<F>::identity(rep.dim());
    for (auto& gi : rep.g) {
        auto inv = inverse(gi);
        if (!(gi * inv == id)) throw Error(ErrorKind::InternalCheckFailed, "g * g^-1 != I");
        rep.g_inv.push_back(std::move(inv));
        rep.e.push_back(e_from_g(rep.params, gi));
    }
    return rep;
}

/// g_k = r sigma_k with q = r^-2 and tau = r^3 / l.
template <class F>
LKRep<F> build_rep(const LKParams<F>& params) {
    params.validate();
    auto sigma = build_sigma(params.n, params.q(), params.tau());
    for (auto& s : sigma) s = params.r * s;
    return complete_rep(params, std::move(sigma));
}

/// Representation over Q(r) on the locus l = sign r^k: the generators are
/// built over Q(l, r) and mapped entrywise through the substitution.
inline LKRep<UniRatFunc> build_rep_substituted(int n, const LocusMonomial& loc) {
    LKParams<RatFunc> sym{n, RatFunc::var_l(), RatFunc::var_r()};
    auto sigma = build_sigma(n, sym.q(), sym.tau());
    std::vector<Matrix<UniRatFunc>> g;
    for (auto& s : sigma) g.push_back((sym.r * s).map([&](const RatFunc& x) { return substitute_locus(x, loc); }));
    LKParams<UniRatFunc> params{n, loc.apply(UniRatFunc::var()), UniRatFunc::var()};
    params.validate();
    return complete_rep(std::move(params), std::move(g));
}

inline LKRep<RatFunc> build_rep_symbolic(int n) {
    return build_rep(LKParams<RatFunc>{n, RatFunc::var_l(), RatFunc::var_r()});
}

// ---------------------------------------------------------------------------
// Relation gate.

struct RelationCheck {
    char family;  // 'a'..'f'
    std::string name;
    std::string where;
    bool passed;
};

struct RelationReport {
    std::vector<RelationCheck> checks;

    bool all_passed() const {
        for (auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
    /// Vacuously true for families with no instances (b, c when n = 3).
    bool family_passed(char f) const {
        for (auto& c : checks)
            if (c.family == f && !c.passed) return false;
        return true;
    }
    std::size_t family_count(char f) const {
        std::size_t k = 0;
        for (auto& c : checks) k += c.family == f;
        return k;
    }
};

inline const std::array<std::pair<char, const char*>, 6>& relation_families() {
    static const std::array<std::pair<char, const char*>, 6> fams{{
        {'a', "braid g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}"},
        {'b', "far commutation g_i g_j = g_j g_i"},
        {'c', "e_i e_j = 0 for |i-j| >= 2"},
        {'d', "e_i = (l/m)(g_i^2 + m g_i - 1)"},
        {'e', "(g_i - r)(g_i + 1/r)(g_i - 1/l) = 0"},
        {'f', "e_i^2 = delta e_i"},
    }};
    return fams;
}

template <class F>
RelationReport verify_relations(const LKRep<F>& rep) {
    RelationReport out;
    const auto& p = rep.params;
    const int k = p.n - 1;
    const auto id = Matrix<F>::identity(rep.dim());
    auto name = [](char f) { return std::string(relation_families()[static_cast<std::size_t>(f - 'a')].second); };
    auto at = [](int i, int j) { return "i=" + std::to_string(i + 1) + (j >= 0 ? ",j=" + std::to_string(j + 1) : ""); };
    for (int i = 0; i + 1 < k; ++i) {
        const auto& a = rep.g[i];
        const auto& b = rep.g[i + 1];
        out.checks.push_back({'a', name('a'), at(i, -1), a * b * a == b * a * b});
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            out.checks.push_back({'b', name('b'), at(i, j), rep.g[i] * rep.g[j] == rep.g[j] * rep.g[i]});
            out.checks.push_back({'c', name('c'), at(i, j), (rep.e[i] * rep.e[j]).is_zero_matrix()});
        }
    const F m = p.m(), rinv = F(1) / p.r, linv = F(1) / p.l, delta = p.delta();
    for (int i = 0; i < k; ++i) {
        const auto& g = rep.g[i];
        const auto& e = rep.e[i];
        out.checks.push_back({'d', name('d'), at(i, -1), e == (p.l / m) * (g * g + m * g - id)});
        auto cubic = (g - p.r * id) * (g + rinv * id) * (g - linv * id);
        out.checks.push_back({'e', name('e'), at(i, -1), cubic.is_zero_matrix()});
        out.checks.push_back({'f', name('f'), at(i, -1), e * e == delta * e});
    }
    return out;
}

/// Runs the relation gate and records the verdict on the representation.
template <class F>
RelationReport gate(LKRep<F>& rep) {
    auto report = verify_relations(rep);
    rep.gate_passed = report.all_passed();
    return report;
}

/// g_1..g_{k-1} of V^(n) preserve the coordinate copy of V^(k) and restrict
/// to the generators of V^(k); checked entrywise.
template <class F>
bool embedding_preserved(const LKRep<F>& big, const LKRep<F>& small) {
    const int k = small.n(), n = big.n();
    auto idx = embedding_indices(k, n);
    std::vector<bool> inside(big.dim(), false);
    for (auto i : idx) inside[i] = true;
    for (int gi = 0; gi + 1 < k; ++gi) {
        const auto& G = big.g[gi];
        const auto& g = small.g[gi];
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (std::size_t row = 0; row < big.dim(); ++row) {
                const F& x = G(row, idx[c]);
                if (!inside[row]) {
                    if (!detail::coeff_is_zero(x)) return false;
                }
            }
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                if (!(G(idx[a], idx[b]) == g(a, b))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Parameter dictionary q = 1/r^2, l t = r^3.

template <class F>
struct QT {
    F q;
    F t;
};

template <class F>
struct LR {
    F l;
    F r;
};

template <class F>
QT<F> lr_to_qt(const F& l, const F& r) {
    if (detail::coeff_is_zero(l) || detail::coeff_is_zero(r)) throw Error(ErrorKind::ParameterZero, "l and r must be nonzero");
    return {F(1) / (r * r), r * r * r / l};
}

/// Both preimages (l, r) and (l', -r) of (q, t), given one square root r of 1/q.
template <class F>
std::array<LR<F>, 2> qt_to_lr(const F& q, const F& t, const F& r_root) {
    if (detail::coeff_is_zero(q) || detail::coeff_is_zero(t)) throw Error(ErrorKind::ParameterZero, "q and t must be nonzero");
    if (!(r_root * r_root * q == F(1))) throw Error(ErrorKind::InvalidConfig, "supplied r is not a square root of 1/q");
    const F r2 = -r_root;
    return {{{r_root * r_root * r_root / t, r_root}, {r2 * r2 * r2 / t, r2}}};
}

template <class F>
struct ConventionReport {
    F q, tau, rescale, delta, m;
};

template <class F>
ConventionReport<F> convention(const LKParams<F>& p) {
    return {p.q(), p.tau(), p.r, p.delta(), p.m()};
}

}  // namespace lkwb

#endif
