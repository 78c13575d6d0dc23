#ifndef LKWB_REDUCIBILITY_HPP
#define LKWB_REDUCIBILITY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "commutant.hpp"
#include "lk_rep.hpp"
#include "locus.hpp"
#include "matrix_io.hpp"
#include "subspace.hpp"

namespace lkwb {

template <class F>
struct MnMatrix {
    int n = 0;
    Matrix<F> matrix;
};

inline std::size_t m_summand_count(int n) { return lk_dimension(n); }

/// Sum of e_i and of the conjugates g_{j-1}^-1 ... g_{i+1}^-1 e_i g_{i+1} ... g_{j-1}
/// over 1 <= i < j - 1 < n.
template <class F>
MnMatrix<F> build_m_matrix(const LKRep<F>& rep) {
    if (!rep.gate_passed) throw Error(ErrorKind::RelationGateNotPassed, "M(n) needs a relation-verified representation");
    const int n = rep.n();
    Matrix<F> m(rep.dim(), rep.dim());
    for (int i = 1; i < n; ++i) {
        Matrix<F> c = rep.e[i - 1];
        m += c;
        for (int j = i + 2; j <= n; ++j) {
            c = rep.g_inv[j - 2] * c * rep.g[j - 2];
            m += c;
        }
    }
    return {n, std::move(m)};
}

/// Builds, gates and returns the representation at l = locus(r) over F.
template <class F>
LKRep<F> gated_rep(int n, const F& l, const F& r) {
    auto rep = build_rep(LKParams<F>{n, l, r});
    auto rel = gate(rep);
    if (!rel.all_passed()) throw Error(ErrorKind::RelationGateNotPassed, "relation gate failed");
    return rep;
}

inline LKRep<UniRatFunc> gated_rep_substituted(int n, const LocusMonomial& loc) {
    auto rep = build_rep_substituted(n, loc);
    if (!gate(rep).all_passed()) throw Error(ErrorKind::RelationGateNotPassed, "relation gate failed");
    return rep;
}

// ---------------------------------------------------------------------------
// Determinant verdicts.

enum class DetMode { Symbolic, Substituted, Sampled };

inline std::string to_string(DetMode m) {
    switch (m) {
        case DetMode::Symbolic: return "symbolic";
        case DetMode::Substituted: return "substituted-univariate";
        case DetMode::Sampled: return "sampled";
    }
    return "?";
}

inline DetMode parse_det_mode(std::string_view s) {
    if (s == "symbolic") return DetMode::Symbolic;
    if (s == "substituted" || s == "substituted-univariate") return DetMode::Substituted;
    if (s == "sampled") return DetMode::Sampled;
    throw Error(ErrorKind::InvalidConfig, "unknown mode '" + std::string(s) + "'");
}

inline constexpr int kSymbolicMaxN = 5;
inline constexpr int kSubstitutedMaxN = 7;
inline constexpr int kSampledMaxN = 9;
inline constexpr long kSampleMagnitude = 10000;

struct DetVerdict {
    bool identically_zero = false;
    DetMode mode = DetMode::Sampled;
    bool probabilistic = false;
    /// Determinant as computed: over Q(l,r), Q(r), or at the last sample point.
    std::string determinant;
    std::optional<BigRational> witness_l, witness_r, witness_value;
};

namespace detail {

inline BigRational random_rational(std::mt19937_64& rng, long magnitude) {
    std::uniform_int_distribution<long> num(-magnitude, magnitude), den(1, magnitude);
    for (;;) {
        BigRational x(num(rng), den(rng));
        if (!x.is_zero()) return x;
    }
}

/// Random r usable as a specialization: r not in {0, 1, -1}.
inline BigRational random_r(std::mt19937_64& rng, long magnitude) {
    for (;;) {
        auto r = random_rational(rng, magnitude);
        if (!(r == BigRational(1)) && !(r == BigRational(-1))) return r;
    }
}

template <class Fn>
std::optional<std::pair<BigRational, BigRational>> first_nonzero_point(Fn&& value_at) {
    for (long p = 2; p < 50; ++p)
        for (long qd : {1L, 3L, 7L}) {
            BigRational r(p, qd);
            try {
                if (auto v = value_at(r); !v.is_zero()) return std::make_pair(r, v);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::PoleAtSpecialization && e.kind() != ErrorKind::DivisionByZero) throw;
            }
        }
    return std::nullopt;
}

}  // namespace detail

inline void check_mode_feasible(int n, DetMode mode, const Locus& locus) {
    const int cap = mode == DetMode::Symbolic ? kSymbolicMaxN : mode == DetMode::Substituted ? kSubstitutedMaxN : kSampledMaxN;
    if (n > cap) throw Error(ErrorKind::InfeasibleMode, to_string(mode) + " determinants are capped at n = " + std::to_string(cap));
    if (mode == DetMode::Substituted && !locus.monomial(n))
        throw Error(ErrorKind::InfeasibleMode, "substituted mode needs l = sign r^k");
}

/// Decides whether det M(n) vanishes identically on the locus.
inline DetVerdict det_on_locus(int n, const Locus& locus, DetMode mode, std::mt19937_64& rng) {
    check_mode_feasible(n, mode, locus);
    DetVerdict v;
    v.mode = mode;
    if (mode == DetMode::Symbolic) {
        auto rep = build_rep_symbolic(n);
        if (!gate(rep).all_passed()) throw Error(ErrorKind::RelationGateNotPassed, "relation gate failed");
        RatFunc d = det(build_m_matrix(rep).matrix);
        if (auto mono = locus.monomial(n)) {
            UniRatFunc u = substitute_locus(d, *mono);
            v.determinant = u.to_string();
            v.identically_zero = u.is_zero();
            if (!v.identically_zero) {
                auto w = detail::first_nonzero_point([&](const BigRational& r) { return u.eval(r); });
                if (w) v.witness_r = w->first, v.witness_l = mono->apply(w->first), v.witness_value = w->second;
            }
        } else {
            v.determinant = d.to_string();
            if (locus.value) {
                BigRational l = *locus.value;
                auto w = detail::first_nonzero_point([&](const BigRational& r) { return d.eval(l, r); });
                v.identically_zero = !w;
                if (w) v.witness_r = w->first, v.witness_l = l, v.witness_value = w->second;
            } else {
                v.identically_zero = d.is_zero();
                if (!v.identically_zero) {
                    auto w = detail::first_nonzero_point([&](const BigRational& r) { return d.eval(BigRational(5), r); });
                    if (w) v.witness_r = w->first, v.witness_l = BigRational(5), v.witness_value = w->second;
                }
            }
        }
        return v;
    }
    if (mode == DetMode::Substituted) {
        const auto mono = *locus.monomial(n);
        auto rep = gated_rep_substituted(n, mono);
        UniRatFunc d = det(build_m_matrix(rep).matrix);
        v.determinant = d.to_string();
        v.identically_zero = d.is_zero();
        if (!v.identically_zero) {
            auto w = detail::first_nonzero_point([&](const BigRational& r) { return d.eval(r); });
            if (w) v.witness_r = w->first, v.witness_l = mono.apply(w->first), v.witness_value = w->second;
        }
        return v;
    }
    v.identically_zero = true;
    v.probabilistic = true;
    for (int sample = 0; sample < 3; ++sample) {
        BigRational r = detail::random_r(rng, kSampleMagnitude);
        BigRational l = locus.value ? *locus.value
                        : locus.monomial(n) ? locus.l_value(n, r)
                                            : detail::random_rational(rng, kSampleMagnitude);
        auto rep = gated_rep(n, l, r);
        BigRational d = det(build_m_matrix(rep).matrix);
        v.determinant = d.to_string();
        if (!d.is_zero()) {
            v.identically_zero = false;
            v.probabilistic = false;
            v.witness_l = l, v.witness_r = r, v.witness_value = d;
            break;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Kernels and invariant subspaces.

template <class F>
struct KernelReport {
    int n = 0;
    std::string locus;
    F l, r;
    std::size_t k = 0;
    SubspaceBasis<F> kernel;
    bool invariant = false;
    std::vector<std::size_t> minimal_dims;
};

template <class F>
KernelReport<F> kernel_of(const LKRep<F>& rep, std::string locus_name) {
    KernelReport<F> rep_out;
    rep_out.n = rep.n();
    rep_out.locus = std::move(locus_name);
    rep_out.l = rep.params.l;
    rep_out.r = rep.params.r;
    rep_out.kernel = kernel(build_m_matrix(rep).matrix);
    rep_out.k = rep_out.kernel.dim();
    rep_out.invariant = is_invariant(rep_out.kernel, rep.g);
    return rep_out;
}

template <class F>
KernelReport<F> kernel_k(int n, const Locus& locus, const F& r_val) {
    if (!semisimplicity_guard(r_val, n)) throw Error(ErrorKind::SemisimplicityViolation, "r^{2k} = 1 for some k <= n");
    auto rep = gated_rep(n, locus.l_value(n, r_val), r_val);
    return kernel_of(rep, locus.name());
}

template <class F>
struct EigenSpace {
    F lambda;
    SubspaceBasis<F> space;
    bool is_line() const { return space.dim() == 1; }
};

/// Common eigenspaces of all g_i for a constant eigenvalue. An invariant line
/// has one eigenvalue for every g_i (the braid relation forces them equal),
/// and it is r or -1/r.
template <class F>
std::vector<EigenSpace<F>> one_dim_subspaces(const LKRep<F>& rep) {
    const auto& p = rep.params;
    std::vector<F> cands{p.r, -(F(1) / p.r)};
    std::vector<F> distinct;
    for (auto& c : cands)
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
    const std::size_t N = rep.dim();
    std::vector<EigenSpace<F>> out;
    for (auto& lam : distinct) {
        Matrix<F> stacked(N * rep.g.size(), N);
        for (std::size_t i = 0; i < rep.g.size(); ++i)
            for (std::size_t a = 0; a < N; ++a)
                for (std::size_t b = 0; b < N; ++b) stacked(i * N + a, b) = rep.g[i](a, b) - (a == b ? lam : F(0));
        auto sp = kernel(stacked);
        if (sp.dim() > 0) out.push_back({lam, std::move(sp)});
    }
    return out;
}

template <class F>
SubspaceBasis<F> minimal_invariant(const LKRep<F>& rep, const std::vector<F>& seed) {
    if (is_zero_vector<F>(seed)) throw Error(ErrorKind::ZeroSeed, "closure seed is zero");
    return operator_closure(rep.dim(), {seed}, rep.generators_with_inverses());
}

/// Every basis vector of s generates all of s.
template <class F>
bool closure_irreducible(const LKRep<F>& rep, const SubspaceBasis<F>& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!(minimal_invariant(rep, s.vector(i)) == s)) return false;
    return s.dim() > 0;
}

template <class F>
SubspaceBasis<F> coordinate_subspace(int k, int n) {
    return SubspaceBasis<F>::coordinate(lk_dimension(n), embedding_indices(k, n));
}

/// K(n) intersected with the coordinate copy of V^(n - depth).
template <class F>
SubspaceBasis<F> lower_intersection(const KernelReport<F>& rep, int depth) {
    if (depth < 1 || depth > 2) throw Error(ErrorKind::DepthTooLarge, "depth must be 1 or 2");
    if (rep.n - depth < 3) throw Error(ErrorKind::DepthTooLarge, "n - depth must be at least 3");
    return intersect(rep.kernel, coordinate_subspace<F>(rep.n - depth, rep.n));
}

/// Embeds a subspace of V^(k) into V^(n) by coordinate inclusion.
template <class F>
SubspaceBasis<F> embed_subspace(const SubspaceBasis<F>& s, int k, int n) {
    std::vector<std::vector<F>> vs;
    for (auto& v : s.vectors()) vs.push_back(embed_vector(v, k, n));
    return SubspaceBasis<F>::span(lk_dimension(n), vs);
}

template <class F>
struct PersistentReport {
    std::vector<F> vector;  // in V^(5)
    std::vector<std::pair<int, bool>> annihilated;
    bool all() const {
        for (auto& [n, ok] : annihilated)
            if (!ok) return false;
        return !annihilated.empty();
    }
};

/// A nonzero vector of K(5) ∩ V^(4), embedded into V^(n), is killed by M(n)
/// for 6 <= n <= n_max.
template <class F>
PersistentReport<F> persistent_vector_check(LocusKind kind, int n_max, const F& r) {
    if (kind != LocusKind::LEqR && kind != LocusKind::LEqMinusR3)
        throw Error(ErrorKind::InvalidConfig, "persistent vector check is defined at l = r and l = -r^3");
    if (n_max < 6) throw Error(ErrorKind::InvalidConfig, "n_max must be at least 6");
    auto locus = Locus::of(kind);
    auto k5 = kernel_k(5, locus, r);
    auto low = lower_intersection(k5, 1);
    if (low.dim() == 0) throw Error(ErrorKind::EmptyIntersection, "K(5) meets V^(4) trivially");
    PersistentReport<F> out;
    out.vector = low.vector(0);
    for (int n = 6; n <= n_max; ++n) {
        auto rep = gated_rep(n, locus.l_value(n, r), r);
        auto m = build_m_matrix(rep).matrix;
        out.annihilated.emplace_back(n, is_zero_vector<F>(m.apply(embed_vector(out.vector, 5, n))));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Indecomposability probe.

enum class ProbeVerdict { IndecomposableEvidence, DecomposableWitness, Inconclusive };

inline std::string to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::IndecomposableEvidence: return "IndecomposableEvidence";
        case ProbeVerdict::DecomposableWitness: return "DecomposableWitness";
        case ProbeVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct ProbeResult {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    std::size_t commutant_dim = 0;
    std::size_t samples = 0;
    /// True when the verdict rests on random commutant samples.
    bool probabilistic = false;
    std::optional<Matrix<BigRational>> idempotent;
};

namespace detail {

/// Positive divisors of |z|, or nullopt when |z| is too large to enumerate.
inline std::optional<std::vector<mpz_class>> small_divisors(const mpz_class& z) {
    mpz_class a = abs(z);
    if (a == 0 || a > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> lo, hi;
    for (mpz_class d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            lo.push_back(d);
            if (d * d != a) hi.push_back(a / d);
        }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// Rational roots of p found by the rational root test, smallest first.
inline std::vector<BigRational> rational_roots(const QPoly& p) {
    std::vector<BigRational> out;
    if (p.degree() < 1) return out;
    mpz_class l = 1;
    for (auto& c : p.coeffs()) l = lcm(l, c.den());
    std::vector<mpz_class> z;
    for (auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    std::size_t v = 0;
    while (v < z.size() && z[v] == 0) ++v;
    if (v > 0) out.emplace_back(0);
    auto lows = small_divisors(z[v]);
    auto highs = small_divisors(z.back());
    if (!lows || !highs) return out;
    for (auto& a : *lows)
        for (auto& b : *highs)
            for (int sgn : {1, -1}) {
                BigRational cand(mpz_class(sgn * a), b);
                if (p(cand).is_zero() && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
            }
    std::sort(out.begin(), out.end());
    return out;
}

/// An idempotent of the commutant split off by a rational eigenvalue of X,
/// verified exactly; nullopt if X has no usable rational eigenvalue.
inline std::optional<Matrix<BigRational>> split_idempotent(const Matrix<BigRational>& x, const QPoly& chi,
                                                           const std::vector<Matrix<BigRational>>& ops) {
    for (auto& alpha : rational_roots(chi.squarefree_part())) {
        QPoly lin(std::vector<BigRational>{-alpha, BigRational(1)});
        QPoly a(BigRational(1)), b = chi;
        while (QPoly::divmod(b, lin).second.is_zero()) {
            b = QPoly::exact_div(b, lin);
            a = a * lin;
        }
        if (b.degree() < 1) continue;
        auto eg = QPoly::ext_gcd(a, b);
        if (eg.g.degree() != 0) continue;
        Matrix<BigRational> e = eval_matrix_poly(eg.s * a * QPoly(eg.g.lead().inverse()), x);
        const auto N = x.rows();
        if (!(e * e == e) || e.is_zero_matrix() || e == Matrix<BigRational>::identity(N)) continue;
        bool commutes = true;
        for (auto& op : ops) commutes = commutes && (e * op == op * e);
        if (commutes) return e;
    }
    return std::nullopt;
}

}  // namespace detail

/// A decomposition V = A ⊕ B puts the projections into the commutant, and a
/// generic commutant element then has two distinct eigenvalues. So: every
/// sample with a single eigenvalue is evidence of indecomposability; a sample
/// splitting off a verified idempotent is a witness of decomposability.
inline ProbeResult indecomposability_probe(const std::vector<Matrix<BigRational>>& ops, int trials, std::mt19937_64& rng) {
    if (trials < 1) throw Error(ErrorKind::InvalidConfig, "trials must be at least 1");
    ProbeResult out;
    auto basis = commutant_basis(ops);
    out.commutant_dim = basis.size();
    if (basis.size() == 1) {
        out.verdict = ProbeVerdict::IndecomposableEvidence;
        return out;
    }
    out.probabilistic = true;
    std::uniform_int_distribution<int> coef(-10, 10);
    bool all_single = true;
    const auto N = ops.front().rows();
    for (int t = 0; t < trials; ++t) {
        Matrix<BigRational> x(N, N);
        for (auto& b : basis) {
            int c = coef(rng);
            if (c) x += BigRational(c) * b;
        }
        ++out.samples;
        auto chi = charpoly(x);
        if (chi.squarefree_part().degree() == 1) continue;
        all_single = false;
        if (auto e = detail::split_idempotent(x, chi, ops)) {
            out.verdict = ProbeVerdict::DecomposableWitness;
            out.probabilistic = false;
            out.idempotent = std::move(e);
            return out;
        }
    }
    out.verdict = all_single ? ProbeVerdict::IndecomposableEvidence : ProbeVerdict::Inconclusive;
    return out;
}

/// FNV-1a over the matrix text form; a short fingerprint for reports.
template <class F>
std::string matrix_hash(const Matrix<F>& m, ModulusPtr mod = nullptr) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : write_matrix_text(m, mod)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 15];
    return s;
}

}  // namespace lkwb

#endif
