#ifndef LKWB_CERTIFY_HPP
#define LKWB_CERTIFY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "certificates.hpp"
#include "reducibility.hpp"

namespace lkwb {

struct ProbeSummary {
    std::string verdict;  // ProbeVerdict name or "skipped"
    std::size_t commutant_dim = 0;
    std::size_t samples = 0;
    bool probabilistic = false;
};

struct LocusRecord {
    std::string locus;
    std::string l;
    std::string det_verdict;  // "identically_zero" | "nonzero"
    std::string method;
    bool det_probabilistic = false;
    std::size_t k = 0;
    std::optional<std::size_t> expected_k;
    std::vector<std::size_t> expected_dims;
    std::vector<std::size_t> minimal_dims;
    bool unique = false;
    bool irreducible = false;
    bool invariant = false;
    bool contained = false;
    ProbeSummary indecomposable;
    std::vector<std::pair<int, std::size_t>> lower_intersections;  // (depth, dim)
    std::optional<std::string> coincides_with;
    bool exceptional = false;
    std::string matrix_hash;
    std::vector<std::string> kernel_basis;
    std::vector<std::string> mismatches;

    bool pass() const { return mismatches.empty(); }
};

struct CertificationReport {
    int n = 0;
    std::string r_spec;
    std::string r_field;
    std::string r_value;
    std::uint64_t seed = 0;
    std::vector<LocusRecord> loci;

    bool all_pass() const {
        for (auto& l : loci)
            if (!l.pass()) return false;
        return !loci.empty();
    }
};

struct CertifyOptions {
    std::optional<DetMode> mode;  // default: substituted up to n = 7, sampled beyond
    int probe_trials = 10;
    int probe_max_n = 6;
    unsigned jobs = 1;
    bool include_generic = true;
};

namespace detail {

template <class F>
std::string vector_text(const std::vector<F>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + "]";
}

inline std::mt19937_64 locus_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

/// Random rational l with |num|, |den| <= magnitude, redrawn while it equals
/// any catalog value at r.
template <class F>
BigRational draw_off_locus_l(int n, const F& r, std::mt19937_64& rng, long magnitude = 100) {
    auto cat = catalog(n);
    for (;;) {
        BigRational l = random_rational(rng, magnitude);
        bool hit = false;
        for (auto& c : cat) hit = hit || (c.l_value(n, r) == F(l));
        if (!hit) return l;
    }
}

/// The pair {l = -r^3, l = r^{3-2n}} merges exactly when r^{2n} = -1.
template <class F>
bool exceptional_merge(int n, const F& r) {
    return Locus::of(LocusKind::LEqMinusR3).l_value(n, r) == Locus::of(LocusKind::LEqR3m2n).l_value(n, r);
}

inline void check(LocusRecord& rec, bool ok, const std::string& what) {
    if (!ok) rec.mismatches.push_back(what);
}

template <class F>
LocusRecord certify_locus(int n, const F& r, const Locus& locus, const CertifyOptions& opt, std::mt19937_64& rng) {
    LocusRecord rec;
    rec.locus = locus.name();
    const F l = locus.l_value(n, r);
    rec.l = locus.monomial(n) ? locus.describe(n) + " = " + l.to_string() : "l = " + l.to_string();

    auto rep = gated_rep(n, l, r);
    auto mn = build_m_matrix(rep);
    rec.matrix_hash = matrix_hash(mn.matrix);
    KernelReport<F> kr;
    kr.n = n;
    kr.locus = rec.locus;
    kr.l = l;
    kr.r = r;
    kr.kernel = kernel(mn.matrix);
    kr.k = kr.kernel.dim();
    kr.invariant = is_invariant(kr.kernel, rep.g);
    rec.k = kr.k;
    rec.invariant = kr.invariant;
    for (auto& v : kr.kernel.vectors()) rec.kernel_basis.push_back(vector_text(v));

    if (locus.monomial(n)) {
        DetMode mode = opt.mode.value_or(n <= kSubstitutedMaxN ? DetMode::Substituted : DetMode::Sampled);
        auto dv = det_on_locus(n, locus, mode, rng);
        rec.det_verdict = dv.identically_zero ? "identically_zero" : "nonzero";
        rec.method = to_string(dv.mode);
        rec.det_probabilistic = dv.probabilistic;
    } else {
        // exact evaluation at the point itself; a nonzero value is a certificate
        rec.det_verdict = kr.k == 0 ? "nonzero" : "identically_zero";
        rec.method = to_string(DetMode::Sampled);
        rec.det_probabilistic = kr.k != 0;
    }

    for (int depth = 1; depth <= 2; ++depth)
        if (n - depth >= 3) rec.lower_intersections.emplace_back(depth, lower_intersection(kr, depth).dim());

    if (opt.probe_trials > 0 && n <= opt.probe_max_n) {
        if constexpr (std::is_same_v<F, BigRational>) {
            auto p = indecomposability_probe(rep.g, opt.probe_trials, rng);
            rec.indecomposable = {to_string(p.verdict), p.commutant_dim, p.samples, p.probabilistic};
        } else {
            rec.indecomposable.verdict = "skipped";
        }
    } else {
        rec.indecomposable.verdict = "skipped";
    }

    if (!locus.is_catalog()) {
        rec.expected_k = 0;
        check(rec, rec.det_verdict == "nonzero", "determinant vanishes off the catalog");
        check(rec, rec.k == 0, "nonzero kernel off the catalog");
        rec.unique = rec.irreducible = rec.contained = true;
        if (rec.indecomposable.verdict != "skipped")
            check(rec, rec.indecomposable.commutant_dim == 1, "commutant larger than scalars at generic point");
        return rec;
    }

    check(rec, rec.det_verdict == "identically_zero", "determinant not identically zero on the locus");
    check(rec, rec.k > 0, "trivial kernel on a catalog locus");
    check(rec, rec.invariant, "kernel not invariant");
    if (rec.indecomposable.verdict != "skipped")
        check(rec, rec.indecomposable.verdict == to_string(ProbeVerdict::IndecomposableEvidence), "probe found no indecomposability evidence");
    if (rec.k == 0) return rec;

    rec.exceptional = (locus.kind == LocusKind::LEqMinusR3 || locus.kind == LocusKind::LEqR3m2n) && exceptional_merge(n, r);
    if (!rec.exceptional) {
        auto exp = expected_at(n, locus.kind);
        if (exp.min_dim) rec.expected_dims = {*exp.min_dim};
        rec.expected_k = exp.k;
        std::optional<SubspaceBasis<F>> first;
        rec.unique = true;
        rec.contained = true;
        for (std::size_t i = 0; i < kr.kernel.dim(); ++i) {
            auto w = minimal_invariant(rep, kr.kernel.vector(i));
            if (std::find(rec.minimal_dims.begin(), rec.minimal_dims.end(), w.dim()) == rec.minimal_dims.end())
                rec.minimal_dims.push_back(w.dim());
            rec.contained = rec.contained && kr.kernel.contains(w);
            if (!first) first = w;
            else rec.unique = rec.unique && (*first == w);
        }
        std::sort(rec.minimal_dims.begin(), rec.minimal_dims.end());
        rec.irreducible = first && closure_irreducible(rep, *first);
        if (exp.min_dim) {
            check(rec, rec.minimal_dims == std::vector<std::size_t>{*exp.min_dim}, "minimal invariant dimension differs from the expected table");
            check(rec, rec.unique, "kernel vectors generate different invariant subspaces");
        }
        if (exp.k) check(rec, rec.k == *exp.k, "k(n) differs from the expected table");
        check(rec, rec.irreducible, "minimal invariant subspace fails the closure irreducibility test");
        check(rec, rec.contained, "invariant subspace not contained in K(n)");
        return rec;
    }

    // K(n) = W + L at r^{2n} = -1: L an eigenline, W generated by (g_i - lambda) K
    const std::size_t big = static_cast<std::size_t>((n - 1) * (n - 2) / 2);
    rec.expected_k = big + 1;
    rec.expected_dims = {1, big};
    std::sort(rec.expected_dims.begin(), rec.expected_dims.end());
    check(rec, rec.k == big + 1, "k(n) differs from 1 + (n-1)(n-2)/2");
    auto lines = one_dim_subspaces(rep);
    std::vector<EigenSpace<F>> inside;
    for (auto& e : lines)
        if (kr.kernel.contains(e.space)) inside.push_back(e);
    const std::size_t want_lines = n == 3 ? 2 : 1;
    rec.unique = inside.size() == want_lines && std::all_of(inside.begin(), inside.end(), [](auto& e) { return e.is_line(); });
    check(rec, rec.unique, "unexpected eigenline count inside K(n)");
    if (!inside.empty()) {
        const auto& line = inside.front();
        std::vector<std::vector<F>> seed;
        const auto id = Matrix<F>::identity(rep.dim());
        for (auto& g : rep.g)
            for (auto& v : kr.kernel.vectors()) {
                auto w = (g - line.lambda * id).apply(v);
                if (!is_zero_vector<F>(w)) seed.push_back(std::move(w));
            }
        auto w = operator_closure(rep.dim(), seed, rep.generators_with_inverses());
        rec.minimal_dims = {line.space.dim(), w.dim()};
        std::sort(rec.minimal_dims.begin(), rec.minimal_dims.end());
        rec.contained = kr.kernel.contains(w) && kr.kernel.contains(line.space);
        rec.irreducible = closure_irreducible(rep, w) && closure_irreducible(rep, line.space);
        check(rec, sum(w, line.space) == kr.kernel && intersect(w, line.space).dim() == 0, "K(n) is not W + L");
        check(rec, rec.minimal_dims == rec.expected_dims, "components of K(n) have wrong dimensions");
        check(rec, rec.irreducible, "component fails the closure irreducibility test");
    }
    if (n >= 4) {
        auto prev = kernel_k(n - 1, Locus::of(LocusKind::LEqMinusR3), r);
        auto low = lower_intersection(kr, 1);
        const auto N = static_cast<std::size_t>(n);
        check(rec, low == embed_subspace(prev.kernel, n - 1, n), "K(n) meets V^(n-1) in more than K(n-1)");
        check(rec, prev.k + (N - 2) <= rec.k && rec.k <= prev.k + (N - 1), "k(n) outside [k(n-1)+n-2, k(n-1)+n-1]");
    }
    return rec;
}

}  // namespace detail

/// Certifies every catalog locus (and one random generic l) at r.
template <class F>
CertificationReport certify(int n, const F& r, const std::string& r_spec, std::uint64_t seed, const CertifyOptions& opt = {}) {
    if (!semisimplicity_guard(r, n)) throw Error(ErrorKind::SemisimplicityViolation, "r^{2k} = 1 for some k <= n");
    CertificationReport rep;
    rep.n = n;
    rep.r_spec = r_spec;
    rep.r_field = to_string(field_tag_of<F>());
    rep.r_value = r.to_string();
    rep.seed = seed;

    std::vector<Locus> loci = catalog(n);
    std::vector<std::mt19937_64> rngs;
    for (std::size_t i = 0; i <= loci.size(); ++i) rngs.push_back(detail::locus_rng(seed, i));
    if (opt.include_generic) loci.push_back(Locus::generic(detail::draw_off_locus_l(n, r, rngs.back())));

    std::vector<std::size_t> coincide(loci.size(), loci.size());
    for (std::size_t i = 0; i < loci.size(); ++i)
        for (std::size_t j = 0; j < i && coincide[i] == loci.size(); ++j)
            if (loci[i].l_value(n, r) == loci[j].l_value(n, r)) coincide[i] = j;

    std::vector<LocusRecord> recs(loci.size());
    std::vector<std::string> errors(loci.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < loci.size();) {
            try {
                recs[i] = detail::certify_locus(n, r, loci[i], opt, rngs[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(loci.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < loci.size(); ++i) {
        if (!errors[i].empty()) {
            recs[i].locus = loci[i].name();
            recs[i].mismatches.push_back("error: " + errors[i]);
        }
        if (coincide[i] < loci.size()) recs[i].coincides_with = loci[coincide[i]].name();
    }
    std::sort(recs.begin(), recs.end(), [](const LocusRecord& a, const LocusRecord& b) { return a.locus < b.locus; });
    rep.loci = std::move(recs);
    return rep;
}

inline nlohmann::ordered_json to_json(const CertificationReport& rep) {
    using J = nlohmann::ordered_json;
    J j;
    j["n"] = rep.n;
    j["r"] = J{{"spec", rep.r_spec}, {"field", rep.r_field}, {"value", rep.r_value}};
    j["seed"] = rep.seed;
    J loci = J::array();
    for (auto& l : rep.loci) {
        J x;
        x["locus"] = l.locus;
        x["l"] = l.l;
        x["det_verdict"] = l.det_verdict;
        x["method"] = l.method;
        x["probabilistic"] = l.det_probabilistic;
        x["k"] = l.k;
        x["expected_k"] = l.expected_k ? J(*l.expected_k) : J(nullptr);
        x["expected_dims"] = l.expected_dims;
        x["minimal_dims"] = l.minimal_dims;
        x["unique"] = l.unique;
        x["irreducible"] = l.irreducible;
        x["invariant"] = l.invariant;
        x["contained"] = l.contained;
        x["indecomposable"] = J{{"verdict", l.indecomposable.verdict},
                                {"commutant_dim", l.indecomposable.commutant_dim},
                                {"samples", l.indecomposable.samples},
                                {"probabilistic", l.indecomposable.probabilistic}};
        J low = J::object();
        for (auto& [d, dim] : l.lower_intersections) low["V^(n-" + std::to_string(d) + ")"] = dim;
        x["lower_intersections"] = low;
        x["exceptional"] = l.exceptional;
        x["coincides_with"] = l.coincides_with ? J(*l.coincides_with) : J(nullptr);
        x["witnesses"] = J{{"matrix_hash", l.matrix_hash}, {"kernel_basis", l.kernel_basis}};
        x["mismatches"] = l.mismatches;
        x["pass"] = l.pass();
        loci.push_back(std::move(x));
    }
    j["loci"] = std::move(loci);
    j["all_pass"] = rep.all_pass();
    return j;
}

inline std::string to_text(const CertificationReport& rep) {
    std::ostringstream os;
    os << "certify n=" << rep.n << " r=" << rep.r_spec << " (" << rep.r_field << " " << rep.r_value << ") seed=" << rep.seed << '\n';
    for (auto& l : rep.loci) {
        os << (l.pass() ? "PASS " : "FAIL ") << l.locus << "  " << l.l << '\n';
        os << "  det: " << l.det_verdict << " [" << l.method << (l.det_probabilistic ? ", probabilistic" : "") << "]\n";
        os << "  k=" << l.k;
        if (l.expected_k) os << " (expected " << *l.expected_k << ")";
        os << "  minimal dims:";
        for (auto d : l.minimal_dims) os << ' ' << d;
        if (!l.expected_dims.empty()) {
            os << " (expected";
            for (auto d : l.expected_dims) os << ' ' << d;
            os << ")";
        }
        os << "\n  unique=" << l.unique << " irreducible=" << l.irreducible << " invariant=" << l.invariant
           << " contained=" << l.contained << (l.exceptional ? " exceptional" : "") << '\n';
        os << "  indecomposable: " << l.indecomposable.verdict;
        if (l.indecomposable.verdict != "skipped")
            os << " (commutant dim " << l.indecomposable.commutant_dim << ", samples " << l.indecomposable.samples
               << (l.indecomposable.probabilistic ? ", probabilistic" : "") << ")";
        os << '\n';
        for (auto& [d, dim] : l.lower_intersections) os << "  K(n) meets V^(n-" << d << ") in dim " << dim << '\n';
        if (l.coincides_with) os << "  coincides with " << *l.coincides_with << '\n';
        os << "  M(n) hash " << l.matrix_hash << '\n';
        for (auto& m : l.mismatches) os << "  mismatch: " << m << '\n';
    }
    os << (rep.all_pass() ? "ALL PASS" : "MISMATCH") << '\n';
    return os.str();
}

}  // namespace lkwb

#endif
