#ifndef LKWB_CLI_HPP
#define LKWB_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "certify.hpp"

namespace lkwb::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidConfig = 2, kRuntimeFailure = 3 };

struct CommandConfig {
    std::string command;
    int n = 4;
    std::string r = "2/1";
    std::optional<std::string> l;
    std::string locus = "generic";
    std::optional<std::string> mode;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::optional<std::string> out;
    std::string format = "text";
    bool symbolic = false;
    bool convention = false;
    int n_max = 7;
    int trials = 10;
    std::string what = "g";
    std::optional<std::string> vector;
};

/// Machine-readable result plus its text rendering.
struct Outcome {
    nlohmann::ordered_json json;
    std::string text;
    bool ok = true;
};

using RValue = std::variant<BigRational, AlgebraicNumber>;

/// `p/q`, an integer, or `cyclotomic:K` (a root of the K-th cyclotomic
/// polynomial). Decimal input is rejected.
inline RValue parse_r(const std::string& spec) {
    if (spec.rfind("cyclotomic:", 0) == 0) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(spec.substr(11), &used);
            if (used != spec.size() - 11) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidConfig, "bad cyclotomic index in '" + spec + "'");
        }
        if (k < 1) throw Error(ErrorKind::InvalidConfig, "cyclotomic index must be positive");
        return AlgebraicNumber::generator(cyclotomic_modulus(k));
    }
    try {
        return BigRational::parse(spec);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidConfig, "r must be p/q or cyclotomic:K, got '" + spec + "'");
    }
}

/// `p/q`, or a monomial `r^k` / `-r^k` / `r` / `-r`.
inline Locus parse_custom_l(const std::string& text, LocusKind kind) {
    std::string s = detail::strip_spaces(text);
    int sign = 1;
    std::string body = s;
    if (!body.empty() && body[0] == '-') sign = -1, body.erase(0, 1);
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    if (body == "r" || body.rfind("r^", 0) == 0) {
        long k = body == "r" ? 1 : detail::parse_long(body.substr(2));
        if (kind != LocusKind::Custom) throw Error(ErrorKind::InvalidConfig, "a monomial l needs --locus custom");
        return Locus::custom(LocusMonomial{sign, k});
    }
    BigRational v;
    try {
        v = BigRational::parse(s);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidConfig, "l must be p/q or sign*r^k, got '" + text + "'");
    }
    if (v.is_zero()) throw Error(ErrorKind::InvalidConfig, "l must be nonzero");
    return kind == LocusKind::Generic ? Locus::generic(v) : Locus::custom(v);
}

inline Locus resolve_locus(const CommandConfig& c) {
    auto kind = parse_locus_kind(c.locus);
    if (c.l) {
        if (kind != LocusKind::Generic && kind != LocusKind::Custom)
            throw Error(ErrorKind::InvalidConfig, "--l only applies to generic or custom loci");
        return parse_custom_l(*c.l, kind);
    }
    if (kind == LocusKind::Custom) throw Error(ErrorKind::InvalidConfig, "--locus custom needs --l");
    return Locus::of(kind);
}

template <class Fn>
auto with_r(const std::string& spec, Fn&& fn) {
    return std::visit([&](const auto& r) { return fn(r); }, parse_r(spec));
}

namespace detail {

using J = nlohmann::ordered_json;

template <class F>
F locus_l(const CommandConfig& c, const Locus& locus, const F& r, std::mt19937_64& rng) {
    if (locus.kind == LocusKind::Generic && !locus.value) return F(lkwb::detail::draw_off_locus_l(c.n, r, rng));
    return locus.l_value(c.n, r);
}

template <class F>
J convention_json(const LKParams<F>& p) {
    auto cv = convention(p);
    return J{{"q", cv.q.to_string()},
             {"tau", cv.tau.to_string()},
             {"rescale", "g_k = r sigma_k, r = " + cv.rescale.to_string()},
             {"m", cv.m.to_string()},
             {"delta", cv.delta.to_string()}};
}

template <class F>
void add_relation_families(J& j, std::ostringstream& os, const RelationReport& rr) {
    J fams = J::array();
    for (auto& [f, desc] : relation_families()) {
        bool ok = rr.family_passed(f);
        fams.push_back(J{{"family", std::string(1, f)}, {"relation", desc}, {"instances", rr.family_count(f)}, {"passed", ok}});
        os << "  (" << f << ") " << (ok ? "pass" : "FAIL") << "  " << desc << "  [" << rr.family_count(f) << " instances]\n";
    }
    j["families"] = fams;
}

inline Outcome cmd_relations(const CommandConfig& c) {
    Outcome o;
    std::ostringstream os;
    J j;
    j["command"] = "relations";
    j["n"] = c.n;
    j["seed"] = c.seed;
    if (c.symbolic) {
        auto rep = build_rep_symbolic(c.n);
        auto rr = verify_relations(rep);
        j["mode"] = "symbolic";
        os << "relations n=" << c.n << " over Q(l, r)\n";
        add_relation_families<RatFunc>(j, os, rr);
        if (c.convention) {
            j["convention"] = convention_json(rep.params);
            auto cv = convention(rep.params);
            os << "  convention: q = " << cv.q.to_string() << ", tau = " << cv.tau.to_string() << ", g_k = r sigma_k, delta = "
               << cv.delta.to_string() << '\n';
        }
        o.ok = rr.all_passed();
    } else {
        j["mode"] = "sampled";
        std::vector<std::pair<BigRational, BigRational>> points;
        std::mt19937_64 rng(c.seed);
        if (c.l) {
            auto r = parse_r(c.r);
            if (!std::holds_alternative<BigRational>(r)) throw Error(ErrorKind::InvalidConfig, "sampled relations need rational r");
            points.emplace_back(BigRational::parse(*c.l), std::get<BigRational>(r));
        } else {
            for (int i = 0; i < 3; ++i) {
                auto r = lkwb::detail::random_r(rng, 1000);
                points.emplace_back(lkwb::detail::random_rational(rng, 1000), r);
            }
        }
        J pts = J::array();
        os << "relations n=" << c.n << " at " << points.size() << " rational point(s)\n";
        o.ok = true;
        for (auto& [l, r] : points) {
            auto rep = build_rep(LKParams<BigRational>{c.n, l, r});
            auto rr = verify_relations(rep);
            J pj{{"l", l.to_string()}, {"r", r.to_string()}};
            os << " l = " << l << ", r = " << r << '\n';
            add_relation_families<BigRational>(pj, os, rr);
            if (c.convention) pj["convention"] = convention_json(rep.params);
            pj["all_pass"] = rr.all_passed();
            o.ok = o.ok && rr.all_passed();
            pts.push_back(std::move(pj));
        }
        j["points"] = pts;
    }
    j["all_pass"] = o.ok;
    os << (o.ok ? "ALL PASS" : "MISMATCH") << '\n';
    o.json = std::move(j);
    o.text = os.str();
    return o;
}

inline Outcome cmd_det(const CommandConfig& c) {
    auto locus = resolve_locus(c);
    DetMode mode = c.mode ? parse_det_mode(*c.mode)
                          : (locus.monomial(c.n) && c.n <= kSubstitutedMaxN ? DetMode::Substituted : DetMode::Sampled);
    std::mt19937_64 rng(c.seed);
    auto v = det_on_locus(c.n, locus, mode, rng);
    Outcome o;
    J j{{"command", "det"}, {"n", c.n}, {"locus", locus.name()}, {"l", locus.describe(c.n)}, {"seed", c.seed}};
    j["verdict"] = v.identically_zero ? "IdenticallyZero" : "NonzeroWitness";
    j["method"] = to_string(v.mode);
    j["probabilistic"] = v.probabilistic;
    if (v.witness_r) j["witness"] = J{{"l", v.witness_l->to_string()}, {"r", v.witness_r->to_string()}, {"det", v.witness_value->to_string()}};
    if (v.mode != DetMode::Sampled) j["determinant"] = v.determinant;
    std::optional<bool> expect_zero;
    if (locus.is_catalog()) expect_zero = true;
    if (locus.kind == LocusKind::Generic) expect_zero = false;
    o.ok = !expect_zero || *expect_zero == v.identically_zero;
    j["expected"] = expect_zero ? J(*expect_zero ? "IdenticallyZero" : "NonzeroWitness") : J(nullptr);
    j["match"] = o.ok;
    std::ostringstream os;
    os << "det M(" << c.n << ") on " << locus.name() << " (" << locus.describe(c.n) << "): "
       << (v.identically_zero ? "IdenticallyZero" : "NonzeroWitness") << " [" << to_string(v.mode)
       << (v.probabilistic ? ", probabilistic" : "") << "]\n";
    if (v.witness_r) os << "  witness l = " << *v.witness_l << ", r = " << *v.witness_r << ", det = " << *v.witness_value << '\n';
    os << (o.ok ? "MATCH" : "MISMATCH") << '\n';
    o.json = std::move(j);
    o.text = os.str();
    return o;
}

template <class F>
Outcome kernel_like(const CommandConfig& c, const F& r, bool closure) {
    auto locus = resolve_locus(c);
    std::mt19937_64 rng(c.seed);
    F l = locus_l(c, locus, r, rng);
    auto rep = gated_rep(c.n, l, r);
    auto kr = kernel_of(rep, locus.name());
    Outcome o;
    std::ostringstream os;
    J j{{"command", closure ? "closure" : "kernel"}, {"n", c.n}, {"locus", locus.name()}, {"l", l.to_string()}, {"r", r.to_string()}, {"seed", c.seed}};
    j["k"] = kr.k;
    j["invariant"] = kr.invariant;
    os << (closure ? "closure" : "kernel") << " n=" << c.n << " " << locus.name() << " l = " << l.to_string() << " r = " << r.to_string() << '\n';
    os << "  k(n) = " << kr.k << ", invariant = " << kr.invariant << '\n';
    std::vector<std::vector<F>> seeds;
    if (closure && c.vector) {
        std::string s = lkwb::detail::strip_spaces(*c.vector);
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw Error(ErrorKind::InvalidConfig, "--vector must be [c0,c1,...]");
        std::vector<F> v;
        std::stringstream ss(s.substr(1, s.size() - 2));
        for (std::string part; std::getline(ss, part, ',');) v.push_back(F(BigRational::parse(part)));
        if (v.size() != rep.dim()) throw Error(ErrorKind::InvalidConfig, "--vector has the wrong length");
        seeds.push_back(std::move(v));
    } else {
        seeds = kr.kernel.vectors();
    }
    J basis = J::array();
    for (auto& v : kr.kernel.vectors()) basis.push_back(lkwb::detail::vector_text(v));
    j["kernel_basis"] = basis;
    J dims = J::array();
    for (auto& s : seeds) {
        auto w = minimal_invariant(rep, s);
        dims.push_back(w.dim());
        if (closure) os << "  closure of " << lkwb::detail::vector_text(s) << " has dim " << w.dim() << '\n';
    }
    j["minimal_dims"] = dims;
    auto exp = expected_at(c.n, locus.kind);
    bool ok = kr.invariant;
    const bool merged = locus.is_catalog() && lkwb::detail::exceptional_merge(c.n, r);
    if (exp.k && !merged) ok = ok && kr.k == *exp.k;
    if (!closure) {
        os << "  minimal invariant dims from kernel vectors:";
        for (auto& d : dims) os << ' ' << d.get<std::size_t>();
        os << '\n';
    }
    j["expected_k"] = exp.k ? J(*exp.k) : J(nullptr);
    j["match"] = ok;
    o.ok = ok;
    os << (ok ? "MATCH" : "MISMATCH") << '\n';
    o.json = std::move(j);
    o.text = os.str();
    return o;
}

inline Outcome cmd_certify(const CommandConfig& c) {
    CertifyOptions opt;
    opt.jobs = c.jobs;
    opt.probe_trials = c.trials;
    if (c.mode) opt.mode = parse_det_mode(*c.mode);
    return with_r(c.r, [&](const auto& r) {
        auto rep = certify(c.n, r, c.r, c.seed, opt);
        Outcome o;
        o.json = to_json(rep);
        o.json["command"] = "certify";
        o.text = to_text(rep);
        o.ok = rep.all_pass();
        return o;
    });
}

/// Catalog loci must be reducible, random off-catalog l irreducible.
template <class F>
Outcome scan_at(const CommandConfig& c, const F& r) {
    Outcome o;
    std::ostringstream os;
    J j{{"command", "scan"}, {"n", c.n}, {"r", r.to_string()}, {"seed", c.seed}};
    J rows = J::array();
    os << "scan n=" << c.n << " r=" << r.to_string() << " seed=" << c.seed << '\n';
    std::mt19937_64 rng(c.seed);
    struct Row {
        std::string name, l;
        bool catalog;
        bool reducible;
        std::size_t k;
        std::string method;
    };
    std::vector<Row> out;
    for (auto& loc : catalog(c.n)) {
        DetMode mode = c.n <= kSubstitutedMaxN ? DetMode::Substituted : DetMode::Sampled;
        auto v = det_on_locus(c.n, loc, mode, rng);
        auto kr = kernel_k(c.n, loc, r);
        out.push_back({loc.name(), loc.l_value(c.n, r).to_string(), true, v.identically_zero && kr.k > 0, kr.k, to_string(v.mode)});
    }
    for (int i = 0; i < 5; ++i) {
        BigRational l = lkwb::detail::draw_off_locus_l(c.n, r, rng, 10000);
        auto rep = gated_rep(c.n, F(l), r);
        F d = det(build_m_matrix(rep).matrix);
        out.push_back({"random-" + std::to_string(i + 1), l.to_string(), false, d.is_zero(), 0, "exact"});
        if (!d.is_zero()) continue;
        out.back().k = kernel_of(rep, "random").k;
    }
    for (auto& row : out) {
        bool ok = row.catalog == row.reducible;
        o.ok = o.ok && ok;
        rows.push_back(J{{"locus", row.name}, {"l", row.l}, {"reducible", row.reducible}, {"k", row.k}, {"method", row.method}, {"match", ok}});
        os << "  " << (ok ? "ok   " : "FAIL ") << row.name << "  l = " << row.l << "  " << (row.reducible ? "reducible" : "irreducible")
           << " (k = " << row.k << ", " << row.method << ")\n";
    }
    j["results"] = rows;
    j["all_pass"] = o.ok;
    os << (o.ok ? "ALL PASS" : "MISMATCH") << '\n';
    o.json = std::move(j);
    o.text = os.str();
    return o;
}

inline Outcome cmd_commutant(const CommandConfig& c) {
    auto r = parse_r(c.r);
    if (!std::holds_alternative<BigRational>(r)) throw Error(ErrorKind::InvalidConfig, "commutant probe needs rational r");
    const auto& rv = std::get<BigRational>(r);
    auto locus = resolve_locus(c);
    std::mt19937_64 rng(c.seed);
    BigRational l = locus_l(c, locus, rv, rng);
    auto rep = gated_rep(c.n, l, rv);
    auto p = indecomposability_probe(rep.g, c.trials, rng);
    Outcome o;
    J j{{"command", "commutant"}, {"n", c.n}, {"locus", locus.name()}, {"l", l.to_string()}, {"r", rv.to_string()}, {"seed", c.seed}};
    j["commutant_dim"] = p.commutant_dim;
    j["verdict"] = to_string(p.verdict);
    j["samples"] = p.samples;
    j["probabilistic"] = p.probabilistic;
    o.ok = p.verdict == ProbeVerdict::IndecomposableEvidence;
    if (locus.kind == LocusKind::Generic) o.ok = o.ok && p.commutant_dim == 1;
    j["match"] = o.ok;
    std::ostringstream os;
    os << "commutant n=" << c.n << " " << locus.name() << " l = " << l << " r = " << rv << ": dim " << p.commutant_dim << ", "
       << to_string(p.verdict) << (p.probabilistic ? " (probabilistic, " + std::to_string(p.samples) + " samples)" : "") << '\n';
    os << (o.ok ? "MATCH" : "MISMATCH") << '\n';
    o.json = std::move(j);
    o.text = os.str();
    return o;
}

template <class F>
Outcome persist_at(const CommandConfig& c, const F& r) {
    auto kind = parse_locus_kind(c.locus);
    auto pr = persistent_vector_check(kind, c.n_max, r);
    Outcome o;
    J j{{"command", "persist"}, {"locus", c.locus}, {"r", r.to_string()}, {"n_max", c.n_max}, {"seed", c.seed}};
    j["vector"] = lkwb::detail::vector_text(pr.vector);
    J res = J::array();
    std::ostringstream os;
    os << "persistent vector at " << c.locus << ", r = " << r.to_string() << ": " << lkwb::detail::vector_text(pr.vector) << '\n';
    for (auto& [n, ok] : pr.annihilated) {
        res.push_back(J{{"n", n}, {"annihilated", ok}});
        os << "  M(" << n << ") v = 0: " << (ok ? "yes" : "NO") << '\n';
    }
    j["results"] = res;
    o.ok = pr.all();
    j["all_pass"] = o.ok;
    os << (o.ok ? "ALL PASS" : "MISMATCH") << '\n';
    o.json = std::move(j);
    o.text = os.str();
    return o;
}

template <class F>
Outcome export_at(const CommandConfig& c, const F& r) {
    auto locus = resolve_locus(c);
    std::mt19937_64 rng(c.seed);
    F l = locus_l(c, locus, r, rng);
    auto rep = gated_rep(c.n, l, r);
    std::vector<Matrix<F>> mats;
    if (c.what == "g") mats = rep.g;
    else if (c.what == "g_inv") mats = rep.g_inv;
    else if (c.what == "e") mats = rep.e;
    else if (c.what == "m") mats = {build_m_matrix(rep).matrix};
    else throw Error(ErrorKind::InvalidConfig, "--what must be g, g_inv, e or m");
    ModulusPtr mod;
    if constexpr (std::is_same_v<F, AlgebraicNumber>) mod = r.modulus();
    Outcome o;
    J j{{"command", "export"}, {"n", c.n}, {"locus", locus.name()}, {"l", l.to_string()}, {"r", r.to_string()}, {"what", c.what}};
    J arr = J::array();
    std::string text;
    for (auto& m : mats) {
        arr.push_back(matrix_to_json(m, mod));
        text += write_matrix_text(m, mod);
    }
    j["matrices"] = arr;
    o.json = std::move(j);
    o.text = text;
    return o;
}

}  // namespace detail

inline Outcome dispatch(const CommandConfig& c) {
    if (c.n < 3) throw Error(ErrorKind::InvalidConfig, "n must be at least 3");
    if (c.format != "json" && c.format != "text") throw Error(ErrorKind::InvalidConfig, "--format must be json or text");
    if (c.jobs < 1) throw Error(ErrorKind::InvalidConfig, "--jobs must be at least 1");
    (void)parse_r(c.r);
    const auto& cmd = c.command;
    if (cmd == "relations") return detail::cmd_relations(c);
    if (cmd == "det") return detail::cmd_det(c);
    if (cmd == "kernel") return with_r(c.r, [&](const auto& r) { return detail::kernel_like(c, r, false); });
    if (cmd == "closure") return with_r(c.r, [&](const auto& r) { return detail::kernel_like(c, r, true); });
    if (cmd == "certify") return detail::cmd_certify(c);
    if (cmd == "scan") return with_r(c.r, [&](const auto& r) { return detail::scan_at(c, r); });
    if (cmd == "commutant") return detail::cmd_commutant(c);
    if (cmd == "persist") return with_r(c.r, [&](const auto& r) { return detail::persist_at(c, r); });
    if (cmd == "export") return with_r(c.r, [&](const auto& r) { return detail::export_at(c, r); });
    throw Error(ErrorKind::InvalidConfig, "unknown command '" + cmd + "'");
}

inline std::string render(const Outcome& o, const std::string& format) {
    return format == "json" ? o.json.dump(2) + "\n" : o.text;
}

/// Runs a configured command; writes to --out or `out`. Returns the exit code.
inline int run(const CommandConfig& c, std::ostream& out, std::ostream& err) {
    try {
        auto o = dispatch(c);
        std::string body = render(o, c.format);
        if (c.out) {
            std::ofstream f(*c.out, std::ios::binary);
            if (!f || !(f << body) || !f.flush()) throw Error(ErrorKind::IoFailure, "cannot write '" + *c.out + "'");
        } else {
            out << body;
        }
        return o.ok ? kOk : kMismatch;
    } catch (const Error& e) {
        err << "lkwb: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::InvalidConfig:
            case ErrorKind::ParseError:
            case ErrorKind::InfeasibleMode:
            case ErrorKind::SemisimplicityViolation:
            case ErrorKind::ParameterZero:
            case ErrorKind::DepthTooLarge: return kInvalidConfig;
            default: return kRuntimeFailure;
        }
    }
}

inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"lkwb: exact workbench for the Lawrence-Krammer representation of the BMW algebra"};
    app.require_subcommand(1);
    CommandConfig c;
    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"relations", "verify the defining relations of g_i, e_i"},
        {"det", "decide whether det M(n) vanishes on a locus"},
        {"kernel", "kernel K(n) of M(n) and its invariance"},
        {"certify", "certify dimensions and uniqueness at every catalog locus"},
        {"scan", "catalog loci plus five random l values"},
        {"closure", "minimal invariant subspaces generated by vectors"},
        {"commutant", "commutant dimension and indecomposability probe"},
        {"persist", "persistent vector of K(5) meet V^(4) in K(6), K(7), ..."},
        {"export", "export g_i, g_i^-1, e_i or M(n) matrices"},
    };
    std::string mode;
    std::string l;
    std::string outp;
    std::string vec;
    for (auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--n", c.n, "strand count (>= 3)");
        sub->add_option("--r", c.r, "r as p/q or cyclotomic:K");
        sub->add_option("--l", l, "l as p/q, or sign*r^k with --locus custom");
        sub->add_option("--locus", c.locus, "generic|l=r|l=-r3|l=r3-2n|l=+r3-n|l=-r3-n|custom");
        sub->add_option("--mode", mode, "symbolic|substituted|sampled");
        sub->add_option("--seed", c.seed, "RNG seed");
        sub->add_option("--jobs", c.jobs, "concurrent loci");
        sub->add_option("--out", outp, "output file");
        sub->add_option("--format", c.format, "json|text");
        sub->add_option("--trials", c.trials, "commutant samples");
        if (std::string(s.name) == "relations") {
            sub->add_flag("--symbolic", c.symbolic, "verify over Q(l, r)");
            sub->add_flag("--convention", c.convention, "echo q, tau, rescale factor and delta");
        }
        if (std::string(s.name) == "persist") sub->add_option("--n-max", c.n_max, "largest n to check");
        if (std::string(s.name) == "export") sub->add_option("--what", c.what, "g|g_inv|e|m");
        if (std::string(s.name) == "closure") sub->add_option("--vector", vec, "seed vector [c0,c1,...]");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidConfig;
    }
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    if (!l.empty()) c.l = l;
    if (!mode.empty()) c.mode = mode;
    if (!outp.empty()) c.out = outp;
    if (!vec.empty()) c.vector = vec;
    return run(c, out, err);
}

}  // namespace lkwb::cli

#endif
