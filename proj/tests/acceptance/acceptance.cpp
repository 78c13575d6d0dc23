// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"

using namespace lkwb;

namespace {

struct Ctx {
    bool ok = true;
    std::ostringstream note;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) note << "first failure: " << what;
            ok = false;
        }
    }
};

std::mt19937_64 rng_for(int ac) { return std::mt19937_64(0x51ed + static_cast<unsigned>(ac)); }

AlgebraicNumber zeta(long k) { return AlgebraicNumber::generator(cyclotomic_modulus(k)); }

BigRational random_r(std::mt19937_64& rng, int n) {
    for (;;) {
        auto r = test::rand_nonzero_q(rng, 20);
        if (semisimplicity_guard(r, n)) return r;
    }
}

void ac1(Ctx& c) {
    for (int n = 3; n <= 5; ++n) {
        auto rep = build_rep_symbolic(n);
        auto rr = verify_relations(rep);
        for (auto& [f, name] : relation_families()) c.expect(rr.family_passed(f), "symbolic n=" + std::to_string(n) + " family " + f);
    }
    auto rng = rng_for(1);
    for (int n = 6; n <= 8; ++n)
        for (int i = 0; i < 3; ++i) {
            auto r = random_r(rng, n);
            auto l = test::rand_nonzero_q(rng, 20);
            auto rr = verify_relations(build_rep(LKParams<BigRational>{n, l, r}));
            c.expect(rr.all_passed(), "n=" + std::to_string(n) + " at l=" + l.to_string() + " r=" + r.to_string());
        }
    c.note << "symbolic n=3..5, 3 points each for n=6..8";
}

void ac2(Ctx& c) {
    auto rng = rng_for(2);
    for (int n = 3; n <= 7; ++n)
        for (int i = 0; i < 5; ++i) {
            auto r = random_r(rng, n);
            auto l = detail::draw_off_locus_l(n, r, rng, 1000);
            auto d = det(build_m_matrix(gated_rep(n, l, r)).matrix);
            c.expect(!d.is_zero(), "det M(" + std::to_string(n) + ") = 0 at l=" + l.to_string() + " r=" + r.to_string());
        }
    if (c.ok) c.note << "25 exact nonzero determinants";
}

void ac3(Ctx& c) {
    auto rng = rng_for(3);
    std::vector<LocusMonomial> n3;
    for (auto& loc : catalog(3)) n3.push_back(*loc.monomial(3));
    const std::vector<LocusMonomial> want{{-1, 3}, {1, -3}, {1, 0}, {-1, 0}};
    c.expect(n3 == want, "n=3 catalog is not {-r^3, r^-3, 1, -1}");
    int count = 0;
    for (int n : {3, 4, 5, 6})
        for (auto& loc : catalog(n)) {
            auto v = det_on_locus(n, loc, DetMode::Substituted, rng);
            c.expect(v.identically_zero && !v.probabilistic, "det M(" + std::to_string(n) + ") at " + loc.describe(n) + " = " + v.determinant);
            ++count;
        }
    if (c.ok) c.note << count << " loci vanish identically in Q(r)";
}

template <class F>
std::vector<std::size_t> closure_dims(const LKRep<F>& rep, const SubspaceBasis<F>& k) {
    std::vector<std::size_t> dims;
    for (auto& v : k.vectors()) {
        auto w = minimal_invariant(rep, v);
        if (std::find(dims.begin(), dims.end(), w.dim()) == dims.end()) dims.push_back(w.dim());
    }
    std::sort(dims.begin(), dims.end());
    return dims;
}

void ac4(Ctx& c) {
    int checked = 0;
    for (auto r : {BigRational(2), BigRational(3, 2)})
        for (int n = 3; n <= 7; ++n)
            for (auto& loc : catalog(n)) {
                const std::string where = "n=" + std::to_string(n) + " r=" + r.to_string() + " " + loc.describe(n);
                auto kr = kernel_k(n, loc, r);
                auto rep = gated_rep(n, loc.l_value(n, r), r);
                auto exp = expected_at(n, loc.kind);
                c.expect(kr.invariant, where + ": kernel not invariant");
                c.expect(kr.k > 0, where + ": trivial kernel");
                if (exp.k) c.expect(kr.k == *exp.k, where + ": k=" + std::to_string(kr.k));
                if (exp.min_dim) {
                    auto dims = closure_dims(rep, kr.kernel);
                    c.expect(dims == std::vector<std::size_t>{*exp.min_dim}, where + ": minimal invariant dims differ");
                    for (auto& v : kr.kernel.vectors()) c.expect(is_invariant(minimal_invariant(rep, v), rep.g), where + ": closure not invariant");
                }
                ++checked;
            }
    // n = 4: dims 3 at 1/r, -1/r, -r^3
    for (auto kind : {LocusKind::LEqPlusR3mn, LocusKind::LEqMinusR3mn, LocusKind::LEqMinusR3}) {
        auto loc = Locus::of(kind);
        auto rep = gated_rep(4, loc.l_value(4, BigRational(2)), BigRational(2));
        c.expect(closure_dims(rep, kernel_of(rep, loc.name()).kernel) == std::vector<std::size_t>{3}, "n=4 " + loc.describe(4) + " not 3");
    }
    if (c.ok) c.note << checked << " locus cases at r=2 and r=3/2";
}

void ac5(Ctx& c) {
    auto r12 = zeta(12);
    c.expect(field_pow(r12, 6) == AlgebraicNumber(r12.modulus(), QPoly(BigRational(-1))), "r^6 != -1");
    auto l12 = Locus::of(LocusKind::LEqMinusR3).l_value(3, r12);
    c.expect(l12 == field_pow(r12, -3), "-r^3 != r^-3");
    auto rep12 = gated_rep(3, l12, r12);
    std::size_t lines = 0;
    for (auto& e : one_dim_subspaces(rep12))
        if (e.is_line() && is_invariant(e.space, rep12.g)) ++lines;
    c.expect(lines == 2, "n=3 Phi12: " + std::to_string(lines) + " invariant lines");

    auto r20 = zeta(20);
    auto k5 = kernel_k(5, Locus::of(LocusKind::LEqMinusR3), r20);
    auto k4 = kernel_k(4, Locus::of(LocusKind::LEqMinusR3), r20);
    c.expect(k5.k == 7, "k(5) = " + std::to_string(k5.k));
    c.expect(lower_intersection(k5, 1) == embed_subspace(k4.kernel, 4, 5), "K(5) meets V^(4) beyond K(4)");
    if (c.ok) c.note << "2 lines at n=3; k(5)=7 and K(5)∩V4=K(4) (dim " << k4.k << ")";
}

void ac6(Ctx& c) {
    for (int n : {5, 6})
        for (auto [kind, s] : {std::pair{LocusKind::LEqR, n}, {LocusKind::LEqMinusR3, n - 1}}) {
            auto loc = Locus::of(kind);
            auto m = build_m_matrix(gated_rep_substituted(n, *loc.monomial(n))).matrix;
            const auto sz = static_cast<std::size_t>(s);
            auto cert = find_invertible_submatrix(m, sz);
            const std::string where = "n=" + std::to_string(n) + " " + loc.describe(n);
            c.expect(cert.has_value(), where + ": no invertible minor of size " + std::to_string(s));
            if (cert) {
                c.expect(!det(m.submatrix(cert->rows, cert->cols)).is_zero(), where + ": minor determinant zero");
                c.expect(cert->rows.size() == sz && cert->cols.size() == sz, where + ": wrong minor size");
            }
            c.expect(!find_invertible_submatrix(m, sz + 1), where + ": rank exceeds " + std::to_string(s));
        }
    if (c.ok) c.note << "minors of size n at l=r and n-1 at l=-r^3 over Q(r)";
}

void ac7(Ctx& c) {
    const BigRational r(2);
    for (auto kind : {LocusKind::LEqR, LocusKind::LEqMinusR3}) {
        auto loc = Locus::of(kind);
        auto p = persistent_vector_check(kind, 7, r);
        c.expect(p.all() && p.annihilated.size() == 2, loc.name() + ": not annihilated by M(6) and M(7)");
        c.expect(!is_zero_vector<BigRational>(p.vector), loc.name() + ": zero vector");
        auto m5 = build_m_matrix(gated_rep(5, loc.l_value(5, r), r)).matrix;
        c.expect(is_zero_vector<BigRational>(m5.apply(p.vector)), loc.name() + ": vector not in K(5)");
        c.expect(coordinate_subspace<BigRational>(4, 5).contains(SubspaceBasis<BigRational>::span(10, {p.vector})), loc.name() + ": vector not in V^(4)");
        for (int n : {6, 7}) {
            auto mn = build_m_matrix(gated_rep(n, loc.l_value(n, r), r)).matrix;
            c.expect(is_zero_vector<BigRational>(mn.apply(embed_vector(p.vector, 5, n))), loc.name() + ": M(" + std::to_string(n) + ") v != 0");
        }
    }
    if (c.ok) c.note << "l=r and l=-r^3 at r=2";
}

void ac8(Ctx& c) {
    auto rng = rng_for(8);
    const BigRational r(2);
    int flagged = 0, cases = 0;
    for (int n : {4, 5})
        for (auto& loc : catalog(n)) {
            auto p = indecomposability_probe(gated_rep(n, loc.l_value(n, r), r).g, 10, rng);
            const std::string where = "n=" + std::to_string(n) + " " + loc.describe(n);
            c.expect(p.verdict == ProbeVerdict::IndecomposableEvidence, where + ": " + to_string(p.verdict));
            c.expect(p.probabilistic == (p.commutant_dim > 1), where + ": probabilistic flag");
            if (p.commutant_dim > 1) c.expect(p.samples == 10, where + ": " + std::to_string(p.samples) + " samples");
            flagged += p.probabilistic;
            ++cases;
        }
    for (int n : {4, 5}) {
        auto l = detail::draw_off_locus_l(n, r, rng, 1000);
        auto basis = commutant_basis(gated_rep(n, l, r).g);
        c.expect(basis.size() == 1, "generic commutant dim " + std::to_string(basis.size()));
    }
    auto small = gated_rep(3, BigRational(5), r);
    std::vector<Matrix<BigRational>> blocks;
    for (auto& g : small.g) {
        Matrix<BigRational> b(6, 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) b(i, j) = b(i + 3, j + 3) = g(i, j);
        blocks.push_back(b);
    }
    auto ctl = indecomposability_probe(blocks, 10, rng);
    c.expect(ctl.verdict == ProbeVerdict::DecomposableWitness, "block-diagonal control: " + to_string(ctl.verdict));
    if (c.ok) c.note << cases << " loci, " << flagged << " verdicts flagged probabilistic; control split";
}

void ac9(Ctx& c) {
    auto r = UniRatFunc::var();
    const UniRatFunc one(1);
    auto q = one / (r * r);
    auto sqrt_q = one / r;
    c.expect(sqrt_q * sqrt_q == q, "sqrt(q) != 1/r");
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::pair<LocusKind, UniRatFunc>> want{
            {LocusKind::LEqR, one / q},
            {LocusKind::LEqMinusR3, UniRatFunc(-1)},
            {LocusKind::LEqR3m2n, one / field_pow(q, n)},
            {LocusKind::LEqPlusR3mn, one / field_pow(sqrt_q, n)},
            {LocusKind::LEqMinusR3mn, -(one / field_pow(sqrt_q, n))},
        };
        for (auto& [kind, t] : want) {
            auto loc = Locus::of(kind);
            auto qt = lr_to_qt(loc.l_value(n, r), r);
            c.expect(qt.q == q, "q != r^-2");
            c.expect(qt.t == t, "n=" + std::to_string(n) + " " + loc.describe(n) + ": t = " + qt.t.to_string());
        }
    }
    if (c.ok) c.note << "t in {1/q, -1, 1/q^n, 1/sqrt(q)^n, -1/sqrt(q)^n} for n=3..8";
}

void ac10(Ctx& c) {
    const BigRational r(2);
    auto rng = rng_for(10);
    int cases = 0;
    for (int n : {3, 4}) {
        auto locs = catalog(n);
        locs.push_back(Locus::generic(detail::draw_off_locus_l(n, r, rng, 1000)));
        for (auto& loc : locs) {
            auto kr = kernel_k(n, loc, r);
            auto m = build_m_matrix(gated_rep(n, loc.l_value(n, r), r)).matrix;
            auto oracle = test::naive_eliminate(m);
            c.expect(lk_dimension(n) - oracle.rank == kr.k,
                     "n=" + std::to_string(n) + " " + loc.describe(n) + ": oracle " + std::to_string(lk_dimension(n) - oracle.rank) +
                         " vs " + std::to_string(kr.k));
            ++cases;
        }
    }
    if (c.ok) c.note << cases << " kernel dimensions agree";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Ctx&)>>> acs{
        {"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3}, {"AC-4", ac4}, {"AC-5", ac5},
        {"AC-6", ac6}, {"AC-7", ac7}, {"AC-8", ac8}, {"AC-9", ac9}, {"AC-10", ac10},
    };
    int failed = 0;
    for (auto& [name, fn] : acs) {
        Ctx c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.note << " exception: " << e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << name << (c.ok ? " PASS " : " FAIL ") << "(" << ms << " ms) " << c.note.str() << std::endl;
        failed += !c.ok;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failed ? 1 : 0;
}
