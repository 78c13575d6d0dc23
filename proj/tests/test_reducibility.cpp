#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace lkwb;

namespace {

AlgebraicNumber zeta(long k) { return AlgebraicNumber::generator(cyclotomic_modulus(k)); }

template <class F>
LKRep<F> rep_at(int n, LocusKind kind, const F& r) {
    return gated_rep(n, Locus::of(kind).l_value(n, r), r);
}

template <class F>
std::vector<std::size_t> minimal_dims_of_kernel(const LKRep<F>& rep, const SubspaceBasis<F>& k) {
    std::vector<std::size_t> dims;
    for (auto& v : k.vectors()) dims.push_back(minimal_invariant(rep, v).dim());
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
}

}  // namespace

TEST_CASE("M(3) is e1 + e2 + g2^-1 e1 g2") {
    auto rep = gated_rep(3, BigRational(5), BigRational(2));
    auto m = build_m_matrix(rep).matrix;
    CHECK(m == rep.e[0] + rep.e[1] + rep.g_inv[1] * rep.e[0] * rep.g[1]);
    CHECK(m_summand_count(3) == 3);
    CHECK(m_summand_count(5) == 10);

    auto ungated = build_rep(LKParams<BigRational>{3, BigRational(5), BigRational(2)});
    ungated.gate_passed = false;
    CHECK_THROWS_MATCHES(build_m_matrix(ungated), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::RelationGateNotPassed; }));
}

TEST_CASE("M(5) is a sum of ten conjugated e terms") {
    auto rep = gated_rep(5, BigRational(7, 3), BigRational(3, 2));
    Matrix<BigRational> sum(rep.dim(), rep.dim());
    int terms = 0;
    for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            Matrix<BigRational> w = Matrix<BigRational>::identity(rep.dim()), w_inv = w;
            for (int s = i + 1; s < j; ++s) {
                w = w * rep.g[s - 1];
                w_inv = rep.g_inv[s - 1] * w_inv;
            }
            sum += w_inv * rep.e[i - 1] * w;
            ++terms;
        }
    CHECK(terms == 10);
    CHECK(build_m_matrix(rep).matrix == sum);
}

TEST_CASE("determinant verdicts on loci") {
    std::mt19937_64 rng(7);
    auto v = det_on_locus(4, Locus::of(LocusKind::LEqR), DetMode::Substituted, rng);
    CHECK(v.identically_zero);
    CHECK_FALSE(v.probabilistic);

    auto g = det_on_locus(5, Locus::generic(BigRational(2)), DetMode::Sampled, rng);
    CHECK_FALSE(g.identically_zero);
    REQUIRE(g.witness_value);
    CHECK_FALSE(g.witness_value->is_zero());
    auto wit = gated_rep(5, *g.witness_l, *g.witness_r);
    CHECK(det(build_m_matrix(wit).matrix) == *g.witness_value);

    auto one = det_on_locus(3, Locus::of(LocusKind::LEqPlusR3mn), DetMode::Substituted, rng);
    CHECK(one.identically_zero);
    auto sym = det_on_locus(3, Locus::of(LocusKind::LEqMinusR3), DetMode::Symbolic, rng);
    CHECK(sym.identically_zero);
    auto off = det_on_locus(4, Locus::custom(LocusMonomial{1, 2}), DetMode::Substituted, rng);
    CHECK_FALSE(off.identically_zero);
    REQUIRE(off.witness_r);
    CHECK(*off.witness_l == *off.witness_r * *off.witness_r);

    auto infeasible = [](const Error& e) { return e.kind() == ErrorKind::InfeasibleMode; };
    CHECK_THROWS_MATCHES(det_on_locus(6, Locus::of(LocusKind::LEqR), DetMode::Symbolic, rng), Error,
                         Catch::Matchers::Predicate<Error>(infeasible));
    CHECK_THROWS_MATCHES(det_on_locus(4, Locus::generic(BigRational(3)), DetMode::Substituted, rng), Error,
                         Catch::Matchers::Predicate<Error>(infeasible));
    CHECK_THROWS_MATCHES(det_on_locus(10, Locus::of(LocusKind::LEqR), DetMode::Sampled, rng), Error,
                         Catch::Matchers::Predicate<Error>(infeasible));
    CHECK(parse_det_mode("substituted") == DetMode::Substituted);
    CHECK_THROWS_AS(parse_det_mode("numeric"), Error);
}

TEST_CASE("kernel dimensions") {
    auto a = kernel_k(5, Locus::of(LocusKind::LEqR), BigRational(2));
    CHECK(a.k == 5);
    CHECK(a.invariant);
    auto b = kernel_k(6, Locus::of(LocusKind::LEqMinusR3), BigRational(2));
    CHECK(b.k == 10);
    CHECK(b.invariant);
    auto c = kernel_k(5, Locus::of(LocusKind::LEqMinusR3), zeta(20));
    CHECK(c.k == 7);
    CHECK(c.invariant);
    auto g = kernel_k(4, Locus::generic(BigRational(5)), BigRational(2));
    CHECK(g.k == 0);
    CHECK_THROWS_AS(kernel_k(6, Locus::of(LocusKind::LEqR), zeta(12)), Error);
}

TEST_CASE("invariant lines") {
    auto lines = one_dim_subspaces(rep_at(4, LocusKind::LEqR3m2n, BigRational(2)));
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].is_line());
    CHECK(lines[0].lambda == BigRational(2));

    auto three = one_dim_subspaces(rep_at(3, LocusKind::LEqMinusR3, BigRational(2)));
    REQUIRE(three.size() == 1);
    CHECK(three[0].is_line());

    auto rep12 = rep_at(3, LocusKind::LEqMinusR3, zeta(12));
    auto k12 = kernel_of(rep12, "l=-r3");
    auto exc = one_dim_subspaces(rep12);
    std::size_t inside = 0;
    for (auto& e : exc) {
        CHECK(e.is_line());
        CHECK(is_invariant(e.space, rep12.g));
        if (k12.kernel.contains(e.space)) ++inside;
    }
    CHECK(exc.size() == 2);
    CHECK(inside == 2);
    CHECK(k12.k == 2);

    CHECK(one_dim_subspaces(gated_rep(4, BigRational(5), BigRational(2))).empty());
}

TEST_CASE("minimal invariant subspaces from kernel vectors") {
    auto r4 = rep_at(4, LocusKind::LEqR, BigRational(2));
    CHECK(minimal_dims_of_kernel(r4, kernel_of(r4, "l=r").kernel) == std::vector<std::size_t>{2});
    auto r5 = rep_at(5, LocusKind::LEqPlusR3mn, BigRational(3, 2));
    CHECK(minimal_dims_of_kernel(r5, kernel_of(r5, "l=+r3-n").kernel) == std::vector<std::size_t>{4});
    auto m4 = rep_at(4, LocusKind::LEqMinusR3, BigRational(2));
    auto km4 = kernel_of(m4, "l=-r3");
    CHECK(minimal_dims_of_kernel(m4, km4.kernel) == std::vector<std::size_t>{3});
    auto w = minimal_invariant(m4, km4.kernel.vector(0));
    CHECK(closure_irreducible(m4, w));
    CHECK(is_invariant(w, m4.g));

    auto zero_space = SubspaceBasis<BigRational>::span(6, {std::vector<BigRational>(6, BigRational(0))});
    CHECK_FALSE(closure_irreducible(m4, zero_space));
    CHECK_THROWS_MATCHES(minimal_invariant(m4, std::vector<BigRational>(6, BigRational(0))), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::ZeroSeed; }));
}

TEST_CASE("lower intersections") {
    const BigRational r(2);
    auto k5 = kernel_k(5, Locus::of(LocusKind::LEqR), r);
    auto k4 = kernel_k(4, Locus::of(LocusKind::LEqR), r);
    auto low = lower_intersection(k5, 1);
    CHECK(low.dim() >= 1);
    CHECK(k5.kernel.contains(low));
    CHECK(coordinate_subspace<BigRational>(4, 5).contains(low));
    CHECK(low.contains(embed_subspace(k4.kernel, 4, 5)));

    auto c = kernel_k(5, Locus::of(LocusKind::LEqMinusR3), zeta(20));
    auto c4 = kernel_k(4, Locus::of(LocusKind::LEqMinusR3), zeta(20));
    CHECK(lower_intersection(c, 1) == embed_subspace(c4.kernel, 4, 5));

    auto depth = [](const Error& e) { return e.kind() == ErrorKind::DepthTooLarge; };
    CHECK_THROWS_MATCHES(lower_intersection(k5, 3), Error, Catch::Matchers::Predicate<Error>(depth));
    CHECK_THROWS_MATCHES(lower_intersection(k4, 2), Error, Catch::Matchers::Predicate<Error>(depth));
    CHECK_THROWS_MATCHES(lower_intersection(k4, 0), Error, Catch::Matchers::Predicate<Error>(depth));
}

TEST_CASE("persistent kernel vector") {
    for (auto r : {BigRational(2), BigRational(3)})
        for (auto kind : {LocusKind::LEqR, LocusKind::LEqMinusR3}) {
            auto p = persistent_vector_check(kind, 7, r);
            CHECK(p.all());
            CHECK(p.annihilated.size() == 2);
            CHECK_FALSE(is_zero_vector<BigRational>(p.vector));
        }
    CHECK_THROWS_AS(persistent_vector_check(LocusKind::LEqR3m2n, 7, BigRational(2)), Error);
    CHECK_THROWS_AS(persistent_vector_check(LocusKind::LEqR, 5, BigRational(2)), Error);
}

TEST_CASE("indecomposability probe") {
    std::mt19937_64 rng(11);
    auto generic = indecomposability_probe(gated_rep(4, BigRational(5), BigRational(2)).g, 10, rng);
    CHECK(generic.verdict == ProbeVerdict::IndecomposableEvidence);
    CHECK(generic.commutant_dim == 1);

    auto at = indecomposability_probe(rep_at(4, LocusKind::LEqR, BigRational(2)).g, 10, rng);
    CHECK(at.verdict == ProbeVerdict::IndecomposableEvidence);

    // two copies of V^(3) side by side
    auto small = gated_rep(3, BigRational(5), BigRational(2));
    std::vector<Matrix<BigRational>> blocks;
    for (auto& g : small.g) {
        Matrix<BigRational> b(6, 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) b(i, j) = b(i + 3, j + 3) = g(i, j);
        blocks.push_back(b);
    }
    auto split = indecomposability_probe(blocks, 10, rng);
    CHECK(split.commutant_dim == 4);
    CHECK(split.verdict == ProbeVerdict::DecomposableWitness);
    REQUIRE(split.idempotent);
    auto& e = *split.idempotent;
    CHECK(e * e == e);
    for (auto& b : blocks) CHECK(e * b == b * e);
    CHECK_THROWS_AS(indecomposability_probe(blocks, 0, rng), Error);
}

TEST_CASE("certification of n = 3 and 4") {
    for (int n : {3, 4}) {
        auto rep = certify(n, BigRational(2), "2/1", 1);
        CHECK(rep.all_pass());
        CHECK(rep.loci.size() == catalog(n).size() + 1);
        for (auto& rec : rep.loci) {
            INFO(n << " " << rec.locus);
            CHECK(rec.mismatches.empty());
            if (rec.locus == "l=r") CHECK(rec.minimal_dims == std::vector<std::size_t>{2});
            if (rec.locus == "l=-r3") CHECK(rec.minimal_dims == std::vector<std::size_t>{n == 3 ? 1u : 3u});
            if (rec.locus == "generic") CHECK(rec.k == 0);
        }
    }
    auto again = certify(4, BigRational(2), "2/1", 1);
    CHECK(to_json(again).dump() == to_json(certify(4, BigRational(2), "2/1", 1)).dump());
}

TEST_CASE("generic point at n = 6") {
    std::mt19937_64 rng(12);
    const BigRational r(3, 2);
    auto l = detail::draw_off_locus_l(6, r, rng, 1000);
    auto rep = gated_rep(6, l, r);
    auto m = build_m_matrix(rep).matrix;
    CHECK_FALSE(det(m).is_zero());
    CHECK(test::naive_eliminate(m).rank == 15);
}

TEST_CASE("exceptional merges") {
    CHECK(detail::exceptional_merge(3, zeta(12)));
    CHECK(detail::exceptional_merge(5, zeta(20)));
    CHECK_FALSE(detail::exceptional_merge(5, BigRational(2)));
    auto rep = certify(3, zeta(12), "cyclotomic:12", 1);
    CHECK(rep.all_pass());
}
