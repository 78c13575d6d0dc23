#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace lkwb;

namespace {

LKParams<BigRational> random_params(std::mt19937_64& rng, int n) {
    for (;;) {
        BigRational l = test::rand_nonzero_q(rng, 30), r = test::rand_nonzero_q(rng, 30);
        if (r * r == BigRational(1)) continue;
        LKParams<BigRational> p{n, l, r};
        if (semisimplicity_guard(r, n)) return p;
    }
}

// sum_k c_k g^k with the powers formed by repeated multiplication
template <class F>
Matrix<F> cubic_oracle(const Matrix<F>& g, const F& l, const F& r) {
    const F a = r, b = -(F(1) / r), c = F(1) / l;
    // (x - a)(x - b)(x - c) = x^3 - e1 x^2 + e2 x - e3
    const F e1 = a + b + c, e2 = a * b + a * c + b * c, e3 = a * b * c;
    const auto id = Matrix<F>::identity(g.rows());
    auto g2 = g * g;
    auto g3 = g2 * g;
    return g3 - e1 * g2 + e2 * g - e3 * id;
}

}  // namespace

TEST_CASE("pair basis") {
    PairIndex idx(3);
    REQUIRE(idx.size() == 3);
    CHECK(idx.pair(0).s == 1);
    CHECK(idx.pair(0).t == 2);
    CHECK(idx.pair(1).t == 3);
    CHECK(idx.pair(2).s == 2);
    CHECK(lk_dimension(3) == 3);
    CHECK(lk_dimension(4) == 6);
    PairIndex big(7);
    for (std::size_t i = 0; i < big.size(); ++i) CHECK(big.index(big.pair(i).s, big.pair(i).t) == i);
    CHECK_THROWS_AS(big.index(3, 3), Error);
    CHECK(embedding_indices(3, 4) == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("sigma action on basis vectors") {
    auto q = RatFunc::var_r(), tau = RatFunc::var_l();
    auto s3 = build_sigma(3, q, tau);
    REQUIRE(s3.size() == 2);
    PairIndex i3(3);
    auto c12 = s3[0].column(i3.index(1, 2));
    CHECK(c12[i3.index(1, 2)] == tau * q * q);
    CHECK(c12[i3.index(1, 3)].is_zero());
    CHECK(c12[i3.index(2, 3)].is_zero());

    auto s4 = build_sigma(4, q, tau);
    PairIndex i4(4);
    auto c14 = s4[1].column(i4.index(1, 4));
    const RatFunc one(1);
    for (std::size_t row = 0; row < i4.size(); ++row) {
        if (row == i4.index(1, 4)) CHECK(c14[row] == one);
        else if (row == i4.index(2, 3)) CHECK(c14[row] == tau * q * (q - one) * (q - one));
        else CHECK(c14[row].is_zero());
    }
    CHECK_THROWS_AS(build_sigma(3, RatFunc(0), tau), Error);
}

TEST_CASE("relations hold symbolically for n = 3 and 4") {
    for (int n : {3, 4}) {
        auto rep = build_rep_symbolic(n);
        auto rr = verify_relations(rep);
        CHECK(rr.all_passed());
        for (auto& [f, name] : relation_families()) CHECK(rr.family_passed(f));
    }
    auto rep4 = build_rep_symbolic(4);
    CHECK((rep4.e[0] * rep4.e[2]).is_zero_matrix());
    CHECK(build_rep_symbolic(3).dim() == 3);
    CHECK(build_rep_symbolic(4).dim() == 6);
}

TEST_CASE("relation gate rejects a corrupted generator") {
    std::mt19937_64 rng(41);
    auto p = random_params(rng, 4);
    auto g = build_rep(p).g;
    g[1](0, 0) = g[1](0, 0) + BigRational(1);
    auto bad = complete_rep(p, g);
    CHECK_FALSE(gate(bad).all_passed());
    CHECK_FALSE(bad.gate_passed);
    auto good = build_rep(p);
    CHECK(gate(good).all_passed());
    CHECK(good.gate_passed);
}

TEST_CASE("cubic annihilation against the expanded polynomial") {
    std::mt19937_64 rng(42);
    for (int n = 3; n <= 5; ++n)
        for (int i = 0; i < 3; ++i) {
            auto p = random_params(rng, n);
            auto rep = build_rep(p);
            for (auto& g : rep.g) CHECK(cubic_oracle(g, p.l, p.r).is_zero_matrix());
        }
    auto sym = build_rep_symbolic(3);
    for (auto& g : sym.g) CHECK(cubic_oracle(g, sym.params.l, sym.params.r).is_zero_matrix());
}

TEST_CASE("g_i has eigenvalues r and -1/r and 1/l") {
    std::mt19937_64 rng(43);
    auto p = random_params(rng, 4);
    auto rep = build_rep(p);
    const auto id = Matrix<BigRational>::identity(rep.dim());
    for (auto lam : {p.r, -(BigRational(1) / p.r), BigRational(1) / p.l})
        for (auto& g : rep.g) CHECK(det(g - lam * id).is_zero());
}

TEST_CASE("e_i has rank one and e_i^2 = delta e_i") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 5; ++i) {
        auto p = random_params(rng, 5);
        auto rep = build_rep(p);
        for (auto& e : rep.e) {
            CHECK(rank(e) == 1);
            CHECK(e * e == p.delta() * e);
        }
    }
}

TEST_CASE("delta vanishes at l = 1/r and l = -r") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 5; ++i) {
        auto base = random_params(rng, 4);
        const BigRational r = base.r;
        for (auto l : {BigRational(1) / r, -r}) {
            LKParams<BigRational> p{4, l, r};
            // (1/l - l)/(1/r - r) + 1 by hand
            BigRational by_hand = (BigRational(1) / l - l) / (BigRational(1) / r - r) + BigRational(1);
            CHECK(by_hand.is_zero());
            CHECK(p.delta().is_zero());
            auto rep = build_rep(p);
            for (auto& e : rep.e) {
                CHECK(rank(e) == 1);
                CHECK((e * e).is_zero_matrix());
            }
        }
    }
}

TEST_CASE("parameter dictionary") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 20; ++i) {
        auto p = random_params(rng, 3);
        auto qt = lr_to_qt(p.l, p.r);
        CHECK(qt.q * p.r * p.r == BigRational(1));
        CHECK(p.l * qt.t == p.r * p.r * p.r);
        auto back = qt_to_lr(qt.q, qt.t, p.r);
        CHECK(back[0].l == p.l);
        CHECK(back[0].r == p.r);
        CHECK(back[1].r == -p.r);
        CHECK(back[1].l == -p.l);
        auto again = lr_to_qt(back[1].l, back[1].r);
        CHECK(again.q == qt.q);
        CHECK(again.t == qt.t);
    }
    CHECK_THROWS_AS(qt_to_lr(BigRational(1, 4), BigRational(3), BigRational(3)), Error);
    CHECK_THROWS_AS(lr_to_qt(BigRational(0), BigRational(2)), Error);

    auto r = UniRatFunc::var();
    auto q = UniRatFunc(1) / (r * r);
    CHECK(lr_to_qt(r, r).t == UniRatFunc(1) / q);
    CHECK(lr_to_qt(-(r * r * r), r).t == UniRatFunc(-1));
    const int n = 4;
    CHECK(lr_to_qt(field_pow(r, 3 - 2 * n), r).t == UniRatFunc(1) / field_pow(q, n));
}

TEST_CASE("semisimplicity guard") {
    CHECK(semisimplicity_guard(BigRational(2), 8));
    CHECK(semisimplicity_guard(AlgebraicNumber::generator(test::phi12()), 3));
    CHECK_FALSE(semisimplicity_guard(AlgebraicNumber::generator(test::phi12()), 6));
    auto i4 = std::make_shared<const Modulus>(QPoly{BigRational(1), BigRational(0), BigRational(1)});
    CHECK_FALSE(semisimplicity_guard(AlgebraicNumber::generator(i4), 3));
    CHECK_FALSE(semisimplicity_guard(BigRational(-1), 3));

    try {
        build_rep(LKParams<BigRational>{3, BigRational(2), BigRational(1)});
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::ParameterZero || e.kind() == ErrorKind::SemisimplicityViolation));
    }
    try {
        build_rep(LKParams<BigRational>{3, BigRational(0), BigRational(2)});
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParameterZero);
    }
}

TEST_CASE("V^(k) embeds in V^(n) for n <= 7") {
    std::mt19937_64 rng(47);
    auto p = random_params(rng, 7);
    std::vector<LKRep<BigRational>> reps;
    for (int n = 3; n <= 7; ++n) reps.push_back(build_rep(LKParams<BigRational>{n, p.l, p.r}));
    for (std::size_t big = 1; big < reps.size(); ++big)
        for (std::size_t small = 0; small < big; ++small) CHECK(embedding_preserved(reps[big], reps[small]));
}

TEST_CASE("substituted representation matches the rational one") {
    for (auto [sign, k] : {std::pair{1, 1L}, {-1, 3L}, {1, -5L}}) {
        auto sub = build_rep_substituted(4, {sign, k});
        const BigRational r(3, 2);
        LocusMonomial loc{sign, k};
        auto rat = build_rep(LKParams<BigRational>{4, loc.apply(r), r});
        for (std::size_t i = 0; i < rat.g.size(); ++i) {
            CHECK(sub.g[i].map([&](const UniRatFunc& x) { return x.eval(r); }) == rat.g[i]);
            CHECK(sub.e[i].map([&](const UniRatFunc& x) { return x.eval(r); }) == rat.e[i]);
        }
    }
}

TEST_CASE("convention report") {
    auto p = LKParams<BigRational>{4, BigRational(3), BigRational(2)};
    auto c = convention(p);
    CHECK(c.q == BigRational(1, 4));
    CHECK(c.tau == BigRational(8, 3));
    CHECK(c.rescale == BigRational(2));
    CHECK(c.m == BigRational(-3, 2));
    CHECK(c.delta == (BigRational(1, 3) - BigRational(3)) / BigRational(-3, 2) + BigRational(1));
}
