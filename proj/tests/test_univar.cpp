#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "apnext/catalog.hpp"
#include "apnext/univar.hpp"

using namespace apnext;

namespace {

// Interpolation oracle: solve the Vandermonde system V c = f by Gaussian
// elimination over the field itself. Independent of the extraction formula.
std::vector<Elem> vandermonde_interpolate(const FieldCtx& ctx, const std::vector<Elem>& f) {
    const std::uint32_t N = ctx.size();
    std::vector<std::vector<Elem>> m(N, std::vector<Elem>(N + 1, 0));
    for (std::uint32_t i = 0; i < N; ++i) {
        for (std::uint32_t r = 0; r < N; ++r) m[i][r] = ctx.pow(i, r);
        m[i][N] = f[i];
    }
    for (std::uint32_t col = 0, row = 0; col < N && row < N; ++col) {
        std::uint32_t p = row;
        while (p < N && m[p][col] == 0) ++p;
        if (p == N) continue;
        std::swap(m[p], m[row]);
        Elem ip = ctx.inv(m[row][col]);
        for (std::uint32_t c = col; c <= N; ++c) m[row][c] = ctx.mul(m[row][c], ip);
        for (std::uint32_t rr = 0; rr < N; ++rr) {
            if (rr == row || m[rr][col] == 0) continue;
            Elem factor = m[rr][col];
            for (std::uint32_t c = col; c <= N; ++c)
                m[rr][c] ^= ctx.mul(factor, m[row][c]);
        }
        ++row;
    }
    std::vector<Elem> coeffs(N);
    for (std::uint32_t r = 0; r < N; ++r) coeffs[r] = m[r][N];
    return coeffs;
}

LinearizedPoly random_poly(const FieldCtx& ctx, std::mt19937_64& rng) {
    LinearizedPoly L;
    L.coeffs.resize(ctx.n());
    for (auto& c : L.coeffs) c = static_cast<Elem>(rng() & ctx.group_order());
    return L;
}

}  // namespace

TEST_CASE("extraction on monomials and constants") {
    FieldCtx ctx(5);
    for (std::uint32_t r : {1u, 3u, 7u, 17u, 30u}) {
        auto f = from_monomial(ctx, r);
        for (std::uint32_t rp = 1; rp <= 30; ++rp)
            CHECK(univariate_coefficient(ctx, f.table, rp) == (rp == r ? 1u : 0u));
    }
    std::vector<Elem> constant(32, 0x15);
    for (std::uint32_t r = 1; r <= 30; ++r)
        CHECK(univariate_coefficient(ctx, constant, r) == 0);
    CHECK_THROWS_AS(univariate_coefficient(ctx, constant, 0), std::invalid_argument);
    CHECK_THROWS_AS(univariate_coefficient(ctx, constant, 31), std::invalid_argument);
}

TEST_CASE("extraction matches the Vandermonde interpolation oracle (n=5)") {
    FieldCtx ctx(5);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Elem> f(32);
        for (auto& v : f) v = rng() & 31;
        auto oracle = vandermonde_interpolate(ctx, f);
        auto mine = interpolate(ctx, f);
        CHECK(mine == oracle);
    }
}

TEST_CASE("interpolation round-trip") {
    for (unsigned n : {4u, 6u, 8u}) {
        FieldCtx ctx(n);
        std::mt19937_64 rng(n);
        std::vector<Elem> f(ctx.size());
        for (auto& v : f) v = rng() & ctx.group_order();
        auto coeffs = interpolate(ctx, f);
        for (std::uint32_t x = 0; x < ctx.size(); ++x)
            CHECK(eval_poly(ctx, coeffs, x) == f[x]);
    }
}

TEST_CASE("build_f_gold basics and the indicator witness") {
    FieldCtx ctx(5);
    LinearizedPoly witness{{1, 0, 0, 0, 1}};  // X^16 + X
    auto f = build_f_gold(ctx, 1, witness);
    CHECK(f[0] == 1);
    // the indicator of {0}, pointwise and through its coefficient vector
    for (std::uint32_t x = 1; x < 32; ++x) CHECK(f[x] == 0);
    CHECK(is_zero_indicator_by_coefficients(ctx, f));
    // no witness exists at n=7, so random L never give the indicator
    FieldCtx c7(7);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        auto L = random_poly(c7, rng);
        CHECK_FALSE(is_zero_indicator_by_coefficients(c7, build_f_gold(c7, 1, L)));
    }
}

TEST_CASE("build_f_cube zeroing factors") {
    FieldCtx ctx(7);
    std::mt19937_64 rng(32);
    auto L = random_poly(ctx, rng);
    Elem a = 1 + (rng() % ctx.group_order());
    auto f = build_f_cube(ctx, a, L);
    CHECK(f[0] == 1);
    const std::int64_t e = static_cast<std::int64_t>(ctx.size()) - 4;
    for (std::uint32_t x = 1; x < ctx.size(); ++x) {
        if (ctx.trace(ctx.mul(a, x)) == 1) CHECK(f[x] == 0);
        if (ctx.trace(ctx.pow(x, e)) == 1) CHECK(f[x] == 0);
        CHECK(f[x] <= 1);
    }
}

TEST_CASE("closed forms match extraction (n=7, randomized)") {
    FieldCtx ctx(7);
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        auto L = random_poly(ctx, rng);
        Elem a = 1 + (rng() % ctx.group_order());
        unsigned t = 1 + static_cast<unsigned>(rng() % 6);
        std::uint32_t r = 1 + static_cast<std::uint32_t>(rng() % (ctx.group_order() - 1));
        auto g = build_g(ctx, a, t, L);
        CHECK(closed_form_g_coefficient(ctx, a, t, L, r) == univariate_coefficient(ctx, g, r));
        auto fc = build_f_cube(ctx, a, L);
        CHECK(closed_form_v_coefficient(ctx, a, L, r) == univariate_coefficient(ctx, fc, r));
    }
    CHECK_THROWS_AS(closed_form_g_coefficient(ctx, 1, 1, random_poly(ctx, rng), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form_v_coefficient(ctx, 1, random_poly(ctx, rng), 127),
                    std::invalid_argument);
}

TEST_CASE("closed form reproduces the simple gold coefficient pattern") {
    // t=1, r = 2^s - 3: coefficient is l_{s-1} + l_s
    FieldCtx ctx(9);
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 5; ++trial) {
        auto L = random_poly(ctx, rng);
        for (unsigned s = 4; s <= 7; ++s)
            CHECK(closed_form_g_coefficient(ctx, 1, 1, L, (1u << s) - 3) ==
                  (L.coeffs[s - 1] ^ L.coeffs[s]));
    }
}

TEST_CASE("verify_relation passes on every relation at its smallest dimension") {
    struct Case { Relation rel; unsigned n; };
    for (auto [rel, n] : {Case{Relation::gold_t1, 7}, {Relation::gold_mid_t, 7},
                          {Relation::gold_half_s, 7}, {Relation::gold_half_s2, 7},
                          {Relation::gold_half_st, 7}, {Relation::gold_half_st1, 7},
                          {Relation::cube_second, 11}, {Relation::cube_first, 11},
                          {Relation::cube_fourth, 11}, {Relation::cube_fifth, 11}}) {
        FieldCtx ctx(n);
        for (unsigned t : relation_admissible_t(rel, n)) {
            auto rep = verify_relation(rel, ctx, 10, 99, t);
            CHECK(rep.pass());
            CHECK(rep.trials == 10);
            CHECK(rep.seed == 99);
        }
    }
}

TEST_CASE("verify_relation rejects out-of-range input") {
    FieldCtx c9(9);
    CHECK_THROWS_AS(verify_relation(Relation::cube_second, c9, 5, 1), std::invalid_argument);
    FieldCtx c7(7);
    CHECK_THROWS_AS(verify_relation(Relation::gold_mid_t, c7, 5, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(relation_from_name("no_such_relation"), std::invalid_argument);
    CHECK(relation_from_name("cube_fifth") == Relation::cube_fifth);
}

TEST_CASE("relation reports are deterministic in the seed") {
    FieldCtx ctx(7);
    auto a = verify_relation(Relation::gold_t1, ctx, 5, 42);
    auto b = verify_relation(Relation::gold_t1, ctx, 5, 42, 0, 4);
    CHECK(a.mismatches.size() == b.mismatches.size());
    CHECK(a.pass());
}

TEST_CASE("weight lemmas sweep clean") {
    for (WeightLemma l : {WeightLemma::gold_exponents2, WeightLemma::gold_exponents3,
                          WeightLemma::trace2, WeightLemma::trace, WeightLemma::trace4,
                          WeightLemma::trace5}) {
        auto rep = verify_weight_lemma(l, 16);
        CHECK(rep.pass());
        CHECK(rep.tuples_checked > 0);
    }
    CHECK(weight_lemma_from_name("trace4") == WeightLemma::trace4);
    CHECK_THROWS_AS(weight_lemma_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("weight lemma instance values") {
    // gold case k=0: 2^s - (2^t+1) + 1 + 2^t == 2^s, weight 1
    for (unsigned n : {7u, 11u}) {
        const std::uint64_t M = (std::uint64_t{1} << n) - 1;
        for (unsigned t = 2; 2 * t < n; ++t)
            for (unsigned s = t + 2; s <= n - 2; ++s) {
                std::uint64_t h = ((std::uint64_t{1} << s) - (std::uint64_t{1} << t) - 1 + 1 +
                                   (std::uint64_t{1} << t)) % M;
                CHECK(std::popcount(h) == 1);
            }
        // k=1 gives 2^s + 2^t + 1, weight 3 when s not in {0, t}
        for (unsigned t = 2; 2 * t < n; ++t)
            for (unsigned s = t + 2; s <= n - 2; ++s) {
                std::uint64_t h = ((std::uint64_t{1} << s) - (std::uint64_t{1} << t) - 1 + 2 +
                                   (std::uint64_t{1} << (t + 1))) % M;
                CHECK(std::popcount(h) == 3);
            }
    }
    // trace2 named low-weight pairs collapse to 2^m exactly
    for (unsigned m : {5u, 8u}) {
        CHECK((std::uint64_t{1} << m) - 9 + 2 + 4 + 1 + 2 == (std::uint64_t{1} << m));
        CHECK((std::uint64_t{1} << m) - 9 + 1 + 2 + 2 + 4 == (std::uint64_t{1} << m));
    }
}

TEST_CASE("weight reduction mod 2^j-1 never increases the 2-weight") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 2000; ++i) {
        unsigned n = 8 + static_cast<unsigned>(rng() % 9);
        std::uint64_t h = rng() & (((std::uint64_t{1} << n) - 1));
        unsigned j = 2 + static_cast<unsigned>(rng() % (n - 2));
        std::uint64_t hj = h % ((std::uint64_t{1} << j) - 1);
        CHECK(std::popcount(hj) <= std::popcount(h));
    }
}
