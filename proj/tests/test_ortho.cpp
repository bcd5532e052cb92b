#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "apnext/catalog.hpp"
#include "apnext/ortho.hpp"

using namespace apnext;

TEST_CASE("b_alpha substitution identities") {
    FieldCtx ctx(5);
    auto f = from_monomial(ctx, 3);
    for (Elem alpha = 1; alpha < 32; ++alpha) {
        auto b = b_alpha(f, alpha);
        CHECK(b.table[0] == 0);
        CHECK(b.table[alpha] == 0);
        // quadratic => B_alpha is GF(2)-linear (exhaustive at n=5)
        for (std::uint32_t x = 0; x < 32; ++x)
            for (std::uint32_t y = 0; y < 32; ++y)
                CHECK(b.table[x ^ y] == (b.table[x] ^ b.table[y]));
    }
}

TEST_CASE("gold ortho-derivative closed form") {
    for (unsigned n : {5u, 7u}) {
        FieldCtx ctx(n);
        for (unsigned t = 1; t < n; ++t) {
            if (std::gcd(t, n) != 1) continue;
            auto od = ortho_derivative(ctx, instantiate(ctx, FunctionSpec::gold(t)));
            std::int64_t e = static_cast<std::int64_t>(ctx.size()) - (1 << t) - 2;
            for (std::uint32_t x = 0; x < ctx.size(); ++x)
                CHECK(od.pi.table[x] == ctx.pow(x, e));
        }
    }
}

TEST_CASE("ortho-derivative definition holds and is unique (n=5, brute force)") {
    FieldCtx ctx(5);
    auto f = from_monomial(ctx, 3);
    auto od = ortho_derivative(ctx, f);
    CHECK(od.pi.table[0] == 0);
    for (Elem alpha = 1; alpha < 32; ++alpha) {
        auto b = b_alpha(f, alpha);
        unsigned satisfying = 0;
        for (Elem p = 1; p < 32; ++p) {
            bool ok = true;
            for (std::uint32_t x = 0; x < 32; ++x)
                if (ctx.trace(ctx.mul(p, b.table[x]))) ok = false;
            if (ok) {
                ++satisfying;
                CHECK(od.pi.table[alpha] == p);
            }
        }
        CHECK(satisfying == 1);
    }
}

TEST_CASE("switched cube ortho-derivative splits along tr(x^-3)") {
    FieldCtx ctx(7);
    const std::int64_t e = static_cast<std::int64_t>(ctx.size()) - 4;  // x^-3 on nonzero inputs
    // two APN instances of x^3 + mu with quadratic mu
    std::vector<std::vector<MuTerm>> mus = {{{1, 9}}, {{1, 9}, {2, 3}}};
    for (const auto& mu : mus) {
        auto f = instantiate(ctx, FunctionSpec::switched_cube(mu));
        REQUIRE(is_apn(f));
        auto od = ortho_derivative(ctx, f);
        for (std::uint32_t x = 1; x < ctx.size(); ++x) {
            Elem xm3 = ctx.pow(x, e);
            if (ctx.trace(xm3) == 0) CHECK(od.pi.table[x] == xm3);
        }
    }
}

TEST_CASE("switched cube with tr(x^9): the explicit zeta covers tr(x^-3) = 1") {
    for (unsigned n : {7u, 9u}) {
        FieldCtx ctx(n);
        auto f = instantiate(ctx, FunctionSpec::switched_cube({{1, 9}}));
        auto od = ortho_derivative(ctx, f);
        for (std::uint32_t x = 1; x < ctx.size(); ++x) {
            Elem xm3 = ctx.pow(x, static_cast<std::int64_t>(ctx.size()) - 4);
            if (ctx.trace(xm3) == 1) {
                Elem zeta = ctx.pow(x, 6) ^ ctx.pow(x, (1 << (n - 1)) + 1) ^
                            ctx.pow(x, static_cast<std::int64_t>(ctx.size()) - 3 * (1 << (n - 2)) - 1);
                CHECK(od.pi.table[x] == zeta);
            }
        }
    }
}

TEST_CASE("error paths") {
    FieldCtx c5(5);
    // x^7 is APN at n=5 but has degree 3
    auto cubic = from_monomial(c5, 7);
    REQUIRE(is_apn(cubic));
    CHECK_THROWS_AS(ortho_derivative(c5, cubic), std::invalid_argument);
    // x^5 at n=4 is quadratic but not APN (gcd(2,4) != 1); rank test trips
    FieldCtx c4(4);
    auto notapn = from_monomial(c4, 5);
    REQUIRE(is_quadratic(notapn));
    REQUIRE_FALSE(is_apn(notapn));
    CHECK_THROWS_AS(ortho_derivative(c4, notapn), std::domain_error);
}
