#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apnext/field.hpp"

using namespace apnext;

namespace {

// Trial-division irreducibility, independent of the library's Frobenius test.
bool irreducible_by_trial_division(std::uint32_t poly) {
    unsigned n = 31 - __builtin_clz(poly);
    for (unsigned d = 1; d <= n / 2; ++d) {
        for (std::uint32_t q = 1u << d; q < (2u << d); ++q) {
            std::uint32_t r = poly;
            while (r && static_cast<unsigned>(31 - __builtin_clz(r)) >= d)
                r ^= q << (static_cast<unsigned>(31 - __builtin_clz(r)) - d);
            if (r == 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("default moduli are the smallest irreducible polynomials") {
    for (unsigned n = 2; n <= 16; ++n) {
        std::uint32_t def = FieldCtx::default_modulus(n);
        CHECK((def >> n) == 1u);
        CHECK(irreducible_by_trial_division(def));
        // nothing smaller with bit n and bit 0 set is irreducible
        for (std::uint32_t cand = (1u << n) | 1u; cand < def; cand += 2)
            CHECK_FALSE(irreducible_by_trial_division(cand));
    }
    CHECK(FieldCtx::default_modulus(5) == 0x25);  // X^5 + X^2 + 1
}

TEST_CASE("irreducibility test agrees with trial division") {
    for (unsigned n = 2; n <= 10; ++n) {
        for (std::uint32_t cand = (1u << n) | 1u; cand < (2u << n); cand += 2)
            CHECK(FieldCtx::is_irreducible(cand) == irreducible_by_trial_division(cand));
    }
}

TEST_CASE("constructor rejects bad input") {
    CHECK_THROWS_AS(FieldCtx(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(17), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(5, 0x31), std::invalid_argument);  // X^5+X^4+1 = (X^2+X+1)(X^3+X+1)
    CHECK_THROWS_AS(FieldCtx(5, 0x23), std::invalid_argument);  // X^5+X+1 reducible
    // product of coprime-degree factors; fools a pure multiplicative-order test
    CHECK_THROWS_AS(FieldCtx(6, 0x53), std::invalid_argument);  // (X+1)(X^2+X+1)(X^3+X+1)
    CHECK_THROWS_AS(FieldCtx(5, 0x13), std::invalid_argument);  // wrong degree
    CHECK_NOTHROW(FieldCtx(5, 0x29));  // X^5+X^3+1
}

TEST_CASE("multiplication basics in n=5") {
    FieldCtx ctx(5);
    for (Elem y = 0; y < 32; ++y) {
        CHECK(ctx.mul(1, y) == y);
        CHECK(ctx.mul(0, y) == 0);
    }
    // X^4 * X = X^5 = X^2 + 1 under X^5+X^2+1
    CHECK(ctx.mul(0b10000, 0b00010) == 0b00101);
}

TEST_CASE("table multiply agrees with the carry-less path") {
    FieldCtx c5(5);
    for (Elem x = 0; x < 32; ++x)
        for (Elem y = 0; y < 32; ++y) CHECK(c5.mul(x, y) == c5.mul_clmul(x, y));
    FieldCtx c11(11);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 5000; ++i) {
        Elem x = rng() & c11.group_order(), y = rng() & c11.group_order();
        CHECK(c11.mul(x, y) == c11.mul_clmul(x, y));
    }
}

TEST_CASE("pow conventions") {
    FieldCtx ctx(7);
    CHECK(ctx.pow(0, 5) == 0);
    CHECK(ctx.pow(0, 0) == 1);
    CHECK(ctx.pow(0, -3) == 0);
    for (Elem x = 1; x < ctx.size(); ++x) {
        CHECK(ctx.pow(x, ctx.group_order()) == 1);
        CHECK(ctx.pow(x, 1) == x);
        CHECK(ctx.pow(x, 0) == 1);
    }
    // negative exponents are inverse powers; oracle by repeated mul of inv
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        Elem g = 1 + (rng() % ctx.group_order());
        Elem inv = 0;
        for (Elem y = 1; y < ctx.size(); ++y)
            if (ctx.mul(g, y) == 1) inv = y;
        CHECK(ctx.pow(g, -3) == ctx.mul(inv, ctx.mul(inv, inv)));
    }
}

TEST_CASE("inverses") {
    for (unsigned n = 2; n <= 8; ++n) {
        FieldCtx ctx(n);
        CHECK(ctx.inv(1) == 1);
        for (Elem x = 1; x < ctx.size(); ++x) CHECK(ctx.mul(x, ctx.inv(x)) == 1);
        CHECK_THROWS_AS(ctx.inv(0), std::domain_error);
    }
}

TEST_CASE("trace") {
    for (unsigned n = 2; n <= 10; ++n) {
        FieldCtx ctx(n);
        CHECK(ctx.trace(0) == 0);
        CHECK(ctx.trace(1) == n % 2);
        unsigned zeros = 0;
        for (Elem x = 0; x < ctx.size(); ++x)
            if (ctx.trace(x) == 0) ++zeros;
        CHECK(zeros == ctx.size() / 2);  // the trace form is balanced
    }
    FieldCtx ctx(5);
    for (Elem x = 0; x < 32; ++x)
        for (Elem y = 0; y < 32; ++y)
            CHECK(ctx.trace(x ^ y) == (ctx.trace(x) ^ ctx.trace(y)));
}

TEST_CASE("frobenius") {
    FieldCtx ctx(9);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        Elem x = rng() & ctx.group_order();
        int k = static_cast<int>(rng() % 30) - 15;
        CHECK(ctx.frob(x, 0) == x);
        CHECK(ctx.frob(x, static_cast<int>(ctx.n())) == x);
        CHECK(ctx.frob(x, 1) == ctx.mul(x, x));
        CHECK(ctx.trace(ctx.frob(x, k)) == ctx.trace(x));
    }
}

TEST_CASE("field axiom properties") {
    for (unsigned n : {3u, 5u, 8u, 13u}) {
        FieldCtx ctx(n);
        std::mt19937_64 rng(n);
        for (int i = 0; i < 1000; ++i) {
            Elem x = rng() & ctx.group_order();
            Elem y = rng() & ctx.group_order();
            Elem z = rng() & ctx.group_order();
            CHECK(ctx.mul(x, y) == ctx.mul(y, x));
            CHECK(ctx.mul(x, static_cast<Elem>(y ^ z)) == (ctx.mul(x, y) ^ ctx.mul(x, z)));
            unsigned t = 1 + static_cast<unsigned>(rng() % (n - 1));
            CHECK(ctx.pow(x, (1 << t) + 1) == ctx.mul(ctx.frob(x, static_cast<int>(t)), x));
        }
    }
}

TEST_CASE("modulus override changes the representation, not the spectra") {
    FieldCtx a(5, 0x25), b(5, 0x29);
    CHECK(a.modulus() != b.modulus());
    // both are GF(32); trace is balanced in each
    unsigned za = 0, zb = 0;
    for (Elem x = 0; x < 32; ++x) {
        za += a.trace(x) == 0;
        zb += b.trace(x) == 0;
    }
    CHECK(za == 16);
    CHECK(zb == 16);
}
