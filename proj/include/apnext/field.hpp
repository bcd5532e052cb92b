#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace apnext {

/// An element of GF(2^n), stored as an n-bit value in the polynomial
/// basis {1, X, ..., X^(n-1)} of the context's modulus.
using Elem = std::uint32_t;

/// Arithmetic context for GF(2^n), 2 <= n <= 16.
///
/// Multiplication, powers, inversion and Frobenius go through log/antilog
/// tables built over a multiplicative generator at construction time.
/// A table-free carry-less multiply is kept as a reference path.
/// Immutable after construction; safe to share across threads.
class FieldCtx {
public:
    static constexpr unsigned kMinDim = 2;
    static constexpr unsigned kMaxDim = 16;

    /// Context with the built-in default modulus for n (the numerically
    /// smallest irreducible degree-n polynomial over GF(2)).
    explicit FieldCtx(unsigned n);

    /// Context with an explicit modulus bitmask (bit n and bit 0 set).
    /// Throws std::invalid_argument for unsupported n, wrong degree, or a
    /// reducible modulus.
    FieldCtx(unsigned n, std::uint32_t modulus);

    unsigned n() const { return n_; }
    std::uint32_t modulus() const { return modulus_; }
    /// 2^n.
    std::uint32_t size() const { return size_; }
    /// Multiplicative group order 2^n - 1.
    std::uint32_t group_order() const { return order_; }
    Elem generator() const { return generator_; }

    Elem mul(Elem x, Elem y) const {
        if (x == 0 || y == 0) return 0;
        return antilog_[log_[x] + log_[y]];
    }

    /// x^e. Exponents are canonicalized mod 2^n-1 for x != 0; 0^0 = 1 and
    /// 0^e = 0 for e != 0. Negative e means inverse powers.
    Elem pow(Elem x, std::int64_t e) const;

    /// Multiplicative inverse; throws std::domain_error on zero input.
    Elem inv(Elem x) const;

    /// Absolute trace tr(x) = x + x^2 + ... + x^(2^(n-1)), in {0, 1}.
    unsigned trace(Elem x) const { return trace_[x]; }

    /// Frobenius power x^(2^k), k taken mod n.
    Elem frob(Elem x, int k) const;

    /// Reference multiply: carry-less product reduced by the modulus.
    Elem mul_clmul(Elem x, Elem y) const;

    /// Built-in default modulus for n; throws for unsupported n.
    static std::uint32_t default_modulus(unsigned n);

    /// Irreducibility over GF(2) via the Frobenius criterion
    /// (X^(2^n) == X mod p and gcd(X^(2^(n/q)) - X, p) = 1 for primes q | n).
    static bool is_irreducible(std::uint32_t poly);

private:
    unsigned n_;
    std::uint32_t modulus_;
    std::uint32_t size_;   // 2^n
    std::uint32_t order_;  // 2^n - 1
    Elem generator_ = 0;
    std::vector<std::uint16_t> log_;  // index: nonzero element
    std::vector<Elem> antilog_;       // doubled, so log sums index directly
    std::vector<std::uint8_t> trace_;

    void build_tables();
};

}  // namespace apnext
