#include "apnext/field.hpp"

#include <stdexcept>
#include <string>

namespace apnext {

namespace {

// Carry-less multiply of two polynomials over GF(2), then reduce by a
// degree-n modulus. Works on raw bitmasks, no tables.
std::uint32_t clmul_reduce(std::uint32_t x, std::uint32_t y, std::uint32_t modulus, unsigned n) {
    std::uint64_t acc = 0;
    std::uint64_t a = x;
    while (y) {
        if (y & 1) acc ^= a;
        a <<= 1;
        y >>= 1;
    }
    // reduce: top bit index at most 2n-2
    for (int bit = 2 * static_cast<int>(n) - 2; bit >= static_cast<int>(n); --bit) {
        if (acc >> bit & 1) acc ^= static_cast<std::uint64_t>(modulus) << (bit - n);
    }
    return static_cast<std::uint32_t>(acc);
}

// x^(2^k) mod modulus by repeated carry-less squaring (table-free).
std::uint32_t clmul_frob(std::uint32_t x, unsigned k, std::uint32_t modulus, unsigned n) {
    for (unsigned i = 0; i < k; ++i) x = clmul_reduce(x, x, modulus, n);
    return x;
}

// gcd of polynomials over GF(2)
std::uint32_t poly_gcd(std::uint32_t a, std::uint32_t b) {
    while (b) {
        // a mod b
        while (a && (31 - __builtin_clz(a)) >= (31 - __builtin_clz(b)))
            a ^= b << ((31 - __builtin_clz(a)) - (31 - __builtin_clz(b)));
        std::uint32_t t = a;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

bool FieldCtx::is_irreducible(std::uint32_t poly) {
    if (poly < 4) return false;
    unsigned n = 31 - __builtin_clz(poly);
    if ((poly & 1) == 0) return false;  // X divides
    // Rabin: X^(2^n) == X mod poly, and gcd(X^(2^(n/q)) + X, poly) = 1
    // for every prime q dividing n.
    std::uint32_t x = 2;  // the class of X
    if (clmul_frob(x, n, poly, n) != x) return false;
    unsigned rem = n;
    for (unsigned q = 2; q * q <= rem; ++q) {
        if (rem % q) continue;
        while (rem % q == 0) rem /= q;
        std::uint32_t y = clmul_frob(x, n / q, poly, n) ^ x;
        if (y == 0 || poly_gcd(poly, y) != 1) return false;
    }
    if (rem > 1) {
        std::uint32_t y = clmul_frob(x, n / rem, poly, n) ^ x;
        if (y == 0 || poly_gcd(poly, y) != 1) return false;
    }
    return true;
}

std::uint32_t FieldCtx::default_modulus(unsigned n) {
    // Numerically smallest irreducible polynomial of each degree.
    static constexpr std::uint32_t kTable[kMaxDim + 1] = {
        0,       0,       0x7,     0xB,     0x13,   0x25,   0x43,    0x83,   0x11B,
        0x203,   0x409,   0x805,   0x1009,  0x201B, 0x4021, 0x8003,  0x1002B};
    if (n < kMinDim || n > kMaxDim)
        throw std::invalid_argument("field dimension must be in [2, 16], got " + std::to_string(n));
    return kTable[n];
}

FieldCtx::FieldCtx(unsigned n) : FieldCtx(n, default_modulus(n)) {}

FieldCtx::FieldCtx(unsigned n, std::uint32_t modulus)
    : n_(n), modulus_(modulus), size_(0), order_(0) {
    if (n < kMinDim || n > kMaxDim)
        throw std::invalid_argument("field dimension must be in [2, 16], got " + std::to_string(n));
    size_ = 1u << n;
    order_ = size_ - 1;
    if (modulus_ >> n != 1u)
        throw std::invalid_argument("modulus must have degree exactly n");
    if (!is_irreducible(modulus_))
        throw std::invalid_argument("modulus is reducible over GF(2)");
    build_tables();
}

void FieldCtx::build_tables() {
    log_.assign(size_, 0);
    antilog_.assign(2 * order_ + 1, 0);
    // Find a multiplicative generator: build the antilog chain and check
    // that it hits every nonzero element exactly once.
    for (Elem g = 2; g < size_; ++g) {
        std::vector<std::uint8_t> seen(size_, 0);
        Elem v = 1;
        bool ok = true;
        for (std::uint32_t i = 0; i < order_; ++i) {
            if (seen[v]) { ok = false; break; }
            seen[v] = 1;
            antilog_[i] = v;
            log_[v] = static_cast<std::uint16_t>(i);
            v = clmul_reduce(v, g, modulus_, n_);
        }
        if (ok && v == 1) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0)
        throw std::logic_error("no multiplicative generator found (modulus not irreducible?)");
    for (std::uint32_t i = 0; i <= order_; ++i) antilog_[order_ + i] = antilog_[i];

    trace_.assign(size_, 0);
    for (Elem x = 0; x < size_; ++x) {
        Elem t = x, y = x;
        for (unsigned k = 1; k < n_; ++k) {
            y = clmul_reduce(y, y, modulus_, n_);
            t ^= y;
        }
        if (t > 1) throw std::logic_error("trace is not GF(2)-valued");
        trace_[x] = static_cast<std::uint8_t>(t);
    }
}

Elem FieldCtx::pow(Elem x, std::int64_t e) const {
    if (x == 0) return e == 0 ? 1u : 0u;
    std::int64_t m = order_;
    std::int64_t r = e % m;
    if (r < 0) r += m;
    return antilog_[(static_cast<std::uint64_t>(log_[x]) * static_cast<std::uint64_t>(r)) % order_];
}

Elem FieldCtx::inv(Elem x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return antilog_[order_ - log_[x]];
}

Elem FieldCtx::frob(Elem x, int k) const {
    if (x == 0) return 0;
    int kk = k % static_cast<int>(n_);
    if (kk < 0) kk += static_cast<int>(n_);
    return antilog_[(static_cast<std::uint64_t>(log_[x]) << kk) % order_];
}

Elem FieldCtx::mul_clmul(Elem x, Elem y) const { return clmul_reduce(x, y, modulus_, n_); }

}  // namespace apnext
