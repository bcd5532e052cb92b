#include "apnext/ortho.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace apnext {

VectorialFunction b_alpha(const VectorialFunction& f, Elem alpha) {
    if (f.n_in != f.n_out) throw std::invalid_argument("B_alpha requires n_in == n_out");
    std::vector<Elem> t(f.domain_size());
    Elem base = f.table[alpha] ^ f.table[0];
    for (std::uint32_t x = 0; x < f.domain_size(); ++x)
        t[x] = f.table[x] ^ f.table[x ^ alpha] ^ base;
    return VectorialFunction(f.n_in, f.n_out, std::move(t));
}

OrthoDerivative ortho_derivative(const FieldCtx& ctx, const VectorialFunction& f) {
    const unsigned n = ctx.n();
    if (f.n_in != n || f.n_out != n)
        throw std::invalid_argument("function dimensions do not match the field context");
    if (!is_quadratic(f)) throw std::invalid_argument("ortho-derivative requires a quadratic function");

    std::vector<Elem> pi(ctx.size(), 0);
    for (std::uint32_t alpha = 1; alpha < ctx.size(); ++alpha) {
        // xor-basis of the B_alpha image, one slot per leading bit
        Elem slot[FieldCtx::kMaxDim] = {0};
        unsigned rank = 0;
        Elem base = f.table[alpha] ^ f.table[0];
        for (unsigned b = 0; b < n; ++b) {
            Elem v = f.table[1u << b] ^ f.table[(1u << b) ^ alpha] ^ base;
            while (v) {
                unsigned lead = 31 - static_cast<unsigned>(__builtin_clz(v));
                if (!slot[lead]) {
                    slot[lead] = v;
                    ++rank;
                    break;
                }
                v ^= slot[lead];
            }
        }
        std::vector<Elem> basis;
        basis.reserve(rank);
        for (unsigned b = 0; b < n; ++b)
            if (slot[b]) basis.push_back(slot[b]);
        if (basis.size() != n - 1)
            throw std::domain_error("function is not APN: B_alpha image rank " +
                                    std::to_string(basis.size()) + " at alpha=" +
                                    std::to_string(alpha));

        // Solve tr(p * m) = 0 for all basis images m: rows over the bits of p.
        // Rank is n-1 (the trace form is non-degenerate), so the null space
        // is one line; take its nonzero point.
        std::uint32_t rows[FieldCtx::kMaxDim];
        unsigned nrows = 0;
        for (Elem m : basis) {
            std::uint32_t row = 0;
            for (unsigned b = 0; b < n; ++b)
                if (ctx.trace(ctx.mul(1u << b, m))) row |= 1u << b;
            rows[nrows++] = row;
        }
        // echelonize
        std::uint32_t piv[FieldCtx::kMaxDim] = {0};
        for (unsigned i = 0; i < nrows; ++i) {
            std::uint32_t r = rows[i];
            while (r) {
                unsigned c = 31 - static_cast<unsigned>(__builtin_clz(r));
                if (piv[c]) {
                    r ^= piv[c];
                } else {
                    piv[c] = r;
                    break;
                }
            }
            if (!r) throw std::logic_error("trace-orthogonality system lost rank");
        }
        unsigned free_col = n;
        for (unsigned c = 0; c < n; ++c)
            if (!piv[c]) { free_col = c; break; }
        if (free_col == n) throw std::logic_error("trace-orthogonality system has full rank");
        // Back-substitute with the free variable set to 1. Each pivot row has
        // its leading bit at the pivot column and all other bits below it, so
        // one ascending pass decides every pivot bit.
        Elem p = 1u << free_col;
        for (unsigned c = 0; c < n; ++c) {
            if (!piv[c]) continue;
            unsigned parity = static_cast<unsigned>(std::popcount(piv[c] & p & ((1u << c) - 1))) & 1u;
            if (parity) p |= 1u << c;
        }
        for (Elem m : basis)
            if (ctx.trace(ctx.mul(p, m)))
                throw std::logic_error("ortho-derivative solution fails orthogonality");
        if (p == 0) throw std::logic_error("ortho-derivative solution is zero");
        pi[alpha] = p;
    }
    return OrthoDerivative{VectorialFunction(n, n, std::move(pi))};
}

}  // namespace apnext
