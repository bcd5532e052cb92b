#include "apnext/vecfun.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace apnext {

VectorialFunction::VectorialFunction(unsigned n_in_, unsigned n_out_, std::vector<Elem> table_)
    : n_in(n_in_), n_out(n_out_), table(std::move(table_)) {
    if (table.size() != (std::size_t{1} << n_in))
        throw std::invalid_argument("truth table must have exactly 2^n_in entries");
    for (Elem v : table)
        if (v >> n_out)
            throw std::invalid_argument("truth table entry out of output range");
}

VectorialFunction from_monomial(const FieldCtx& ctx, std::uint64_t d) {
    std::vector<Elem> t(ctx.size());
    for (std::uint32_t x = 0; x < ctx.size(); ++x)
        t[x] = ctx.pow(x, static_cast<std::int64_t>(d));
    return VectorialFunction(ctx.n(), ctx.n(), std::move(t));
}

std::vector<std::uint32_t> ddt_row(const VectorialFunction& f, std::uint32_t a) {
    if (f.n_in != f.n_out) throw std::invalid_argument("DDT requires n_in == n_out");
    std::vector<std::uint32_t> row(f.domain_size(), 0);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) ++row[f.table[x] ^ f.table[x ^ a]];
    return row;
}

std::vector<std::vector<std::uint32_t>> ddt(const VectorialFunction& f) {
    std::vector<std::vector<std::uint32_t>> t;
    t.reserve(f.domain_size());
    for (std::uint32_t a = 0; a < f.domain_size(); ++a) t.push_back(ddt_row(f, a));
    return t;
}

std::uint32_t differential_uniformity(const VectorialFunction& f) {
    if (f.n_in != f.n_out) throw std::invalid_argument("DDT requires n_in == n_out");
    std::uint32_t best = 0;
    std::vector<std::uint32_t> row(f.domain_size());
    for (std::uint32_t a = 1; a < f.domain_size(); ++a) {
        std::fill(row.begin(), row.end(), 0);
        for (std::uint32_t x = 0; x < f.domain_size(); ++x) {
            std::uint32_t c = ++row[f.table[x] ^ f.table[x ^ a]];
            if (c > best) best = c;
        }
    }
    return best;
}

bool is_apn(const VectorialFunction& f) {
    if (f.n_in != f.n_out) throw std::invalid_argument("APN check requires n_in == n_out");
    std::vector<std::uint32_t> row(f.domain_size());
    for (std::uint32_t a = 1; a < f.domain_size(); ++a) {
        std::fill(row.begin(), row.end(), 0);
        for (std::uint32_t x = 0; x < f.domain_size(); ++x)
            if (++row[f.table[x] ^ f.table[x ^ a]] > 2) return false;
    }
    return true;
}

namespace {

void wht_inplace(std::vector<std::int32_t>& w) {
    for (std::size_t h = 1; h < w.size(); h <<= 1) {
        for (std::size_t i = 0; i < w.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                std::int32_t a = w[j], b = w[j + h];
                w[j] = a + b;
                w[j + h] = a - b;
            }
        }
    }
}

std::vector<std::int32_t> component_signs(const VectorialFunction& f, std::uint32_t v) {
    std::vector<std::int32_t> w(f.domain_size());
    for (std::uint32_t x = 0; x < f.domain_size(); ++x)
        w[x] = (std::popcount(v & f.table[x]) & 1) ? -1 : 1;
    return w;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> walsh_linearity(const VectorialFunction& f) {
    std::uint32_t best = 0;
    for (std::uint32_t v = 1; v < (1u << f.n_out); ++v) {
        auto w = component_signs(f, v);
        wht_inplace(w);
        for (std::int32_t z : w) {
            std::uint32_t az = static_cast<std::uint32_t>(z < 0 ? -z : z);
            if (az > best) best = az;
        }
    }
    std::uint32_t nl = (1u << (f.n_in - 1)) - best / 2;
    return {best, nl};
}

std::uint64_t walsh_power_sum(const VectorialFunction& f, std::uint32_t v) {
    auto w = component_signs(f, v);
    wht_inplace(w);
    std::uint64_t s = 0;
    for (std::int32_t z : w) s += static_cast<std::uint64_t>(static_cast<std::int64_t>(z) * z);
    return s;
}

unsigned algebraic_degree(const VectorialFunction& f) {
    unsigned deg = 0;
    std::vector<std::uint8_t> anf(f.domain_size());
    for (unsigned c = 0; c < f.n_out; ++c) {
        for (std::uint32_t x = 0; x < f.domain_size(); ++x) anf[x] = f.table[x] >> c & 1;
        for (std::uint32_t step = 1; step < f.domain_size(); step <<= 1)
            for (std::uint32_t x = 0; x < f.domain_size(); ++x)
                if (x & step) anf[x] ^= anf[x ^ step];
        for (std::uint32_t m = 0; m < f.domain_size(); ++m)
            if (anf[m]) {
                unsigned w = static_cast<unsigned>(std::popcount(m));
                if (w > deg) deg = w;
            }
    }
    return deg;
}

bool is_quadratic(const VectorialFunction& f) { return algebraic_degree(f) == 2; }

SpectrumReport analyze(const VectorialFunction& f) {
    SpectrumReport r;
    r.n_in = f.n_in;
    r.n_out = f.n_out;
    auto [lin, nl] = walsh_linearity(f);
    r.linearity = lin;
    r.nonlinearity = nl;
    if (f.n_in == f.n_out) {
        r.differential_uniformity = differential_uniformity(f);
        r.is_apn = r.differential_uniformity == 2;
    }
    r.algebraic_degree = algebraic_degree(f);
    r.is_quadratic = r.algebraic_degree == 2;
    return r;
}

}  // namespace apnext
