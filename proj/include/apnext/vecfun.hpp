#pragma once

#include <cstdint>
#include <vector>

#include "apnext/field.hpp"

namespace apnext {

/// A function F(2^n_in) -> F(2^n_out) as a truth table: table[i] is the
/// output on the element whose bits are i (little-endian index convention,
/// shared by all file I/O).
struct VectorialFunction {
    unsigned n_in = 0;
    unsigned n_out = 0;
    std::vector<Elem> table;

    VectorialFunction() = default;
    VectorialFunction(unsigned n_in_, unsigned n_out_, std::vector<Elem> table_);

    std::uint32_t domain_size() const { return 1u << n_in; }
    Elem operator()(std::uint32_t x) const { return table[x]; }
};

struct SpectrumReport {
    unsigned n_in = 0;
    unsigned n_out = 0;
    std::uint32_t linearity = 0;
    std::uint32_t nonlinearity = 0;
    std::uint32_t differential_uniformity = 0;
    unsigned algebraic_degree = 0;
    bool is_apn = false;
    bool is_quadratic = false;
};

/// Truth table of x -> x^d (with 0^0 = 1, so d = 0 is the all-ones table).
VectorialFunction from_monomial(const FieldCtx& ctx, std::uint64_t d);

/// One DDT row: counts of F(x) + F(x+a) = b over all x, indexed by b.
std::vector<std::uint32_t> ddt_row(const VectorialFunction& f, std::uint32_t a);

/// Full difference distribution table (2^n x 2^n); meant for small n.
std::vector<std::vector<std::uint32_t>> ddt(const VectorialFunction& f);

/// max DDT entry over rows a != 0, streamed row by row.
std::uint32_t differential_uniformity(const VectorialFunction& f);

bool is_apn(const VectorialFunction& f);

/// (linearity, nonlinearity): linearity is the max |Walsh value| over all
/// nonzero output masks, one fast Walsh-Hadamard transform per component;
/// nonlinearity = 2^(n_in - 1) - linearity / 2.
std::pair<std::uint32_t, std::uint32_t> walsh_linearity(const VectorialFunction& f);

/// Squared Walsh spectrum sum of one component (Parseval check helper).
std::uint64_t walsh_power_sum(const VectorialFunction& f, std::uint32_t v);

/// Max over output coordinates of the ANF degree (binary Moebius transform).
unsigned algebraic_degree(const VectorialFunction& f);

bool is_quadratic(const VectorialFunction& f);

SpectrumReport analyze(const VectorialFunction& f);

}  // namespace apnext
