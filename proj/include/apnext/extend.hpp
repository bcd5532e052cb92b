#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "apnext/field.hpp"
#include "apnext/ortho.hpp"
#include "apnext/vecfun.hpp"

namespace apnext {

/// L(X) = sum_j coeffs[j] * X^(2^j); always exactly n coefficients.
struct LinearizedPoly {
    std::vector<Elem> coeffs;
};

Elem eval_linearized(const FieldCtx& ctx, const LinearizedPoly& L, Elem x);

/// The pair (L, a) of an extension T(x,y) = (F(x) + y*L(x), y*tr(ax)).
struct ExtensionSpec {
    LinearizedPoly L;
    Elem a = 0;
};

/// Builds T in dimension n+1. Input index packs (x, y) as bits(x) | y << n;
/// outputs pack the field part in bits 0..n-1 and the GF(2) part in bit n.
VectorialFunction build_extension(const FieldCtx& ctx, const VectorialFunction& f,
                                  const ExtensionSpec& spec);

/// True iff tr(pi(x) * L(x)) = 1 for every nonzero x with tr(ax) = 0.
bool check_trace_condition(const FieldCtx& ctx, const OrthoDerivative& od,
                           const ExtensionSpec& spec);

/// First x violating the condition, or nullopt when it holds.
std::optional<Elem> find_trace_condition_violation(const FieldCtx& ctx, const OrthoDerivative& od,
                                                   const ExtensionSpec& spec);

struct PerASolveStats {
    Elem a = 0;
    bool feasible = false;
    unsigned rank = 0;
    unsigned equations = 0;
};

struct ExtendSearchOptions {
    bool all_a = false;   // record per-a stats and scan every a
    unsigned jobs = 1;    // worker threads for the per-a solves
    // invoked periodically with the number of a values finished
    std::function<void(std::uint32_t)> progress;
};

struct ExtendSearchResult {
    std::optional<ExtensionSpec> witness;  // smallest-a witness when present
    std::uint32_t tried_a = 0;
    double elapsed_seconds = 0.0;
    std::optional<std::vector<PerASolveStats>> per_a;
};

/// Decides 0-extendability: computes the ortho-derivative once, then for each
/// nonzero a solves the affine GF(2) system over the n^2 coefficient bits of L
/// given by tr(pi(x) L(x)) = 1 on {x != 0 : tr(ax) = 0}. Any solution is a
/// witness; it is re-validated through check_trace_condition and by building the
/// extension (APN with linearity exactly 2^n).
/// Throws std::invalid_argument when F is not quadratic APN.
ExtendSearchResult is_zero_extendable(const FieldCtx& ctx, const VectorialFunction& f,
                                      const ExtendSearchOptions& opts = {});

/// Per-a feasibility of the trace-condition system (no witness extraction).
bool trace_condition_feasible(const FieldCtx& ctx, const OrthoDerivative& od, Elem a);

}  // namespace apnext
