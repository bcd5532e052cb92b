#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apnext/extend.hpp"
#include "apnext/field.hpp"

namespace apnext {

/// Coefficient of x^r (1 <= r <= 2^n-2) in the univariate form of the
/// function given by the table f: c_r = sum_{x != 0} f(x) * x^(2^n-1-r).
Elem univariate_coefficient(const FieldCtx& ctx, std::span<const Elem> f, std::uint32_t r);

/// Full coefficient vector c_0 .. c_{2^n-1} of the interpolating polynomial
/// (c_0 = f(0), top coefficient = sum of all values).
std::vector<Elem> interpolate(const FieldCtx& ctx, std::span<const Elem> f);

/// Evaluates a coefficient vector at x (exponents 0 .. 2^n-1).
Elem eval_poly(const FieldCtx& ctx, std::span<const Elem> coeffs, Elem x);

/// g(x) = (tr(ax)+1)(tr(x^(2^n-2^t-2) L(x))+1), as 0/1 field values.
std::vector<Elem> build_g(const FieldCtx& ctx, Elem a, unsigned t, const LinearizedPoly& L);

/// The Gold-case indicator candidate: g with a = 1.
std::vector<Elem> build_f_gold(const FieldCtx& ctx, unsigned t, const LinearizedPoly& L);

/// f(x) = (tr(x^(2^n-4))+1)(tr(ax)+1)(tr(x^(2^n-4) L(x))+1).
std::vector<Elem> build_f_cube(const FieldCtx& ctx, Elem a, const LinearizedPoly& L);

/// Closed form of the coefficient u_r of g by the three sum rules: products
/// a^(2^i) l_j^(2^k) over 2^i + 2^(j+k) == r + 2^k + 2^(k+t) (mod 2^n-1),
/// plus a^(2^i) when r = 2^i, plus l_j^(2^k) over 2^(j+k) == r + 2^k + 2^(k+t).
/// Requires 1 <= r <= 2^n-2.
Elem closed_form_g_coefficient(const FieldCtx& ctx, Elem a, unsigned t, const LinearizedPoly& L,
                               std::uint32_t r);

/// Closed form of the coefficient v_r of build_f_cube's f via
/// v_r = u_r + sum_s u_{r + 2^s + 2^(s+1)} with indices mod 2^n-1.
/// Requires 1 <= r <= 2^n-2.
Elem closed_form_v_coefficient(const FieldCtx& ctx, Elem a, const LinearizedPoly& L,
                               std::uint32_t r);

/// True iff the table is the indicator of {0}, certified through its
/// coefficient vector (that of x^(2^n-1) + 1).
bool is_zero_indicator_by_coefficients(const FieldCtx& ctx, std::span<const Elem> f);

// ---------------------------------------------------------------------------
// coefficient identities

enum class Relation {
    gold_t1,
    gold_mid_t,
    gold_half_s,
    gold_half_s2,
    gold_half_st,
    gold_half_st1,
    cube_second,
    cube_first,
    cube_fourth,
    cube_fifth,
};

const char* relation_name(Relation r);
Relation relation_from_name(const std::string& name);

struct CoeffMismatch {
    LinearizedPoly L;
    Elem a = 0;
    std::uint32_t index = 0;  // the exponent r where lhs != rhs
    Elem lhs = 0;
    Elem rhs = 0;
};

struct CoeffIdentityReport {
    Relation relation = Relation::gold_t1;
    unsigned n = 0;
    unsigned t = 0;  // 0 when not applicable
    std::uint64_t seed = 0;
    unsigned trials = 0;
    std::vector<CoeffMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Admissible t values of a relation at dimension n (empty when the relation
/// takes no t or n is outside its validity range).
std::vector<unsigned> relation_admissible_t(Relation r, unsigned n);

/// True iff the relation can be checked at dimension n.
bool relation_valid_at(Relation r, unsigned n);

/// Compares the extracted coefficient against the relation's closed-form
/// right-hand side for `trials` seeded random (L, a) over every index in the
/// relation's range. Gold relations fix a = 1; t must be admissible (pass 0
/// for relations that determine it). Throws std::invalid_argument for an
/// out-of-range n or t.
CoeffIdentityReport verify_relation(Relation r, const FieldCtx& ctx, unsigned trials,
                                    std::uint64_t seed, unsigned t = 0, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// 2-weight lemmas

enum class WeightLemma {
    gold_exponents2,
    gold_exponents3,
    trace2,
    trace,
    trace4,
    trace5,
};

const char* weight_lemma_name(WeightLemma l);
WeightLemma weight_lemma_from_name(const std::string& name);

struct WeightLemmaReport {
    WeightLemma lemma = WeightLemma::gold_exponents2;
    unsigned n_min = 0;
    unsigned n_max = 0;
    std::uint64_t tuples_checked = 0;
    std::vector<std::array<int, 4>> counterexamples;  // (n, m-or-t, s, k)
    bool pass() const { return counterexamples.empty(); }
};

/// Exhaustively sweeps the lemma's parameter tuples for all admissible n up
/// to n_max, recording every tuple whose weight classification contradicts
/// the stated one.
WeightLemmaReport verify_weight_lemma(WeightLemma l, unsigned n_max);

}  // namespace apnext
