#include "apnext/univar.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "apnext/parallel.hpp"

namespace apnext {

namespace {

// v mod 2^n-1 by folding the high bits; maps to [0, 2^n-2]
std::uint64_t mod_order(std::uint64_t v, unsigned n) {
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    while (v > m) v = (v & m) + (v >> n);
    return v == m ? 0 : v;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

Elem univariate_coefficient(const FieldCtx& ctx, std::span<const Elem> f, std::uint32_t r) {
    const std::uint32_t order = ctx.group_order();
    if (r < 1 || r > order - 1)
        throw std::invalid_argument("coefficient index must be in [1, 2^n-2]");
    if (f.size() != ctx.size()) throw std::invalid_argument("table size does not match the field");
    Elem acc = 0;
    const std::int64_t e = static_cast<std::int64_t>(order - r);
    for (std::uint32_t x = 1; x < ctx.size(); ++x)
        if (f[x]) acc ^= ctx.mul(f[x], ctx.pow(x, e));
    return acc;
}

std::vector<Elem> interpolate(const FieldCtx& ctx, std::span<const Elem> f) {
    std::vector<Elem> c(ctx.size(), 0);  // exponents 0 .. 2^n-1
    c[0] = f[0];
    for (std::uint32_t r = 1; r < ctx.group_order(); ++r)
        c[r] = univariate_coefficient(ctx, f, r);
    Elem top = 0;  // coefficient of x^(2^n-1) = sum of all values
    for (std::uint32_t x = 0; x < ctx.size(); ++x) top ^= f[x];
    c[ctx.group_order()] = top;
    return c;
}

Elem eval_poly(const FieldCtx& ctx, std::span<const Elem> coeffs, Elem x) {
    Elem acc = 0;
    for (std::uint32_t r = 0; r < coeffs.size(); ++r)
        if (coeffs[r]) acc ^= ctx.mul(coeffs[r], ctx.pow(x, r));
    return acc;
}

std::vector<Elem> build_g(const FieldCtx& ctx, Elem a, unsigned t, const LinearizedPoly& L) {
    if (t < 1 || t >= ctx.n()) throw std::invalid_argument("t must be in [1, n-1]");
    const std::int64_t e = static_cast<std::int64_t>(ctx.group_order()) - (1 << t) - 1;  // 2^n-2^t-2
    std::vector<Elem> f(ctx.size());
    for (std::uint32_t x = 0; x < ctx.size(); ++x) {
        unsigned left = ctx.trace(ctx.mul(a, x)) ^ 1u;
        unsigned right = ctx.trace(ctx.mul(ctx.pow(x, e), eval_linearized(ctx, L, x))) ^ 1u;
        f[x] = left & right;
    }
    return f;
}

std::vector<Elem> build_f_gold(const FieldCtx& ctx, unsigned t, const LinearizedPoly& L) {
    return build_g(ctx, 1, t, L);
}

std::vector<Elem> build_f_cube(const FieldCtx& ctx, Elem a, const LinearizedPoly& L) {
    if (a == 0) throw std::invalid_argument("a must be nonzero");
    const std::int64_t e = static_cast<std::int64_t>(ctx.size()) - 4;  // 2^n-4
    std::vector<Elem> f(ctx.size());
    for (std::uint32_t x = 0; x < ctx.size(); ++x) {
        Elem xe = ctx.pow(x, e);
        unsigned first = ctx.trace(xe) ^ 1u;
        unsigned mid = ctx.trace(ctx.mul(a, x)) ^ 1u;
        unsigned last = ctx.trace(ctx.mul(xe, eval_linearized(ctx, L, x))) ^ 1u;
        f[x] = first & mid & last;
    }
    return f;
}

namespace {

// Coefficient of x^idx of g as a function on the multiplicative group
// (cyclic exponents 0 .. 2^n-2). For idx >= 1 this equals the univariate
// coefficient; idx 0 additionally absorbs the constant term and the top
// coefficient.
Elem cyclic_g_coefficient(const FieldCtx& ctx, Elem a, unsigned t, const LinearizedPoly& L,
                          std::uint32_t idx) {
    const unsigned n = ctx.n();
    const std::uint32_t order = ctx.group_order();
    // value -> e with 2^e == value (mod 2^n-1), e in [0, n-1]
    // powers of two below 2^n are their own residues
    Elem acc = (idx == 0) ? 1u : 0u;
    for (unsigned i = 0; i < n; ++i)
        if (idx == (1u << i)) acc ^= ctx.frob(a, static_cast<int>(i));

    for (unsigned k = 0; k < n; ++k) {
        const std::uint64_t target =
            mod_order(static_cast<std::uint64_t>(idx) + (1u << k) + (1u << ((k + t) % n)), n);
        // rule (iii): 2^(j+k) == target
        if (target && std::popcount(target) == 1) {
            unsigned jk = static_cast<unsigned>(std::countr_zero(target));
            unsigned j = (jk + n - k % n) % n;
            acc ^= ctx.frob(L.coeffs[j], static_cast<int>(k));
        }
        // rule (i): 2^i + 2^(j+k) == target
        for (unsigned i = 0; i < n; ++i) {
            std::uint64_t rem = mod_order(target + order - (1u << i), n);
            if (rem && std::popcount(rem) == 1) {
                unsigned jk = static_cast<unsigned>(std::countr_zero(rem));
                unsigned j = (jk + n - k % n) % n;
                acc ^= ctx.mul(ctx.frob(a, static_cast<int>(i)),
                               ctx.frob(L.coeffs[j], static_cast<int>(k)));
            }
        }
    }
    return acc;
}

}  // namespace

Elem closed_form_g_coefficient(const FieldCtx& ctx, Elem a, unsigned t, const LinearizedPoly& L,
                               std::uint32_t r) {
    if (r < 1 || r > ctx.group_order() - 1)
        throw std::invalid_argument("coefficient index must be in [1, 2^n-2]");
    if (L.coeffs.size() != ctx.n())
        throw std::invalid_argument("linearized polynomial must have exactly n coefficients");
    return cyclic_g_coefficient(ctx, a, t, L, r);
}

Elem closed_form_v_coefficient(const FieldCtx& ctx, Elem a, const LinearizedPoly& L,
                               std::uint32_t r) {
    if (r < 1 || r > ctx.group_order() - 1)
        throw std::invalid_argument("coefficient index must be in [1, 2^n-2]");
    const unsigned n = ctx.n();
    Elem acc = cyclic_g_coefficient(ctx, a, 1, L, r);
    for (unsigned s = 0; s < n; ++s) {
        std::uint32_t idx = static_cast<std::uint32_t>(
            mod_order(static_cast<std::uint64_t>(r) + (1u << s) + (1u << ((s + 1) % n)), n));
        acc ^= cyclic_g_coefficient(ctx, a, 1, L, idx);
    }
    return acc;
}

bool is_zero_indicator_by_coefficients(const FieldCtx& ctx, std::span<const Elem> f) {
    // indicator of {0} = x^(2^n-1) + 1: constant term 1, top coefficient 1,
    // everything in between zero
    if (f[0] != 1) return false;
    Elem top = 0;
    for (std::uint32_t x = 0; x < ctx.size(); ++x) top ^= f[x];
    if (top != 1) return false;
    for (std::uint32_t r = 1; r < ctx.group_order(); ++r)
        if (univariate_coefficient(ctx, f, r) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::gold_t1: return "gold_t1";
        case Relation::gold_mid_t: return "gold_mid_t";
        case Relation::gold_half_s: return "gold_half_s";
        case Relation::gold_half_s2: return "gold_half_s2";
        case Relation::gold_half_st: return "gold_half_st";
        case Relation::gold_half_st1: return "gold_half_st1";
        case Relation::cube_second: return "cube_second";
        case Relation::cube_first: return "cube_first";
        case Relation::cube_fourth: return "cube_fourth";
        case Relation::cube_fifth: return "cube_fifth";
    }
    return "?";
}

Relation relation_from_name(const std::string& name) {
    for (Relation r : {Relation::gold_t1, Relation::gold_mid_t, Relation::gold_half_s,
                       Relation::gold_half_s2, Relation::gold_half_st, Relation::gold_half_st1,
                       Relation::cube_second, Relation::cube_first, Relation::cube_fourth,
                       Relation::cube_fifth})
        if (name == relation_name(r)) return r;
    throw std::invalid_argument("unknown relation: " + name);
}

namespace {

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) { unsigned t = a % b; a = b; b = t; }
    return a;
}

bool is_gold(Relation r) {
    switch (r) {
        case Relation::cube_second:
        case Relation::cube_first:
        case Relation::cube_fourth:
        case Relation::cube_fifth: return false;
        default: return true;
    }
}

}  // namespace

std::vector<unsigned> relation_admissible_t(Relation r, unsigned n) {
    std::vector<unsigned> ts;
    switch (r) {
        case Relation::gold_t1:
            if (n >= 6) ts.push_back(1);
            break;
        case Relation::gold_mid_t:
            for (unsigned t = 2; 2 * t + 2 < n; ++t)
                if (gcd_u(t, n) == 1) ts.push_back(t);
            break;
        case Relation::gold_half_s:
        case Relation::gold_half_s2:
        case Relation::gold_half_st:
        case Relation::gold_half_st1:
            if (n >= 7 && n % 2 == 1 && gcd_u((n - 1) / 2, n) == 1) ts.push_back((n - 1) / 2);
            break;
        default:
            // cube relations take t = 1 implicitly
            if (n >= 11 && n % 2 == 1) ts.push_back(1);
            break;
    }
    return ts;
}

bool relation_valid_at(Relation r, unsigned n) { return !relation_admissible_t(r, n).empty(); }

namespace {

struct Check {
    std::uint32_t r;
    Elem expected;
};

// All (index, expected-coefficient) pairs of one relation for given (a, t, L).
std::vector<Check> relation_checks(Relation rel, const FieldCtx& ctx, Elem a, unsigned t,
                                   const LinearizedPoly& L) {
    const unsigned n = ctx.n();
    const std::uint32_t order = ctx.group_order();
    const auto& l = L.coeffs;
    auto fr = [&](Elem x, int k) { return ctx.frob(x, k); };
    auto mul = [&](Elem x, Elem y) { return ctx.mul(x, y); };
    auto sq = [&](Elem x) { return ctx.mul(x, x); };
    std::vector<Check> cs;

    auto half_s_range = [&](bool skip_t_plus_2) {
        std::vector<unsigned> ss;
        for (unsigned s = 2; s + 1 <= t && s <= t - 1; ++s) ss.push_back(s);
        for (unsigned s = t + (skip_t_plus_2 ? 3 : 2); s <= n - 2; ++s) ss.push_back(s);
        return ss;
    };

    switch (rel) {
        case Relation::gold_t1: {
            for (unsigned s = 4; s <= n - 1; ++s)
                cs.push_back({(1u << s) - 3, static_cast<Elem>(l[s - 1] ^ l[s])});
            cs.push_back({7, static_cast<Elem>(l[1] ^ l[3] ^ fr(l[0], -1) ^ fr(l[4], -1))});
            cs.push_back({1, static_cast<Elem>(l[1] ^ l[2] ^ fr(l[0], -1) ^ fr(l[2], -1) ^ 1u)});
            cs.push_back({3, static_cast<Elem>(l[1] ^ l[2] ^ sq(l[2]) ^ fr(l[0], -1) ^
                                               sq(l[n - 1]) ^ fr(l[3], -1))});
            break;
        }
        case Relation::gold_mid_t: {
            for (unsigned s = 2; s <= t - 1; ++s) {
                std::uint32_t r = static_cast<std::uint32_t>(
                    mod_order(static_cast<std::uint64_t>(order) + (1u << s) - (1u << t) - 1, n));
                cs.push_back({r, static_cast<Elem>(l[s - 1] ^ l[s])});
            }
            for (unsigned s = t + 2; s <= n - 2; ++s)
                cs.push_back({(1u << s) - (1u << t) - 1, static_cast<Elem>(l[s - 1] ^ l[s])});
            break;
        }
        case Relation::gold_half_s: {
            for (unsigned s : half_s_range(false)) {
                std::uint32_t r = static_cast<std::uint32_t>(
                    mod_order(static_cast<std::uint64_t>(order) + (1u << s) - (1u << t) - 1, n));
                Elem rhs = l[s - 1] ^ l[s] ^ fr(l[n - 1], static_cast<int>(t) + 1) ^
                           fr(l[(s + t) % n], static_cast<int>(t) + 1);
                cs.push_back({r, rhs});
            }
            break;
        }
        case Relation::gold_half_s2: {
            for (unsigned s : half_s_range(true)) {
                Elem rhs = l[t] ^ l[s] ^ fr(l[0], static_cast<int>(t) + 1) ^
                           fr(l[(s + t) % n], static_cast<int>(t) + 1);
                cs.push_back({(1u << s) - 1, rhs});
            }
            break;
        }
        case Relation::gold_half_st: {
            Elem rhs = l[t] ^ l[t + 1] ^ fr(l[0], static_cast<int>(t) + 1) ^
                       fr(l[n - 1], static_cast<int>(t) + 1);
            cs.push_back({(1u << t) - 1, rhs});
            break;
        }
        case Relation::gold_half_st1: {
            Elem rhs = l[t] ^ l[1] ^ fr(l[0], static_cast<int>(t) + 1) ^
                       fr(l[t + 1], static_cast<int>(t) + 1) ^ 1u;
            cs.push_back({1, rhs});
            break;
        }
        case Relation::cube_second: {
            for (unsigned m = 5; m <= n - 3; ++m) {
                Elem am1 = fr(a, static_cast<int>(m) - 1);
                Elem rhs = l[m] ^ sq(l[m - 1]) ^ mul(am1, l[m - 1]) ^ mul(am1, sq(l[m - 2]));
                cs.push_back({(1u << m) - 9, rhs});
            }
            break;
        }
        case Relation::cube_first: {
            for (unsigned m = 6; m <= n - 3; ++m) {
                int mi = static_cast<int>(m);
                Elem am1 = fr(a, mi - 1), am = fr(a, mi), ap1 = fr(a, mi + 1);
                Elem rhs = l[m + 2] ^ fr(l[m + 1], -1) ^ mul(static_cast<Elem>(am1 ^ ap1), l[m + 1]) ^
                           mul(am1, fr(l[m], -1)) ^ l[m] ^
                           mul(static_cast<Elem>(am1 ^ ap1), l[m - 1]) ^
                           mul(am1, fr(l[2], mi - 1)) ^ fr(l[2], mi) ^ mul(ap1, fr(l[1], mi)) ^
                           mul(ap1, fr(l[0], mi - 1)) ^ am;
                cs.push_back({(1u << m) - 3, rhs});
            }
            break;
        }
        case Relation::cube_fourth: {
            for (unsigned m = 4; m <= n - 3; ++m) {
                int mi = static_cast<int>(m);
                Elem am = fr(a, mi), ap2 = fr(a, mi + 2);
                Elem a4 = ctx.pow(a, 4);
                Elem rhs = mul(static_cast<Elem>(ap2 ^ am), sq(l[n - 1])) ^
                           mul(ap2, fr(l[n - m], mi)) ^ mul(a, sq(l[m + 1])) ^
                           mul(static_cast<Elem>(a4 ^ a), l[m]) ^
                           mul(static_cast<Elem>(a4 ^ a), sq(l[m - 1])) ^ mul(a, fr(l[2], mi)) ^
                           mul(am, l[2]) ^ mul(am, sq(l[1])) ^ mul(am, l[0]);
                cs.push_back({(1u << m) - 5, rhs});
            }
            break;
        }
        case Relation::cube_fifth: {
            Elem a32 = ctx.pow(a, 32);
            Elem a2 = sq(a), an1 = fr(a, -1);
            Elem rhs = mul(a32, fr(l[0], -1)) ^ mul(a32, l[1]) ^
                       mul(static_cast<Elem>(a2 ^ an1), ctx.pow(l[3], 4)) ^ mul(a2, l[5]) ^
                       mul(an1, fr(l[6], -1)) ^ mul(a32, ctx.pow(l[n - 3], 4)) ^
                       mul(a32, ctx.pow(l[n - 1], 4));
            cs.push_back({19, rhs});
            break;
        }
    }
    return cs;
}

}  // namespace

CoeffIdentityReport verify_relation(Relation rel, const FieldCtx& ctx, unsigned trials,
                                    std::uint64_t seed, unsigned t, unsigned jobs) {
    const unsigned n = ctx.n();
    auto ts = relation_admissible_t(rel, n);
    if (ts.empty())
        throw std::invalid_argument(std::string("relation ") + relation_name(rel) +
                                    " is not applicable at n=" + std::to_string(n));
    if (t == 0) {
        t = ts.front();
    } else {
        bool ok = false;
        for (unsigned cand : ts)
            if (cand == t) ok = true;
        if (!ok)
            throw std::invalid_argument("t=" + std::to_string(t) + " is not admissible for " +
                                        relation_name(rel) + " at n=" + std::to_string(n));
    }

    CoeffIdentityReport rep;
    rep.relation = rel;
    rep.n = n;
    rep.t = is_gold(rel) ? t : 1;
    rep.seed = seed;
    rep.trials = trials;

    const bool gold = is_gold(rel);
    std::vector<std::vector<CoeffMismatch>> found(trials);
    const unsigned tt = rep.t;
    parallel_for(jobs, trials, [&](std::size_t trial) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
        LinearizedPoly L;
        L.coeffs.resize(n);
        for (unsigned j = 0; j < n; ++j)
            L.coeffs[j] = static_cast<Elem>(rng() & ctx.group_order());
        Elem a = 1;
        if (!gold) {
            do { a = static_cast<Elem>(rng() & ctx.group_order()); } while (a == 0);
        }
        std::vector<Elem> table = gold ? build_g(ctx, 1, tt, L) : build_f_cube(ctx, a, L);
        for (const Check& c : relation_checks(rel, ctx, a, tt, L)) {
            Elem lhs = univariate_coefficient(ctx, table, c.r);
            if (lhs != c.expected) found[trial].push_back({L, a, c.r, lhs, c.expected});
        }
    });
    for (auto& v : found)
        rep.mismatches.insert(rep.mismatches.end(), v.begin(), v.end());
    return rep;
}

// ---------------------------------------------------------------------------

const char* weight_lemma_name(WeightLemma l) {
    switch (l) {
        case WeightLemma::gold_exponents2: return "gold_exponents2";
        case WeightLemma::gold_exponents3: return "gold_exponents3";
        case WeightLemma::trace2: return "trace2";
        case WeightLemma::trace: return "trace";
        case WeightLemma::trace4: return "trace4";
        case WeightLemma::trace5: return "trace5";
    }
    return "?";
}

WeightLemma weight_lemma_from_name(const std::string& name) {
    for (WeightLemma l : {WeightLemma::gold_exponents2, WeightLemma::gold_exponents3,
                          WeightLemma::trace2, WeightLemma::trace, WeightLemma::trace4,
                          WeightLemma::trace5})
        if (name == weight_lemma_name(l)) return l;
    throw std::invalid_argument("unknown weight lemma: " + name);
}

namespace {

int wt(std::uint64_t v) { return std::popcount(v); }

// 2^e mod (2^n - 1)
std::uint64_t p2(unsigned e, unsigned n) { return std::uint64_t{1} << (e % n); }

}  // namespace

WeightLemmaReport verify_weight_lemma(WeightLemma lemma, unsigned n_max) {
    WeightLemmaReport rep;
    rep.lemma = lemma;
    auto bad = [&](int n, int mt, int s, int k) {
        rep.counterexamples.push_back({n, mt, s, k});
    };

    switch (lemma) {
        case WeightLemma::gold_exponents2: {
            // 1 < t < n/2, s in {2..t-1, t+2..n-2}, k not in {0, t+1}:
            // wt(2^s - (2^t+1) + 2^k + 2^(k+t) mod 2^n-1) > 2
            rep.n_min = 6;
            rep.n_max = n_max;
            for (unsigned n = rep.n_min; n <= n_max; ++n) {
                const std::uint64_t M = (std::uint64_t{1} << n) - 1;
                for (unsigned t = 2; 2 * t < n; ++t) {
                    for (unsigned s = 2; s <= n - 2; ++s) {
                        if (s == t || s == t + 1 || s == 1) continue;
                        if (s >= t && s < t + 2) continue;
                        for (unsigned k = 0; k < n; ++k) {
                            if (k == 0 || k == t + 1) continue;
                            std::uint64_t h =
                                mod_order(M + (std::uint64_t{1} << s) - (std::uint64_t{1} << t) - 1 +
                                              (std::uint64_t{1} << k) + p2(k + t, n),
                                          n);
                            ++rep.tuples_checked;
                            if (wt(h) <= 2) bad(static_cast<int>(n), static_cast<int>(t),
                                                static_cast<int>(s), static_cast<int>(k));
                        }
                    }
                }
            }
            break;
        }
        case WeightLemma::gold_exponents3: {
            // n odd >= 5, t = (n-1)/2, s in {1..t, t+3..n-2}:
            // wt(2^s - 1 + 2^k + 2^(k+t) mod 2^n-1) <= 2  iff  k in {0, t+1}
            rep.n_min = 5;
            rep.n_max = n_max;
            for (unsigned n = rep.n_min; n <= n_max; ++n) {
                if (n % 2 == 0) continue;
                const unsigned t = (n - 1) / 2;
                for (unsigned s = 1; s <= n - 2; ++s) {
                    if (s > t && s < t + 3) continue;
                    for (unsigned k = 0; k < n; ++k) {
                        std::uint64_t h = mod_order(
                            (std::uint64_t{1} << s) - 1 + (std::uint64_t{1} << k) + p2(k + t, n), n);
                        ++rep.tuples_checked;
                        bool low = wt(h) <= 2;
                        bool named = (k == 0 || k == t + 1);
                        if (low != named) bad(static_cast<int>(n), static_cast<int>(t),
                                              static_cast<int>(s), static_cast<int>(k));
                    }
                }
            }
            break;
        }
        case WeightLemma::trace2: {
            // n > 9, 5 <= m <= n-3: wt(2^m-9 + 2^s+2^(s+1) + 2^k+2^(k+1)) <= 2
            // iff (k,s) in {(0,1),(1,0)}; and wt(2^m-9 + 2^k+2^(k+1)) > 2 always
            rep.n_min = 10;
            rep.n_max = n_max;
            for (unsigned n = rep.n_min; n <= n_max; ++n) {
                for (unsigned m = 5; m + 3 <= n; ++m) {
                    for (unsigned k = 0; k < n; ++k) {
                        std::uint64_t base = (std::uint64_t{1} << m) - 9 + (std::uint64_t{1} << k) +
                                             p2(k + 1, n);
                        ++rep.tuples_checked;
                        if (wt(mod_order(base, n)) <= 2)
                            bad(static_cast<int>(n), static_cast<int>(m), -1, static_cast<int>(k));
                        for (unsigned s = 0; s < n; ++s) {
                            std::uint64_t h =
                                mod_order(base + (std::uint64_t{1} << s) + p2(s + 1, n), n);
                            ++rep.tuples_checked;
                            bool low = wt(h) <= 2;
                            bool named = (k == 0 && s == 1) || (k == 1 && s == 0);
                            if (low != named) bad(static_cast<int>(n), static_cast<int>(m),
                                                  static_cast<int>(s), static_cast<int>(k));
                        }
                    }
                }
            }
            break;
        }
        case WeightLemma::trace: {
            // n >= 9, 5 < m <= n-3: wt(2^m-3 + 2^s+2^(s+1) + 2^k+2^(k+1)) <= 2 iff
            // (k,s) in {(0,m),(0,m-1),(m-1,0),(m,0),(n-1,n-1)};
            // wt(2^m-3 + 2^k+2^(k+1)) <= 2 iff k = 0
            rep.n_min = 9;
            rep.n_max = n_max;
            for (unsigned n = rep.n_min; n <= n_max; ++n) {
                for (unsigned m = 6; m + 3 <= n; ++m) {
                    for (unsigned k = 0; k < n; ++k) {
                        std::uint64_t base = (std::uint64_t{1} << m) - 3 + (std::uint64_t{1} << k) +
                                             p2(k + 1, n);
                        ++rep.tuples_checked;
                        if ((wt(mod_order(base, n)) <= 2) != (k == 0))
                            bad(static_cast<int>(n), static_cast<int>(m), -1, static_cast<int>(k));
                        for (unsigned s = 0; s < n; ++s) {
                            std::uint64_t h =
                                mod_order(base + (std::uint64_t{1} << s) + p2(s + 1, n), n);
                            ++rep.tuples_checked;
                            bool low = wt(h) <= 2;
                            bool named = (k == 0 && (s == m || s == m - 1)) ||
                                         (k == m - 1 && s == 0) || (k == m && s == 0) ||
                                         (k == n - 1 && s == n - 1);
                            if (low != named) bad(static_cast<int>(n), static_cast<int>(m),
                                                  static_cast<int>(s), static_cast<int>(k));
                        }
                    }
                }
            }
            break;
        }
        case WeightLemma::trace4: {
            // n >= 9, 3 < m <= n-3: wt(2^m-5 + 2^s+2^(s+1) + 2^k+2^(k+1)) <= 2 iff
            // (k,s) in {(0,0),(0,1),(1,0),(1,m),(m,1)};
            // wt(2^m-5 + 2^k+2^(k+1)) <= 2 iff k = 1
            rep.n_min = 9;
            rep.n_max = n_max;
            for (unsigned n = rep.n_min; n <= n_max; ++n) {
                for (unsigned m = 4; m + 3 <= n; ++m) {
                    for (unsigned k = 0; k < n; ++k) {
                        std::uint64_t base = (std::uint64_t{1} << m) - 5 + (std::uint64_t{1} << k) +
                                             p2(k + 1, n);
                        ++rep.tuples_checked;
                        if ((wt(mod_order(base, n)) <= 2) != (k == 1))
                            bad(static_cast<int>(n), static_cast<int>(m), -1, static_cast<int>(k));
                        for (unsigned s = 0; s < n; ++s) {
                            std::uint64_t h =
                                mod_order(base + (std::uint64_t{1} << s) + p2(s + 1, n), n);
                            ++rep.tuples_checked;
                            bool low = wt(h) <= 2;
                            bool named = (k == 0 && (s == 0 || s == 1)) ||
                                         (k == 1 && (s == 0 || s == m)) || (k == m && s == 1);
                            if (low != named) bad(static_cast<int>(n), static_cast<int>(m),
                                                  static_cast<int>(s), static_cast<int>(k));
                        }
                    }
                }
            }
            break;
        }
        case WeightLemma::trace5: {
            // n >= 9: wt(19 + 2^s+2^(s+1) + 2^k+2^(k+1)) <= 2 iff
            // (k,s) in {(0,2),(2,0),(2,n-1),(n-1,2)}; wt(19 + 2^k+2^(k+1)) > 2 always
            rep.n_min = 9;
            rep.n_max = n_max;
            for (unsigned n = rep.n_min; n <= n_max; ++n) {
                for (unsigned k = 0; k < n; ++k) {
                    std::uint64_t base = 19 + (std::uint64_t{1} << k) + p2(k + 1, n);
                    ++rep.tuples_checked;
                    if (wt(mod_order(base, n)) <= 2) bad(static_cast<int>(n), -1, -1, static_cast<int>(k));
                    for (unsigned s = 0; s < n; ++s) {
                        std::uint64_t h = mod_order(base + (std::uint64_t{1} << s) + p2(s + 1, n), n);
                        ++rep.tuples_checked;
                        bool low = wt(h) <= 2;
                        bool named = (k == 0 && s == 2) || (k == 2 && s == 0) ||
                                     (k == 2 && s == n - 1) || (k == n - 1 && s == 2);
                        if (low != named) bad(static_cast<int>(n), -1, static_cast<int>(s),
                                              static_cast<int>(k));
                    }
                }
            }
            break;
        }
    }
    return rep;
}

}  // namespace apnext
