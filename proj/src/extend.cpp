#include "apnext/extend.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>

#include "apnext/gf2.hpp"
#include "apnext/parallel.hpp"

namespace apnext {

Elem eval_linearized(const FieldCtx& ctx, const LinearizedPoly& L, Elem x) {
    if (L.coeffs.size() != ctx.n())
        throw std::invalid_argument("linearized polynomial must have exactly n coefficients");
    Elem acc = 0;
    for (unsigned j = 0; j < ctx.n(); ++j)
        acc ^= ctx.mul(L.coeffs[j], ctx.frob(x, static_cast<int>(j)));
    return acc;
}

VectorialFunction build_extension(const FieldCtx& ctx, const VectorialFunction& f,
                                  const ExtensionSpec& spec) {
    const unsigned n = ctx.n();
    if (f.n_in != n || f.n_out != n)
        throw std::invalid_argument("function dimensions do not match the field context");
    if (spec.a == 0) throw std::invalid_argument("extension requires a != 0");
    std::vector<Elem> t(std::size_t{2} << n);
    for (std::uint32_t x = 0; x < ctx.size(); ++x) {
        Elem fx = f.table[x];
        t[x] = fx;  // y = 0: (F(x), 0)
        Elem lx = eval_linearized(ctx, spec.L, x);
        Elem bit = ctx.trace(ctx.mul(spec.a, x));
        t[x | (1u << n)] = (fx ^ lx) | (bit << n);
    }
    return VectorialFunction(n + 1, n + 1, std::move(t));
}

std::optional<Elem> find_trace_condition_violation(const FieldCtx& ctx, const OrthoDerivative& od,
                                                   const ExtensionSpec& spec) {
    for (std::uint32_t x = 1; x < ctx.size(); ++x) {
        if (ctx.trace(ctx.mul(spec.a, x))) continue;
        if (ctx.trace(ctx.mul(od.pi.table[x], eval_linearized(ctx, spec.L, x))) != 1)
            return static_cast<Elem>(x);
    }
    return std::nullopt;
}

bool check_trace_condition(const FieldCtx& ctx, const OrthoDerivative& od,
                           const ExtensionSpec& spec) {
    return !find_trace_condition_violation(ctx, od, spec).has_value();
}

namespace {

// Row of the affine system for one x: bit (j*n + b) is tr(pi(x) x^(2^j) beta_b)
// with beta_b the basis element 1<<b. n <= 16, so rows fit in 256 bits.
struct RowTable {
    unsigned n;
    unsigned words;
    std::vector<std::uint64_t> bits;  // ctx.size() rows, words each

    RowTable(const FieldCtx& ctx, const OrthoDerivative& od)
        : n(ctx.n()), words((n * n + 63) / 64), bits(ctx.size() * words, 0) {
        for (std::uint32_t x = 1; x < ctx.size(); ++x) {
            std::uint64_t* row = &bits[std::size_t{x} * words];
            for (unsigned j = 0; j < n; ++j) {
                Elem w = ctx.mul(od.pi.table[x], ctx.frob(x, static_cast<int>(j)));
                for (unsigned b = 0; b < n; ++b) {
                    if (ctx.trace(ctx.mul(w, 1u << b))) {
                        unsigned c = j * n + b;
                        row[c >> 6] |= 1ull << (c & 63);
                    }
                }
            }
        }
    }

    const std::uint64_t* row(std::uint32_t x) const { return &bits[std::size_t{x} * words]; }
};

struct SolveOutcome {
    bool feasible = false;
    unsigned rank = 0;
    unsigned equations = 0;
    LinearizedPoly L;
};

SolveOutcome solve_for_a(const FieldCtx& ctx, const RowTable& rows, Elem a) {
    const unsigned n = ctx.n();
    Gf2System sys(n * n);
    SolveOutcome out;
    for (std::uint32_t x = 1; x < ctx.size(); ++x) {
        if (ctx.trace(ctx.mul(a, x))) continue;
        ++out.equations;
        if (!sys.add(rows.row(x), true)) {
            out.rank = sys.rank();
            return out;  // infeasible
        }
    }
    out.feasible = true;
    out.rank = sys.rank();
    auto bits = sys.solve();
    out.L.coeffs.assign(n, 0);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned b = 0; b < n; ++b)
            if (bits[j * n + b]) out.L.coeffs[j] |= 1u << b;
    return out;
}

}  // namespace

bool trace_condition_feasible(const FieldCtx& ctx, const OrthoDerivative& od, Elem a) {
    RowTable rows(ctx, od);
    return solve_for_a(ctx, rows, a).feasible;
}

ExtendSearchResult is_zero_extendable(const FieldCtx& ctx, const VectorialFunction& f,
                                      const ExtendSearchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const unsigned n = ctx.n();
    if (f.n_in != n || f.n_out != n)
        throw std::invalid_argument("function dimensions do not match the field context");
    if (!is_apn(f)) throw std::invalid_argument("0-extendability is defined for APN functions only");
    // quadraticity is checked inside ortho_derivative
    OrthoDerivative od = ortho_derivative(ctx, f);
    RowTable rows(ctx, od);

    ExtendSearchResult res;
    const std::uint32_t acount = ctx.size() - 1;
    std::vector<SolveOutcome> outcomes;

    constexpr std::uint32_t kProgressStride = 1024;
    std::atomic<std::uint32_t> done{0};
    auto tick = [&] {
        std::uint32_t d = done.fetch_add(1) + 1;
        if (opts.progress && d % kProgressStride == 0) opts.progress(d);
    };

    if (opts.jobs > 1 || opts.all_a) {
        // full scan; witness election picks the smallest feasible a
        outcomes.resize(acount);
        parallel_for(opts.jobs, acount, [&](std::size_t i) {
            outcomes[i] = solve_for_a(ctx, rows, static_cast<Elem>(i + 1));
            tick();
        });
        res.tried_a = acount;
        if (opts.all_a) {
            res.per_a.emplace();
            res.per_a->reserve(acount);
            for (std::uint32_t i = 0; i < acount; ++i)
                res.per_a->push_back({static_cast<Elem>(i + 1), outcomes[i].feasible,
                                      outcomes[i].rank, outcomes[i].equations});
        }
        for (std::uint32_t i = 0; i < acount; ++i) {
            if (outcomes[i].feasible) {
                res.witness = ExtensionSpec{outcomes[i].L, static_cast<Elem>(i + 1)};
                break;
            }
        }
    } else {
        // ascending scan with early exit on the first witness
        for (std::uint32_t a = 1; a <= acount; ++a) {
            ++res.tried_a;
            SolveOutcome out = solve_for_a(ctx, rows, static_cast<Elem>(a));
            tick();
            if (out.feasible) {
                res.witness = ExtensionSpec{out.L, static_cast<Elem>(a)};
                break;
            }
        }
    }

    if (res.witness) {
        // re-validate: the solved system is exactly the trace condition, and
        // the built extension must be APN with linearity 2^n
        if (!check_trace_condition(ctx, od, *res.witness))
            throw std::logic_error("witness fails the trace condition");
        VectorialFunction ext = build_extension(ctx, f, *res.witness);
        if (!is_apn(ext)) throw std::logic_error("witness extension is not APN");
        if (walsh_linearity(ext).first != ctx.size())
            throw std::logic_error("witness extension has wrong linearity");
    }
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace apnext
