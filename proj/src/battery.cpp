#include "apnext/battery.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "apnext/catalog.hpp"
#include "apnext/extend.hpp"
#include "apnext/ortho.hpp"
#include "apnext/univar.hpp"

namespace apnext {

namespace {

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) { unsigned t = a % b; a = b; b = t; }
    return a;
}

ExtendSearchOptions search_opts(unsigned jobs, bool all_a = false) {
    ExtendSearchOptions o;
    o.all_a = all_a;
    o.jobs = jobs;
    return o;
}

struct RowBuilder {
    std::vector<BatteryRow>& rows;
    const std::function<void(const BatteryRow&)>& on_row;

    void run(int criterion, const std::string& name, double budget,
             const std::function<bool(std::ostringstream&)>& body) {
        BatteryRow row;
        row.criterion = criterion;
        row.name = name;
        row.budget_seconds = budget;
        std::ostringstream detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail << " exception: " << e.what();
        }
        row.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (row.elapsed_seconds > budget) {
            ok = false;
            detail << " over budget (" << row.elapsed_seconds << "s > " << budget << "s)";
        }
        row.pass = ok;
        row.detail = detail.str();
        rows.push_back(row);
        if (on_row) on_row(row);
    }
};

LinearizedPoly random_poly(const FieldCtx& ctx, std::mt19937_64& rng) {
    LinearizedPoly L;
    L.coeffs.resize(ctx.n());
    for (auto& c : L.coeffs) c = static_cast<Elem>(rng() & ctx.group_order());
    return L;
}

Elem random_nonzero(const FieldCtx& ctx, std::mt19937_64& rng) {
    Elem a = 0;
    while (a == 0) a = static_cast<Elem>(rng() & ctx.group_order());
    return a;
}

}  // namespace

std::vector<BatteryRow> run_battery(const BatteryOptions& opts,
                                    const std::function<void(const BatteryRow&)>& on_row) {
    std::vector<BatteryRow> rows;
    RowBuilder rb{rows, on_row};
    const unsigned jobs = opts.jobs;

    // 1: the n=5 witness, end to end
    rb.run(1, "n=5 witness: gold(1) APN, linearity 8, (0,X^16+X,1)-extension APN with linearity 32",
           1.0, [&](std::ostringstream& d) {
        FieldCtx ctx(5);
        VectorialFunction f = instantiate(ctx, FunctionSpec::gold(1));
        bool ok = is_apn(f);
        auto [lin, nl] = walsh_linearity(f);
        ok = ok && lin == 8;
        d << "apn=" << is_apn(f) << " lin=" << lin;
        OrthoDerivative od = ortho_derivative(ctx, f);
        ExtensionSpec spec;
        spec.L.coeffs = {1, 0, 0, 0, 1};  // X^16 + X
        spec.a = 1;
        bool p4 = check_trace_condition(ctx, od, spec);
        ok = ok && p4;
        d << " prop4=" << p4;
        VectorialFunction ext = build_extension(ctx, f, spec);
        bool extApn = is_apn(ext);
        auto extLin = walsh_linearity(ext).first;
        ok = ok && extApn && extLin == 32;
        d << " ext_apn=" << extApn << " ext_lin=" << extLin;
        return ok;
    });

    // 2: both Gold exponents at n=5
    rb.run(2, "n=5: extend-search finds witnesses for x^3 and x^5", 1.0,
           [&](std::ostringstream& d) {
        FieldCtx ctx(5);
        bool ok = true;
        for (unsigned t : {1u, 2u}) {
            auto res = is_zero_extendable(ctx, instantiate(ctx, FunctionSpec::gold(t)),
                                          search_opts(jobs));
            bool found = res.witness.has_value();
            ok = ok && found;
            d << " t=" << t << ":" << (found ? "witness" : "none");
            if (found) d << "(a=" << elem_to_hex(res.witness->a) << ")";
        }
        return ok;
    });

    // 3: Gold functions have no extension beyond n=5
    rb.run(3, "no witness for x^(2^t+1): n=7 t in {1,2,3}", 1.0, [&](std::ostringstream& d) {
        FieldCtx ctx(7);
        bool ok = true;
        for (unsigned t : {1u, 2u, 3u}) {
            auto res = is_zero_extendable(ctx, instantiate(ctx, FunctionSpec::gold(t)),
                                          search_opts(jobs));
            ok = ok && !res.witness;
            d << " t=" << t << ":" << (res.witness ? "witness" : "none");
        }
        return ok;
    });
    rb.run(3, "no witness for x^(2^t+1): n=9 t in {1,2,4}", 60.0, [&](std::ostringstream& d) {
        FieldCtx ctx(9);
        bool ok = true;
        for (unsigned t : {1u, 2u, 4u}) {
            auto res = is_zero_extendable(ctx, instantiate(ctx, FunctionSpec::gold(t)),
                                          search_opts(jobs));
            ok = ok && !res.witness;
            d << " t=" << t << ":" << (res.witness ? "witness" : "none");
        }
        return ok;
    });

    // 4: switched cube functions at n=7, 9
    rb.run(4, "no witness for x^3 + tr(x^9): n in {7,9}", 61.0, [&](std::ostringstream& d) {
        bool ok = true;
        for (unsigned n : {7u, 9u}) {
            FieldCtx ctx(n);
            auto f = instantiate(ctx, FunctionSpec::switched_cube({{1, 9}}));
            auto res = is_zero_extendable(ctx, f, search_opts(jobs));
            ok = ok && !res.witness;
            d << " n=" << n << ":" << (res.witness ? "witness" : "none");
        }
        return ok;
    });

    // 5: even-dimension obstruction
    rb.run(5, "no witness for x^3: n in {4,6}", 5.0, [&](std::ostringstream& d) {
        bool ok = true;
        for (unsigned n : {4u, 6u}) {
            FieldCtx ctx(n);
            auto res = is_zero_extendable(ctx, instantiate(ctx, FunctionSpec::gold(1)),
                                          search_opts(jobs));
            ok = ok && !res.witness;
            d << " n=" << n << ":" << (res.witness ? "witness" : "none");
        }
        return ok;
    });

    // 6: ortho-derivative closed forms
    rb.run(6, "ortho closed forms: Gold pi = x^(2^n-2^t-2); switched cube split", 10.0,
           [&](std::ostringstream& d) {
        bool ok = true;
        for (unsigned n : {5u, 7u, 9u}) {
            FieldCtx ctx(n);
            for (unsigned t = 1; t < n; ++t) {
                if (gcd_u(t, n) != 1) continue;
                auto f = instantiate(ctx, FunctionSpec::gold(t));
                OrthoDerivative od = ortho_derivative(ctx, f);
                std::int64_t e = static_cast<std::int64_t>(ctx.size()) - (1 << t) - 2;
                bool match = true;
                for (std::uint32_t x = 0; x < ctx.size(); ++x)
                    if (od.pi.table[x] != ctx.pow(x, e)) match = false;
                ok = ok && match;
                if (!match) d << " gold(n=" << n << ",t=" << t << "):MISMATCH";
            }
            d << " gold n=" << n << ":ok";
        }
        for (unsigned n : {7u, 9u}) {
            FieldCtx ctx(n);
            auto f = instantiate(ctx, FunctionSpec::switched_cube({{1, 9}}));
            OrthoDerivative od = ortho_derivative(ctx, f);
            const std::int64_t inv3 = static_cast<std::int64_t>(ctx.group_order()) - 3;  // 2^n-4
            bool match = true;
            for (std::uint32_t x = 1; x < ctx.size(); ++x) {
                Elem xm3 = ctx.pow(x, inv3);
                Elem want;
                if (ctx.trace(xm3) == 0) {
                    want = xm3;
                } else {
                    want = ctx.pow(x, 6) ^ ctx.pow(x, (1 << (n - 1)) + 1) ^
                           ctx.pow(x, static_cast<std::int64_t>(ctx.size()) - 3 * (1 << (n - 2)) - 1);
                }
                if (od.pi.table[x] != want) match = false;
            }
            ok = ok && match;
            d << " cube n=" << n << (match ? ":ok" : ":MISMATCH");
        }
        return ok;
    });

    // 7: weight lemmas
    rb.run(7, "all six 2-weight lemmas sweep clean up to n=16", 30.0,
           [&](std::ostringstream& d) {
        bool ok = true;
        for (WeightLemma l : {WeightLemma::gold_exponents2, WeightLemma::gold_exponents3,
                              WeightLemma::trace2, WeightLemma::trace, WeightLemma::trace4,
                              WeightLemma::trace5}) {
            auto rep = verify_weight_lemma(l, 16);
            ok = ok && rep.pass();
            d << " " << weight_lemma_name(l) << ":"
              << (rep.pass() ? "pass" : std::to_string(rep.counterexamples.size()) + " bad");
        }
        return ok;
    });

    // 8: coefficient identities, 100 seeded trials each
    rb.run(8, std::string("coefficient identities, 100 trials per relation") +
                  (opts.quick ? " (quick: n <= 9 only)" : ""),
           600.0, [&](std::ostringstream& d) {
        bool ok = true;
        std::vector<unsigned> gold_ns = {7, 9, 11, 13};
        std::vector<unsigned> cube_ns = {11, 13};
        if (opts.quick) {
            gold_ns = {7, 9};
            cube_ns = {};
        }
        auto run_rel = [&](Relation rel, const std::vector<unsigned>& ns) {
            for (unsigned n : ns) {
                if (!relation_valid_at(rel, n)) continue;
                FieldCtx ctx(n);
                for (unsigned t : relation_admissible_t(rel, n)) {
                    auto rep = verify_relation(rel, ctx, 100, opts.seed, t, jobs);
                    ok = ok && rep.pass();
                    if (!rep.pass())
                        d << " " << relation_name(rel) << "(n=" << n << ",t=" << t
                          << "):" << rep.mismatches.size() << " mismatches";
                }
            }
            d << " " << relation_name(rel) << ":done";
        };
        for (Relation rel : {Relation::gold_t1, Relation::gold_mid_t, Relation::gold_half_s,
                             Relation::gold_half_s2, Relation::gold_half_st,
                             Relation::gold_half_st1})
            run_rel(rel, gold_ns);
        for (Relation rel : {Relation::cube_second, Relation::cube_first, Relation::cube_fourth,
                             Relation::cube_fifth})
            run_rel(rel, cube_ns);
        return ok;
    });

    // 9: closed forms against extraction
    rb.run(9, std::string("closed-form u_r and v_r match extraction, 200 samples per n") +
                  (opts.quick ? " (quick: n <= 9 only)" : ""),
           300.0, [&](std::ostringstream& d) {
        bool ok = true;
        for (unsigned n = 7; n <= 13; ++n) {
            if (opts.quick && n >= 11) break;
            FieldCtx ctx(n);
            std::mt19937_64 rng(opts.seed + n);
            unsigned badg = 0, badv = 0;
            for (unsigned trial = 0; trial < 200; ++trial) {
                LinearizedPoly L = random_poly(ctx, rng);
                Elem a = random_nonzero(ctx, rng);
                unsigned t = 1 + static_cast<unsigned>(rng() % (n - 1));
                std::uint32_t r = 1 + static_cast<std::uint32_t>(rng() % (ctx.group_order() - 1));
                auto g = build_g(ctx, a, t, L);
                if (closed_form_g_coefficient(ctx, a, t, L, r) !=
                    univariate_coefficient(ctx, g, r))
                    ++badg;
                auto fc = build_f_cube(ctx, a, L);
                if (closed_form_v_coefficient(ctx, a, L, r) !=
                    univariate_coefficient(ctx, fc, r))
                    ++badv;
            }
            ok = ok && badg == 0 && badv == 0;
            d << " n=" << n << ":" << (badg + badv == 0 ? "ok" : "MISMATCH");
        }
        return ok;
    });

    // 10: property suites
    rb.run(10, "property suites: field axioms, Parseval, ortho, witness soundness, interpolation",
           120.0, [&](std::ostringstream& d) {
        bool ok = true;
        std::mt19937_64 rng(opts.seed);
        // field axioms
        for (unsigned n = 2; n <= 8; ++n) {
            FieldCtx ctx(n);
            bool f_ok = true;
            for (unsigned trial = 0; trial < 2000; ++trial) {
                Elem x = static_cast<Elem>(rng() & ctx.group_order());
                Elem y = static_cast<Elem>(rng() & ctx.group_order());
                Elem z = static_cast<Elem>(rng() & ctx.group_order());
                f_ok = f_ok && ctx.mul(x, y) == ctx.mul(y, x);
                f_ok = f_ok && ctx.mul(x, static_cast<Elem>(y ^ z)) ==
                                   (ctx.mul(x, y) ^ ctx.mul(x, z));
                f_ok = f_ok && ctx.mul(x, y) == ctx.mul_clmul(x, y);
                f_ok = f_ok && (ctx.trace(x ^ y) == (ctx.trace(x) ^ ctx.trace(y)));
                unsigned t = 1 + static_cast<unsigned>(rng() % (n - 1 ? n - 1 : 1));
                f_ok = f_ok && ctx.pow(x, (1 << t) + 1) ==
                                   ctx.mul(ctx.frob(x, static_cast<int>(t)), x);
            }
            for (Elem x = 0; x < ctx.size(); ++x) {
                f_ok = f_ok && ctx.frob(x, 1) == ctx.mul(x, x);
                if (x) f_ok = f_ok && ctx.mul(x, ctx.inv(x)) == 1;
            }
            ok = ok && f_ok;
        }
        d << " field:" << (ok ? "ok" : "FAIL");
        // Parseval per component
        bool pv = true;
        for (unsigned n : {5u, 7u}) {
            FieldCtx ctx(n);
            auto f = instantiate(ctx, FunctionSpec::gold(1));
            for (std::uint32_t v = 1; v < ctx.size(); ++v)
                pv = pv && walsh_power_sum(f, v) == (std::uint64_t{1} << (2 * n));
        }
        ok = ok && pv;
        d << " parseval:" << (pv ? "ok" : "FAIL");
        // ortho orthogonality / nonzero
        bool ov = true;
        {
            FieldCtx ctx(7);
            auto f = instantiate(ctx, FunctionSpec::gold(1));
            OrthoDerivative od = ortho_derivative(ctx, f);
            ov = ov && od.pi.table[0] == 0;
            for (std::uint32_t alpha = 1; alpha < ctx.size(); ++alpha) {
                ov = ov && od.pi.table[alpha] != 0;
                auto b = b_alpha(f, alpha);
                for (std::uint32_t x = 0; x < ctx.size(); ++x)
                    ov = ov && ctx.trace(ctx.mul(od.pi.table[alpha], b.table[x])) == 0;
            }
        }
        ok = ok && ov;
        d << " ortho:" << (ov ? "ok" : "FAIL");
        // witness soundness at n=5
        bool ws = true;
        {
            FieldCtx ctx(5);
            for (unsigned t : {1u, 2u}) {
                auto f = instantiate(ctx, FunctionSpec::gold(t));
                auto res = is_zero_extendable(ctx, f, search_opts(jobs));
                ws = ws && res.witness.has_value();
                if (res.witness) {
                    OrthoDerivative od = ortho_derivative(ctx, f);
                    ws = ws && check_trace_condition(ctx, od, *res.witness);
                    auto ext = build_extension(ctx, f, *res.witness);
                    ws = ws && is_apn(ext) && walsh_linearity(ext).first == ctx.size();
                }
            }
        }
        ok = ok && ws;
        d << " witness:" << (ws ? "ok" : "FAIL");
        // interpolation round-trip
        bool ip = true;
        for (unsigned n = 3; n <= 8; ++n) {
            FieldCtx ctx(n);
            std::vector<Elem> tab(ctx.size());
            for (auto& v : tab) v = static_cast<Elem>(rng() & ctx.group_order());
            auto coeffs = interpolate(ctx, tab);
            for (std::uint32_t x = 0; x < ctx.size(); ++x)
                ip = ip && eval_poly(ctx, coeffs, x) == tab[x];
        }
        ok = ok && ip;
        d << " interpolation:" << (ip ? "ok" : "FAIL");
        return ok;
    });

    return rows;
}

}  // namespace apnext
