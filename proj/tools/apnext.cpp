// apnext: analysis of vectorial Boolean functions over GF(2^n) and of
// (0,L,a)-extensions of quadratic APN functions.
//
// Subcommands: analyze, ortho, extend-search, extend-build, verify-lemmas,
// verify-relations, reproduce. All machine output is a single JSON document
// on stdout; progress and diagnostics go to stderr.
//
// Exit codes: 0 ok, 1 command failed, 2 usage error, 3 --expect violated.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>

#include "apnext/battery.hpp"
#include "apnext/catalog.hpp"
#include "apnext/extend.hpp"
#include "apnext/ortho.hpp"
#include "apnext/parallel.hpp"
#include "apnext/univar.hpp"

using json = nlohmann::json;
using namespace apnext;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExpectation = 3;

struct SourceOpts {
    std::string in;
    unsigned n = 0;
    std::string family;
    unsigned t = 1;
    std::uint64_t d = 3;
    std::vector<std::string> mu;
    std::string modulus_hex;
};

void add_source_flags(CLI::App* cmd, SourceOpts& s) {
    cmd->add_option("--in", s.in, "truth-table file (format: 'n=<n> m=<m>' then 2^n hex entries)");
    cmd->add_option("--n", s.n, "field dimension (2..16)");
    cmd->add_option("--family", s.family,
                    "function family: gold | switched-cube | monomial")
        ->check(CLI::IsMember({"gold", "switched-cube", "monomial"}));
    cmd->add_option("--t", s.t, "gold exponent: x^(2^t+1)");
    cmd->add_option("--d", s.d, "monomial exponent: x^d");
    cmd->add_option("--mu", s.mu,
                    "switched-cube term '<c-hex>:<e>' adding tr(c*x^e); repeatable");
    cmd->add_option("--modulus", s.modulus_hex, "field modulus bitmask in hex (default: built-in)");
}

FieldCtx make_ctx(unsigned n, const std::string& modulus_hex) {
    if (modulus_hex.empty()) return FieldCtx(n);
    return FieldCtx(n, elem_from_hex(modulus_hex));
}

std::vector<MuTerm> parse_mu(const std::vector<std::string>& terms) {
    std::vector<MuTerm> mu;
    for (const auto& s : terms) {
        auto sep = s.find(':');
        if (sep == std::string::npos)
            throw std::invalid_argument("--mu expects '<c-hex>:<e>', got '" + s + "'");
        mu.push_back({elem_from_hex(s.substr(0, sep)),
                      std::stoull(s.substr(sep + 1))});
    }
    return mu;
}

// Loads or constructs the function; builds a field context when possible.
std::pair<VectorialFunction, std::optional<FieldCtx>> resolve_source(const SourceOpts& s,
                                                                     bool need_field) {
    if (!s.in.empty()) {
        VectorialFunction f = read_table(s.in);
        std::optional<FieldCtx> ctx;
        if (f.n_in == f.n_out && f.n_in >= FieldCtx::kMinDim && f.n_in <= FieldCtx::kMaxDim)
            ctx.emplace(make_ctx(f.n_in, s.modulus_hex));
        if (need_field && !ctx)
            throw std::invalid_argument("this command needs a square table with n in [2, 16]");
        return {std::move(f), std::move(ctx)};
    }
    if (s.n == 0)
        throw std::invalid_argument("either --in or --n with --family is required");
    FieldCtx ctx = make_ctx(s.n, s.modulus_hex);
    FunctionSpec spec = FunctionSpec::monomial(s.d);
    if (s.family == "gold") {
        spec = FunctionSpec::gold(s.t);
    } else if (s.family == "switched-cube") {
        auto mu = parse_mu(s.mu);
        if (mu.empty()) mu = {{1, 9}};  // x^3 + tr(x^9)
        spec = FunctionSpec::switched_cube(std::move(mu));
    } else if (s.family != "monomial") {
        throw std::invalid_argument("--family is required with --n");
    }
    VectorialFunction f = instantiate(ctx, spec);
    return {std::move(f), std::move(ctx)};
}

json witness_json(const ExtensionSpec& spec) {
    json L = json::array();
    for (Elem c : spec.L.coeffs) L.push_back(elem_to_hex(c));
    return json{{"L", L}, {"a", elem_to_hex(spec.a)}};
}

json spectrum_json(const SpectrumReport& r) {
    return json{{"schema", 1},
                {"n_in", r.n_in},
                {"n_out", r.n_out},
                {"linearity", r.linearity},
                {"nonlinearity", r.nonlinearity},
                {"differential_uniformity", r.differential_uniformity},
                {"algebraic_degree", r.algebraic_degree},
                {"is_apn", r.is_apn},
                {"is_quadratic", r.is_quadratic}};
}

int emit(const std::string& command, const json& payload, double elapsed_ms, int exit_code,
         const std::string& status = "") {
    json envelope{{"command", command},
                  {"status", status.empty() ? (exit_code == kExitOk ? "ok" : "error") : status},
                  {"payload", payload},
                  {"elapsed_ms", elapsed_ms}};
    std::cout << envelope.dump(2) << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vectorial Boolean function analysis over GF(2^n)"};
    app.require_subcommand(1);

    unsigned jobs = 1;
    std::uint64_t seed = 1;

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "differential/linear/degree spectrum as JSON");
    SourceOpts analyze_src;
    add_source_flags(analyze_cmd, analyze_src);

    // ortho
    auto* ortho_cmd = app.add_subcommand("ortho", "ortho-derivative of a quadratic APN function");
    SourceOpts ortho_src;
    std::string ortho_out;
    add_source_flags(ortho_cmd, ortho_src);
    ortho_cmd->add_option("--out", ortho_out, "output truth-table file")->required();

    // extend-search
    auto* search_cmd = app.add_subcommand("extend-search", "decide 0-extendability, emit a witness");
    SourceOpts search_src;
    bool all_a = false;
    std::string expect;
    add_source_flags(search_cmd, search_src);
    search_cmd->add_flag("--all-a", all_a, "record per-a feasibility instead of stopping early");
    search_cmd->add_option("--jobs", jobs, "worker threads");
    search_cmd->add_option("--expect", expect, "fail (exit 3) unless the outcome matches")
        ->check(CLI::IsMember({"none", "witness"}));

    // extend-build
    auto* build_cmd = app.add_subcommand("extend-build", "write the (n+1)-dimensional extension");
    SourceOpts build_src;
    std::string build_L, build_a, build_out;
    add_source_flags(build_cmd, build_src);
    build_cmd->add_option("--L", build_L, "comma-separated hex coefficients l_0,..,l_{n-1}")
        ->required();
    build_cmd->add_option("--a", build_a, "hex element a != 0")->required();
    build_cmd->add_option("--out", build_out, "output truth-table file")->required();

    // verify-lemmas
    auto* lemmas_cmd = app.add_subcommand("verify-lemmas", "sweep the 2-weight lemmas");
    unsigned n_max = 16;
    lemmas_cmd->add_option("--n-max", n_max, "sweep dimensions up to this bound");
    lemmas_cmd->add_option("--jobs", jobs, "worker threads");

    // verify-relations
    auto* relations_cmd =
        app.add_subcommand("verify-relations", "check the coefficient identities at one dimension");
    unsigned rel_n = 0;
    unsigned rel_trials = 100;
    relations_cmd->add_option("--n", rel_n, "field dimension")->required();
    relations_cmd->add_option("--trials", rel_trials, "random (L, a) per relation");
    relations_cmd->add_option("--seed", seed, "PRNG seed");
    relations_cmd->add_option("--jobs", jobs, "worker threads");

    // reproduce
    auto* repro_cmd = app.add_subcommand("reproduce", "run the full reproduction battery");
    bool quick = false, repro_json = false;
    repro_cmd->add_flag("--quick", quick, "skip the n >= 11 relation checks");
    repro_cmd->add_flag("--json", repro_json, "emit the matrix as JSON");
    repro_cmd->add_option("--jobs", jobs, "worker threads");
    repro_cmd->add_option("--seed", seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    };

    try {
        if (*analyze_cmd) {
            auto [f, ctx] = resolve_source(analyze_src, false);
            (void)ctx;
            return emit("analyze", spectrum_json(analyze(f)), elapsed_ms(), kExitOk);
        }

        if (*ortho_cmd) {
            auto [f, ctx] = resolve_source(ortho_src, true);
            OrthoDerivative od = ortho_derivative(*ctx, f);
            write_table(ortho_out, od.pi);
            json payload{{"schema", 1}, {"n", ctx->n()}, {"out", ortho_out}};
            return emit("ortho", payload, elapsed_ms(), kExitOk);
        }

        if (*search_cmd) {
            auto [f, ctx] = resolve_source(search_src, true);
            ExtendSearchOptions opts;
            opts.all_a = all_a;
            opts.jobs = jobs;
            std::mutex io_mutex;
            opts.progress = [&](std::uint32_t done) {
                std::lock_guard<std::mutex> lock(io_mutex);
                std::fprintf(stderr, "extend-search: %u values of a tried\n", done);
            };
            ExtendSearchResult res = is_zero_extendable(*ctx, f, opts);
            json payload{{"schema", 1},
                         {"n", ctx->n()},
                         {"extendable", res.witness.has_value()},
                         {"witness", res.witness ? witness_json(*res.witness) : json(nullptr)},
                         {"tried_a", res.tried_a},
                         {"search_ms", res.elapsed_seconds * 1000.0}};
            if (res.per_a) {
                json per_a = json::array();
                for (const auto& st : *res.per_a)
                    per_a.push_back(json{{"a", elem_to_hex(st.a)},
                                         {"feasible", st.feasible},
                                         {"rank", st.rank},
                                         {"equations", st.equations}});
                payload["per_a"] = per_a;
            }
            int code = kExitOk;
            if (expect == "none" && res.witness) code = kExitExpectation;
            if (expect == "witness" && !res.witness) code = kExitExpectation;
            return emit("extend-search", payload, elapsed_ms(), code,
                        code == kExitExpectation ? "expectation-violated" : "ok");
        }

        if (*build_cmd) {
            auto [f, ctx] = resolve_source(build_src, true);
            ExtensionSpec spec;
            spec.a = elem_from_hex(build_a);
            std::stringstream ss(build_L);
            std::string tok;
            while (std::getline(ss, tok, ',')) spec.L.coeffs.push_back(elem_from_hex(tok));
            if (spec.L.coeffs.size() != ctx->n())
                throw std::invalid_argument("--L needs exactly n coefficients");
            VectorialFunction ext = build_extension(*ctx, f, spec);
            write_table(build_out, ext);
            json payload{{"schema", 1}, {"n_out", ext.n_in}, {"out", build_out}};
            return emit("extend-build", payload, elapsed_ms(), kExitOk);
        }

        if (*lemmas_cmd) {
            const std::vector<WeightLemma> all = {
                WeightLemma::gold_exponents2, WeightLemma::gold_exponents3, WeightLemma::trace2,
                WeightLemma::trace, WeightLemma::trace4, WeightLemma::trace5};
            std::vector<WeightLemmaReport> reps(all.size());
            parallel_for(jobs, all.size(),
                         [&](std::size_t i) { reps[i] = verify_weight_lemma(all[i], n_max); });
            json lemmas = json::array();
            bool all_pass = true;
            for (const auto& rep : reps) {
                all_pass = all_pass && rep.pass();
                json ces = json::array();
                for (const auto& ce : rep.counterexamples)
                    ces.push_back(json{{"n", ce[0]}, {"m_or_t", ce[1]}, {"s", ce[2]}, {"k", ce[3]}});
                lemmas.push_back(json{{"lemma", weight_lemma_name(rep.lemma)},
                                      {"n_min", rep.n_min},
                                      {"n_max", rep.n_max},
                                      {"tuples_checked", rep.tuples_checked},
                                      {"counterexamples", ces},
                                      {"pass", rep.pass()}});
            }
            json payload{{"schema", 1}, {"lemmas", lemmas}, {"pass", all_pass}};
            return emit("verify-lemmas", payload, elapsed_ms(), all_pass ? kExitOk : kExitError);
        }

        if (*relations_cmd) {
            FieldCtx ctx(rel_n);
            json reports = json::array();
            bool all_pass = true;
            for (Relation rel : {Relation::gold_t1, Relation::gold_mid_t, Relation::gold_half_s,
                                 Relation::gold_half_s2, Relation::gold_half_st,
                                 Relation::gold_half_st1, Relation::cube_second,
                                 Relation::cube_first, Relation::cube_fourth,
                                 Relation::cube_fifth}) {
                for (unsigned t : relation_admissible_t(rel, rel_n)) {
                    auto rep = verify_relation(rel, ctx, rel_trials, seed, t, jobs);
                    all_pass = all_pass && rep.pass();
                    json mismatches = json::array();
                    for (std::size_t i = 0; i < rep.mismatches.size() && i < 10; ++i) {
                        const auto& mm = rep.mismatches[i];
                        json L = json::array();
                        for (Elem c : mm.L.coeffs) L.push_back(elem_to_hex(c));
                        mismatches.push_back(json{{"L", L},
                                                  {"a", elem_to_hex(mm.a)},
                                                  {"index", mm.index},
                                                  {"lhs", elem_to_hex(mm.lhs)},
                                                  {"rhs", elem_to_hex(mm.rhs)}});
                    }
                    reports.push_back(json{{"relation", relation_name(rel)},
                                           {"n", rep.n},
                                           {"t", rep.t},
                                           {"seed", rep.seed},
                                           {"trials", rep.trials},
                                           {"mismatch_count", rep.mismatches.size()},
                                           {"mismatches", mismatches},
                                           {"pass", rep.pass()}});
                }
            }
            json payload{{"schema", 1}, {"relations", reports}, {"pass", all_pass}};
            return emit("verify-relations", payload, elapsed_ms(), all_pass ? kExitOk : kExitError);
        }

        if (*repro_cmd) {
            auto rows = run_battery({.quick = quick, .jobs = jobs, .seed = seed},
                                    [&](const BatteryRow& row) {
                                        std::fprintf(stderr, "[%s] %d: %s (%.2fs)\n",
                                                     row.pass ? "ok" : "FAIL", row.criterion,
                                                     row.name.c_str(), row.elapsed_seconds);
                                    });
            bool all_pass = true;
            for (const auto& row : rows) all_pass = all_pass && row.pass;
            if (repro_json) {
                json rows_json = json::array();
                for (const auto& row : rows)
                    rows_json.push_back(json{{"criterion", row.criterion},
                                             {"name", row.name},
                                             {"pass", row.pass},
                                             {"elapsed_ms", row.elapsed_seconds * 1000.0},
                                             {"detail", row.detail}});
                json payload{{"schema", 1}, {"rows", rows_json}, {"pass", all_pass}};
                return emit("reproduce", payload, elapsed_ms(), all_pass ? kExitOk : kExitError);
            }
            for (const auto& row : rows)
                std::printf("%-4s criterion %-2d %-70s %8.2fs\n", row.pass ? "PASS" : "FAIL",
                            row.criterion, row.name.c_str(), row.elapsed_seconds);
            std::printf("%s\n", all_pass ? "all criteria pass" : "FAILURES present");
            return all_pass ? kExitOk : kExitError;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        json payload{{"error", e.what()}};
        std::string cmd = app.get_subcommands().empty() ? "?" : app.get_subcommands()[0]->get_name();
        emit(cmd, payload, elapsed_ms(), kExitError, "error");
        return kExitError;
    }
    return kExitUsage;
}
