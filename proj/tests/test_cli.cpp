// End-to-end checks of the command-line tool: spawns the real binary and
// inspects its JSON output and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "apnext/catalog.hpp"

using json = nlohmann::json;
using namespace apnext;

#ifndef APNEXT_CLI_PATH
#error "APNEXT_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(APNEXT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json payload_of(const RunResult& r) {
    json env = json::parse(r.out);
    return env.at("payload");
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("analyze a built-in family") {
    auto r = run_cli("analyze --n 5 --family gold --t 1");
    CHECK(r.exit_code == 0);
    json p = payload_of(r);
    CHECK(p.at("is_apn") == true);
    CHECK(p.at("linearity") == 8);
    CHECK(p.at("is_quadratic") == true);
    json env = json::parse(r.out);
    CHECK(env.at("status") == "ok");
    CHECK(env.at("command") == "analyze");
}

TEST_CASE("analyze a table file") {
    FieldCtx ctx(5);
    auto path = temp_file("apnext_cli_in.tbl");
    write_table(path.string(), from_monomial(ctx, 3));
    auto r = run_cli("analyze --in " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(payload_of(r).at("linearity") == 8);
    std::filesystem::remove(path);
}

TEST_CASE("extend-search finds the n=5 witness and honors --expect") {
    auto r = run_cli("extend-search --n 5 --family gold --t 1");
    CHECK(r.exit_code == 0);
    json p = payload_of(r);
    CHECK(p.at("extendable") == true);
    CHECK(p.at("witness").at("L").size() == 5);
    CHECK(p.at("witness").at("a") != "0");

    CHECK(run_cli("extend-search --n 5 --family gold --t 1 --expect witness").exit_code == 0);
    CHECK(run_cli("extend-search --n 5 --family gold --t 1 --expect none").exit_code == 3);
    CHECK(run_cli("extend-search --n 7 --family gold --t 1 --expect none").exit_code == 0);
    CHECK(run_cli("extend-search --n 7 --family switched-cube --expect none").exit_code == 0);
}

TEST_CASE("extend-search --all-a reports per-a feasibility") {
    auto r = run_cli("extend-search --n 5 --family gold --t 2 --all-a --jobs 2");
    CHECK(r.exit_code == 0);
    json p = payload_of(r);
    CHECK(p.at("per_a").size() == 31);
    for (const auto& st : p.at("per_a")) CHECK(st.at("feasible") == true);
}

TEST_CASE("ortho writes the closed-form table for gold(1) at n=5") {
    auto out = temp_file("apnext_cli_pi.tbl");
    auto r = run_cli("ortho --n 5 --family gold --t 1 --out " + out.string());
    CHECK(r.exit_code == 0);
    auto pi = read_table(out.string());
    FieldCtx ctx(5);
    for (std::uint32_t x = 0; x < 32; ++x) CHECK(pi.table[x] == ctx.pow(x, 28));  // x^(2^5-2-2)
    std::filesystem::remove(out);
}

TEST_CASE("extend-build emits an APN extension with linearity 2^n") {
    auto out = temp_file("apnext_cli_ext.tbl");
    auto r = run_cli("extend-build --n 5 --family gold --t 1 --L 1,0,0,0,1 --a 1 --out " +
                     out.string());
    CHECK(r.exit_code == 0);
    auto check = run_cli("analyze --in " + out.string());
    json p = payload_of(check);
    CHECK(p.at("n_in") == 6);
    CHECK(p.at("is_apn") == true);
    CHECK(p.at("linearity") == 32);
    std::filesystem::remove(out);
}

TEST_CASE("verify-lemmas and verify-relations pass") {
    auto r = run_cli("verify-lemmas --n-max 12");
    CHECK(r.exit_code == 0);
    json p = payload_of(r);
    CHECK(p.at("pass") == true);
    CHECK(p.at("lemmas").size() == 6);

    auto r2 = run_cli("verify-relations --n 7 --trials 5 --seed 7");
    CHECK(r2.exit_code == 0);
    json p2 = payload_of(r2);
    CHECK(p2.at("pass") == true);
    for (const auto& rep : p2.at("relations")) CHECK(rep.at("mismatch_count") == 0);
}

TEST_CASE("identical seeds give identical reports") {
    auto a = run_cli("verify-relations --n 7 --trials 4 --seed 11");
    auto b = run_cli("verify-relations --n 7 --trials 4 --seed 11 --jobs 3");
    CHECK(payload_of(a) == payload_of(b));
}

TEST_CASE("usage and runtime errors") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 1);           // no source given
    CHECK(run_cli("analyze --n 5 --family gold --t 2 --modulus 31").exit_code == 1);  // reducible
    CHECK(run_cli("ortho --n 5 --family monomial --d 7 --out /tmp/x.tbl").exit_code == 1);
    CHECK(run_cli("extend-build --n 5 --family gold --t 1 --L 1,0 --a 1 --out /tmp/x.tbl")
              .exit_code == 1);
}

TEST_CASE("reproduce --quick --json") {
    auto r = run_cli("reproduce --quick --json");
    CHECK(r.exit_code == 0);
    json p = payload_of(r);
    CHECK(p.at("pass") == true);
    CHECK(p.at("rows").size() >= 10);
}
