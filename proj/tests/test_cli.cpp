// End-to-end checks of the command-line surface: exit codes, JSON output,
// and seeding. Everything runs through the installed binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) {
        const std::string tmp = "/tmp/gptlab_cli_test_input.json";
        FILE* f = std::fopen(tmp.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fwrite(stdin_text.data(), 1, stdin_text.size(), f);
        std::fclose(f);
        cmd = std::string(GPTLAB_CLI_PATH) + " " + args + " < " + tmp + " 2>/dev/null";
    } else {
        cmd = std::string(GPTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    }
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kSimplex3 = R"({"type":"generator","name":"simplex","params":{"c":3}})";

}  // namespace

TEST_CASE("analyze emits the expected json fields") {
    const auto r = run("analyze - --json", kSimplex3);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["is_simplex"] == true);
    CHECK(j["c"] == 3);
    CHECK(j["satisfies_p5"] == true);
    CHECK(j["p6"]["status"] == "holds");
    CHECK(j["classification_tag"] == "classical");
    CHECK(j["invariant_state"] == nlohmann::json({"1/3", "1/3", "1/3"}));
}

TEST_CASE("distance command and its identity line") {
    const auto r = run("distance - --s1 1,0,0 --s2 0,1,0 --json", kSimplex3);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["kolmogorov"] == 1);
    CHECK(j["success_probability"] == 1);
    CHECK(j["identity_d_eq_2p_minus_1"] == true);

    const auto same = run("distance - --s1 1/3,1/3,1/3 --s2 1/3,1/3,1/3 --json", kSimplex3);
    REQUIRE(same.exit_code == 0);
    const auto js = nlohmann::json::parse(same.output);
    CHECK(js["kolmogorov"] == 0);
    CHECK(js["success_probability"] == "1/2");
}

TEST_CASE("exit codes") {
    CHECK(run("analyze -", "this is not json").exit_code == 2);
    CHECK(run("analyze -", R"({"type":"polytope","vertices":[[0.5,1]]})").exit_code == 2);
    CHECK(run("analyze -", R"({"type":"ball","dim":7})").exit_code == 3);
    CHECK(run("distance - --s1 2,0,0 --s2 0,1,0", kSimplex3).exit_code == 4);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("entropy - --state 0,0",
              R"({"type":"generator","name":"ball","params":{"dim":3}})")
              .exit_code == 2);  // wrong coordinate count
}

TEST_CASE("verify exits 0 on a small corpus and 1 under fault injection") {
    const std::string opts = "verify --random-polytopes 1 --random-simplices 1 --samples 50 "
                             "--seed 5";
    CHECK(run(opts).exit_code == 0);
    CHECK(run(opts + " --inject-fault").exit_code == 1);
}

TEST_CASE("GPTLAB_SEED overrides --seed") {
    const auto a = run("analyze - --samples 50 --seed 1 --json", R"({"type":"generator","name":"cube","params":{"d":2}})");
    setenv("GPTLAB_SEED", "2", 1);
    const auto b = run("analyze - --samples 50 --seed 1 --json", R"({"type":"generator","name":"cube","params":{"d":2}})");
    const auto c = run("analyze - --samples 50 --seed 2 --json", R"({"type":"generator","name":"cube","params":{"d":2}})");
    unsetenv("GPTLAB_SEED");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    const auto ja = nlohmann::json::parse(a.output);
    const auto jb = nlohmann::json::parse(b.output);
    const auto jc = nlohmann::json::parse(c.output);
    CHECK(ja["p6"]["counterexample"] != jb["p6"]["counterexample"]);
    CHECK(jb["p6"]["counterexample"] == jc["p6"]["counterexample"]);
}

TEST_CASE("reports are deterministic for fixed input and seed") {
    const auto a = run("analyze - --samples 100 --seed 9 --json",
                       R"({"type":"polytope","vertices":[[0,0],[4,0],[4,3],[0,5]]})");
    const auto b = run("analyze - --samples 100 --seed 9 --json",
                       R"({"type":"polytope","vertices":[[0,0],[4,0],[4,3],[0,5]]})");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}
