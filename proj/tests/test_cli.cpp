#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(EQUICHROMA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("formula subcommand prints exact fractions") {
    const auto res = run_cli("formula --theorem thm2_helm --n 8");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["mean"]["num"] == 41);
    CHECK(j["mean"]["den"] == 17);
    CHECK(j["variance"]["num"] == 376);
    CHECK(j["variance"]["den"] == 289);
}

TEST_CASE("formula --corrected repairs the odd-wheel variance only") {
    const auto res = run_cli("formula --theorem thm1_wheel --n 9 --corrected");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["variance"]["num"] == 249);
    CHECK(j["variance"]["den"] == 100);
    CHECK(run_cli("formula --theorem thm2_helm --n 8 --corrected").exit_code == 1);
}

TEST_CASE("stats from explicit sizes") {
    const auto res = run_cli("stats --sizes 1,1,1");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["mean"]["num"] == 2);
    CHECK(j["mean"]["den"] == 1);
    CHECK(j["variance"]["num"] == 2);
    CHECK(j["variance"]["den"] == 3);
}

TEST_CASE("gen emits the requested format") {
    const auto dimacs = run_cli("gen --family wheel --n 4 --format dimacs");
    CHECK(dimacs.exit_code == 0);
    CHECK(dimacs.output.rfind("p edge 5 8\n", 0) == 0);

    const auto json = run_cli("gen --family wheel --n 4");
    CHECK(json.exit_code == 0);
    CHECK(nlohmann::json::parse(json.output)["n"] == 5);

    const auto dot = run_cli("gen --family cycle --n 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.rfind("graph G {", 0) == 0);
}

TEST_CASE("chie with and without the oracle") {
    CHECK(run_cli("chie --family wheel --n 8").output == "5\n");
    CHECK(run_cli("chie --family wheel --n 8 --oracle").output == "5\n");
    CHECK(run_cli("chie --family wheel --n 9").output == "6\n");
    // 15 vertices exceed the enumeration budget
    const auto res = run_cli("chie --family helm --n 7 --oracle");
    CHECK(res.exit_code == 1);
}

TEST_CASE("color output feeds straight into stats") {
    const std::string file = "cli_pipeline_coloring.json";
    const auto redirected = run_cli("color --family helm --n 6 > " + file);
    CHECK(redirected.exit_code == 0);
    const auto stats = run_cli("stats --coloring " + file);
    CHECK(stats.exit_code == 0);
    const auto j = nlohmann::json::parse(stats.output);
    CHECK(j["mean"]["num"] == 31);
    CHECK(j["mean"]["den"] == 13);
    std::remove(file.c_str());
}

TEST_CASE("solver method honors an explicit k") {
    const auto res = run_cli("color --family helm --n 6 --k 3 --method solver");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["k"] == 3);
    CHECK(j["family"] == "helm");
    // infeasible request is an input error, not a silent failure
    CHECK(run_cli("color --family wheel --n 3 --k 3 --method solver").exit_code == 1);
}

TEST_CASE("verify reports the odd-wheel mismatch row") {
    const auto res = run_cli("verify --theorems thm1_wheel --n-min 9 --n-max 9 --report csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("thm1_wheel,wheel,9,10,6,31/10,249/100,31/10,93/40,true,false,true") !=
          std::string::npos);
}

TEST_CASE("strict exits 2 on the erratum unless it is declared expected") {
    CHECK(run_cli("verify --theorems thm1_wheel --n-min 9 --n-max 9 --strict").exit_code == 2);
    CHECK(run_cli("verify --theorems thm1_wheel --n-min 9 --n-max 9 --strict "
                  "--expect-erratum wheel-odd-variance")
              .exit_code == 0);
    CHECK(run_cli("verify --theorems thm1_wheel --n-min 8 --n-max 8 --strict").exit_code == 0);
}

TEST_CASE("table report renders aligned headers") {
    const auto res = run_cli("verify --theorems thm2_helm --n-min 4 --n-max 5 --report table");
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("theorem", 0) == 0);
    CHECK(res.output.find("thm2_helm") != std::string::npos);
    CHECK(res.output.find("7/3") != std::string::npos);
}

TEST_CASE("ecc subcommand reports per-n outcomes") {
    const auto res = run_cli("ecc --family wheel --n-min 3 --n-max 6");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("wheel,3,4,3,,n/a") != std::string::npos);
    CHECK(res.output.find("wheel,4,5,4,3,holds") != std::string::npos);
}

TEST_CASE("input errors exit 1 with a one-line diagnostic") {
    CHECK(run_cli("gen --family tricycle --n 5").exit_code == 1);
    CHECK(run_cli("gen --family wheel --n 2").exit_code == 1);
    CHECK(run_cli("gen --family wheel --n 5 --bogus-flag").exit_code == 1);
    CHECK(run_cli("stats --sizes 2,x").exit_code == 1);
    CHECK(run_cli("stats").exit_code == 1);
    CHECK(run_cli("verify --theorems thm9 --n-min 3 --n-max 4").exit_code == 1);
}
