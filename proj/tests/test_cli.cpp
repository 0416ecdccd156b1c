#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command = env + (env.empty() ? "" : " ") + CORONA_CLI_PATH + " " + args +
                                " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("invariants subcommand reports and exits 0") {
    const auto result = run_cli("invariants \"corona(path(3),path(2))\"");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("depth: 3") != std::string::npos);
    CHECK(result.output.find("cohen-macaulay: yes") != std::string::npos);
}

TEST_CASE("exit code contract: 2 on parse and build errors, 3 on capacity") {
    CHECK(run_cli("invariants \"corona(path(3)\"").exit_code == 2);
    CHECK(run_cli("invariants \"nonsense(1)\"").exit_code == 2);
    CHECK(run_cli("invariants \"corona(cycle(2),null(1))\"").exit_code == 2);
    CHECK(run_cli("invariants \"complete(25)\"").exit_code == 3);
    CHECK(run_cli("compare \"path(2) x {null(1)}\" --max-oracle-vertices 2").exit_code == 3);
}

TEST_CASE("compare subcommand exits 0 when every record matches") {
    const auto result = run_cli("compare \"path(1..3) x {null(1..2), path(2..3), complete(2..3)}\"");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("MISMATCH") == std::string::npos);
    CHECK(result.output.find("0 mismatches") != std::string::npos);
}

TEST_CASE("json output parses and keeps the declared keys") {
    const auto result = run_cli("invariants \"bristle(complete(3),2)\" --format json");
    CHECK(result.exit_code == 0);
    const auto json = nlohmann::json::parse(result.output);
    CHECK(json["depth"] == 5);  // 1 + 2*2
    CHECK(json["sdepth"]["value"] == 5);
    CHECK(json["sdepth"]["exact"] == true);
    CHECK(json["cohen_macaulay"] == "no");
}

TEST_CASE("table output is byte-identical to the committed goldens") {
    const std::string golden_dir = CORONA_GOLDEN_DIR;
    CHECK(run_cli("table path-path --n 1..4 --m 1..4").output ==
          read_file(golden_dir + "/table_path_path.csv"));
    CHECK(run_cli("table cycle-cycle --n 3..5 --m 3..5").output ==
          read_file(golden_dir + "/table_cycle_cycle.csv"));
    CHECK(run_cli("table complete-complete --n 1..4 --m 1..4").output ==
          read_file(golden_dir + "/table_complete_complete.csv"));
    CHECK(run_cli("table star-star --n 1..3 --m 1..3").output ==
          read_file(golden_dir + "/table_star_star.csv"));
    CHECK(run_cli("table kbip-kbip --u 1..2 --v 1..2 --m 1..2 --q 1..2").output ==
          read_file(golden_dir + "/table_kbip_kbip.csv"));
}

TEST_CASE("identical bytes regardless of worker count") {
    const std::string spec = "invariants \"corona(cycle(3),path(3))\" --format json";
    const auto one = run_cli(spec + " --workers 1");
    const auto three = run_cli(spec + " --workers 3");
    CHECK(one.exit_code == 0);
    CHECK(one.output == three.output);

    const auto table_one = run_cli("table path-path --n 1..3 --m 1..3 --workers 1");
    const auto table_three = run_cli("table path-path --n 1..3 --m 1..3 --workers 3");
    CHECK(table_one.output == table_three.output);
}

TEST_CASE("environment variables configure caps, flags win") {
    CHECK(run_cli("invariants \"path(6)\"", "CORONA_MAX_ORACLE=5").exit_code == 3);
    CHECK(run_cli("invariants \"path(6)\" --max-oracle-vertices 10", "CORONA_MAX_ORACLE=5")
              .exit_code == 0);
}

TEST_CASE("composite characteristic is rejected") {
    CHECK(run_cli("compare \"corona(path(2),null(1))\" --char 4").exit_code == 2);
    CHECK(run_cli("compare \"corona(path(2),null(1))\" --char 5").exit_code == 0);
}

TEST_CASE("cm subcommand prints the tri-state") {
    CHECK(run_cli("cm \"corona(path(4),complete(3))\"").output == "yes\n");
    CHECK(run_cli("cm \"corona(cycle(5),path(3))\"").output == "no\n");
    CHECK(run_cli("cm \"corona(graph(7; 1-2,2-3,2-4,3-5,5-6,5-7),complete(2))\"").output ==
          "not-covered\n");
}
