// End-to-end checks of the command-line binary: spawns the real executable
// (path injected by the build as ODDWHEEL_CLI) and verifies output documents
// and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(ODDWHEEL_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, got);
    }
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return RunResult{WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/oddwheel_cli_") + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
    out.close();
    return path;
}

}  // namespace

TEST_CASE("triangle subcommand reports exact angle data") {
    RunResult r = run_cli("triangle 4 4 6 --quiet");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["cos"] == "3/4");
    CHECK(doc["characteristic"] == 7);
    CHECK(doc["residual"] == 7);
    CHECK(doc["sin"] == "1/4*sqrt(7)");

    RunResult bad = run_cli("triangle 9 1 1");
    CHECK(bad.exit_code == 2);

    RunResult garbage = run_cli("triangle x 1 1");
    CHECK(garbage.exit_code == 2);
}

TEST_CASE("closure subcommand decides given signs and audits groups") {
    std::string path = write_temp(
        "fig.json",
        R"({"n":5,"spokes":[4,6,6,5,6],"rims":[4,9,9,4,6],"signs":[1,1,1,1,1]})");
    RunResult r = run_cli("closure " + path + " --quiet");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["closes"] == true);
    REQUIRE(doc["residual_groups"].size() == 2);
    CHECK(doc["residual_groups"][0]["residual"] == 2);
    CHECK(doc["residual_groups"][0]["multiple_of_pi"] == "odd");
    CHECK(doc["residual_groups"][1]["residual"] == 7);

    // Flipping one sign breaks closure: exit 1.
    std::string open_path = write_temp(
        "fig_open.json",
        R"({"n":5,"spokes":[4,6,6,5,6],"rims":[4,9,9,4,6],"signs":[-1,1,1,1,1]})");
    RunResult open_run = run_cli("closure " + open_path + " --quiet");
    CHECK(open_run.exit_code == 1);
    CHECK(Json::parse(open_run.output)["closes"] == false);
}

TEST_CASE("closure subcommand searches signs and emits coordinates") {
    std::string path = write_temp(
        "rect.json", R"({"n":3,"spokes":[4,5,3],"rims":[3,4,5]})");
    RunResult r = run_cli("closure " + path + " --quiet");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["kind"] == "realizable");
    CHECK(doc["detail"]["witness_signs"] == Json::array({1, 1, -1}));

    std::string signed_path = write_temp(
        "rect_signed.json",
        R"({"n":3,"spokes":[4,5,3],"rims":[3,4,5],"signs":[1,1,-1]})");
    RunResult coords = run_cli("closure " + signed_path + " --emit-coords --quiet");
    CHECK(coords.exit_code == 0);
    Json cdoc = Json::parse(coords.output);
    REQUIRE(cdoc["coordinates"].size() == 4);
    CHECK(cdoc["coordinates"][2]["x"] == "4");
    CHECK(cdoc["coordinates"][2]["y"] == "3");
}

TEST_CASE("search output re-fed into closure reproduces the verdict") {
    RunResult search = run_cli("search --n 3 --max 3 --quiet");
    CHECK(search.exit_code == 0);
    std::istringstream lines(search.output);
    std::string line;
    int reruns = 0;
    while (std::getline(lines, line)) {
        Json doc = Json::parse(line);
        REQUIRE(doc.contains("witness_signs"));
        doc["signs"] = doc["witness_signs"];
        doc.erase("witness_signs");
        std::string path = write_temp("refeed.json", doc.dump());
        RunResult again = run_cli("closure " + path + " --quiet");
        CHECK(again.exit_code == 0);
        CHECK(Json::parse(again.output)["closes"] == true);
        ++reruns;
    }
    CHECK(reruns == 2);
}

TEST_CASE("certify subcommand confirms the contradiction with exit 0") {
    std::string path = write_temp(
        "w5.json", R"({"n":5,"spokes":[1,1,1,1,1],"rims":[1,1,1,1,1]})");
    RunResult r = run_cli("certify " + path + " --quiet");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["kind"] == "parity_contradiction");
    CHECK(doc["detail"]["crossing_step_count"] == 5);
    CHECK(doc["cross_checked"] == true);

    // Even lengths violate the precondition: input error.
    std::string even_path = write_temp(
        "even.json", R"({"n":3,"spokes":[2,2,2],"rims":[2,2,2]})");
    RunResult even_run = run_cli("certify " + even_path + " --quiet");
    CHECK(even_run.exit_code == 2);
}

TEST_CASE("trail subcommand prints the class trail") {
    std::string path = write_temp(
        "w5t.json", R"({"n":5,"spokes":[1,1,1,1,1],"rims":[1,1,1,1,1]})");
    RunResult r = run_cli("trail " + path + " --quiet");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["trail"] == Json::array({2, 1, 7, 6, 7, 1}));
    CHECK(doc["final_class"] == 1);
    CHECK(doc["returns_to_start"] == false);

    // A wheel whose residual group misses every multiple of pi obstructs
    // the trail: decided negative, exit 1.
    std::string blocked = write_temp(
        "blocked.json", R"({"n":3,"spokes":[1,3,3],"rims":[3,3,3]})");
    RunResult blocked_run = run_cli("trail " + blocked + " --quiet");
    CHECK(blocked_run.exit_code == 1);
    CHECK(Json::parse(blocked_run.output).contains("obstruction"));
}

TEST_CASE("lemmas subcommand verifies the class algebra") {
    RunResult r = run_cli("lemmas --bound 15 --quiet");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["class_triple_count"] == 15);
    CHECK(doc["bipartition"]["side_a"] == Json::array({1, 5, 6}));
    CHECK(doc["bipartition"]["side_b"] == Json::array({2, 3, 7}));
    CHECK(doc["odd_characteristic_sweep"]["pass"] == true);
    CHECK(doc["class_shortcut_sweep"]["pass"] == true);

    RunResult bad = run_cli("lemmas --bound 0 --quiet");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("pointset subcommand validates distances and characteristic") {
    std::string path = write_temp(
        "rectpts.json", R"({"points":[[0,1,0,1],[4,1,0,1],[4,1,3,1],[0,1,3,1]]})");
    RunResult r = run_cli("pointset " + path + " --quiet");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["integral"] == true);
    CHECK(doc["pairwise_distances"] == Json::array({4, 5, 3, 3, 5, 4}));
    CHECK(doc["common_characteristic"] == 1);

    std::string bad_path = write_temp(
        "badpts.json", R"({"points":[[0,1,0,1],[1,1,1,1]]})");
    RunResult bad = run_cli("pointset " + bad_path + " --quiet");
    CHECK(bad.exit_code == 1);
    CHECK(Json::parse(bad.output)["integral"] == false);

    std::string malformed = write_temp("malformed.json", R"({"points": [[1, 2]]})");
    CHECK(run_cli("pointset " + malformed + " --quiet").exit_code == 2);
}

TEST_CASE("search subcommand streams results and a summary") {
    RunResult r = run_cli("search --n 3 --max 3");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line, last;
    int results = 0;
    while (std::getline(lines, line)) {
        Json doc = Json::parse(line);
        if (doc.contains("witness_signs")) ++results;
        last = line;
    }
    CHECK(results == 2);
    Json summary = Json::parse(last);
    CHECK(summary["units_processed"] == 27);
    CHECK(summary["results_emitted"] == 2);

    // --odd with odd n streams certificates instead of candidates.
    RunResult odd = run_cli("search --n 3 --max 3 --odd --quiet");
    CHECK(odd.exit_code == 0);
    std::istringstream odd_lines(odd.output);
    int certs = 0;
    while (std::getline(odd_lines, line)) {
        Json doc = Json::parse(line);
        CHECK(doc["certificate"] == "parity_contradiction");
        ++certs;
    }
    CHECK(certs == 5);

    CHECK(run_cli("search --n 3 --max 0").exit_code == 2);
    CHECK(run_cli("search --max 3").exit_code == 2);
}
