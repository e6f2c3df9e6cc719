#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "liedense/numkit.hpp"
#include "liedense/propp.hpp"

using namespace liedense;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("LIEDENSE_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "LIEDENSE_BIN must point at the CLI binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("witt golden output") {
    RunResult r = run_cli("witt --d 2 --max-n 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,dim\n1,2\n2,1\n3,2\n4,3\n5,6\n6,9\n7,18\n8,30\n9,56\n10,99\n");
}

TEST_CASE("restricted golden output") {
    RunResult r = run_cli("restricted --d 2 --p 2 --max-n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,dim\n1,2\n2,3\n3,2\n4,6\n5,6\n6,11\n");
}

TEST_CASE("genwitt golden output") {
    RunResult r = run_cli("genwitt --gens 2:1,3:2 --max-n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,w\n1,0\n2,1\n3,2\n4,0\n5,2\n6,1\n");
}

TEST_CASE("demushkin dims golden output") {
    RunResult r = run_cli("demushkin dims --d 4 --p 2 --max-n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,dim\n1,4\n2,9\n3,16\n4,54\n");
}

TEST_CASE("demushkin enveloping includes degree zero") {
    RunResult r = run_cli("demushkin enveloping --d 4 --max-n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,dim\n0,1\n1,4\n2,15\n3,56\n4,209\n");
}

TEST_CASE("demushkin catalog json") {
    RunResult r = run_cli("demushkin catalog --d 4 --p 3 --f 1 --case genericEven");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 4);
    CHECK(j["p"] == 3);
    CHECK(j["f"] == 1);
    CHECK(j["case"] == "genericEven");
    CHECK(j["group_relator"] == "x1^3 [x1,x2] [x3,x4]");
    CHECK(j["graded_relator"] == "[x1,x2] + [x3,x4]");
}

TEST_CASE("demushkin verify reports matching routes") {
    RunResult r = run_cli("demushkin verify --d 4 --p 2 --f 2 --case genericEven --max-n 3 "
                          "--format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["lie_matches_pipeline"] == true);
    CHECK(j["assoc_matches_enveloping"] == true);
    CHECK(j["lie_quotient"] == nlohmann::json({"4", "9", "16"}));
}

TEST_CASE("oracle closure golden output") {
    RunResult r = run_cli("oracle closure --d 2 --p 2 --max-n 6 --mode lie-ideal --gens x2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,dim\n1,1\n2,1\n3,2\n4,3\n5,6\n6,9\n");
}

TEST_CASE("oracle gradedify marks the trust horizon") {
    RunResult r = run_cli("oracle gradedify --d 2 --p 2 --max-n 5 --mode lie "
                          "--gens \"x1 + [x1,x2]; x2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,dim,certified\n1,2,1\n2,1,1\n3,2,1\n4,3,1\n5,6,0\n");
}

TEST_CASE("greedy json trace carries the invariants") {
    RunResult r = run_cli("density greedy --alpha 1/2 --d 2 --p 2 --max-n 10 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["trace"]["alpha"] == "1/2");
    for (const auto& step : j["trace"]["steps"])
        CHECK(step["inv_i"] == true);
    CHECK(j["trace"]["freeness_verified"] == true);
    CHECK(j["report"]["horizon"] == 10);
}

TEST_CASE("density ideal csv and json carry the same numbers") {
    RunResult csv = run_cli("density ideal --d 2 --p 2 --max-n 6 --gens x2");
    RunResult json = run_cli("density ideal --d 2 --p 2 --max-n 6 --gens x2 --format json");
    CHECK(csv.exit_code == 0);
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    // pull the ratio column out of the csv
    std::vector<std::string> csv_ratios;
    std::istringstream in(csv.out);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::size_t pos = 0;
        for (int comma = 0; comma < 3; ++comma)
            pos = line.find(',', pos) + 1;
        csv_ratios.push_back(line.substr(pos, line.find(',', pos) - pos));
    }
    REQUIRE(csv_ratios.size() == j["ratios"].size());
    for (std::size_t i = 0; i < csv_ratios.size(); ++i)
        CHECK(csv_ratios[i] == j["ratios"][i].get<std::string>());
    CHECK(csv_ratios.back() == "22/23");
}

TEST_CASE("density report on explicit sequences") {
    RunResult r = run_cli("density report --sub 1,0,1,1 --amb 2,1,2,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,sub_dim,amb_dim,ratio,ratio_f64,running_min,running_min_f64\n"
                   "1,1,2,1/2,0.5,1/3,0.33333333333333331\n"
                   "2,0,1,1/3,0.33333333333333331,1/3,0.33333333333333331\n"
                   "3,1,2,2/5,0.39999999999999997,3/8,0.375\n"
                   "4,1,3,3/8,0.375,3/8,0.375\n");
}

TEST_CASE("greedy csv and json carry the same beta values") {
    RunResult csv = run_cli("density greedy --alpha 1/3 --d 2 --p 2 --max-n 8");
    RunResult json = run_cli("density greedy --alpha 1/3 --d 2 --p 2 --max-n 8 --format json");
    CHECK(csv.exit_code == 0);
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    std::istringstream in(csv.out);
    std::string line;
    std::getline(in, line); // header
    std::size_t step = 0;
    while (std::getline(in, line) && !line.empty()) {
        // k,"added",beta_before,...: beta_before sits after the quoted field
        const std::size_t quote_end = line.find('"', line.find('"') + 1);
        std::size_t pos = quote_end + 2;
        const std::string beta_before = line.substr(pos, line.find(',', pos) - pos);
        CHECK(beta_before == j["trace"]["steps"][step]["beta_before"].get<std::string>());
        ++step;
    }
    CHECK(step == j["trace"]["steps"].size());
}

TEST_CASE("zassenhaus golden outputs") {
    RunResult free2 = run_cli("zassenhaus --d 2 --p 2 --levels 4");
    CHECK(free2.exit_code == 0);
    CHECK(free2.out == "level,d_i,log_index,saturated\n"
                       "1,2,2,0\n2,3,5,0\n3,2,7,0\n4,6,13,0\n");

    RunResult dem = run_cli("zassenhaus --d 4 --p 2 --levels 3 --demushkin");
    CHECK(dem.exit_code == 0);
    CHECK(dem.out == "level,d_i,log_index,saturated\n"
                     "1,4,4,0\n2,9,13,0\n3,16,29,0\n");
}

TEST_CASE("oracle lie-dims golden output") {
    RunResult r = run_cli("oracle lie-dims --d 2 --p 2 --max-n 6 --mode restricted");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,dim\n1,2\n2,3\n3,2\n4,6\n5,6\n6,11\n");
}

TEST_CASE("frattini golden output") {
    RunResult r = run_cli("frattini --d 2 --p 2 --levels 4");
    CHECK(r.exit_code == 0);
    const BigInt top = 128 * (BigInt(1) << 129) + 1;
    const std::string expected = "level,d_i,log_index,saturated\n0,2,0,0\n1,5,2,0\n2,129,7,0\n3," +
                                 top.get_str() + ",136,0\n";
    CHECK(r.out == expected);
}

TEST_CASE("hdim product golden output") {
    RunResult r = run_cli("hdim product --factors free:3,free:3,free:2 --p 2 --kind frattini "
                          "--levels 3 --select full,trivial,trivial");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "level,num,den,ratio_f64");
    std::getline(in, line);
    CHECK(line.substr(0, 6) == "1,3,8,");
    std::getline(in, line);
    CHECK(line.substr(0, 8) == "2,20,47,");
    std::getline(in, line);
    CHECK(line.substr(0, 18) == "3,2097173,4194482,");
}

TEST_CASE("normal spectrum golden output") {
    RunResult r = run_cli("spectrum normal --factors free:3,free:3,free:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "value,value_f64\n0,0\n1/2,0.5\n1,1\n");

    RunResult given = run_cli("spectrum normal --factors free:3,free:3,free:2 "
                              "--alphas 1/2,1/2,0");
    CHECK(given.out == r.out);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("witt --d 0 --max-n 3").exit_code == 2);
    CHECK(run_cli("witt --bogus-flag 1").exit_code == 2);
    CHECK(run_cli("oracle closure --d 2 --p 2 --max-n 25 --gens x1").exit_code == 3);
    CHECK(run_cli("demushkin catalog --d 4 --p 2 --f 1 --case genericEven").exit_code == 2);
}

TEST_CASE("every golden command is byte-deterministic") {
    const std::string cmds[] = {
        "witt --d 2 --max-n 10",
        "restricted --d 2 --p 2 --max-n 6",
        "genwitt --gens 2:1,3:2 --max-n 6",
        "demushkin dims --d 4 --p 2 --max-n 4",
        "demushkin catalog --d 4 --p 3 --f 1 --case genericEven",
        "oracle closure --d 2 --p 2 --max-n 6 --mode lie-ideal --gens x2",
        "density greedy --alpha 1/2 --d 2 --p 2 --max-n 8 --format json",
        "density ideal --d 2 --p 2 --max-n 6 --gens x2",
        "frattini --d 2 --p 2 --levels 4",
        "hdim product --factors free:3,free:2 --p 2 --kind zassenhaus --levels 10 "
        "--select trivial,full",
        "spectrum normal --factors free:3,free:3,free:2",
    };
    for (const auto& cmd : cmds) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
