#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gsp4/cli.hpp"
#include "gsp4/io.hpp"

using namespace gsp4;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gsp4tool");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GSP4_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("gsp4_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

const Json* find_entry(const Json& report, const std::string& name) {
    for (const auto& e : report["results"])
        if (e["name"] == name) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("constants report") {
    Run r = run({"constants", "--k", "0", "--kp", "0", "--level", "1", "--format", "json"});
    REQUIRE(r.status == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "PASS");
    REQUIRE(find_entry(j, "C_{k,k'}") != nullptr);
    CHECK((*find_entry(j, "C_{k,k'}"))["value"] == "64/3");
    CHECK((*find_entry(j, "C_N"))["value"] == "1");

    Run level2 = run({"constants", "--k", "1", "--kp", "0", "--level", "2", "--format", "json"});
    REQUIRE(level2.status == kExitOk);
    CHECK((*find_entry(Json::parse(level2.out), "C_N"))["value"] == "2/25");

    Run md = run({"constants", "--k", "2", "--kp", "1", "--level", "6"});
    CHECK(md.status == kExitOk);
    CHECK(md.out.find("status: PASS") != std::string::npos);

    Run csv = run({"constants", "--k", "2", "--kp", "1", "--level", "6", "--format", "csv", "--approx"});
    CHECK(csv.status == kExitOk);
    CHECK(csv.out.rfind("group,name,value,approx,status\n", 0) == 0);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"frobnicate"}).status == kExitUsage);
    Run missing = run({"constants", "--kp", "0"});
    CHECK(missing.status == kExitUsage);
    CHECK(missing.err.find("--k") != std::string::npos);
    CHECK(run({"constants", "--k", "1", "--kp", "2"}).status != kExitOk);
    CHECK(run({"constants", "--k", "1", "--kp", "0", "--format", "yaml"}).status == kExitUsage);
    CHECK(run({"verify", "nosuchsuite"}).status == kExitUsage);
    CHECK(run({"congruence", data("delta.json"), data("e12.json"), "--bound", "0"}).status == kExitUsage);
}

TEST_CASE("verify suites") {
    Run r = run({"verify", "lattice", "--format", "json"});
    REQUIRE(r.status == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "PASS");
    CHECK(j["results"].size() > 5);
    Run k = run({"verify", "ktypes"});
    CHECK(k.status == kExitOk);
    CHECK(k.out.find("projection matrix matches reference: PASS") != std::string::npos);
}

TEST_CASE("lattice subcommands on shipped files") {
    Run disc = run({"lattice", "disc", data("lattice_diag.json"), "--format", "json"});
    REQUIRE(disc.status == kExitOk);
    Json j = Json::parse(disc.out);
    CHECK((*find_entry(j, "discriminant"))["value"] == "25");
    CHECK((*find_entry(j, "dual index"))["value"] == 25);

    Run other = run({"lattice", "disc", data("lattice_diag.json"), "--prime", "7", "--format", "json"});
    REQUIRE(other.status == kExitOk);
    CHECK((*find_entry(Json::parse(other.out), "dual index"))["value"] == 1);

    CHECK(run({"lattice", "dual", data("lattice_diag.json")}).status == kExitOk);
    CHECK(run({"lattice", "duality-check", data("lattice_split.json")}).status == kExitOk);
    CHECK(run({"lattice", "duality-check", data("lattice_identity.json")}).status == kExitInput);
}

TEST_CASE("malformed input names the field") {
    std::string bad = temp_file("bad.json", R"({"prime": 5, "basis": [["1", "0"], ["0", 1.5]], "gram": [["1","0"],["0","1"]]})");
    Run r = run({"lattice", "disc", bad});
    CHECK(r.status == kExitInput);
    CHECK(r.err.find("basis[1][1]") != std::string::npos);

    std::string ragged = temp_file("ragged.json", R"({"prime": 5, "basis": [["1", "0"], ["0"]], "gram": [["1","0"],["0","1"]]})");
    CHECK(run({"lattice", "disc", ragged}).err.find("basis[1]") != std::string::npos);

    std::string nonmonic = temp_file("nonmonic.json", R"({"min_poly": [2, 0], "values": {"T_2": [1]}})");
    Run m = run({"congruence", nonmonic, data("e12.json"), "--bound", "10"});
    CHECK(m.status == kExitInput);
    CHECK(m.err.find("min_poly") != std::string::npos);

    std::string syntax = temp_file("syntax.json", "{\"prime\": 5,");
    CHECK(run({"lattice", "disc", syntax}).status == kExitInput);
    CHECK(run({"lattice", "disc", "/nonexistent/file.json"}).status == kExitInput);
}

TEST_CASE("congruence on shipped systems") {
    Run r = run({"congruence", data("delta.json"), data("e12.json"), "--bound", "100", "--format", "json"});
    REQUIRE(r.status == kExitOk);
    Json j = Json::parse(r.out);
    CHECK((*find_entry(j, "congruence primes"))["value"] == Json::parse("[691]"));
    CHECK((*find_entry(j, "index"))["value"] == 691);

    Run same = run({"congruence", data("delta.json"), data("delta.json"), "--bound", "50"});
    CHECK(same.status == kExitOk);
    CHECK(same.out.find("identical systems") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    auto path = std::filesystem::temp_directory_path() / "gsp4_cli_out.json";
    std::filesystem::remove(path);
    Run r = run({"constants", "--k", "3", "--kp", "1", "--format", "json", "--out", path.string()});
    REQUIRE(r.status == kExitOk);
    CHECK(r.out.empty());
    CHECK(read_json_file(path.string())["status"] == "PASS");
}

TEST_CASE("eigensystem round trip") {
    auto path = std::filesystem::temp_directory_path() / "gsp4_cli_delta.json";
    REQUIRE(run({"eigensystem", "--k", "12", "--bound", "100", "--out", path.string()}).status == kExitOk);
    CHECK(read_json_file(path.string()) == read_json_file(data("delta.json")));
}

TEST_CASE("TOOLKIT_THREADS") {
    setenv("TOOLKIT_THREADS", "3", 1);
    CHECK(run({"verify", "modforms"}).status == kExitOk);
    setenv("TOOLKIT_THREADS", "zero", 1);
    CHECK(run({"verify", "modforms"}).status == kExitUsage);
    unsetenv("TOOLKIT_THREADS");
}
