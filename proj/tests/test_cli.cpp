#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "fsq/arith.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FSQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("decompose success") {
    auto r = run_cli("decompose --a 1 --b 24 --n 15");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "decompose");
    CHECK(j["result"]["verified"] == true);
    auto d = j["result"]["decomposition"];
    fsq::i64 x = d["x"], y = d["y"], z = d["z"], w = d["w"], m = d["m"];
    CHECK(x * x + y * y + z * z + w * w == 15);
    CHECK(x + 24 * y == m * m);
    CHECK(j["meta"]["version"] == "0.1.0");
}

TEST_CASE("decompose no witness exits 1") {
    auto r = run_cli("decompose --a 3 --b 10 --n 24");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j["result"]["decomposition"].is_null());
}

TEST_CASE("invalid pair exits 2") {
    auto r = run_cli("decompose --a 1 --b 8 --n 10");
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j["error"]["code"] == "shape-violation");
    r = run_cli("decompose --a 2 --b 4 --n 10");
    CHECK(r.exit_code == 2);
    j = json::parse(r.out);
    CHECK(j["error"]["code"] == "not-coprime");
}

TEST_CASE("decompose methods agree on solvability") {
    for (std::string method : {"constructive", "oracle", "hybrid"}) {
        auto r = run_cli("decompose --a 1 --b 2 --n 1001 --method " + method);
        CHECK(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(j["result"]["verified"] == true);
    }
}

TEST_CASE("scan") {
    auto r = run_cli("scan --a 3 --b 10 --n-max 400");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    auto fails = j["result"]["failures"].get<std::vector<fsq::i64>>();
    CHECK(std::find(fails.begin(), fails.end(), 24) != fails.end());
    CHECK(std::find(fails.begin(), fails.end(), 384) != fails.end());
    CHECK(j["result"]["failure_count"] == fails.size());
    // payload identical across jobs counts, ignoring meta timings
    auto r4 = run_cli("scan --a 3 --b 10 --n-max 400 --jobs 4");
    json j4 = json::parse(r4.out);
    j.erase("meta");
    j4.erase("meta");
    j["inputs"].erase("jobs");
    j4["inputs"].erase("jobs");
    CHECK(j == j4);
}

TEST_CASE("local-report") {
    auto r = run_cli("local-report --a 1 --b 2 --n 9 --m 4");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["c"] == 5);
    CHECK(j["result"]["t"] == 29);
    CHECK(j["result"]["everywhere"] == true);
    CHECK(j["result"]["admissible_mu"] == true);
}

TEST_CASE("lattice-report") {
    auto r = run_cli("lattice-report --a 1 --b 24");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["c"] == 577);
    CHECK(j["result"]["genus_equals_spinor_genus"] == true);
    auto aniso = j["result"]["anisotropic_places"];
    CHECK(aniso.size() == 2);
    CHECK(j["result"]["spinor_norm_groups"]["2"] == "full-group");
    CHECK(j["result"]["spinor_norm_groups"]["577"] == "contains-units-times-squares");
}

TEST_CASE("corpus checks") {
    auto r = run_cli("corpus --check dickson --bound 100");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["gaps"] == std::vector<fsq::i64>{15});
    r = run_cli("corpus --check family310 --bound 1");
    CHECK(r.exit_code == 0);
    r = run_cli("corpus --check cauchy --bound 199");
    CHECK(r.exit_code == 0);
    r = run_cli("corpus --check lagrange --bound 2000");
    CHECK(r.exit_code == 0);
    r = run_cli("corpus --check nonsense --bound 10");
    CHECK(r.exit_code == 2);
}

TEST_CASE("missing arguments exit 2") {
    auto r = run_cli("decompose --a 1 --b 2");
    CHECK(r.exit_code == 2);
}
