#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string tri_bin() {
    const char* p = std::getenv("TRI_BIN");
    REQUIRE_MESSAGE(p != nullptr, "TRI_BIN must point at the tri executable");
    return p;
}

struct RunResult {
    int exit_code;
    json report;
};

RunResult run(const std::string& args) {
    std::string cmd = tri_bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    json rep;
    if (!out.empty()) rep = json::parse(out, nullptr, false);
    return {code, rep};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/tri_cli_") + name;
    std::ofstream(path) << content;
    return path;
}

const char* kA = R"({"field":{"kind":"rational"},"rows":2,"cols":2,"entries":[["1","1"],["0","1"]]})";
const char* kB = R"({"field":{"kind":"rational"},"rows":2,"cols":2,"entries":[["1","0"],["1","1"]]})";
const char* kX = R"({"field":{"kind":"rational"},"rows":2,"cols":2,"entries":[["0","1"],["1","0"]]})";
const char* kZ = R"({"field":{"kind":"rational"},"rows":2,"cols":2,"entries":[["1","0"],["0","-1"]]})";
const char* kM = R"({"field":{"kind":"rational"},"rows":2,"cols":2,"entries":[["1","0"],["-1","2"]]})";
const char* kDerog = R"({"field":{"kind":"rational"},"rows":3,"cols":3,"entries":[["1","0","0"],["0","1","0"],["0","0","2"]]})";
const char* kA3 = R"({"field":{"kind":"rational"},"rows":3,"cols":3,"entries":[["1","2","0"],["0","3","1"],["1","0","4"]]})";
const char* kRot = R"({"field":{"kind":"rational"},"rows":2,"cols":2,"entries":[["0","1"],["-1","0"]]})";

}  // namespace

TEST_CASE("compute emits value and status ok") {
    std::string a = write_temp("a.json", kA);
    std::string b = write_temp("b.json", kB);
    RunResult r = run("compute -A " + a + " -B " + b);
    CHECK(r.exit_code == 0);
    CHECK(r.report["status"] == "ok");
    CHECK(r.report["command"] == "compute");
    CHECK(r.report["result"]["value"] == "-1");
    CHECK(r.report.contains("inputs_digest"));

    RunResult rd = run("compute --diagnostics -A " + a + " -B " + b);
    CHECK(rd.report["result"].contains("kernel_dim"));
}

TEST_CASE("compute with k") {
    std::string a = write_temp("a.json", kA);
    std::string b = write_temp("b.json", kB);
    RunResult r = run("compute -A " + a + " -B " + b + " --k 0");
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["value"] == "1");
    CHECK(r.report["result"]["method"] == "trivial_boundary");

    std::string a3 = write_temp("a3.json", kA3);
    std::string derog = write_temp("derog.json", kDerog);
    RunResult rg = run("compute -A " + a3 + " -B " + derog + " --k 1");
    CHECK(rg.exit_code == 0);
    CHECK(rg.report["result"]["value"] == "0");
    CHECK(rg.report["result"]["method"] == "geometric_multiplicity_zero");
}

TEST_CASE("compute input errors") {
    std::string a = write_temp("a.json", kA);
    RunResult missing = run("compute -A /tmp/definitely_missing.json -B " + a);
    CHECK(missing.exit_code == 2);
    CHECK(missing.report["status"] == "input_error");
    std::string bad = write_temp("bad.json", "{not json");
    RunResult malformed = run("compute -A " + bad + " -B " + a);
    CHECK(malformed.exit_code == 2);
}

TEST_CASE("compute unsupported on size cap") {
    std::string i6 = write_temp("i6.json",
        R"({"field":{"kind":"rational"},"rows":6,"cols":6,"entries":[)"
        R"(["1","0","0","0","0","0"],["0","1","0","0","0","0"],["0","0","1","0","0","0"],)"
        R"(["0","0","0","1","0","0"],["0","0","0","0","1","0"],["0","0","0","0","0","1"]]})");
    RunResult r = run("compute -A " + i6 + " -B " + i6 + " --k 3");
    CHECK(r.exit_code == 3);
    CHECK(r.report["status"] == "unsupported");
}

TEST_CASE("check reports verdict and exit codes") {
    std::string x = write_temp("x.json", kX);
    std::string m = write_temp("m.json", kM);
    RunResult hit = run("check -A " + x + " -B " + m + " --k 1");
    CHECK(hit.exit_code == 0);
    CHECK(hit.report["result"]["t_k"] == "0");
    CHECK(hit.report["result"]["oracle"]["degenerate_pair_exists"] == true);
    CHECK(hit.report["result"]["oracle"].contains("witness"));

    std::string z = write_temp("z.json", kZ);
    RunResult miss = run("check -A " + x + " -B " + z + " --k 1");
    CHECK(miss.exit_code == 1);
    CHECK(miss.report["status"] == "predicate_false");
    CHECK(miss.report["result"]["t_k"] == "4");
}

TEST_CASE("check with krylov vector") {
    std::string x = write_temp("x.json", kX);
    std::string m = write_temp("m.json", kM);
    std::string v = write_temp("v.json",
        R"({"field":{"kind":"rational"},"rows":2,"cols":1,"entries":[["1"],["1"]]})");
    RunResult r = run("check -A " + x + " -B " + m + " --k 1 --vector " + v);
    CHECK(r.report["result"].contains("krylov_check"));
}

TEST_CASE("spectrum emits charpoly, discriminants, g factor") {
    std::string x = write_temp("x.json", kX);
    RunResult r = run("spectrum -A " + x + " --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["charpoly"]["display"] == "x^2 - 1");
    CHECK(r.report["result"]["D"] == "4");
    CHECK(r.report["result"]["G_k"] == "1");
    CHECK(r.report["result"]["spectrum"]["eigenvalues"].size() == 2);
}

TEST_CASE("spectrum reports unsupported but still emits charpoly") {
    std::string rot = write_temp("rot.json", kRot);
    RunResult r = run("spectrum -A " + rot);
    CHECK(r.exit_code == 3);
    CHECK(r.report["status"] == "unsupported");
    CHECK(r.report["result"]["charpoly"]["display"] == "x^2 + 1");
}

TEST_CASE("mub construct then certify") {
    RunResult made = run("mub construct --p 3");
    REQUIRE(made.exit_code == 0);
    std::string bases = write_temp("bases.json", made.report["result"].dump());
    RunResult cert = run("mub certify " + bases);
    CHECK(cert.exit_code == 0);
    CHECK(cert.report["result"]["verdict"] == true);
    RunResult bad = run("mub construct --p 4");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("selftest is deterministic for a fixed seed") {
    RunResult r1 = run("selftest --seed 5 --level quick");
    RunResult r2 = run("selftest --seed 5 --level quick");
    CHECK(r1.exit_code == 0);
    CHECK(r1.report["result"] == r2.report["result"]);
}
