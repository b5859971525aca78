#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(LIOUVILLE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("liouville_cli_" + name);
}

}  // namespace

TEST_CASE("eval") {
    auto r = run("eval zeta --s 2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1.644934066848", 0) == 0);
    r = run("eval zeta_lambda --s -0.75 --format jsonl");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(0.19069644428794866).epsilon(1e-12));
    CHECK(run("eval zeta --s 1").code == 2);
    CHECK(run("eval zeta --s 1+").code == 2);
}

TEST_CASE("kernel M plain matches kernel N") {
    const auto m = run("kernel M --z 1.0 --form plain");
    const auto n = run("kernel N --z 1.0");
    REQUIRE(m.code == 0);
    REQUIRE(n.code == 0);
    CHECK(std::abs(std::stod(m.out) - std::stod(n.out)) < 1e-6);
    const auto f = run("kernel fermi --z 0");
    CHECK(f.out == "0.5\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("eval zeta --s 2 --bogus").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("verify nonsense").code == 2);
    CHECK(run("verify").code == 2);
    CHECK(run("verify functional --format xml").code == 2);
    CHECK(run("verify functional --grid 1,,2").code == 2);
}

TEST_CASE("verify --list") {
    const auto r = run("verify --list");
    CHECK(r.code == 0);
    CHECK(r.out.find("theorem2: theorem2") != std::string::npos);
    CHECK(r.out.find("bounds:") != std::string::npos);
}

TEST_CASE("verify output is deterministic and the report file round-trips") {
    const auto a = run("verify calibration --limit 1001");
    const auto b = run("verify calibration --limit 1001");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::size_t lines = 0;
    for (char c : a.out) lines += c == '\n';
    CHECK(lines == 3);

    const auto path = scratch("report.jsonl");
    const auto c = run("verify calibration --limit 1001 --out " + path.string());
    CHECK(c.code == 0);
    CHECK(c.out == a.out);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    const auto manifest = nlohmann::json::parse(first);
    CHECK(manifest["manifest"]["command"] == "verify calibration");
    CHECK(manifest["manifest"]["table_limit"] == 1001);
    const auto rep = run("report " + path.string());
    CHECK(rep.code == 0);
    CHECK(rep.out.find("PASS calibration.gamma_zeta_a") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("csv output") {
    const auto path = scratch("report.csv");
    const auto r = run("verify functional --limit 1001 --format csv --out " + path.string());
    CHECK(r.code == 0);
    CHECK(r.out.rfind("check_id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n", 0) == 0);
    const auto rep = run("report " + path.string());
    CHECK(rep.code == 0);
    CHECK(rep.out.find("0 failed") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("failing checks exit with 1") {
    // an absurd tolerance makes the functional group fail
    CHECK(run("verify functional --limit 1001 --tol 1e-30").code == 1);
}

TEST_CASE("table cache and environment overrides") {
    const auto dir = scratch("cache");
    std::filesystem::remove_all(dir);
    const auto first = run("sieve --limit 5000 --cache-dir " + dir.string());
    CHECK(first.code == 0);
    CHECK(std::filesystem::exists(dir / "arith_5000.bin"));
    const auto second = run("sieve --limit 5000 --cache-dir " + dir.string());
    CHECK(second.out == first.out);
    const std::string cmd = std::string("LIOUVILLE_LIMIT=5000 ") + LIOUVILLE_CLI_PATH + " sieve";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::array<char, 256> buf{};
    const std::size_t n = fread(buf.data(), 1, buf.size(), pipe);
    pclose(pipe);
    CHECK(nlohmann::json::parse(std::string(buf.data(), n))["limit"] == 5000);
    std::filesystem::remove_all(dir);
}
