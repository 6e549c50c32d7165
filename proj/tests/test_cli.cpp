#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "carlitz/serialize.hpp"

using namespace carlitz;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("CARLITZ_CLI");
    REQUIRE_MESSAGE(p != nullptr, "CARLITZ_CLI must point at the built binary");
    return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " '" + cli_path() + "' " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("table golden output") {
    RunResult r = run("table --p 2 --gamma 1 --imax 2");
    CHECK(r.exit_code == 0);
    const std::string want =
        "bracket[1] = x^2+x\n"
        "bracket[2] = x^4+x\n"
        "D[0] = 1\n"
        "D[1] = x^2+x\n"
        "D[2] = x^8+x^6+x^5+x^3\n"
        "L[0] = 1\n"
        "L[1] = x^2+x\n"
        "L[2] = x^6+x^5+x^3+x^2\n"
        "e[0] = t\n"
        "e[1] = t^2+t\n"
        "e[2] = t^4+(x^2+x+1)*t^2+(x^2+x)*t\n"
        "f[0] = (t)/(1)\n"
        "f[1] = (t^2+t)/(x^2+x)\n"
        "f[2] = (t^4+(x^2+x+1)*t^2+(x^2+x)*t)/(x^8+x^6+x^5+x^3)\n"
        "h[0] = (1)/(1)\n"
        "h[1] = (t)/(1)\n"
        "h[2] = (t^2+t)/(x^2+x)\n"
        "h[3] = (t^3+t^2)/(x^2+x)\n"
        "Q[0] = (1)/(1)\n"
        "Q[1] = (t)/(1)\n"
        "Q[2] = (t^2+t)/(x^2+x)\n"
        "Q[3] = (t^3+(x+1)*t^2+x*t)/(x^2+x)\n";
    CHECK(r.out == want);
}

TEST_CASE("table JSON is schema-valid and round-trips") {
    RunResult r = run("table --p 2 --gamma 1 --imax 3 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.contains("config"));
    REQUIRE(doc.contains("rows"));
    CHECK(doc["config"]["p"] == 2);

    Fq F(2, 1);
    int seen = 0;
    for (const auto& row : doc["rows"]) {
        REQUIRE(row.contains("kind"));
        if (row["kind"] == "bracket" || row["kind"] == "D" || row["kind"] == "L") {
            FqPoly p = parse_poly(F, row["value"].get<std::string>());
            CHECK(poly_text(F, p) == row["value"].get<std::string>());
            ++seen;
        }
        if (row["kind"] == "f") {
            REQUIRE(row.contains("num"));
            REQUIRE(row.contains("den"));
            FqPoly d = parse_poly(F, row["den"].get<std::string>());
            CHECK(poly_text(F, d) == row["den"].get<std::string>());
        }
    }
    CHECK(seen == 3 + 4 + 4);
}

TEST_CASE("verify: exit codes and determinism") {
    RunResult ok = run("verify all --seed 7");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    RunResult again = run("verify all --seed 7");
    CHECK(again.out == ok.out); // byte-identical for a fixed seed

    RunResult unknown = run("verify nosuchsuite");
    CHECK(unknown.exit_code == 2);

    RunResult usage = run("frobnicate");
    CHECK(usage.exit_code == 2);
}

TEST_CASE("verify: corrupted factorial cache is caught") {
    for (const char* suite : {"basis", "oscillator", "orthonormal"}) {
        RunResult r = run(std::string("verify ") + suite, "CARLITZ_TEST_FAULT=corrupt-d2");
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("counterexample") != std::string::npos);
    }
}

TEST_CASE("exp command") {
    // inside the domain for q=3
    RunResult r3 = run("exp --z x --prec 16 --p 3");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out.find("value = x*(1+2*x+2*x^3+x^4+2*x^5+2*x^7+2*x^9+x^10+2*x^11+x^12+x^13) + "
                      "O(x^16)") != std::string::npos);
    CHECK(r3.out.find("precision = 16") != std::string::npos);

    // boundary argument for q=2 names the violated inequality
    RunResult r2 = run("exp --z x --prec 16");
    CHECK(r2.exit_code == 2);
    CHECK(r2.out.find("q^(-1/(q-1))") != std::string::npos);

    // the explicit partial sum is defined anywhere
    RunResult rp = run("exp --z x --prec 16 --N 3");
    CHECK(rp.exit_code == 0);

    // precision past the cache depth is refused, not under-delivered
    RunResult rx = run("exp --z x^2 --prec 10000 --imax 3");
    CHECK(rx.exit_code == 3);
}

TEST_CASE("rho command") {
    RunResult r = run("rho --zeta 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value = O(x^64)") != std::string::npos);

    RunResult rq3 = run("rho --zeta x --p 3 --prec 12");
    CHECK(rq3.exit_code == 0);
    CHECK(r.out.find("precision") != std::string::npos);
}

TEST_CASE("wz command") {
    RunResult r = run("wz --z x^2 --M 4 --prec 24");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("b[0] = x^2*(") != std::string::npos);
    CHECK(r.out.find("b[3]") != std::string::npos);
}

TEST_CASE("coherent command golden") {
    RunResult r = run("coherent --lambda 1 --c0 x --M 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("c[0] = x\n") != std::string::npos);
    CHECK(r.out.find("c[1] = x^2\n") != std::string::npos);
    CHECK(r.out.find("c[5] = x^32\n") != std::string::npos);
    CHECK(r.out.find("residual[4] = 0\n") != std::string::npos);
    CHECK(r.out.find("eigenrelation holds") != std::string::npos);

    RunResult bad = run("coherent --lambda 1/x --c0 x --M 4");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("eval command") {
    RunResult r = run("eval --basis f --i 1 --t x");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value = 1") != std::string::npos);
    CHECK(r.out.find("certified: exact") != std::string::npos);

    RunResult rc = run("eval --coeffs \"1;x\" --t \"x+1\" --format json");
    CHECK(rc.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(rc.out);
    CHECK(doc["exact"] == true);

    RunResult bad = run("eval --basis f --i 1 --t 1/x");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify maps precision exhaustion to exit 3") {
    RunResult r = run("verify exp --imax 2");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify JSON report") {
    RunResult r = run("verify basis --format json --seed 3");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["ok"] == true);
    REQUIRE(doc["reports"].is_array());
    CHECK(doc["reports"][0]["suite"] == "basis");
    CHECK(doc["reports"][0]["passed"] == doc["reports"][0]["cases"]);
    CHECK(doc["reports"][0]["counterexample"].is_null());
    CHECK(doc["reports"][0].contains("wall_ms") == false); // stable without --timings
}

TEST_CASE("field configuration validation") {
    CHECK(run("table --p 4").exit_code == 2);            // not prime
    CHECK(run("table --gamma 0").exit_code == 2);
    CHECK(run("table --p 2 --gamma 9").exit_code == 2);  // q > 256
    CHECK(run("table --p 2 --gamma 2 --modulus 1,0,1").exit_code == 2); // reducible

    RunResult r = run("table --p 2 --gamma 2 --modulus 1,1,1 --imax 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("bracket[1] = x^4+x") != std::string::npos); // [1] = x^q - x, q = 4
}

TEST_CASE("defaults file via environment") {
    std::string path = "/tmp/carlitz_defaults_test.json";
    {
        std::ofstream out(path);
        out << R"({"p": 3, "imax": 2})";
    }
    RunResult r = run("table", "CARLITZ_DEFAULTS=" + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("bracket[1] = x^3+2*x") != std::string::npos);

    // flags still override the file
    RunResult r2 = run("table --p 2 --imax 1", "CARLITZ_DEFAULTS=" + path);
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("bracket[1] = x^2+x") != std::string::npos);
    std::remove(path.c_str());
}
