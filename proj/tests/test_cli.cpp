#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path()
{
    const char* p = std::getenv("HITCALC_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string data_path()
{
    const char* p = std::getenv("HITCALC_DATA_PATH");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dim command")
{
    RunResult r = run("dim -s 5 -d 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "dim (QP_5)_5 = 46"));

    r = run("dim -s 5 -d 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "= 190"));

    r = run("dim -s 1 -d 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "= 1"));

    // recursive strategy via flag and via environment
    r = run("--strategy recursive dim -s 5 -d 13");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "= 250"));
    r = run("dim -s 5 -d 13", "HITCALC_STRATEGY=recursive");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "= 250"));
}

TEST_CASE("identical invocations produce byte-identical output")
{
    RunResult a = run("--format json dim -s 5 -d 13");
    RunResult b = run("--format json dim -s 5 -d 13");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"dim\": 250") != std::string::npos);

    RunResult c = run("basis -s 4 -d 9");
    RunResult d2 = run("basis -s 4 -d 9");
    CHECK(c.out == d2.out);
}

TEST_CASE("hit-test command")
{
    RunResult r = run("hit-test -s 5 \"[2,2,1,1,7]+[1,2,2,1,7]\" --certificate");
    CHECK(r.exit_code == 0);
    CHECK((contains(r.out, "hit") || contains(r.out, "not hit")));

    // a spike is never hit
    r = run("hit-test -s 5 \"[7,3,3,0,0]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "not hit"));

    // x^2 in one variable is hit, with a one-generator certificate
    r = run("hit-test -s 1 \"[2]\" --certificate");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "hit (certificate with 1 generators)"));
}

TEST_CASE("strict-test command")
{
    RunResult r = run("strict-test \"[1,2,2,3,5]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "strictly inadmissible"));

    r = run("strict-test \"[1,2,2,2,2,1]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "inadmissible, not strictly"));

    r = run("strict-test \"[7,3,3,0,0]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, ": admissible"));
}

TEST_CASE("kameko command")
{
    RunResult r = run("kameko -s 5 -d 13");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "kernel dim 205"));
    CHECK(contains(r.out, "surjective"));
}

TEST_CASE("invariants command")
{
    RunResult r = run("invariants -s 5 -d 13 --group GL");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "dim 0"));

    r = run("invariants -s 5 -d 13 --group Sigma --omega \"[3,3,1]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "dim 3"));
}

TEST_CASE("verify command exit codes")
{
    RunResult r = run("--data " + data_path() + " verify --t 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PASS"));

    r = run("--data " + data_path() + " verify --t 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PASS"));
    CHECK(contains(r.out, "golden 145, computed 145"));
    CHECK(contains(r.out, "golden 60, computed 60"));
    CHECK(contains(r.out, "dim 250"));

    // a damaged catalog: swap two exponents of one b-family so the degree and
    // weight still check but the monomial is different
    std::string broken = "/tmp/hitcalc_broken_data.txt";
    {
        std::ifstream in(data_path());
        std::ofstream out(broken);
        std::string line;
        bool done = false;
        while (std::getline(in, line)) {
            if (!done && line.rfind("b; 40; ", 0) == 0) {
                out << "b; 40; 2,1,3,3,4; t=2\n";  // transposed head exponents
                done = true;
            } else {
                out << line << "\n";
            }
        }
        REQUIRE(done);
    }
    r = run("--data " + broken + " verify --t 2");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "FAIL"));
    CHECK(contains(r.out, "missing"));

    // usage errors exit 1
    r = run("verify");
    CHECK(r.exit_code == 1);
    r = run("dim -s 9 -d 4");
    CHECK(r.exit_code == 1);
}

TEST_CASE("resource guard exit code")
{
    RunResult r = run("--max-space 100 dim -s 5 -d 13");
    CHECK(r.exit_code == 1);
}

TEST_CASE("config file")
{
    std::string conf = "/tmp/hitcalc_test_config.ini";
    {
        std::ofstream out(conf);
        out << "format=json\n";
    }
    RunResult r = run("--config " + conf + " dim -s 5 -d 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"dim\": 46"));
}

TEST_CASE("export writes the schema")
{
    RunResult r = run("export -s 5 -d 5 -o -");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"admissible\""));
    CHECK(contains(r.out, "\"by_weight\""));
    CHECK(contains(r.out, "\"dim\": 46"));
}
