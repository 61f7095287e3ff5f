#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
    const char* env = std::getenv("SDDLAB_BIN");
    REQUIRE_MESSAGE(env != nullptr, "SDDLAB_BIN must point at the CLI binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_out.txt";
    const std::string err_path = "cli_err.txt";
    const std::string cmd = binary() + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

} // namespace

TEST_CASE("compute renders exact values") {
    const RunResult s4 = run("compute --graph S4 --indices sdd");
    CHECK(s4.exit_code == 0);
    CHECK(s4.out == "10\n");

    const RunResult paw = run("compute --graph C3_star --indices sdd");
    CHECK(paw.exit_code == 0);
    CHECK(paw.out == "29/3\n");

    const RunResult k2 = run("compute --graph K2 --indices sdd,id,f");
    CHECK(k2.exit_code == 0);
    CHECK(k2.out == "2\n2\n2\n");

    const RunResult ga = run("compute --graph C5 --indices ga");
    CHECK(ga.exit_code == 0);
    CHECK(ga.out == "5\n");
}

TEST_CASE("exit codes follow the contract") {
    CHECK(run("compute --graph Nope --indices sdd").exit_code == 2);
    CHECK(run("compute --graph S4 --indices bogus").exit_code == 2);
    CHECK(run("compute --garbage").exit_code == 2);
    // C_2 is a valid name shape but an infeasible parameter
    CHECK(run("compute --graph C2 --indices sdd").exit_code == 3);
    const RunResult err = run("compute --graph C2 --indices sdd");
    CHECK(err.err.find("BadParameter") != std::string::npos);
}

TEST_CASE("linegraph emits decodable graph6") {
    const RunResult p4 = run("linegraph --graph P4");
    CHECK(p4.exit_code == 0);
    CHECK(p4.out == "Bg\n"); // P_3 on the edges of P_4

    const RunResult s4 = run("linegraph --graph S4");
    CHECK(s4.out == "Bw\n"); // triangle

    const RunResult k1 = run("linegraph --input /dev/null");
    CHECK(k1.exit_code == 3);
}

TEST_CASE("verify finds the expected falsifications and exits clean") {
    const RunResult lit = run("verify --theorems T4_5_literal --n-max 4 --alpha 1");
    CHECK(lit.exit_code == 0);
    CHECK(lit.out.find("violations=") != std::string::npos);
    CHECK(lit.out.find("expected_falsifications=") != std::string::npos);
    CHECK(lit.out.find("expected_falsifications=0") == std::string::npos);
    CHECK(lit.out.find("unexpected=0") != std::string::npos);

    const RunResult sound = run("verify --theorems T3_1 --n-max 5");
    CHECK(sound.exit_code == 0);
    CHECK(sound.out.find("violations=0") != std::string::npos);
}

TEST_CASE("verify reports are byte-identical across runs") {
    const std::string report_a = "verify_a.json";
    const std::string report_b = "verify_b.json";
    const std::string args = "verify --theorems all --n-max 5 --report ";
    CHECK(run(args + report_a).exit_code == 0);
    CHECK(run(args + report_b).exit_code == 0);
    const std::string a = slurp(report_a);
    const std::string b = slurp(report_b);
    CHECK(!a.empty());
    // identical inputs, identical bytes (the command echo differs only in
    // the report path, which sits outside the compared sections)
    CHECK(a.substr(a.find("\"input_digest\"")) == b.substr(b.find("\"input_digest\"")));
    std::remove(report_a.c_str());
    std::remove(report_b.c_str());

    const std::string report_c = "verify_c.json";
    const std::string report_d = "verify_d.json";
    CHECK(run("verify --theorems T3_4 --n-max 5 --report " + report_c).exit_code == 0);
    CHECK(run("verify --theorems T3_4 --n-max 5 --report " + report_d).exit_code == 0);
    // strip the echoed command line before comparing whole files
    std::string c = slurp(report_c), d = slurp(report_d);
    c.erase(c.find("\"command\""), c.find("\"input_digest\"") - c.find("\"command\""));
    d.erase(d.find("\"command\""), d.find("\"input_digest\"") - d.find("\"command\""));
    CHECK(c == d);
    std::remove(report_c.c_str());
    std::remove(report_d.c_str());
}

TEST_CASE("worker count never changes the report bytes") {
    const std::string report_a = "threads_a.json";
    const std::string report_b = "threads_b.json";
    const std::string tail = " verify --theorems T3_4,T4_8 --n-max 6 --full-report --report ";
    CHECK(std::system(("SDDLAB_THREADS=1 " + binary() + tail + report_a +
                       " > /dev/null 2> /dev/null")
                          .c_str()) == 0);
    CHECK(std::system(("SDDLAB_THREADS=3 " + binary() + tail + report_b +
                       " > /dev/null 2> /dev/null")
                          .c_str()) == 0);
    std::string a = slurp(report_a), b = slurp(report_b);
    REQUIRE(!a.empty());
    // the echoed command differs only in the report filename; cut it out
    a.erase(a.find("\"command\""), a.find("\"expected") - a.find("\"command\""));
    b.erase(b.find("\"command\""), b.find("\"expected") - b.find("\"command\""));
    CHECK(a == b);
    std::remove(report_a.c_str());
    std::remove(report_b.c_str());
}

TEST_CASE("search subcommands") {
    const RunResult classify =
        run("search --mode classify --target L --intervals \"(4,6]\" --n-max 6");
    CHECK(classify.exit_code == 0);
    CHECK(classify.out.find("count=3") != std::string::npos);

    const RunResult inverse = run("search --mode inverse --value 7 --n-max 5");
    CHECK(inverse.exit_code == 0);
    CHECK(inverse.out.find("count=1") != std::string::npos);

    const RunResult extremal = run("search --mode extremal --n 5 --m 4 --direction max");
    CHECK(extremal.exit_code == 0);
    CHECK(extremal.out.find("value 17") != std::string::npos);

    CHECK(run("search --mode extremal --n 5 --m 3 --direction max").exit_code == 3);
    CHECK(run("search --mode inverse --value x7 --n-max 4").exit_code == 2);
}

TEST_CASE("generate dumps the class lists") {
    const RunResult gen = run("generate --n 4");
    CHECK(gen.exit_code == 0);
    int lines = 0;
    for (char ch : gen.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 6);

    // dumped output feeds back in as a verify input
    const std::string path = "gen4.g6";
    CHECK(run("generate --n 4 --output " + path).exit_code == 0);
    const RunResult reverify = run("verify --theorems T3_1 --input " + path);
    CHECK(reverify.exit_code == 0);
    CHECK(reverify.out.find("checked=6") != std::string::npos);
    std::remove(path.c_str());
}
