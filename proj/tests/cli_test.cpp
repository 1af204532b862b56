// End-to-end checks of the installed command-line surface: exit-status
// contract, JSON/CSV schemas and the witness/bezout-check file flow.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "bohl/json_io.hpp"
#include "bohl/parser.hpp"
#include "bohl/witness.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(BOHL_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/bohl-cli-test-") + name;
}

}  // namespace

TEST_CASE("eval emits a JSON value and exit 0") {
    CliResult r = run_cli("eval \"1 + t\" --t 2");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("value").at("re").get<double>() == doctest::Approx(3.0));
}

TEST_CASE("bindings are overridable and validated") {
    CliResult r = run_cli("eval \"exp(i*w1*t)\" --t 0.5 --bind w1=3.0");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("value").at("re").get<double>() == doctest::Approx(std::cos(1.5)));

    CHECK(run_cli("eval \"exp(i*w1*t)\" --t 1 --bind w1=-2").exit_code == 1);
    CHECK(run_cli("eval \"exp(i*w1*t)\" --t 1 --bind bogus").exit_code == 1);
    CHECK(run_cli("BOHL_IGNORED=1 eval t --t 1").exit_code == 2);  // stray positional
}

TEST_CASE("default binding scheme env variable") {
    CliResult bad = run_cli("eval \"exp(i*w1*t)\" --t 1");
    CHECK(bad.exit_code == 0);
    std::string with_env =
        "BOHL_DEFAULT_BINDINGS=nonsense " + std::string(BOHL_CLI_PATH) +
        " eval \"exp(i*w1*t)\" --t 1 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(with_env.c_str())) == 1);
    std::string primes_env =
        "BOHL_DEFAULT_BINDINGS=primes " + std::string(BOHL_CLI_PATH) +
        " eval \"exp(i*w1*t)\" --t 1 2>/dev/null >/dev/null";
    CHECK(WEXITSTATUS(std::system(primes_env.c_str())) == 0);
}

TEST_CASE("malformed input never exits 0") {
    CHECK(run_cli("diff \"1 + \"").exit_code == 1);
    CHECK(run_cli("diff \"exp(exp(t))\"").exit_code == 1);
    CHECK(run_cli("laplace \"))\"").exit_code == 1);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("eval").exit_code == 2);
    CHECK(run_cli("witness bsr").exit_code == 2);          // missing --n
    CHECK(run_cli("arith pow t t").exit_code == 2);        // bad mode
    CHECK(run_cli("invlaplace /nonexistent.json").exit_code == 1);
}

TEST_CASE("arith, diff and psi emit canonical text") {
    CliResult r = run_cli("arith mul \"t*exp(t)\" \"t*exp(-t)\"");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("text") == "t^2");

    r = run_cli("diff \"t*exp(2*t)\"");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("text") == "2*t*exp(2*t) + exp(2*t)");

    r = run_cli("psi \"t*exp(t) + exp(i*t)\"");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("text") == "exp(i*t) + 1");
}

TEST_CASE("laplace and invlaplace round trip through a file") {
    std::string pf_path = temp_path("pf.json");
    CliResult r = run_cli("laplace \"t^2*exp(3*t)\" --out " + pf_path);
    REQUIRE(r.exit_code == 0);

    std::ifstream in(pf_path);
    json stored = json::parse(in);
    CHECK(stored.at("text") == "2/(s - 3)^3");
    REQUIRE(stored.at("terms").size() == 1);
    CHECK(stored.at("terms")[0].at("order") == 3);
    CHECK(stored.at("terms")[0].at("residue").at("re") == "2");

    CliResult back = run_cli("invlaplace " + pf_path);
    REQUIRE(back.exit_code == 0);
    CHECK(json::parse(back.out).at("text") == "t^2*exp(3*t)");
}

TEST_CASE("partfrac decomposes a factored transfer function") {
    std::string rf_path = temp_path("rf.json");
    {
        json pole1 = {{"growth", "1"}, {"freq", {{"rat", "0"}, {"gens", json::object()}}}};
        json pole2 = {{"growth", "2"}, {"freq", {{"rat", "0"}, {"gens", json::object()}}}};
        json rf = {{"numerator", json::array({json{{"re", "1"}, {"im", "0"}}})},
                   {"denominator", json::array({json{{"pole", pole1}, {"multiplicity", 1}},
                                                json{{"pole", pole2}, {"multiplicity", 1}}})}};
        std::ofstream out(rf_path);
        out << rf.dump();
    }
    CliResult r = run_cli("partfrac " + rf_path);
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("text") == "-1/(s - 1) + 1/(s - 2)");

    // a non-strictly-proper input is a domain error
    {
        json pole1 = {{"growth", "1"}, {"freq", {{"rat", "0"}, {"gens", json::object()}}}};
        json rf = {{"numerator", json::array({json{{"re", "0"}, {"im", "0"}},
                                              json{{"re", "1"}, {"im", "0"}}})},
                   {"denominator", json::array({json{{"pole", pole1}, {"multiplicity", 1}}})}};
        std::ofstream out_file(rf_path);
        out_file << rf.dump();
    }
    CHECK(run_cli("partfrac " + rf_path).exit_code == 1);
}

TEST_CASE("unit and boundedness queries") {
    CliResult r = run_cli("is-unit \"2*exp(3*t)\"");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("unit") == true);
    CHECK(out.at("inverse") == "1/2*exp(-3*t)");

    r = run_cli("is-unit \"1 + t\"");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("unit") == false);

    r = run_cli("is-bounded \"exp(i*w1*t)\"");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("bounded") == true);

    r = run_cli("is-bounded \"t\"");
    CHECK(json::parse(r.out).at("bounded") == false);
}

TEST_CASE("witness files feed bezout-check") {
    std::string f_path = temp_path("f.json");
    std::string g_path = temp_path("g.json");
    REQUIRE(run_cli("witness bsr --n 2 --s 2 --part tuple --out " + f_path).exit_code == 0);
    REQUIRE(run_cli("witness bsr --n 2 --s 2 --part inverse --out " + g_path).exit_code == 0);

    CliResult check = run_cli("bezout-check --f " + f_path + " --g " + g_path);
    REQUIRE(check.exit_code == 0);
    CHECK(json::parse(check.out).at("bezout") == true);

    // mismatched tuples answer false without failing
    CliResult wrong = run_cli("bezout-check --f " + f_path + " --g " + f_path);
    REQUIRE(wrong.exit_code == 0);
    CHECK(json::parse(wrong.out).at("bezout") == false);

    // the emitted file matches the in-process construction
    std::ifstream in(f_path);
    bohl::BohlTuple stored = bohl::tuple_from_json(json::parse(in));
    CHECK(stored == bohl::bsr_witness(bohl::WitnessSpec::with_default_names(2, 2)));

    CliResult combined = run_cli("witness bsr --n 1");
    REQUIRE(combined.exit_code == 0);
    json both = json::parse(combined.out);
    CHECK(both.contains("tuple"));
    CHECK(both.contains("inverse"));

    CliResult tsr = run_cli("witness tsr --n 2");
    REQUIRE(tsr.exit_code == 0);
    CHECK(bohl::tuple_from_json(json::parse(tsr.out)).size() == 2);
}

TEST_CASE("sample writes CSV") {
    std::string csv_path = temp_path("series.csv");
    REQUIRE(run_cli("sample t --t0 0 --t1 2 --n 2 --out " + csv_path).exit_code == 0);
    std::ifstream in(csv_path);
    std::string header, row0, row1, row2;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK(header == "t,re,im");
    CHECK(row0 == "0,0,0");
    CHECK(row1 == "1,1,0");
    CHECK(row2 == "2,2,0");
}

TEST_CASE("probe reports one record per horizon") {
    CliResult r = run_cli("probe \"t*exp(i*t)\" --horizons 10,100");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    REQUIRE(out.size() == 2);
    CHECK(out[0].at("horizon").get<double>() == doctest::Approx(10.0));
    CHECK(out[1].at("sup").get<double>() == doctest::Approx(100.0));
}
