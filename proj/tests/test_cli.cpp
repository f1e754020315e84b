// Integration tests driving the installed command-line binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef CLI_PATH
#error "CLI_PATH must be defined"
#endif
#ifndef DATA_DIR
#error "DATA_DIR must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = "/tmp/exptest_cli_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("fit-test on bundled data, json output") {
    RunResult r = run("fit-test proschan --method exact --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["method"] == "exact");
    CHECK(j["n"] == 29);
    CHECK(std::fabs(j["statistic"].get<double>() - (-0.2352)) < 5e-4);
    CHECK(j["decision"] == "fail-to-reject");
    CHECK(std::fabs(j["critical_value"].get<double>() - (-0.2891)) < 0.02);
    for (const char* field :
         {"method", "n", "statistic", "p_value", "alpha", "critical_value",
          "alternative", "decision", "warnings"})
        CHECK(j.contains(field));
}

TEST_CASE("fit-test asymptotic on locomotive data rejects") {
    RunResult r = run("fit-test locomotive --method asymptotic --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(std::fabs(j["statistic"].get<double>() - (-1.0941)) < 5e-4);
    CHECK(j["p_value"].get<double>() < 1e-12);
    CHECK(j["decision"] == "reject");
}

TEST_CASE("fit-test from a data file equals the bundled run") {
    RunResult file =
        run(std::string("fit-test ") + DATA_DIR +
            "/proschan_plane3.txt --method exact --format json");
    RunResult builtin = run("fit-test proschan --method exact --format json");
    CHECK(file.exit_code == 0);
    CHECK(file.output == builtin.output);
}

TEST_CASE("competitor methods run") {
    for (const char* m : {"cn", "tn", "w2", "sstar", "klc"}) {
        RunResult r = run(std::string("fit-test proschan --method ") + m +
                          " --reps 2000 --format json");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["method"] == m);
        CHECK(j["p_value"].get<double>() >= 0.0);
        CHECK(j["p_value"].get<double>() <= 1.0);
    }
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("fit-test /nonexistent/file").exit_code == 2);
    CHECK(run("fit-test proschan --method bogus").exit_code == 2);
    std::string bad = temp_file("neg.txt", "1.0\n-3.0\n2.0\n");
    CHECK(run("fit-test " + bad).exit_code == 2);
    std::string small = temp_file("small.txt", "1.0\n2.0\n");
    CHECK(run("fit-test " + small).exit_code == 2);
}

TEST_CASE("censored test on the bundled fixture") {
    RunResult r = run(std::string("fit-test-censored ") + DATA_DIR +
                      "/weibull2_censored_n200.csv --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["method"] == "censored-ipcw");
    CHECK(j["n"] == 200);
    CHECK(j["decision"] == "reject");
}

TEST_CASE("censored edge cases map to distinct exit codes") {
    std::string all_censored =
        temp_file("allcens.csv", "time,status\n1,0\n2,0\n3,0\n");
    CHECK(run("fit-test-censored " + all_censored).exit_code == 2);

    // censoring so heavy the simulated null law cannot be calibrated:
    // numeric-degeneracy code
    std::string heavy;
    heavy += "1,1\n2,1\n3,1\n";
    for (int i = 0; i < 27; ++i) heavy += "1e-9,0\n";
    std::string heavy_file = temp_file("heavycens.csv", heavy);
    CHECK(run("fit-test-censored " + heavy_file + " --reps 500").exit_code == 3);
}

TEST_CASE("critical-values table") {
    RunResult r = run("critical-values --sizes 3 10 --alphas 0.05");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n\talpha\tcritical_value") != std::string::npos);
    CHECK(r.output.find("-1.329") != std::string::npos);
    CHECK(r.output.find("-0.535") != std::string::npos);

    RunResult rj = run("critical-values --sizes 3 --alphas 0.05 --format json");
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j[0]["n"] == 3);
}

TEST_CASE("power table determinism across workers") {
    std::string args =
        "power --dist weibull:2 --sizes 8 --tests ndse w2 --reps 500 "
        "--threshold-reps 2000 --seed 11";
    RunResult serial = run(args + " --workers 1");
    RunResult parallel = run(args + " --workers 4");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
    CHECK(serial.output.find("ndse") != std::string::npos);
}

TEST_CASE("ndse subcommand") {
    RunResult r = run("ndse --dist exponential:1 --tmin 0.5 --tmax 2 --points 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("class=constant-exponential") != std::string::npos);
    CHECK(r.output.find("-0.25") != std::string::npos);

    RunResult rj = run("ndse --dist weibull:2:1 --points 3 --format json");
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j["class"] == "INDSE");
    CHECK(j["curve"].size() == 3);

    CHECK(run("ndse --dist bogus:1").exit_code == 2);
}
