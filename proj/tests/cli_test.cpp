#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "paramcost/evaluation.hpp"

#ifndef PARAMCOST_CLI_PATH
#error "PARAMCOST_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(PARAMCOST_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Scratch directory shared by the cases in this binary; unique per run.
const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("paramcost-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Value of a `key: number` line in CLI output.
double extract_number(const std::string& output, const std::string& key) {
    const std::string haystack = "\n" + output;
    const std::string needle = "\n" + key + ": ";
    auto pos = haystack.find(needle);
    REQUIRE(pos != std::string::npos);
    return std::stod(haystack.substr(pos + needle.size()));
}

} // namespace

TEST_CASE("estimate prints the effort for a size-driven model") {
    const auto result = run_cli("estimate --model cocomo81-basic --mode organic --size 50");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("effort_pm: 145.92501487903888\n") != std::string::npos);
    CHECK(result.output.find("effort_pm_rounded: 145\n") != std::string::npos);
}

TEST_CASE("estimate applies an explicit adjustment factor") {
    const auto base = run_cli("estimate --model cocomo81-intermediate --mode organic --size 50");
    const auto doubled =
        run_cli("estimate --model cocomo81-intermediate --mode organic --size 50 --eaf 2");
    CHECK(base.exit_code == 0);
    CHECK(doubled.exit_code == 0);
    CHECK(base.output.find("effort_pm: 194.5666865053852\n") != std::string::npos);
    CHECK(doubled.output.find("effort_pm: 389.1333730107704\n") != std::string::npos);
}

TEST_CASE("estimate rejects unknown models with a usage error") {
    const auto result = run_cli("estimate --model cocomo85 --size 50");
    CHECK(result.exit_code == 1);
}

TEST_CASE("basic mode takes no adjustment flags") {
    const auto result =
        run_cli("estimate --model cocomo81-basic --mode organic --size 50 --eaf 1.2");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("adjustment") != std::string::npos);
}

TEST_CASE("estimate covers the remaining model families") {
    const auto delphi = run_cli("estimate --model delphi --estimates 4,5,6,7,14");
    CHECK(delphi.exit_code == 0);
    CHECK(delphi.output.find("effort_pm: 7.8\n") != std::string::npos);

    const auto slim =
        run_cli("estimate --model slim --size-loc 100000 --environment 3000 --buildup 8");
    CHECK(slim.exit_code == 0);
    CHECK(slim.output.find("td_years: 3.3392540710990004\n") != std::string::npos);
    CHECK(slim.output.find("effort_py: 297.8779657717476\n") != std::string::npos);

    const auto fpa = run_cli("estimate --model fpa --inputs 1,0,0 --outputs 1,0,0 --language cpp");
    CHECK(fpa.exit_code == 0);
    CHECK(fpa.output.find("unadjusted_fp: 7\n") != std::string::npos);
    CHECK(fpa.output.find("adjusted_fp: 7\n") != std::string::npos);
    CHECK(fpa.output.find("sloc: 371\n") != std::string::npos);

    const auto appcomp =
        run_cli("estimate --model cocomo2-app-composition --object-points 100 --reuse 20 "
                "--productivity 10");
    CHECK(appcomp.exit_code == 0);
    CHECK(appcomp.output.find("effort_pm: 8\n") != std::string::npos);
}

TEST_CASE("evaluate reproduces the published tables with stock constants") {
    const auto result = run_cli("evaluate --models all --against-paper");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("evaluate emits identical CSV on repeated runs") {
    const auto first = run_cli("evaluate --models all --format csv");
    const auto second = run_cli("evaluate --models all --format csv");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    std::istringstream in(first.output);
    const auto report = paramcost::evaluation::parse_report_csv(in);
    CHECK(report.rows.size() == 330); // 30 projects x 11 configurations
    CHECK(report.mmre.size() == 11);
}

TEST_CASE("evaluate writes reports to a file when asked") {
    const fs::path out = scratch_dir() / "report.csv";
    const auto result =
        run_cli("evaluate --models cocomo81-basic --format csv --out " + out.string());
    CHECK(result.exit_code == 0);
    std::istringstream in(read_file(out));
    const auto report = paramcost::evaluation::parse_report_csv(in);
    CHECK(report.rows.size() == 90);
}

TEST_CASE("an unreadable corpus is an I/O error") {
    const auto result = run_cli("evaluate --corpus /nonexistent/corpus.csv");
    CHECK(result.exit_code == 2);
}

TEST_CASE("a header-only corpus is a validation error") {
    const auto path = write_scratch("empty.csv", "id,ref_group,size_kloc,actual_effort_pm\n");
    const auto result = run_cli("evaluate --corpus " + path.string());
    CHECK(result.exit_code == 1);
}

TEST_CASE("perturbed constants make the table comparison fail with exit 3") {
    const auto cfg = write_scratch("perturbed.conf", "cocomo81.basic.organic.a = 9.9\n");
    const auto result = run_cli("--config " + cfg.string() + " evaluate --against-paper");
    CHECK(result.exit_code == 3);
    CHECK(result.output.find("result: FAIL") != std::string::npos);
    CHECK(result.output.find("FAIL") != std::string::npos);
}

TEST_CASE("unknown config keys are rejected") {
    const auto cfg = write_scratch("unknown.conf", "cocomo81.basic.organic.c = 1\n");
    const auto result = run_cli("--config " + cfg.string() + " estimate --model cocomo81-basic "
                                "--mode organic --size 50");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("unknown") != std::string::npos);
}

TEST_CASE("the config file environment variable is honored") {
    const auto cfg = write_scratch("env.conf", "cocomo81.basic.organic.a = 4.8\n");
    const std::string command = "PARAMCOST_CONFIG=" + cfg.string() + " " +
                                std::string(PARAMCOST_CLI_PATH) +
                                " estimate --model cocomo81-basic --mode organic --size 1 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output.find("effort_pm: 4.8\n") != std::string::npos);
}

TEST_CASE("dataset export round-trips through validate") {
    const fs::path exported = scratch_dir() / "corpus.csv";
    const auto export_result = run_cli("dataset --export --out " + exported.string());
    CHECK(export_result.exit_code == 0);
    CHECK(read_file(exported).find("15,**,30.8,143.7\n") != std::string::npos);

    const auto validate_result = run_cli("dataset --validate " + exported.string());
    CHECK(validate_result.exit_code == 0);
    CHECK(validate_result.output.find("ok: 30 project(s)") != std::string::npos);
}

TEST_CASE("calibrate recovers constants from exact power-law data") {
    std::string csv = "id,ref_group,size_kloc,actual_effort_pm\n";
    int id = 1;
    for (double s : {4.0, 9.0, 25.0, 60.0, 110.0}) {
        const double e = 3.0 * std::pow(s, 1.12);
        std::ostringstream row;
        row << id++ << ",x," << s << "," << e << "\n";
        csv += row.str();
    }
    const auto path = write_scratch("powerlaw.csv", csv);
    const auto result = run_cli("calibrate --corpus " + path.string());
    CHECK(result.exit_code == 0);
    CHECK(extract_number(result.output, "a") == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(extract_number(result.output, "b") == doctest::Approx(1.12).epsilon(1e-6));
    CHECK(extract_number(result.output, "log_residual_ss") ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("calibrate reports both MMREs against a baseline and can emit a config") {
    const fs::path emitted = scratch_dir() / "fitted.conf";
    const auto result = run_cli("calibrate --baseline cocomo81-basic-organic --emit-config " +
                                emitted.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("baseline_mmre: 0.774284712029432\n") != std::string::npos);
    CHECK(result.output.find("fitted_mmre: 1.7154057860383891\n") != std::string::npos);

    const std::string config_text = read_file(emitted);
    CHECK(config_text.find("cocomo81.basic.organic.a = 75.92968570624647\n") !=
          std::string::npos);
    CHECK(config_text.find("cocomo81.basic.organic.b = 0.2145879299616506\n") !=
          std::string::npos);

    // the emitted file is a loadable config
    const auto reuse = run_cli("--config " + emitted.string() +
                               " estimate --model cocomo81-basic --mode organic --size 50");
    CHECK(reuse.exit_code == 0);
}

TEST_CASE("config dumps the merged model tables") {
    const auto result = run_cli("config");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("cocomo81.basic.organic.a = 2.4\n") != std::string::npos);
    CHECK(result.output.find("cocomo2.post.a = 2.55\n") != std::string::npos);
    CHECK(result.output.find("fpa.language.cobol = 106\n") != std::string::npos);
}

TEST_CASE("--meta prefixes output with tool and timestamp comments") {
    const auto result =
        run_cli("--meta estimate --model cocomo81-basic --mode organic --size 50");
    CHECK(result.exit_code == 0);
    CHECK(result.output.rfind("# paramcost", 0) == 0);
    CHECK(result.output.find("# generated: ") != std::string::npos);
}
