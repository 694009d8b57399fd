#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "orthotime/cli/commands.hpp"
#include "orthotime/cli/problem.hpp"
#include "orthotime/linalg.hpp"

namespace orthotime::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ORTHOTIME_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("orthotime_test_" + name);
    std::ofstream(p) << content;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kPauliPair = R"({"dim": 2,
  "H_a": [[[1,0],[0,0]],[[0,0],[-1,0]]],
  "H_b": [[[-1,0],[0,0]],[[0,0],[1,0]]]})";

TEST(ParseProblem, MatrixForm) {
    const ProblemSpec s = parse_problem(json::parse(kPauliPair));
    EXPECT_EQ(s.dim, 2);
    EXPECT_DOUBLE_EQ(s.ha.matrix()(1, 1).real(), -1.0);
    EXPECT_FALSE(s.qubit);
}

TEST(ParseProblem, QubitForm) {
    const ProblemSpec s = parse_problem(json::parse(R"({"qubit": {"omega_a": 3, "omega_b": 1, "gamma": 3.141592653589793}})"));
    ASSERT_TRUE(s.qubit);
    EXPECT_EQ(s.dim, 2);
    EXPECT_NEAR(s.qubit->gamma, kPi, 1e-15);
}

std::string field_of(const std::string& doc) {
    try {
        parse_problem(json::parse(doc));
    } catch (const InputError& e) {
        return e.field();
    }
    return "";
}

TEST(ParseProblem, ErrorsNameTheField) {
    EXPECT_EQ(field_of(R"({"H_a": [], "H_b": []})"), "dim");
    EXPECT_EQ(field_of(R"({"dim": 2, "H_b": []})"), "H_a");
    EXPECT_EQ(field_of(R"({"dim": 1, "H_a": [[[1,0]]], "H_b": [[1]]})"), "H_b[0][0]");
    EXPECT_EQ(field_of(R"({"dim": 2, "H_a": [[[0,0],[1,0]],[[0,0],[0,0]]], "H_b": [[[0,0],[0,0]],[[0,0],[0,0]]]})"), "H_a");
    EXPECT_EQ(field_of(R"({"qubit": {"omega_b": 1, "gamma": 0}})"), "qubit.omega_a");
    EXPECT_EQ(field_of(R"({"qubit": {"omega_a": 1, "omega_b": 1, "gamma": "x"}})"), "qubit.gamma");
    EXPECT_EQ(field_of(R"({"dim": 1, "H_a": [[[1,0]]], "H_b": [[[2,0]]], "t_max": -1})"), "t_max");
}

TEST(Cli, DiscriminatePauliPair) {
    const fs::path in = write_temp("pauli.json", kPauliPair);
    const RunResult r = run("discriminate --input " + in.string());
    ASSERT_EQ(r.code, 0) << r.out;
    const json rep = json::parse(r.out);
    EXPECT_EQ(rep["status"], "orthogonal");
    EXPECT_NEAR(rep["t_perp"].get<double>(), kPi / 4, 1e-10);
    EXPECT_LE(rep["residual"].get<double>(), 1e-8);
    EXPECT_TRUE(rep["bounds"].contains("t_lb_aa"));
}

TEST(Cli, DiscriminateQubitShorthand) {
    const fs::path in = write_temp("qubit.json", R"({"qubit": {"omega_a": 3, "omega_b": 1, "gamma": 3.141592653589793}})");
    const RunResult r = run("discriminate --input " + in.string());
    ASSERT_EQ(r.code, 0) << r.out;
    const json rep = json::parse(r.out);
    EXPECT_NEAR(rep["t_perp"].get<double>(), kPi / 8, 1e-10);
    EXPECT_NEAR(rep["qubit"]["t_perp_closed_form"].get<double>(), kPi / 8, 1e-12);
}

TEST(Cli, EqualOperatorsExitTwo) {
    const fs::path in = write_temp("same.json", R"({"dim": 2,
      "H_a": [[[0,0],[1,0]],[[1,0],[0,0]]], "H_b": [[[0,0],[1,0]],[[1,0],[0,0]]]})");
    const fs::path out = fs::temp_directory_path() / "orthotime_test_same_out.json";
    const RunResult r = run("discriminate --input " + in.string() + " --output " + out.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("no orthogonality within horizon"), std::string::npos);
    EXPECT_EQ(json::parse(read_file(out))["status"], "no orthogonality within horizon");
}

TEST(Cli, MalformedInputExitOneNamesField) {
    const fs::path in = write_temp("bad.json", R"({"dim": 2, "H_a": [[[1,0],[0,0]],[[0,0],[-1,0]]], "H_b": [[[1,0],[0,0]]]})");
    const RunResult r = run("discriminate --input " + in.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("H_b"), std::string::npos) << r.out;

    const fs::path garbage = write_temp("garbage.json", "{not json");
    EXPECT_EQ(run("discriminate --input " + garbage.string()).code, 1);
    EXPECT_EQ(run("discriminate --input " + in.string() + " --t-max -3").code, 1);
    EXPECT_EQ(run("fig1 --r-min 0.9 --r-max 0.1").code, 1);
}

TEST(Cli, BoundsWithAndWithoutState) {
    const fs::path a = write_temp("bounds_psi.json", R"({"dim": 2,
      "H_a": [[[1,0],[0,0]],[[0,0],[-1,0]]], "H_b": [[[-1,0],[0,0]],[[0,0],[1,0]]],
      "psi": [[0.7071067811865476,0],[0.7071067811865476,0]]})");
    const RunResult ra = run("bounds --input " + a.string());
    ASSERT_EQ(ra.code, 0) << ra.out;
    const json ja = json::parse(ra.out);
    EXPECT_EQ(ja["state_source"], "input");
    EXPECT_NEAR(ja["t_lb_aa"].get<double>(), kPi / 4, 1e-14);

    const fs::path b = write_temp("bounds_nopsi.json", kPauliPair);
    const json jb = json::parse(run("bounds --input " + b.string()).out);
    EXPECT_EQ(jb["state_source"], "optimal");
    EXPECT_NEAR(jb["t_lb_span"].get<double>(), kPi / 4, 1e-14);
}

TEST(Cli, Fig1Csv) {
    const RunResult r = run("fig1 --points 5");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "abscissa,t_perp_raw,t_perp_norm,t_lb_aa,t_lb_span,t_margolus,exists");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const double r0 = std::stod(line.substr(0, line.find(',')));
        std::stringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        std::getline(cells, cell, ',');
        std::getline(cells, cell, ',');
        EXPECT_NEAR(std::stod(cell), 1.0 / (8.0 * r0), 1e-10);
    }
    EXPECT_EQ(rows, 5);
}

TEST(Cli, Fig2CsvHasNoMissingRootsAtRatioThree) {
    const RunResult r = run("fig2 --points 11 --omega-ratio 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("NA"), std::string::npos);
}

TEST(Cli, Fig2EqualFrequenciesGiveNA) {
    const RunResult r = run("fig2 --points 3 --omega-ratio 1 --gamma-min 0 --gamma-max 1");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("NA"), std::string::npos);
}

TEST(Cli, VerifyTheorem) {
    const RunResult trivial = run("verify-theorem --trials 1 --dim-max 1");
    EXPECT_EQ(trivial.code, 0);
    EXPECT_NE(trivial.out.find("result: PASS"), std::string::npos);
    EXPECT_EQ(run("verify-theorem --trials 0").code, 1);
}

TEST(Cli, ByteIdenticalReruns) {
    const fs::path in = write_temp("rerun.json", kPauliPair);
    for (const std::string args :
         {"discriminate --input " + in.string(), std::string("fig1"), std::string("fig2"),
          std::string("verify-theorem --trials 200 --seed 9")}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        EXPECT_EQ(a.code, b.code) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Commands, InProcessMatchesBinary) {
    std::ostringstream out, err;
    VerifyArgs v;
    v.trials = 50;
    v.seed = 4;
    EXPECT_EQ(cmd_verify_theorem(v, out, err), 0);
    EXPECT_EQ(out.str(), run("verify-theorem --trials 50 --seed 4").out);
}

}  // namespace
}  // namespace orthotime::cli
