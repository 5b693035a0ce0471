#include "doctest.h"

#include <sstream>

#include "humbert/cli.hpp"
#include "humbert/series.hpp"

using namespace humbert;

namespace {

int run(const std::vector<std::string>& args, std::string& out_s, std::string& err_s) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    out_s = out.str();
    err_s = err.str();
    return code;
}

} // namespace

TEST_CASE("eval matches the library value and prints schema 1") {
    std::string out, err;
    int code = run({"eval", "--family", "phi2", "--beta", "1", "--beta-p", "1", "--gamma", "2",
                    "--x", "-0.5", "--y", "-0.25", "--t", "1"},
                   out, err);
    CHECK(code == 0);
    CHECK(out.find("\"schema\": 1") != std::string::npos);
    double lib = eval_series(ParamSet::phi2(1, 1, 2), EvalPoint{-0.5, -0.25, 1.0}).value;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", lib);
    CHECK(out.find(std::string(buf).substr(0, 10)) != std::string::npos);
}

TEST_CASE("eval at the origin returns exactly 1") {
    std::string out, err;
    int code = run({"eval", "--family", "phi2", "--beta", "1", "--beta-p", "1", "--gamma", "2",
                    "--x", "0", "--y", "0", "--format", "csv"},
                   out, err);
    CHECK(code == 0);
    CHECK(out.find("\n1,") != std::string::npos);
}

TEST_CASE("usage errors exit 2, evaluation failures exit 1") {
    std::string out, err;
    CHECK(run({"nonsense"}, out, err) == 2);
    // Xi2 series beyond the disk: evaluation failure on the series route
    CHECK(run({"eval", "--family", "xi2", "--alpha", "1", "--beta", "1", "--gamma", "2", "--x",
               "-2", "--y", "0", "--route", "series"},
              out, err) == 1);
    CHECK(err.find("evaluation failed") != std::string::npos);
}

TEST_CASE("identities subcommand gates on the threshold") {
    std::string out, err;
    CHECK(run({"identities", "--suite", "addition", "--tol", "1e-9"}, out, err) == 0);
    CHECK(run({"identities", "--suite", "addition", "--tol", "1e-18", "--format", "csv"}, out,
              err) == 1);
}

TEST_CASE("compare runs multiple routes") {
    std::string out, err;
    int code = run({"compare", "--family", "phi3", "--beta", "1", "--gamma", "2", "--x", "0.5",
                    "--y", "0.25", "--t", "1", "--tol", "1e-6"},
                   out, err);
    CHECK(code == 0);
    CHECK(out.find("max_pairwise_deviation") != std::string::npos);
}

TEST_CASE("sweep is deterministic across thread counts") {
    std::vector<std::string> base{"sweep", "--family", "phi2",   "--beta", "1",  "--beta-p", "1",
                                  "--gamma", "2",      "--x",    "0.3",    "--y", "0.2",
                                  "--over",  "t",      "--from", "0.5",    "--to", "4",
                                  "--count", "7",      "--route", "series"};
    std::string out1, out4, err;
    CHECK(run(base, out1, err) == 0);
    std::vector<std::string> threaded = base;
    threaded.push_back("--threads");
    threaded.push_back("4");
    CHECK(run(threaded, out4, err) == 0);
    CHECK(out1 == out4);
}

TEST_CASE("asym subcommand emits the probe csv") {
    std::string out, err;
    int code = run({"asym", "--family", "phi2", "--beta", "0.5", "--beta-p", "0.5", "--gamma",
                    "2", "--x", "1", "--y", "1", "--t-grid", "10,100"},
                   out, err);
    CHECK(code == 0);
    CHECK(out.find("# branch: x > 0, y > 0") != std::string::npos);
    CHECK(out.find("t,exact,asym,ratio,branch") != std::string::npos);
}

TEST_CASE("constraint subcommand solves") {
    std::string out, err;
    int code = run({"constraint", "--d", "3", "--g", "1", "--gamma-diss", "1", "--C", "1", "--t",
                    "10", "--format", "csv"},
                   out, err);
    CHECK(code == 0);
    CHECK(out.find("t,Z,residual") != std::string::npos);
}
