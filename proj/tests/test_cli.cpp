#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

// Exercises the installed binary: exit codes, report files, config input.

namespace {

std::string g_cli;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_file = "cli_test_output.txt";
    const std::string cmd = g_cli + " " + args + " > " + out_file + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("catalog listing") {
    const RunResult r = run("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("horosphere-h3") != std::string::npos);
    CHECK(r.output.find("1") != std::string::npos);

    const RunResult filtered = run("catalog --space h2xr");
    CHECK(filtered.exit_code == 0);
    CHECK(filtered.output.find("vertical-cylinder-h2xr") != std::string::npos);
    CHECK(filtered.output.find("clifford-torus") == std::string::npos);

    const RunResult js = run("catalog --json");
    CHECK(js.exit_code == 0);
    const auto parsed = nlohmann::json::parse(js.output);
    CHECK(parsed.is_array());
    bool found = false;
    for (const auto& e : parsed)
        if (e["name"] == "horosphere-h3") {
            found = true;
            CHECK(e["H"] == "1");
            CHECK(e["cmc"] == true);
        }
    CHECK(found);
}

TEST_CASE("check command: pass, reports, exit codes") {
    const RunResult r = run(
        "check ruh-vilms --surface geodesic-sphere-s3 --rho 0.7 --grid 64 --richardson "
        "--out cli_reports --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    const auto rep =
        nlohmann::json::parse(slurp("cli_reports/ruh-vilms_geodesic-sphere-s3.json"));
    CHECK(rep["check"] == "ruh-vilms");
    CHECK(rep["verdict"] == "pass");
    CHECK(rep["grid"][0] == 64);
    CHECK(rep["audit"]["s_fit"].is_number());
    CHECK(std::abs(rep["audit"]["s_fit"].get<double>() - 1.0) < 1e-5);
    // CSV grid exported
    const std::string csv = slurp("cli_reports/ruh-vilms_geodesic-sphere-s3_rv_residual.csv");
    CHECK(csv.rfind("u,v,value\n", 0) == 0);

    // forced failure via a tolerance override -> exit 1 and stderr detail
    const RunResult fail = run(
        "check ruh-vilms --surface geodesic-sphere-s3 --tol ruh_vilms=1e-12 "
        "--out cli_reports");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL") != std::string::npos);
    CHECK(fail.output.find("argmax") == std::string::npos);  // human form on stderr
    CHECK(fail.output.find("at node (") != std::string::npos);
}

TEST_CASE("check command: config errors give exit 2") {
    CHECK(run("check ruh-vilms --surface no-such-surface").exit_code == 2);
    CHECK(run("check no-such-check --surface horosphere-h3").exit_code == 2);
    CHECK(run("check ruh-vilms --surface sphere-r3 --r -3").exit_code == 2);
    CHECK(run("check ruh-vilms --surface sphere-r3 --grid 8").exit_code == 2);
    CHECK(run("check quadform --surface ellipsoid-r3").exit_code == 2);
    CHECK(run("check hos --surface horosphere-h3 --killing no-such-preset").exit_code == 2);
    // killing coefficient list must match the algebra dimension
    CHECK(run("check invariance --surface horosphere-h3 --killing 1,0,0").exit_code == 2);
}

TEST_CASE("hos from the command line reports the threshold verdict") {
    const RunResult r = run(
        "check hos --surface equidistant-h3 --d 0.5 --killing hyperbolic-translation "
        "--out cli_reports");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("threshold_verdict: fails") != std::string::npos);
    const auto rep = nlohmann::json::parse(slurp("cli_reports/hos_equidistant-h3.json"));
    CHECK(rep["meta"]["threshold_verdict"] == "fails");
}

TEST_CASE("quadform from the command line prints the CR residual") {
    const RunResult r =
        run("check quadform --surface clifford-torus --grid 64 --out cli_reports");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("cr_residual") != std::string::npos);
    const auto rep = nlohmann::json::parse(slurp("cli_reports/quadform_clifford-torus.json"));
    CHECK(rep["audit"]["ar_sign"] == -1);
}

TEST_CASE("invariance with a raw coefficient vector") {
    // o(1,2)+R has dimension 4; the vertical direction is the last slot
    const RunResult r = run(
        "check invariance --surface vertical-cylinder-h2xr --killing 0,0,0,1 "
        "--out cli_reports");
    CHECK(r.exit_code == 0);
}

TEST_CASE("config file drives multiple checks") {
    {
        std::ofstream cfg("cli_config.json");
        cfg << R"({
  "surface": "horosphere-h3",
  "grid": [48, 48],
  "richardson": true,
  "checks": ["ruh-vilms", "duality"],
  "output": {"path": "cli_reports_cfg", "csv": false}
})";
    }
    const RunResult r = run("check --config cli_config.json");
    CHECK(r.exit_code == 0);
    const auto rep1 = nlohmann::json::parse(slurp("cli_reports_cfg/ruh-vilms_horosphere-h3.json"));
    CHECK(rep1["grid"][0] == 48);
    const auto rep2 = nlohmann::json::parse(slurp("cli_reports_cfg/duality_horosphere-h3.json"));
    CHECK(rep2["verdict"] == "pass");
    // invalid config: bad grid
    {
        std::ofstream cfg("cli_config_bad.json");
        cfg << R"({"surface": "horosphere-h3", "grid": [4, 4], "checks": ["duality"]})";
    }
    CHECK(run("check --config cli_config_bad.json").exit_code == 2);
}

TEST_CASE("repeated runs produce byte-identical reports") {
    const std::string args =
        "check quadform --surface vertical-cylinder-h2xr --kg 1.6 --grid 64 --csv";
    CHECK(run(args + " --out cli_det_a").exit_code == 0);
    CHECK(run(args + " --out cli_det_b").exit_code == 0);
    CHECK(slurp("cli_det_a/quadform_vertical-cylinder-h2xr.json") ==
          slurp("cli_det_b/quadform_vertical-cylinder-h2xr.json"));
    CHECK(slurp("cli_det_a/quadform_vertical-cylinder-h2xr_quad_vs_ar.csv") ==
          slurp("cli_det_b/quadform_vertical-cylinder-h2xr_quad_vs_ar.csv"));
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-gaussmap-binary>\n");
        return 2;
    }
    g_cli = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
