// Command-line front end: catalog browsing, check execution, suite runs,
// JSON/CSV report export.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gaussmap/verify.hpp"

namespace fs = std::filesystem;
using gaussmap::AlgebraElement;
using gaussmap::CheckOptions;
using gaussmap::CheckOutcome;
using gaussmap::ContractViolation;
using gaussmap::ParamSurface;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitConfigError = 2;

std::string slugify(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' ||
            c == '_')
            r += c;
        else if (c == ' ')
            r += '_';
    }
    return r;
}

int env_threads() {
    const char* e = std::getenv("GAUSSMAP_THREADS");
    if (!e) return 1;
    const int n = std::atoi(e);
    return n > 0 ? n : 1;
}

struct CheckRequest {
    std::string check;
    std::string surface;
    std::map<std::string, double> params;
    int nu = 64, nv = 64;
    bool richardson = true;
    std::map<std::string, double> tolerances;
    std::string killing;              // preset name, empty for default
    std::vector<double> killing_raw;  // raw coefficients, overrides preset
    std::string out_dir = "reports";
    bool csv = false;
};

AlgebraElement resolve_killing(const gaussmap::ModelSpace& space, const CheckRequest& rq) {
    if (!rq.killing_raw.empty()) {
        const int dim = space.algebra_kind().dimension();
        if (static_cast<int>(rq.killing_raw.size()) != dim)
            throw ContractViolation("killing_vector length must equal the algebra dimension (" +
                                    std::to_string(dim) + ")");
        gaussmap::Vec c(dim);
        for (int i = 0; i < dim; ++i) c[i] = rq.killing_raw[i];
        return gaussmap::algebra_from_coordinates(space.algebra_kind(), c);
    }
    if (!rq.killing.empty()) return gaussmap::killing_preset(space, rq.killing);
    // per-space default
    switch (space.family) {
        case gaussmap::SpaceFamily::Euclid:
            return gaussmap::killing_preset(space, "translation-z");
        case gaussmap::SpaceFamily::Sphere:
        case gaussmap::SpaceFamily::Hyperbolic:
            return gaussmap::killing_preset(space, "axis-rotation");
        default:
            return gaussmap::killing_preset(space, "vertical");
    }
}

void write_outcome(const CheckOutcome& o, const CheckRequest& rq,
                   const std::string& label) {
    fs::create_directories(rq.out_dir);
    const std::string base = rq.out_dir + "/" + slugify(label);
    gaussmap::write_file_atomic(base + ".json", gaussmap::report_to_json(o.report));
    if (rq.csv)
        for (const auto& g : o.grids)
            gaussmap::write_file_atomic(base + "_" + slugify(g.name) + ".csv",
                                        gaussmap::grid_to_csv(g));
}

void print_failures(const CheckOutcome& o) {
    for (const auto& f : o.report.fields)
        if (f.tol && !f.pass)
            std::cerr << "FAIL " << o.report.check << " " << o.report.surface
                      << ": field " << f.name << " max_abs=" << gaussmap::format_double(f.max_abs)
                      << " at node (" << f.argmax_i << ", " << f.argmax_j
                      << "), tol=" << gaussmap::format_double(*f.tol) << "\n";
}

int run_one_check(const CheckRequest& rq) {
    const ParamSurface surf = gaussmap::catalog(rq.surface, rq.params);
    if (rq.nu < 16 || rq.nv < 16)
        throw ContractViolation("grid must be at least 16 nodes per axis");
    for (const auto& [k, v] : rq.tolerances)
        if (v <= 0) throw ContractViolation("tolerance '" + k + "' must be positive");
    CheckOptions opt;
    opt.Nu = rq.nu;
    opt.Nv = rq.nv;
    opt.richardson = rq.richardson;
    opt.tol_override = rq.tolerances;

    CheckOutcome o;
    if (rq.check == "ruh-vilms") {
        o = gaussmap::ruh_vilms_residual(surf, opt);
    } else if (rq.check == "duality") {
        o = gaussmap::duality_check(surf, opt);
    } else if (rq.check == "quadform") {
        o = gaussmap::quad_compare(surf, opt);
    } else if (rq.check == "perp") {
        o = gaussmap::perp_check(surf, opt);
    } else if (rq.check == "invariance") {
        o = gaussmap::invariance_check(surf, resolve_killing(surf.space, rq),
                                       gaussmap::default_t_grid(), opt);
    } else if (rq.check == "hos") {
        o = gaussmap::hos_diagnostic(surf, resolve_killing(surf.space, rq), opt);
    } else {
        throw ContractViolation("unknown check '" + rq.check +
                                "' (expected ruh-vilms, duality, quadform, perp, "
                                "invariance, hos)");
    }
    write_outcome(o, rq, rq.check + "_" + rq.surface);
    std::cout << (o.report.pass ? "PASS " : "FAIL ") << rq.check << " " << rq.surface
              << "\n";
    for (const auto& f : o.report.fields) {
        std::cout << "  " << f.name << ": max " << gaussmap::format_double(f.max_abs);
        if (f.tol)
            std::cout << " (tol " << gaussmap::format_double(*f.tol) << ", "
                      << (f.pass ? "pass" : "FAIL") << ")";
        else
            std::cout << " (informational)";
        std::cout << "\n";
    }
    for (const auto& [k, v] : o.report.meta) std::cout << "  " << k << ": " << v << "\n";
    if (!o.report.pass) {
        print_failures(o);
        return kExitCheckFail;
    }
    return kExitPass;
}

int cmd_catalog(const std::string& space_filter, bool as_json) {
    const auto entries = gaussmap::catalog_entries();
    if (as_json) {
        std::ostringstream os;
        os << "[\n";
        bool first = true;
        for (const auto& e : entries) {
            if (!space_filter.empty() && e.space_tag != space_filter) continue;
            if (!first) os << ",\n";
            first = false;
            os << "  {\"name\": \"" << e.name << "\", \"space\": \"" << e.space_tag
               << "\", \"params\": {";
            for (size_t k = 0; k < e.param_defaults.size(); ++k) {
                if (k) os << ", ";
                os << "\"" << e.param_defaults[k].first
                   << "\": " << gaussmap::format_double(e.param_defaults[k].second);
            }
            os << "}, \"range\": \"" << e.param_range << "\", \"H\": \"" << e.h_formula
               << "\", \"conformal\": " << (e.conformal ? "true" : "false")
               << ", \"level_set\": " << (e.has_level_set ? "true" : "false")
               << ", \"cmc\": " << (e.cmc ? "true" : "false") << "}";
        }
        os << "\n]\n";
        std::cout << os.str();
        return kExitPass;
    }
    std::cout << "name                      space  H            conformal  level-set  params\n";
    for (const auto& e : entries) {
        if (!space_filter.empty() && e.space_tag != space_filter) continue;
        std::ostringstream ps;
        for (size_t k = 0; k < e.param_defaults.size(); ++k) {
            if (k) ps << ", ";
            ps << e.param_defaults[k].first << "="
               << gaussmap::format_double(e.param_defaults[k].second);
        }
        if (!e.param_range.empty()) ps << " (" << e.param_range << ")";
        std::printf("%-25s %-6s %-12s %-10s %-10s %s\n", e.name.c_str(),
                    e.space_tag.c_str(), e.h_formula.c_str(),
                    e.conformal ? "yes" : "no", e.has_level_set ? "yes" : "no",
                    ps.str().c_str());
    }
    return kExitPass;
}

int cmd_suite(const std::string& profile, const std::string& only,
              const std::string& out_dir) {
    const auto result = gaussmap::run_suite(profile, only, env_threads());
    const std::string dir = out_dir + "/" + profile;
    fs::create_directories(dir);
    for (const auto& item : result.items) {
        const std::string base = dir + "/" + slugify(item.label);
        gaussmap::write_file_atomic(base + ".json",
                                    gaussmap::report_to_json(item.outcome.report));
    }
    // summary carries verdicts only (timings stay on stdout)
    std::ostringstream sum;
    sum << "{\n  \"profile\": \"" << profile << "\",\n  \"criteria\": [\n";
    for (size_t k = 0; k < result.criteria.size(); ++k) {
        const auto& c = result.criteria[k];
        sum << "    {\"id\": " << c.id << ", \"label\": \"" << c.label << "\", \"status\": \""
            << (c.skipped ? "skipped" : (c.pass ? "pass" : "fail")) << "\"}";
        if (k + 1 < result.criteria.size()) sum << ",";
        sum << "\n";
    }
    sum << "  ],\n  \"verdict\": \"" << (result.pass ? "pass" : "fail") << "\"\n}\n";
    gaussmap::write_file_atomic(dir + "/summary.json", sum.str());

    for (const auto& item : result.items)
        std::cout << (item.outcome.report.pass ? "  ok   " : "  FAIL ") << item.label
                  << "  (" << gaussmap::format_double(item.seconds) << " s)\n";
    std::cout << "\n";
    for (const auto& c : result.criteria)
        std::cout << (c.skipped ? "SKIP " : (c.pass ? "PASS " : "FAIL ")) << "criterion "
                  << c.id << ": " << c.label << (c.detail.empty() ? "" : " -- " + c.detail)
                  << "\n";
    std::cout << (result.pass ? "suite: PASS\n" : "suite: FAIL\n");
    return result.pass ? kExitPass : kExitCheckFail;
}

void apply_config_file(const std::string& path, CheckRequest& rq,
                       std::vector<std::string>& checks) {
    std::ifstream in(path);
    if (!in) throw ContractViolation("cannot open config file " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("surface")) rq.surface = j["surface"].get<std::string>();
    if (j.contains("params"))
        for (auto& [k, v] : j["params"].items()) rq.params[k] = v.get<double>();
    if (j.contains("grid")) {
        rq.nu = j["grid"][0].get<int>();
        rq.nv = j["grid"][1].get<int>();
    }
    if (j.contains("richardson")) rq.richardson = j["richardson"].get<bool>();
    if (j.contains("tolerances"))
        for (auto& [k, v] : j["tolerances"].items()) rq.tolerances[k] = v.get<double>();
    if (j.contains("checks"))
        for (auto& c : j["checks"]) checks.push_back(c.get<std::string>());
    if (j.contains("killing_vector")) {
        if (j["killing_vector"].is_string())
            rq.killing = j["killing_vector"].get<std::string>();
        else
            for (auto& x : j["killing_vector"]) rq.killing_raw.push_back(x.get<double>());
    }
    if (j.contains("output")) {
        if (j["output"].contains("path")) rq.out_dir = j["output"]["path"].get<std::string>();
        if (j["output"].contains("csv")) rq.csv = j["output"]["csv"].get<bool>();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss maps of hypersurfaces in model symmetric spaces: "
                 "numerical verification suites"};
    app.require_subcommand(1);

    // catalog
    std::string cat_space;
    bool cat_json = false;
    auto* cat = app.add_subcommand("catalog", "list the surface catalog");
    cat->add_option("--space", cat_space, "filter by space tag (r3, s3, h3, s2xr, h2xr)");
    cat->add_flag("--json", cat_json, "machine-readable listing");

    // check
    CheckRequest rq;
    std::string check_name, config_path;
    std::vector<std::string> tol_args;
    const double unset = std::nan("");
    double p_r = unset, p_rho = unset, p_d = unset, p_kg = unset, p_a = unset,
           p_b = unset, p_c = unset, p_amp = unset;
    int grid = 64, gridv = 0;
    bool no_rich = false;
    auto* chk = app.add_subcommand("check", "run one verification check");
    chk->add_option("name", check_name,
                    "check: ruh-vilms | duality | quadform | perp | invariance | hos");
    chk->add_option("--surface", rq.surface, "catalog surface name");
    chk->add_option("--config", config_path, "RunConfig JSON file");
    chk->add_option("--r", p_r, "radius parameter");
    chk->add_option("--rho", p_rho, "geodesic radius parameter");
    chk->add_option("--d", p_d, "equidistant distance parameter");
    chk->add_option("--kg", p_kg, "geodesic curvature of the base curve");
    chk->add_option("--a", p_a, "ellipsoid semi-axis a");
    chk->add_option("--b", p_b, "ellipsoid semi-axis b");
    chk->add_option("--c", p_c, "ellipsoid semi-axis c");
    chk->add_option("--amp", p_amp, "graph amplitude");
    chk->add_option("--grid", grid, "nodes per axis (>= 16)");
    chk->add_option("--grid-v", gridv, "nodes on the v axis (defaults to --grid)");
    bool rich_flag = false;
    chk->add_flag("--richardson", rich_flag, "enable Richardson extrapolation (default)");
    chk->add_flag("--no-richardson", no_rich, "disable Richardson extrapolation");
    chk->add_option("--killing", rq.killing, "Killing preset name or coefficients");
    chk->add_option("--tol", tol_args, "tolerance override name=value (repeatable)");
    chk->add_option("--out", rq.out_dir, "report output directory");
    chk->add_flag("--csv", rq.csv, "also write residual grids as CSV");

    // suite
    std::string profile = "acceptance", only, suite_out = "reports";
    auto* ste = app.add_subcommand("suite", "run the full check matrix");
    ste->add_option("profile", profile, "acceptance | quick");
    ste->add_option("--only", only, "restrict to one space tag");
    ste->add_option("--out", suite_out, "report output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) return cmd_catalog(cat_space, cat_json);
        if (ste->parsed()) return cmd_suite(profile, only, suite_out);

        // check
        std::vector<std::string> checks;
        if (!config_path.empty()) apply_config_file(config_path, rq, checks);
        if (!check_name.empty()) checks.push_back(check_name);
        if (checks.empty()) throw ContractViolation("no check requested");
        if (rq.surface.empty()) throw ContractViolation("--surface is required");
        auto set_param = [&](const char* k, double v) {
            if (!std::isnan(v)) rq.params[k] = v;
        };
        set_param("r", p_r);
        set_param("rho", p_rho);
        set_param("d", p_d);
        set_param("kg", p_kg);
        set_param("a", p_a);
        set_param("b", p_b);
        set_param("c", p_c);
        set_param("amp", p_amp);
        if (chk->count("--grid") || config_path.empty()) {
            rq.nu = grid;
            rq.nv = gridv > 0 ? gridv : grid;
        }
        if (no_rich) rq.richardson = false;
        // --killing may carry raw coordinates "c1,c2,..."
        if (!rq.killing.empty() && rq.killing.find(',') != std::string::npos) {
            std::stringstream ss(rq.killing);
            std::string tok;
            while (std::getline(ss, tok, ',')) rq.killing_raw.push_back(std::stod(tok));
            rq.killing.clear();
        }
        for (const auto& t : tol_args) {
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw ContractViolation("--tol expects name=value, got '" + t + "'");
            rq.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
        }
        int rc = kExitPass;
        for (const auto& c : checks) {
            CheckRequest one = rq;
            one.check = c;
            rc = std::max(rc, run_one_check(one));
        }
        return rc;
    } catch (const ContractViolation& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
