#pragma once

/// Theorem-level verification suites: the Gauss-map Laplacian residual,
/// shape-operator duality, quadratic-form comparisons with holomorphicity
/// diagnostics, perpendicular-subalgebra extraction with bracket closure
/// and flow invariance, and the subharmonicity/threshold diagnostics.

#include <map>
#include <random>

#include "gaussmap/report.hpp"

namespace gaussmap {

struct CheckOptions {
    int Nu = 64, Nv = 64;
    bool richardson = true;
    double tol_scale = 1.0;  // quick profile loosens everything 10x
    std::map<std::string, double> tol_override;
    int sample_count = 400;     // perp-subalgebra sampling
    uint64_t seed = 20140521;   // fixed seed for all sampling
    double n_c = 2.0;           // gradient-term coefficient (audited)

    double tol(const std::string& name, double fallback) const {
        auto it = tol_override.find(name);
        return (it != tol_override.end() ? it->second : fallback) * tol_scale;
    }
};

// ---- seeded sampling helpers (shared by sweeps and tests) ----
Vec random_point(const ModelSpace& space, std::mt19937_64& rng);
Vec random_tangent(const ModelSpace& space, const Vec& p, std::mt19937_64& rng);
Vec random_unit_tangent(const ModelSpace& space, const Vec& p, std::mt19937_64& rng);
/// Orthonormal frame of the curved factor's tangent plane at p
/// (admissible input for gamma_via_frame).
std::vector<Vec> random_tangent_frame(const ModelSpace& space, const Vec& p,
                                      std::mt19937_64& rng);
AlgebraElement random_algebra_element(const AlgebraKind& kind, std::mt19937_64& rng);

/// Intrinsic curvature of the induced metric via the Brioschi formula;
/// first-form derivatives are exact (assembled from the 2-jet), their
/// higher derivatives come from small-step extrapolated differences.
/// Independent of the shape operator; oracle for the Gauss equation.
double intrinsic_gauss_curvature(const ParamSurface& surf, double u, double v);

/// Named Killing presets per space (documented in the manual).
AlgebraElement killing_preset(const ModelSpace& space, const std::string& name);
std::vector<std::string> killing_preset_names(const ModelSpace& space);

struct SubalgebraResult {
    std::vector<AlgebraElement> basis;  // spans (N(M))^perp
    int rank = 0;                       // numerical rank of span{N(p_i)}
    Vec singular_values;
    double closure_residual = 0;   // max component of [w_a,w_b] outside span
    double pairing_residual = 0;   // max |<w_a, N(p_i)>|
    bool ambiguous = false;        // singular-value gap < 10x
};

// ---- the six checks ----
CheckOutcome ruh_vilms_residual(const ParamSurface& surf, const CheckOptions& opt = {});
CheckOutcome duality_check(const ParamSurface& surf, const CheckOptions& opt = {});
CheckOutcome quad_compare(const ParamSurface& surf, const CheckOptions& opt = {},
                          bool require_conformal = true);
SubalgebraResult perp_subalgebra(const ParamSurface& surf, int sample_count,
                                 const CheckOptions& opt = {});
CheckOutcome perp_check(const ParamSurface& surf, const CheckOptions& opt = {});
CheckOutcome invariance_check(const ParamSurface& surf, const AlgebraElement& V,
                              const std::vector<double>& t_grid,
                              const CheckOptions& opt = {}, bool gate = true);
CheckOutcome hos_diagnostic(const ParamSurface& surf, const AlgebraElement& V,
                            const CheckOptions& opt = {});

// ---- acceptance sweeps (random-sample identities) ----
CheckOutcome sweep_algebra_identities(const CheckOptions& opt = {});
CheckOutcome sweep_frame_welldefinedness(const CheckOptions& opt = {});
CheckOutcome sweep_twisted_normal(const CheckOptions& opt = {});

// ---- suite ----
struct SuiteItem {
    std::string label;
    CheckOutcome outcome;
    double seconds = 0;
};
struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};
struct SuiteResult {
    std::vector<SuiteItem> items;
    std::vector<CriterionResult> criteria;
    bool pass = true;
};

/// profile: "acceptance" (64^2 + Richardson, reference tolerances) or
/// "quick" (32^2, 10x tolerances). only_space: "", "r3", "s3", "h3",
/// "s2xr", "h2xr". threads caps the parallel fan-out across checks.
SuiteResult run_suite(const std::string& profile, const std::string& only_space = "",
                      int threads = 1);

std::vector<double> default_t_grid();

}  // namespace gaussmap
