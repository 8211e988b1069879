#pragma once

/// Parametrized immersions with analytic two-jets, fundamental forms,
/// curvatures, and the catalog of closed-form test surfaces.

#include <functional>
#include <map>
#include <optional>

#include "gaussmap/ambient.hpp"

namespace gaussmap {

/// Analytic 2-jet of the immersion at one parameter point, in embedding
/// coordinates. `eta_hint` is optional: when it already satisfies the
/// normal's constraints it is used directly (normalized); otherwise only
/// its sign orients the numerically computed normal.
struct Jet2 {
    Vec F, Fu, Fv, Fuu, Fuv, Fvv;
    Vec eta_hint;  // size 0 when absent
};

struct Domain {
    double u0 = 0, u1 = 1, v0 = 0, v1 = 1;
    bool periodic_u = false, periodic_v = false;
};

struct ParamSurface {
    ModelSpace space;
    Domain dom;
    int Nu = 64, Nv = 64;
    std::function<Jet2(double, double)> jet;
    std::function<double(const Vec&)> level_set;  // empty when unavailable
    bool is_conformal = false;
    bool cmc = false;
    double H_exact = 0;  // meaningful only when cmc
    std::string name;
    std::vector<std::pair<std::string, double>> params;

    double du() const { return (dom.u1 - dom.u0) / (dom.periodic_u ? Nu : Nu - 1); }
    double dv() const { return (dom.v1 - dom.v0) / (dom.periodic_v ? Nv : Nv - 1); }
    double u_at(int i) const { return dom.u0 + i * du(); }
    double v_at(int j) const { return dom.v0 + j * dv(); }
    bool has_level_set() const { return static_cast<bool>(level_set); }

    ParamSurface with_grid(int nu, int nv) const {
        ParamSurface s = *this;
        s.Nu = nu;
        s.Nv = nv;
        return s;
    }
};

/// Pointwise frame: position, coordinate tangents, oriented unit normal,
/// fundamental forms, shape operator and curvature scalars.
struct SurfaceJet {
    Vec p, Fu, Fv, eta;
    Eigen::Matrix2d g, b, A;
    double detg = 0;
    double H = 0;    // mean curvature (half-trace of A, A = -grad eta)
    double K = 0;    // intrinsic curvature, K = Ktilde + det A
    double Ktilde = 0;  // ambient sectional curvature of the tangent plane
    double B2 = 0;   // squared norm of the second fundamental form
    double nu = 0;   // vertical component <eta, dt> (products; else 0)
};

SurfaceJet frame_at(const ParamSurface& surf, double u, double v);
inline SurfaceJet frame_at_node(const ParamSurface& surf, int i, int j) {
    return frame_at(surf, surf.u_at(i), surf.v_at(j));
}

/// Sweeps all grid nodes and throws on any violated surface invariant
/// (membership, immersion, declared conformality, level-set residual).
void validate_surface(const ParamSurface& surf);

/// One catalog entry's metadata for listings.
struct CatalogEntry {
    std::string name;
    std::string space_tag;
    std::vector<std::pair<std::string, double>> param_defaults;
    std::string param_range;   // human-readable constraint
    std::string h_formula;     // exact H, or "non-CMC control"
    bool conformal = false;
    bool has_level_set = false;
    bool cmc = false;
};

std::vector<CatalogEntry> catalog_entries();

/// Builds a catalog surface by name. Unknown names and out-of-range
/// parameters throw ContractViolation.
ParamSurface catalog(const std::string& name,
                     const std::map<std::string, double>& params = {});

}  // namespace gaussmap
