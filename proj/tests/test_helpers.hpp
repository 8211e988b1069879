#pragma once

// Shared helpers for the unit suites: deterministic RNG, closeness macros.

#include <doctest.h>

#include <random>

#include "gaussmap/verify.hpp"

namespace gmtest {

using namespace gaussmap;

inline std::mt19937_64 make_rng(uint64_t salt = 0) {
    return std::mt19937_64(0xC0FFEEULL + salt);
}

inline std::vector<ModelSpace> all_spaces() {
    return {ModelSpace::euclid(3), ModelSpace::sphere(3), ModelSpace::hyperbolic(3),
            ModelSpace::s2xr(), ModelSpace::h2xr()};
}

// Finite-difference shape operator: differentiates the unit normal along a
// coordinate curve and projects; independent of the analytic 2-jet route.
inline Eigen::Matrix2d fd_shape_operator(const ParamSurface& surf, double u, double v,
                                         double h = 1e-5) {
    const ModelSpace& sp = surf.space;
    const SurfaceJet c = frame_at(surf, u, v);
    auto eta_at = [&](double uu, double vv) { return frame_at(surf, uu, vv).eta; };
    const Vec deta_u = (eta_at(u + h, v) - eta_at(u - h, v)) / (2 * h);
    const Vec deta_v = (eta_at(u, v + h) - eta_at(u, v - h)) / (2 * h);
    // A X = -nabla_X eta; tangential projection removes the embedding part
    const Vec au = -project_tangent(sp, c.p, deta_u);
    const Vec av = -project_tangent(sp, c.p, deta_v);
    Eigen::Matrix2d rhs;
    rhs(0, 0) = embed_inner(sp, au, c.Fu);
    rhs(1, 0) = embed_inner(sp, au, c.Fv);
    rhs(0, 1) = embed_inner(sp, av, c.Fu);
    rhs(1, 1) = embed_inner(sp, av, c.Fv);
    // columns are A F_u, A F_v in covariant components; solve g * A = rhs
    return c.g.inverse() * rhs;
}

}  // namespace gmtest
