#pragma once

/// Discrete intrinsic operators on grid fields: surface gradient,
/// Laplace-Beltrami (Christoffels from analytic first-form derivatives),
/// the differential of the Gauss map, and Wirtinger derivatives.
///
/// Stencils are second-order central differences at the grid spacing;
/// periodic axes wrap, boundary nodes of inclusive axes are excluded
/// (checks report statistics over full-stencil nodes only). Richardson
/// extrapolation runs at the check level by combining two grids.

#include <complex>

#include "gaussmap/gauss_map.hpp"
#include "gaussmap/surface.hpp"

namespace gaussmap {

template <class T>
struct GridField {
    int Nu = 0, Nv = 0;
    std::vector<T> vals;

    GridField() = default;
    GridField(int nu, int nv) : Nu(nu), Nv(nv), vals(static_cast<size_t>(nu) * nv) {}
    T& at(int i, int j) { return vals[static_cast<size_t>(i) * Nv + j]; }
    const T& at(int i, int j) const { return vals[static_cast<size_t>(i) * Nv + j]; }
};

using ScalarField = GridField<double>;
using ComplexField = GridField<std::complex<double>>;

/// Precomputed per-node data for one surface at its grid resolution.
struct SurfaceGrid {
    ParamSurface surf;
    GridField<Jet2> jets;
    GridField<SurfaceJet> frames;
    GridField<AlgebraElement> N;  // Gauss map values

    int Nu() const { return surf.Nu; }
    int Nv() const { return surf.Nv; }
};

SurfaceGrid make_surface_grid(const ParamSurface& surf);

/// True when the full stencil of half-width `margin` exists at (i,j).
bool stencil_ok(const ParamSurface& surf, int i, int j, int margin);

/// Central difference of an arbitrary field type (T must support +,-,*).
template <class T>
T d_du(const SurfaceGrid& g, const GridField<T>& f, int i, int j) {
    const int n = g.Nu();
    const int ip = g.surf.dom.periodic_u ? (i + 1) % n : i + 1;
    const int im = g.surf.dom.periodic_u ? (i + n - 1) % n : i - 1;
    return (f.at(ip, j) - f.at(im, j)) * (0.5 / g.surf.du());
}

template <class T>
T d_dv(const SurfaceGrid& g, const GridField<T>& f, int i, int j) {
    const int n = g.Nv();
    const int jp = g.surf.dom.periodic_v ? (j + 1) % n : j + 1;
    const int jm = g.surf.dom.periodic_v ? (j + n - 1) % n : j - 1;
    return (f.at(i, jp) - f.at(i, jm)) * (0.5 / g.surf.dv());
}

/// Christoffel symbols of the first fundamental form at a parameter
/// point; gamma[k](i,j) = Gamma^k_{ij}. Metric derivatives are exact,
/// assembled from the analytic 2-jet.
struct Christoffel {
    Eigen::Matrix2d gamma[2];
};
Christoffel christoffel(const ModelSpace& space, const Jet2& jet);

/// grad f = g^{ij} (d_j f) F_i, tangent at the node.
Vec surface_gradient(const SurfaceGrid& g, const ScalarField& f, int i, int j);

/// Laplace-Beltrami of a field: g^{ij}(d_i d_j f - Gamma^k_{ij} d_k f),
/// applied entrywise to vector- and algebra-valued fields.
double laplace_beltrami(const SurfaceGrid& g, const ScalarField& f, int i, int j);
Vec laplace_beltrami(const SurfaceGrid& g, const GridField<Vec>& f, int i, int j);
AlgebraElement laplace_beltrami(const SurfaceGrid& g, const GridField<AlgebraElement>& f,
                                int i, int j);

/// dN at a node in the coordinate direction a F_u + b F_v.
AlgebraElement dgauss(const SurfaceGrid& g, int i, int j, double a, double b);
/// dN applied to a tangent vector given in embedding coordinates
/// (throws when X is outside span{F_u, F_v}).
AlgebraElement dgauss(const SurfaceGrid& g, int i, int j, const Vec& X);

/// 2 dz f = f_u - i f_v ; 2 dzbar f = f_u + i f_v.
std::complex<double> wirtinger_z(const SurfaceGrid& g, const ComplexField& f, int i, int j);
std::complex<double> wirtinger_zbar(const SurfaceGrid& g, const ComplexField& f, int i,
                                    int j);

/// Grid sizes of the factor-2 refinement sharing the coarse nodes
/// (2N-1 inclusive, 2N periodic).
std::pair<int, int> refined_grid(const ParamSurface& surf);

}  // namespace gaussmap
