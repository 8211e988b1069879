#include "gaussmap/calculus.hpp"

#include <cmath>

namespace gaussmap {

SurfaceGrid make_surface_grid(const ParamSurface& surf) {
    SurfaceGrid g;
    g.surf = surf;
    g.jets = GridField<Jet2>(surf.Nu, surf.Nv);
    g.frames = GridField<SurfaceJet>(surf.Nu, surf.Nv);
    g.N = GridField<AlgebraElement>(surf.Nu, surf.Nv);
    for (int i = 0; i < surf.Nu; ++i)
        for (int j = 0; j < surf.Nv; ++j) {
            const double u = surf.u_at(i), v = surf.v_at(j);
            g.jets.at(i, j) = surf.jet(u, v);
            g.frames.at(i, j) = frame_at(surf, u, v);
            g.N.at(i, j) = gauss_map(surf.space, g.frames.at(i, j).p,
                                     g.frames.at(i, j).eta)
                               .value;
        }
    return g;
}

bool stencil_ok(const ParamSurface& surf, int i, int j, int margin) {
    const bool u_ok = surf.dom.periodic_u || (i >= margin && i <= surf.Nu - 1 - margin);
    const bool v_ok = surf.dom.periodic_v || (j >= margin && j <= surf.Nv - 1 - margin);
    return u_ok && v_ok;
}

Christoffel christoffel(const ModelSpace& space, const Jet2& jet) {
    // dg[k](i,j) = d_k g_ij = <F_ik, F_j> + <F_i, F_jk>
    const Vec* d1[2] = {&jet.Fu, &jet.Fv};
    const Vec* d2[2][2] = {{&jet.Fuu, &jet.Fuv}, {&jet.Fuv, &jet.Fvv}};
    Eigen::Matrix2d g;
    g(0, 0) = embed_inner(space, jet.Fu, jet.Fu);
    g(0, 1) = g(1, 0) = embed_inner(space, jet.Fu, jet.Fv);
    g(1, 1) = embed_inner(space, jet.Fv, jet.Fv);
    const Eigen::Matrix2d ginv = g.inverse();
    Eigen::Matrix2d dg[2];
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                dg[k](i, j) = embed_inner(space, *d2[i][k], *d1[j]) +
                              embed_inner(space, *d1[i], *d2[j][k]);
    Christoffel ch;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double s = 0;
                for (int l = 0; l < 2; ++l)
                    s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                ch.gamma[k](i, j) = 0.5 * s;
            }
    return ch;
}

Vec surface_gradient(const SurfaceGrid& g, const ScalarField& f, int i, int j) {
    if (!stencil_ok(g.surf, i, j, 1))
        throw ContractViolation("surface_gradient: stencil unavailable at boundary node");
    const double fu = d_du(g, f, i, j);
    const double fv = d_dv(g, f, i, j);
    const SurfaceJet& sj = g.frames.at(i, j);
    const Eigen::Matrix2d ginv = sj.g.inverse();
    const double a = ginv(0, 0) * fu + ginv(0, 1) * fv;
    const double b = ginv(1, 0) * fu + ginv(1, 1) * fv;
    return a * sj.Fu + b * sj.Fv;
}

namespace {

// Shared Laplacian skeleton over any arithmetic field type.
template <class T>
T laplace_impl(const SurfaceGrid& g, const GridField<T>& f, int i, int j) {
    if (!stencil_ok(g.surf, i, j, 1))
        throw ContractViolation("laplace_beltrami: stencil unavailable at boundary node");
    const ParamSurface& s = g.surf;
    const int nu = s.Nu, nv = s.Nv;
    const int ip = s.dom.periodic_u ? (i + 1) % nu : i + 1;
    const int im = s.dom.periodic_u ? (i + nu - 1) % nu : i - 1;
    const int jp = s.dom.periodic_v ? (j + 1) % nv : j + 1;
    const int jm = s.dom.periodic_v ? (j + nv - 1) % nv : j - 1;
    const double du = s.du(), dv = s.dv();

    const T& c = f.at(i, j);
    const T fu = (f.at(ip, j) - f.at(im, j)) * (0.5 / du);
    const T fv = (f.at(i, jp) - f.at(i, jm)) * (0.5 / dv);
    const T fuu = (f.at(ip, j) - c * 2.0 + f.at(im, j)) * (1.0 / (du * du));
    const T fvv = (f.at(i, jp) - c * 2.0 + f.at(i, jm)) * (1.0 / (dv * dv));
    const T fuv = (f.at(ip, jp) - f.at(ip, jm) - f.at(im, jp) + f.at(im, jm)) *
                  (0.25 / (du * dv));

    const Christoffel ch = christoffel(s.space, g.jets.at(i, j));
    const Eigen::Matrix2d ginv = g.frames.at(i, j).g.inverse();

    // g^{ij} (f_ij - Gamma^k_ij f_k)
    T acc = fuu * ginv(0, 0) + fuv * (2.0 * ginv(0, 1)) + fvv * ginv(1, 1);
    const double cu = ginv(0, 0) * ch.gamma[0](0, 0) + 2 * ginv(0, 1) * ch.gamma[0](0, 1) +
                      ginv(1, 1) * ch.gamma[0](1, 1);
    const double cv = ginv(0, 0) * ch.gamma[1](0, 0) + 2 * ginv(0, 1) * ch.gamma[1](0, 1) +
                      ginv(1, 1) * ch.gamma[1](1, 1);
    acc = acc - fu * cu - fv * cv;
    return acc;
}

}  // namespace

double laplace_beltrami(const SurfaceGrid& g, const ScalarField& f, int i, int j) {
    return laplace_impl(g, f, i, j);
}

Vec laplace_beltrami(const SurfaceGrid& g, const GridField<Vec>& f, int i, int j) {
    return laplace_impl(g, f, i, j);
}

AlgebraElement laplace_beltrami(const SurfaceGrid& g, const GridField<AlgebraElement>& f,
                                int i, int j) {
    return laplace_impl(g, f, i, j);
}

AlgebraElement dgauss(const SurfaceGrid& g, int i, int j, double a, double b) {
    if (!stencil_ok(g.surf, i, j, 1))
        throw ContractViolation("dgauss: stencil unavailable at boundary node");
    const AlgebraElement nu = d_du(g, g.N, i, j);
    const AlgebraElement nv = d_dv(g, g.N, i, j);
    return nu * a + nv * b;
}

AlgebraElement dgauss(const SurfaceGrid& g, int i, int j, const Vec& X) {
    const SurfaceJet& sj = g.frames.at(i, j);
    Eigen::Vector2d rhs;
    rhs << embed_inner(g.surf.space, X, sj.Fu), embed_inner(g.surf.space, X, sj.Fv);
    const Eigen::Vector2d ab = sj.g.inverse() * rhs;
    const Vec recon = ab[0] * sj.Fu + ab[1] * sj.Fv;
    const double scale = std::sqrt(std::abs(embed_inner(g.surf.space, X, X))) + 1e-300;
    if ((recon - X).norm() > 1e-8 * scale + 1e-12)
        throw ContractViolation("dgauss: X is not in span{F_u, F_v}");
    return dgauss(g, i, j, ab[0], ab[1]);
}

std::complex<double> wirtinger_z(const SurfaceGrid& g, const ComplexField& f, int i,
                                 int j) {
    if (!stencil_ok(g.surf, i, j, 1))
        throw ContractViolation("wirtinger_z: stencil unavailable at boundary node");
    const std::complex<double> fu = d_du(g, f, i, j);
    const std::complex<double> fv = d_dv(g, f, i, j);
    return 0.5 * (fu - std::complex<double>(0, 1) * fv);
}

std::complex<double> wirtinger_zbar(const SurfaceGrid& g, const ComplexField& f, int i,
                                    int j) {
    if (!stencil_ok(g.surf, i, j, 1))
        throw ContractViolation("wirtinger_zbar: stencil unavailable at boundary node");
    const std::complex<double> fu = d_du(g, f, i, j);
    const std::complex<double> fv = d_dv(g, f, i, j);
    return 0.5 * (fu + std::complex<double>(0, 1) * fv);
}

std::pair<int, int> refined_grid(const ParamSurface& surf) {
    const int nu = surf.dom.periodic_u ? 2 * surf.Nu : 2 * surf.Nu - 1;
    const int nv = surf.dom.periodic_v ? 2 * surf.Nv : 2 * surf.Nv - 1;
    return {nu, nv};
}

}  // namespace gaussmap
