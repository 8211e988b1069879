#include "gaussmap/surface.hpp"

#include <cmath>

namespace gaussmap {

namespace {

// Generic normal: kernel of the constraint rows <p,.>, <Fu,.>, <Fv,.>
// under the embedding form (the first row only on curved factors).
Vec generic_normal(const ModelSpace& space, const Jet2& jet) {
    const int d = space.embed_dim();
    const bool curved = space.family != SpaceFamily::Euclid;
    const int rows = curved ? 3 : 2;
    Mat c(rows, d);
    // row w: entries of the linear functional x -> embed_inner(w, x)
    const bool lorentzian = space.family == SpaceFamily::Hyperbolic ||
                            space.family == SpaceFamily::HypProd;
    auto form_row = [&](const Vec& w) {
        Vec r = w;
        if (lorentzian) r[0] = -r[0];
        return r;
    };
    int k = 0;
    if (curved) {
        Vec prow = form_row(jet.F);
        if (space.is_product()) prow[3] = 0.0;  // constraint lives on the factor
        c.row(k++) = prow.transpose();
    }
    c.row(k++) = form_row(jet.Fu).transpose();
    c.row(k++) = form_row(jet.Fv).transpose();
    Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeFullV);
    Vec eta = svd.matrixV().col(d - 1);
    eta = project_tangent(space, jet.F, eta);  // clean numerical drift
    const double n2 = embed_inner(space, eta, eta);
    if (n2 < 1e-20) throw ContractViolation("frame_at: degenerate normal");
    eta /= std::sqrt(n2);
    // deterministic default sign: largest-magnitude entry positive
    int imax = 0;
    for (int i = 1; i < d; ++i)
        if (std::abs(eta[i]) > std::abs(eta[imax])) imax = i;
    if (eta[imax] < 0) eta = -eta;
    return eta;
}

}  // namespace

SurfaceJet frame_at(const ParamSurface& surf, double u, double v) {
    const ModelSpace& space = surf.space;
    const Jet2 jet = surf.jet(u, v);
    if (std::abs(point_residual(space, jet.F)) > 1e-9)
        throw ContractViolation("frame_at: surface point off the model at (" +
                                std::to_string(u) + ", " + std::to_string(v) + ")");

    SurfaceJet out;
    out.p = jet.F;
    out.Fu = jet.Fu;
    out.Fv = jet.Fv;
    out.g(0, 0) = embed_inner(space, jet.Fu, jet.Fu);
    out.g(0, 1) = out.g(1, 0) = embed_inner(space, jet.Fu, jet.Fv);
    out.g(1, 1) = embed_inner(space, jet.Fv, jet.Fv);
    out.detg = out.g.determinant();
    if (out.detg <= 1e-10)
        throw ContractViolation("frame_at: degenerate immersion point");

    // Normal: exact hint when admissible, generic kernel otherwise.
    Vec eta;
    if (jet.eta_hint.size() == space.embed_dim()) {
        const Vec& h = jet.eta_hint;
        const double scale = std::sqrt(std::abs(embed_inner(space, h, h)));
        const bool admissible =
            scale > 1e-12 &&
            tangency_residual(space, jet.F, h) <= 1e-9 * scale &&
            std::abs(embed_inner(space, h, jet.Fu)) <= 1e-9 * scale &&
            std::abs(embed_inner(space, h, jet.Fv)) <= 1e-9 * scale;
        if (admissible) {
            eta = h / scale;
        } else {
            eta = generic_normal(space, jet);
            if (embed_inner(space, eta, h) < 0) eta = -eta;
        }
    } else {
        eta = generic_normal(space, jet);
    }
    out.eta = eta;

    // b_ij = <F_ij, eta>: the flat-embedding correction is radial on the
    // curved factor and pairs to zero with a tangent eta.
    out.b(0, 0) = embed_inner(space, jet.Fuu, eta);
    out.b(0, 1) = out.b(1, 0) = embed_inner(space, jet.Fuv, eta);
    out.b(1, 1) = embed_inner(space, jet.Fvv, eta);

    out.A = out.g.inverse() * out.b;
    out.H = 0.5 * out.A.trace();
    out.B2 = (out.A * out.A).trace();

    const double k = space.kappa();
    if (space.family == SpaceFamily::Euclid) {
        out.Ktilde = 0.0;
    } else if (space.is_product()) {
        const double sgn0 = (space.family == SpaceFamily::HypProd) ? -1.0 : 1.0;
        auto fdot = [&](const Vec& a, const Vec& b2) {
            return sgn0 * a[0] * b2[0] + a[1] * b2[1] + a[2] * b2[2];
        };
        const double ee = fdot(jet.Fu, jet.Fu), gg = fdot(jet.Fv, jet.Fv),
                     ff = fdot(jet.Fu, jet.Fv);
        out.Ktilde = k * (ee * gg - ff * ff) / out.detg;
        out.nu = eta[3];
    } else {
        out.Ktilde = k;
    }
    out.K = out.Ktilde + out.A.determinant();
    return out;
}

void validate_surface(const ParamSurface& surf) {
    for (int i = 0; i < surf.Nu; ++i)
        for (int j = 0; j < surf.Nv; ++j) {
            const double u = surf.u_at(i), v = surf.v_at(j);
            const SurfaceJet sj = frame_at(surf, u, v);
            if (surf.is_conformal) {
                const double r = std::abs(sj.g(0, 0) - sj.g(1, 1)) + std::abs(sj.g(0, 1));
                if (r > 1e-10)
                    throw ContractViolation(surf.name + ": conformality flag violated at (" +
                                            std::to_string(u) + ", " + std::to_string(v) + ")");
            }
            if (surf.has_level_set() && std::abs(surf.level_set(sj.p)) > 1e-10)
                throw ContractViolation(surf.name + ": level-set residual too large");
        }
}

}  // namespace gaussmap
