#include "gaussmap/gauss_map.hpp"

#include <cmath>

namespace gaussmap {

namespace {

// Gamma of the curved factor in its own coordinates (m = 3 for products).
Mat gamma_factor(bool lorentzian, const Vec& p, const Vec& u) {
    if (lorentzian) {
        Mat m = p * u.transpose() - u * p.transpose();
        m.col(0) *= -1.0;  // psi(p,u) - psi(u,p)
        return m;
    }
    return u * p.transpose() - p * u.transpose();  // phi(u,p) - phi(p,u)
}

void check_frame_vector(const ModelSpace& space, const Vec& p, const Vec& v) {
    if (space.is_product() && std::abs(v[3]) > 1e-10)
        throw ContractViolation("gamma_via_frame: frame vector not horizontal");
    if (tangency_residual(space, p, v) > 1e-10)
        throw ContractViolation("gamma_via_frame: frame vector not tangent");
}

}  // namespace

AlgebraElement gamma(const ModelSpace& space, const Vec& p, const Vec& u,
                     double tangency_tol) {
    if (p.size() != space.embed_dim() || u.size() != space.embed_dim())
        throw ContractViolation("gamma: wrong embedding dimension");
    if (tangency_residual(space, p, u) > tangency_tol)
        throw ContractViolation("gamma: u is not tangent at p");
    const AlgebraKind kind = space.algebra_kind();
    AlgebraElement r = AlgebraElement::zero(kind);
    switch (space.family) {
        case SpaceFamily::Euclid:
            r.vec = u;
            return r;
        case SpaceFamily::Sphere:
            r.mat = gamma_factor(false, p, u);
            return r;
        case SpaceFamily::Hyperbolic:
            r.mat = gamma_factor(true, p, u);
            return r;
        case SpaceFamily::SphereProd:
            r.mat = gamma_factor(false, p.head(3), u.head(3));
            r.line = u[3];
            return r;
        case SpaceFamily::HypProd:
            r.mat = gamma_factor(true, p.head(3), u.head(3));
            r.line = u[3];
            return r;
    }
    return r;
}

AlgebraElement gamma_via_frame(const ModelSpace& space, const Vec& p, const Vec& u,
                               const std::vector<Vec>& frame) {
    if (space.family == SpaceFamily::Euclid) {
        // horizontal lift is the identity; nothing to assemble
        return gamma(space, p, u);
    }
    if (!on_space(space, p, 1e-9))
        throw ContractViolation("gamma_via_frame: p not on the model");
    const bool lorentzian = space.family == SpaceFamily::Hyperbolic ||
                            space.family == SpaceFamily::HypProd;
    const int m = space.is_product() ? 3 : space.n + 1;
    const int nt = m - 1;  // tangent dimension of the curved factor
    if (static_cast<int>(frame.size()) != nt)
        throw ContractViolation("gamma_via_frame: frame must have " + std::to_string(nt) +
                                " vectors");
    for (const Vec& v : frame) check_frame_vector(space, p, v);
    for (int i = 0; i < nt; ++i)
        for (int j = i; j < nt; ++j) {
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(embed_inner(space, frame[i], frame[j]) - expect) > 1e-10)
                throw ContractViolation("gamma_via_frame: frame not orthonormal");
        }

    // x = (p | v2 | ... | vm) on the factor coordinates
    Mat x(m, m);
    for (int i = 0; i < m; ++i) x(i, 0) = p[i];
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < m; ++i) x(i, j + 1) = frame[j][i];

    // Z in the complement of o(m-1): first row/column built from the
    // frame coefficients of u
    Mat z = Mat::Zero(m, m);
    for (int j = 0; j < nt; ++j) {
        double c;
        if (space.is_product()) {
            Vec uh = Vec::Zero(4);
            uh.head(3) = u.head(3);
            c = embed_inner(space, uh, frame[j]);
        } else {
            c = embed_inner(space, u, frame[j]);
        }
        z(0, j + 1) = lorentzian ? c : -c;
        z(j + 1, 0) = c;
    }

    Mat xinv;
    if (lorentzian) {
        const Mat eta = lorentz_eta(m);
        xinv = eta * x.transpose() * eta;
    } else {
        xinv = x.transpose();
    }
    const Mat g = x * z * xinv;

    const AlgebraKind kind = space.algebra_kind();
    AlgebraElement r = AlgebraElement::zero(kind);
    r.mat = g;
    if (space.is_product()) r.line = u[3];
    r.validate(1e-8);  // conjugation keeps the algebra pattern
    return r;
}

GaussValue gauss_map(const ModelSpace& space, const Vec& p, const Vec& eta) {
    if (tangency_residual(space, p, eta) > 1e-8)
        throw ContractViolation("gauss_map: eta is not tangent to the ambient at p");
    const double norm = embed_inner(space, eta, eta);
    if (std::abs(norm - 1.0) > 1e-8)
        throw ContractViolation("gauss_map: eta is not a unit vector");
    return GaussValue{gamma(space, p, eta)};
}

Eigen::Vector3d j_rotate(const Eigen::Vector3d& p, const Eigen::Vector3d& u) {
    // Lorentz cross product: orthogonal to u and p under (*), so it stays
    // in T_p H^2. The coordinate cross product alone lands in the mirror
    // image under the time reflection.
    Eigen::Vector3d w = u.cross(p);
    w[0] = -w[0];
    return w;
}

std::pair<Eigen::Vector3d, double> twisted_normal(const Eigen::Vector3d& p,
                                                  const Eigen::Vector3d& eta_h,
                                                  double nu) {
    const ModelSpace h2 = ModelSpace::hyperbolic(2);
    Vec pv = p, ev = eta_h;
    if (!on_space(h2, pv, 1e-9))
        throw ContractViolation("twisted_normal: p not on H^2");
    if (tangency_residual(h2, pv, ev) > 1e-8)
        throw ContractViolation("twisted_normal: eta_h not tangent at p");
    const double norm = embed_inner(h2, ev, ev) + nu * nu;
    if (std::abs(norm - 1.0) > 1e-8)
        throw ContractViolation("twisted_normal: (eta_h, nu) not a unit vector");
    return {j_rotate(p, eta_h), nu};
}

}  // namespace gaussmap
