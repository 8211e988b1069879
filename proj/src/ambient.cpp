#include "gaussmap/ambient.hpp"

#include <cmath>

namespace gaussmap {

int ModelSpace::embed_dim() const {
    switch (family) {
        case SpaceFamily::Euclid: return n;
        case SpaceFamily::Sphere:
        case SpaceFamily::Hyperbolic: return n + 1;
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd: return 4;
    }
    return 0;
}

AlgebraKind ModelSpace::algebra_kind() const {
    switch (family) {
        case SpaceFamily::Euclid: return AlgebraKind::translation(n);
        case SpaceFamily::Sphere: return AlgebraKind::orthogonal(n + 1);
        case SpaceFamily::Hyperbolic: return AlgebraKind::lorentz(n + 1);
        case SpaceFamily::SphereProd: return AlgebraKind::orthogonal_plus_line(3);
        case SpaceFamily::HypProd: return AlgebraKind::lorentz_plus_line(3);
    }
    return AlgebraKind::translation(0);
}

double ModelSpace::kappa() const {
    switch (family) {
        case SpaceFamily::Euclid: return 0.0;
        case SpaceFamily::Sphere:
        case SpaceFamily::SphereProd: return 1.0;
        case SpaceFamily::Hyperbolic:
        case SpaceFamily::HypProd: return -1.0;
    }
    return 0.0;
}

std::string ModelSpace::str() const {
    switch (family) {
        case SpaceFamily::Euclid: return "R^" + std::to_string(n);
        case SpaceFamily::Sphere: return "S^" + std::to_string(n);
        case SpaceFamily::Hyperbolic: return "H^" + std::to_string(n);
        case SpaceFamily::SphereProd: return "S^2xR";
        case SpaceFamily::HypProd: return "H^2xR";
    }
    return "?";
}

std::string ModelSpace::tag() const {
    switch (family) {
        case SpaceFamily::Euclid: return "r" + std::to_string(n);
        case SpaceFamily::Sphere: return "s" + std::to_string(n);
        case SpaceFamily::Hyperbolic: return "h" + std::to_string(n);
        case SpaceFamily::SphereProd: return "s2xr";
        case SpaceFamily::HypProd: return "h2xr";
    }
    return "?";
}

namespace {

// Lorentz product on the leading m coordinates.
double lor(const Vec& u, const Vec& v, int m) {
    double s = -u[0] * v[0];
    for (int i = 1; i < m; ++i) s += u[i] * v[i];
    return s;
}

double dot_head(const Vec& u, const Vec& v, int m) {
    double s = 0;
    for (int i = 0; i < m; ++i) s += u[i] * v[i];
    return s;
}

// Factor pairing for products and space forms alike: the bilinear form of
// the curved coordinates only (excludes the vertical slot of products).
double factor_inner(const ModelSpace& space, const Vec& u, const Vec& v) {
    switch (space.family) {
        case SpaceFamily::Euclid: return u.dot(v);
        case SpaceFamily::Sphere: return u.dot(v);
        case SpaceFamily::Hyperbolic: return lor(u, v, space.n + 1);
        case SpaceFamily::SphereProd: return dot_head(u, v, 3);
        case SpaceFamily::HypProd: return lor(u, v, 3);
    }
    return 0;
}

void check_dim(const ModelSpace& space, const Vec& p, const char* op) {
    if (p.size() != space.embed_dim())
        throw ContractViolation(std::string(op) + ": wrong embedding dimension for " +
                                space.str());
}

}  // namespace

double embed_inner(const ModelSpace& space, const Vec& u, const Vec& v) {
    double s = factor_inner(space, u, v);
    if (space.is_product()) s += u[3] * v[3];
    return s;
}

double point_residual(const ModelSpace& space, const Vec& p) {
    check_dim(space, p, "point_residual");
    switch (space.family) {
        case SpaceFamily::Euclid: return 0.0;
        case SpaceFamily::Sphere: return p.dot(p) - 1.0;
        case SpaceFamily::Hyperbolic: return lor(p, p, space.n + 1) + 1.0;
        case SpaceFamily::SphereProd: return dot_head(p, p, 3) - 1.0;
        case SpaceFamily::HypProd: return lor(p, p, 3) + 1.0;
    }
    return 0.0;
}

bool on_space(const ModelSpace& space, const Vec& p, double tol) {
    if (std::abs(point_residual(space, p)) > tol) return false;
    if (space.family == SpaceFamily::Hyperbolic || space.family == SpaceFamily::HypProd)
        return p[0] > 0;
    return true;
}

double tangency_residual(const ModelSpace& space, const Vec& p, const Vec& u) {
    check_dim(space, p, "tangency_residual");
    check_dim(space, u, "tangency_residual");
    if (space.family == SpaceFamily::Euclid) return 0.0;
    return std::abs(factor_inner(space, p, u));
}

Vec project_tangent(const ModelSpace& space, const Vec& p, const Vec& w) {
    check_dim(space, p, "project_tangent");
    check_dim(space, w, "project_tangent");
    if (space.family == SpaceFamily::Euclid) return w;
    const double pp = factor_inner(space, p, p);  // +1 or -1
    const double wp = factor_inner(space, p, w);
    Vec r = w;
    const int m = space.is_product() ? 3 : space.n + 1;
    for (int i = 0; i < m; ++i) r[i] -= (wp / pp) * p[i];
    return r;
}

Vec rescale_to_model(const ModelSpace& space, const Vec& y) {
    check_dim(space, y, "rescale_to_model");
    Vec r = y;
    switch (space.family) {
        case SpaceFamily::Euclid: return r;
        case SpaceFamily::Sphere: return r / std::sqrt(y.dot(y));
        case SpaceFamily::Hyperbolic: {
            const double q = -lor(y, y, space.n + 1);
            return r / std::sqrt(q);
        }
        case SpaceFamily::SphereProd: {
            const double q = std::sqrt(dot_head(y, y, 3));
            for (int i = 0; i < 3; ++i) r[i] /= q;
            return r;
        }
        case SpaceFamily::HypProd: {
            const double q = std::sqrt(-lor(y, y, 3));
            for (int i = 0; i < 3; ++i) r[i] /= q;
            return r;
        }
    }
    return r;
}

double ambient_inner(const ModelSpace& space, const Vec& p, const Vec& u,
                     const Vec& v, double tangency_tol) {
    if (tangency_residual(space, p, u) > tangency_tol ||
        tangency_residual(space, p, v) > tangency_tol)
        throw ContractViolation("ambient_inner: input vector is not tangent at p");
    return embed_inner(space, u, v);
}

Vec killing_field(const ModelSpace& space, const AlgebraElement& V, const Vec& p) {
    check_dim(space, p, "killing_field");
    if (V.kind != space.algebra_kind())
        throw ContractViolation("killing_field: algebra kind mismatch for " + space.str());
    switch (space.family) {
        case SpaceFamily::Euclid:
            return V.vec;
        case SpaceFamily::Sphere:
        case SpaceFamily::Hyperbolic:
            return V.mat * p;
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd: {
            Vec r(4);
            r.head(3) = V.mat * p.head(3);
            r[3] = V.line;
            return r;
        }
    }
    return Vec();
}

GroupElement GroupElement::identity(const ModelSpace& space) {
    GroupElement g;
    if (space.family == SpaceFamily::Euclid) {
        g.mat = Mat::Identity(space.n, space.n);
        g.trans = Vec::Zero(space.n);
    } else {
        const int m = space.is_product() ? 3 : space.n + 1;
        g.mat = Mat::Identity(m, m);
    }
    return g;
}

GroupElement group_exp(const ModelSpace& space, const AlgebraElement& V, double t) {
    if (V.kind != space.algebra_kind())
        throw ContractViolation("group_exp: algebra kind mismatch for " + space.str());
    GroupElement g = GroupElement::identity(space);
    switch (space.family) {
        case SpaceFamily::Euclid:
            g.trans = t * V.vec;
            break;
        case SpaceFamily::Sphere:
        case SpaceFamily::Hyperbolic:
            g.mat = matrix_exp(t * V.mat);
            break;
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd:
            g.mat = matrix_exp(t * V.mat);
            g.shift = t * V.line;
            break;
    }
    return g;
}

double form_residual(const ModelSpace& space, const GroupElement& g) {
    switch (space.family) {
        case SpaceFamily::Euclid:
            return (g.mat - Mat::Identity(space.n, space.n)).cwiseAbs().maxCoeff();
        case SpaceFamily::Sphere:
        case SpaceFamily::SphereProd: {
            const int m = static_cast<int>(g.mat.rows());
            return (g.mat.transpose() * g.mat - Mat::Identity(m, m)).cwiseAbs().maxCoeff();
        }
        case SpaceFamily::Hyperbolic:
        case SpaceFamily::HypProd: {
            const int m = static_cast<int>(g.mat.rows());
            const Mat eta = lorentz_eta(m);
            return (g.mat.transpose() * eta * g.mat - eta).cwiseAbs().maxCoeff();
        }
    }
    return 0.0;
}

Vec isometry_action(const ModelSpace& space, const GroupElement& g, const Vec& p) {
    check_dim(space, p, "isometry_action");
    if (form_residual(space, g) > 1e-9)
        throw ContractViolation("isometry_action: group element fails form preservation");
    switch (space.family) {
        case SpaceFamily::Euclid:
            return p + g.trans;
        case SpaceFamily::Sphere:
        case SpaceFamily::Hyperbolic:
            return g.mat * p;
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd: {
            Vec r(4);
            r.head(3) = g.mat * p.head(3);
            r[3] = p[3] + g.shift;
            return r;
        }
    }
    return p;
}

Vec isometry_pushforward(const ModelSpace& space, const GroupElement& g, const Vec& u) {
    switch (space.family) {
        case SpaceFamily::Euclid:
            return u;
        case SpaceFamily::Sphere:
        case SpaceFamily::Hyperbolic:
            return g.mat * u;
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd: {
            Vec r(4);
            r.head(3) = g.mat * u.head(3);
            r[3] = u[3];
            return r;
        }
    }
    return u;
}

Vec curvature_tensor(const ModelSpace& space, const Vec& p, const Vec& X,
                     const Vec& Y, const Vec& Z) {
    check_dim(space, p, "curvature_tensor");
    const double k = space.kappa();
    Vec r = Vec::Zero(space.embed_dim());
    if (space.family == SpaceFamily::Euclid || k == 0.0) return r;
    const int m = space.is_product() ? 3 : space.n + 1;
    const double xz = factor_inner(space, X, Z);
    const double yz = factor_inner(space, Y, Z);
    for (int i = 0; i < m; ++i) r[i] = k * (xz * Y[i] - yz * X[i]);
    return r;
}

double sectional(const ModelSpace& space, const Vec& p, const Vec& u, const Vec& v) {
    const double uu = ambient_inner(space, p, u, u);
    const double vv = ambient_inner(space, p, v, v);
    const double uv = ambient_inner(space, p, u, v);
    const double area2 = uu * vv - uv * uv;
    if (area2 < 1e-14)
        throw ContractViolation("sectional: vectors do not span a plane");
    const Vec r = curvature_tensor(space, p, u, v, u);
    return embed_inner(space, r, v) / area2;
}

double ricci(const ModelSpace& space, const Vec& p, const Vec& v) {
    const double vv = ambient_inner(space, p, v, v);
    if (std::abs(vv - 1.0) > 1e-8)
        throw ContractViolation("ricci: direction must be a unit vector");
    switch (space.family) {
        case SpaceFamily::Euclid: return 0.0;
        case SpaceFamily::Sphere: return space.n - 1.0;
        case SpaceFamily::Hyperbolic: return -(space.n - 1.0);
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd: {
            const double nu = v[3];  // <v, dt>
            return space.kappa() * (1.0 - nu * nu);
        }
    }
    return 0.0;
}

double ricci_min(const ModelSpace& space) {
    switch (space.family) {
        case SpaceFamily::Euclid: return 0.0;
        case SpaceFamily::Sphere: return space.n - 1.0;
        case SpaceFamily::Hyperbolic: return -(space.n - 1.0);
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd:
            return std::min(space.kappa(), 0.0);
    }
    return 0.0;
}

std::vector<Vec> orthonormal_tangent_basis(const ModelSpace& space, const Vec& p) {
    check_dim(space, p, "orthonormal_tangent_basis");
    std::vector<Vec> basis;
    const int d = space.embed_dim();
    for (int i = 0; i < d && static_cast<int>(basis.size()) < space.n; ++i) {
        Vec w = Vec::Zero(d);
        w[i] = 1.0;
        w = project_tangent(space, p, w);
        for (const Vec& b : basis) w -= embed_inner(space, w, b) * b;
        const double norm2 = embed_inner(space, w, w);
        if (norm2 > 1e-12) basis.push_back(w / std::sqrt(norm2));
    }
    if (static_cast<int>(basis.size()) != space.n)
        throw ContractViolation("orthonormal_tangent_basis: degenerate construction");
    return basis;
}

}  // namespace gaussmap
