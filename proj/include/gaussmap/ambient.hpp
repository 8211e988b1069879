#pragma once

/// The five model spaces: point membership, tangent projection, the
/// Killing-field action of the model algebra, the isometry action, and
/// closed-form curvature (tensor, sectional, Ricci).

#include "gaussmap/algebra.hpp"

namespace gaussmap {

enum class SpaceFamily { Euclid, Sphere, Hyperbolic, SphereProd, HypProd };

struct ModelSpace {
    SpaceFamily family = SpaceFamily::Euclid;
    int n = 3;  // dimension of the space itself (products are always 3)

    static ModelSpace euclid(int n) { return {SpaceFamily::Euclid, n}; }
    static ModelSpace sphere(int n) { return {SpaceFamily::Sphere, n}; }
    static ModelSpace hyperbolic(int n) { return {SpaceFamily::Hyperbolic, n}; }
    static ModelSpace s2xr() { return {SpaceFamily::SphereProd, 3}; }
    static ModelSpace h2xr() { return {SpaceFamily::HypProd, 3}; }

    bool is_product() const {
        return family == SpaceFamily::SphereProd || family == SpaceFamily::HypProd;
    }
    /// Dimension of the flat embedding carrying the coordinates
    /// (R^n, R^{n+1}, L^{n+1}, or factor^3 x R).
    int embed_dim() const;
    AlgebraKind algebra_kind() const;
    /// Curvature of the space form, or of the 2-dimensional factor.
    double kappa() const;
    bool operator==(const ModelSpace& o) const {
        return family == o.family && n == o.n;
    }
    std::string str() const;
    /// Short CLI tag: r3, s3, h3, s2xr, h2xr (sn/hn for other dimensions).
    std::string tag() const;
};

/// Bilinear form of the flat embedding (Lorentzian on hyperbolic factors).
double embed_inner(const ModelSpace& space, const Vec& u, const Vec& v);

/// Signed residual of the point constraints; 0 on the model.
double point_residual(const ModelSpace& space, const Vec& p);
bool on_space(const ModelSpace& space, const Vec& p, double tol = 1e-9);
/// |<p,u>| on the curved factor; 0 for tangent vectors.
double tangency_residual(const ModelSpace& space, const Vec& p, const Vec& u);

/// Orthogonal projection of an embedding vector onto T_p(model).
Vec project_tangent(const ModelSpace& space, const Vec& p, const Vec& w);
/// Radial rescaling of a nearby embedding point back onto the model.
Vec rescale_to_model(const ModelSpace& space, const Vec& y);

/// Riemannian metric at p, restricted embedding form. Throws if u or v
/// is not tangent at p (beyond tolerance).
double ambient_inner(const ModelSpace& space, const Vec& p, const Vec& u,
                     const Vec& v, double tangency_tol = 1e-8);

/// zeta(V)(p) = d/dt exp(tV).p |_0.
Vec killing_field(const ModelSpace& space, const AlgebraElement& V, const Vec& p);

/// One isometry of the model: matrix part for the curved coordinates,
/// translation part for Euclid, vertical shift for products.
struct GroupElement {
    Mat mat;     // identity-sized for Euclid
    Vec trans;   // Euclid only
    double shift = 0;  // products only

    static GroupElement identity(const ModelSpace& space);
};

/// exp(tV) as a group element.
GroupElement group_exp(const ModelSpace& space, const AlgebraElement& V, double t);
/// Residual of the quadratic-form preservation check for g.
double form_residual(const ModelSpace& space, const GroupElement& g);
/// Applies g; throws if g fails form preservation (1e-9).
Vec isometry_action(const ModelSpace& space, const GroupElement& g, const Vec& p);
/// Pushforward of a tangent/ambient vector under g (linear part).
Vec isometry_pushforward(const ModelSpace& space, const GroupElement& g, const Vec& u);

/// Curvature tensor R(X,Y)Z at p (embedding coordinates, tangent output).
/// Convention: R(X,Y)Z = kappa (<X,Z> Y - <Y,Z> X) on space forms, acting
/// on the factor for products, zero on Euclid.
Vec curvature_tensor(const ModelSpace& space, const Vec& p, const Vec& X,
                     const Vec& Y, const Vec& Z);

/// Sectional curvature of span{u,v} at p.
double sectional(const ModelSpace& space, const Vec& p, const Vec& u, const Vec& v);

/// Ricci curvature of a unit tangent vector. Space forms: (n-1) kappa.
/// Products M^2(kappa) x R: kappa (1 - <v, dt>^2).
double ricci(const ModelSpace& space, const Vec& p, const Vec& v);

/// min over unit tangent vectors of ricci.
double ricci_min(const ModelSpace& space);

/// n orthonormal tangent vectors at p (deterministic construction).
std::vector<Vec> orthonormal_tangent_basis(const ModelSpace& space, const Vec& p);

}  // namespace gaussmap
