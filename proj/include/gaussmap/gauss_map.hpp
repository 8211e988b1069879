#pragma once

/// The translation operator Gamma_p : T_p N -> g, the Gauss map of an
/// oriented hypersurface, an independent frame-based construction of
/// Gamma (building the group element column by column), and the twisted
/// normal map of H^2 x R.

#include "gaussmap/ambient.hpp"

namespace gaussmap {

/// A Gauss map value: unit vector of the algebra's pseudo-sphere,
/// <value, value> = 1 under the bi-invariant pairing.
struct GaussValue {
    AlgebraElement value;
};

/// Gamma_p(u). Closed forms: sphere u p^T - p u^T; hyperbolic
/// (p u^T - u p^T) Itilde; products componentwise on the factor with the
/// vertical component passing to the line slot; Euclid the identity.
AlgebraElement gamma(const ModelSpace& space, const Vec& p, const Vec& u,
                     double tangency_tol = 1e-8);

/// Gamma via the group element x = (p | v2 | ... | vm) assembled from an
/// orthonormal tangent frame, the o(k)-complement matrix Z and x Z x^{-1}.
/// Agrees with gamma() for every admissible frame; serves as its oracle.
/// For product spaces the frame spans the tangent plane of the curved
/// factor (vectors with vanishing vertical component).
AlgebraElement gamma_via_frame(const ModelSpace& space, const Vec& p, const Vec& u,
                               const std::vector<Vec>& frame);

/// N(p) = Gamma_p(eta), eta the unit normal of the hypersurface at p.
GaussValue gauss_map(const ModelSpace& space, const Vec& p, const Vec& eta);

/// The pi/2 rotation of T_p H^2: J(u) is the Lorentz cross product of u
/// and p. l3_identify carries Gamma_p(u) to J(u) up to the time
/// reflection of the first coordinate.
Eigen::Vector3d j_rotate(const Eigen::Vector3d& p, const Eigen::Vector3d& u);

/// Twisted normal map of H^2 x R: (p, (eta_h, nu)) -> (J(eta_h), nu).
std::pair<Eigen::Vector3d, double> twisted_normal(const Eigen::Vector3d& p,
                                                  const Eigen::Vector3d& eta_h,
                                                  double nu);

}  // namespace gaussmap
