#pragma once

/// Matrix Lie algebra kernel: the algebras o(n+1), o(1,n), o(k)+R,
/// o(1,k-1)+R and the abelian translation algebra R^n, with their
/// bi-invariant (possibly indefinite) pairings, brackets, exponentials
/// and the low-dimensional o(1,2) <-> L^3 identification.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussmap {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Thrown when an operation's contract is violated (kind mismatch,
/// non-tangent input, broken structural invariant, ...).
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& what)
        : std::invalid_argument(what) {}
};

enum class AlgebraFamily {
    Orthogonal,          // o(m), antisymmetric m x m
    Lorentz,             // o(1, m-1), first row/column symmetric
    OrthogonalPlusLine,  // o(k) + R
    LorentzPlusLine,     // o(1, k-1) + R
    Translation,         // R^n, abelian
};

struct AlgebraKind {
    AlgebraFamily family = AlgebraFamily::Orthogonal;
    int size = 0;  // matrix size for matrix families, vector length for Translation

    static AlgebraKind orthogonal(int m) { return {AlgebraFamily::Orthogonal, m}; }
    static AlgebraKind lorentz(int m) { return {AlgebraFamily::Lorentz, m}; }
    static AlgebraKind orthogonal_plus_line(int k) {
        return {AlgebraFamily::OrthogonalPlusLine, k};
    }
    static AlgebraKind lorentz_plus_line(int k) {
        return {AlgebraFamily::LorentzPlusLine, k};
    }
    static AlgebraKind translation(int n) { return {AlgebraFamily::Translation, n}; }

    bool is_matrix_family() const { return family != AlgebraFamily::Translation; }
    bool is_lorentz_signed() const {
        return family == AlgebraFamily::Lorentz || family == AlgebraFamily::LorentzPlusLine;
    }
    bool has_line() const {
        return family == AlgebraFamily::OrthogonalPlusLine ||
               family == AlgebraFamily::LorentzPlusLine;
    }
    int matrix_size() const { return is_matrix_family() ? size : 0; }

    /// Dimension as a real vector space.
    int dimension() const;

    bool operator==(const AlgebraKind& o) const {
        return family == o.family && size == o.size;
    }
    bool operator!=(const AlgebraKind& o) const { return !(*this == o); }

    std::string str() const;
};

/// One element of a model algebra. Matrix families use `mat` (plus `line`
/// for the product-space R summand, stored separately rather than
/// block-embedded); the translation family uses `vec`.
struct AlgebraElement {
    AlgebraKind kind;
    Mat mat;          // matrix_size x matrix_size, unused for Translation
    double line = 0;  // R summand, used by the *PlusLine families
    Vec vec;          // used by Translation only

    static AlgebraElement zero(const AlgebraKind& kind);
    static AlgebraElement from_matrix(const AlgebraKind& kind, const Mat& m,
                                      double line = 0.0);
    static AlgebraElement from_vector(int n, const Vec& v);

    /// Throws ContractViolation if the entries break the kind's
    /// structural pattern (antisymmetry / Lorentz sign pattern).
    void validate(double tol = 1e-12) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(double s) const;
    AlgebraElement& operator+=(const AlgebraElement& o);
};

AlgebraElement operator*(double s, const AlgebraElement& u);

/// Entrywise comparison with absolute tolerance.
bool approx_equal(const AlgebraElement& u, const AlgebraElement& v, double tol = 1e-12);

/// Entrywise coordinate norm: sqrt(sum mat_ij^2 + line^2) (Frobenius style,
/// metric-free; this is NOT the algebra pairing).
double coord_norm(const AlgebraElement& u);

/// Bi-invariant pairing. Orthogonal: <u,v> = tr(u v^T)/2 = -tr(uv)/2.
/// Lorentz: <u,v> = tr(uv)/2 (indefinite). Product families add the
/// product of the line parts. Translation: Euclidean dot.
double algebra_inner(const AlgebraElement& u, const AlgebraElement& v);

/// Matrix commutator; line parts commute to zero; translations are abelian.
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v);

/// Phi(x,y) = x y^T  (rank-one; Phi(x,y)_ij = y_j x_i).
Mat phi(const Vec& x, const Vec& y);

/// Psi(x,y) = x y^T Itilde, Itilde = diag(-1,1,...,1)
/// (first column carries the Lorentz sign).
Mat psi(const Vec& x, const Vec& y);

/// diag(-1, 1, ..., 1) of size m.
Mat lorentz_eta(int m);

/// Dense matrix exponential, scaling-and-squaring with Pade order 13.
Mat matrix_exp(const Mat& m);

/// o(1,2) <-> L^3:  [[0,-r,s],[-r,0,-t],[s,t,0]]  <->  (t,s,r).
Eigen::Vector3d l3_identify(const AlgebraElement& u);
AlgebraElement l3_embed(const Eigen::Vector3d& w);

/// Canonical ordered basis. Orthogonal: E_ab - E_ba for a<b in lex order.
/// Lorentz: boosts E_1b + E_b1 (b = 2..m) first, then rotations
/// E_ab - E_ba for 2 <= a < b. Plus-line families append the unit line
/// element. Translation: the standard basis e_i.
std::vector<AlgebraElement> algebra_basis(const AlgebraKind& kind);

/// Coordinates in the canonical basis (and back).
Vec algebra_coordinates(const AlgebraElement& u);
AlgebraElement algebra_from_coordinates(const AlgebraKind& kind, const Vec& coords);

inline void require_same_kind(const AlgebraElement& u, const AlgebraElement& v,
                              const char* op) {
    if (u.kind != v.kind)
        throw ContractViolation(std::string(op) + ": algebra kind mismatch (" +
                                u.kind.str() + " vs " + v.kind.str() + ")");
}

}  // namespace gaussmap
