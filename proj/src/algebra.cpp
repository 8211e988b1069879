#include "gaussmap/algebra.hpp"

#include <cmath>

namespace gaussmap {

int AlgebraKind::dimension() const {
    const int m = size;
    switch (family) {
        case AlgebraFamily::Orthogonal:
        case AlgebraFamily::Lorentz:
            return m * (m - 1) / 2;
        case AlgebraFamily::OrthogonalPlusLine:
        case AlgebraFamily::LorentzPlusLine:
            return m * (m - 1) / 2 + 1;
        case AlgebraFamily::Translation:
            return m;
    }
    return 0;
}

std::string AlgebraKind::str() const {
    switch (family) {
        case AlgebraFamily::Orthogonal:
            return "o(" + std::to_string(size) + ")";
        case AlgebraFamily::Lorentz:
            return "o(1," + std::to_string(size - 1) + ")";
        case AlgebraFamily::OrthogonalPlusLine:
            return "o(" + std::to_string(size) + ")+R";
        case AlgebraFamily::LorentzPlusLine:
            return "o(1," + std::to_string(size - 1) + ")+R";
        case AlgebraFamily::Translation:
            return "R^" + std::to_string(size);
    }
    return "?";
}

AlgebraElement AlgebraElement::zero(const AlgebraKind& kind) {
    AlgebraElement e;
    e.kind = kind;
    if (kind.is_matrix_family())
        e.mat = Mat::Zero(kind.size, kind.size);
    else
        e.vec = Vec::Zero(kind.size);
    return e;
}

AlgebraElement AlgebraElement::from_matrix(const AlgebraKind& kind, const Mat& m,
                                           double line) {
    if (!kind.is_matrix_family())
        throw ContractViolation("from_matrix: kind " + kind.str() + " is not a matrix family");
    if (m.rows() != kind.size || m.cols() != kind.size)
        throw ContractViolation("from_matrix: wrong matrix size for " + kind.str());
    AlgebraElement e;
    e.kind = kind;
    e.mat = m;
    e.line = kind.has_line() ? line : 0.0;
    e.validate(1e-10);
    return e;
}

AlgebraElement AlgebraElement::from_vector(int n, const Vec& v) {
    if (v.size() != n) throw ContractViolation("from_vector: wrong length");
    AlgebraElement e;
    e.kind = AlgebraKind::translation(n);
    e.vec = v;
    return e;
}

void AlgebraElement::validate(double tol) const {
    if (!kind.is_matrix_family()) {
        if (vec.size() != kind.size)
            throw ContractViolation("AlgebraElement: translation vector length mismatch");
        return;
    }
    if (mat.rows() != kind.size || mat.cols() != kind.size)
        throw ContractViolation("AlgebraElement: matrix size mismatch for " + kind.str());
    const int m = kind.size;
    if (kind.is_lorentz_signed()) {
        // u_ij = -xi_i xi_j u_ji with xi_1 = -1, xi_{i>1} = 1
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const double xi = (i == 0 ? -1.0 : 1.0) * (j == 0 ? -1.0 : 1.0);
                if (std::abs(mat(i, j) + xi * mat(j, i)) > tol)
                    throw ContractViolation("AlgebraElement: Lorentz sign pattern violated");
            }
    } else {
        if ((mat + mat.transpose()).cwiseAbs().maxCoeff() > tol)
            throw ContractViolation("AlgebraElement: antisymmetry violated");
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_kind(*this, o, "operator+");
    AlgebraElement r = *this;
    if (kind.is_matrix_family())
        r.mat += o.mat;
    else
        r.vec += o.vec;
    r.line += o.line;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    require_same_kind(*this, o, "operator-");
    AlgebraElement r = *this;
    if (kind.is_matrix_family())
        r.mat -= o.mat;
    else
        r.vec -= o.vec;
    r.line -= o.line;
    return r;
}

AlgebraElement AlgebraElement::operator*(double s) const {
    AlgebraElement r = *this;
    if (kind.is_matrix_family())
        r.mat *= s;
    else
        r.vec *= s;
    r.line *= s;
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    *this = *this + o;
    return *this;
}

AlgebraElement operator*(double s, const AlgebraElement& u) { return u * s; }

bool approx_equal(const AlgebraElement& u, const AlgebraElement& v, double tol) {
    if (u.kind != v.kind) return false;
    if (u.kind.is_matrix_family()) {
        if ((u.mat - v.mat).cwiseAbs().maxCoeff() > tol) return false;
    } else {
        if ((u.vec - v.vec).cwiseAbs().maxCoeff() > tol) return false;
    }
    return std::abs(u.line - v.line) <= tol;
}

double coord_norm(const AlgebraElement& u) {
    double s = u.line * u.line;
    if (u.kind.is_matrix_family())
        s += u.mat.squaredNorm();
    else
        s += u.vec.squaredNorm();
    return std::sqrt(s);
}

double algebra_inner(const AlgebraElement& u, const AlgebraElement& v) {
    require_same_kind(u, v, "algebra_inner");
    switch (u.kind.family) {
        case AlgebraFamily::Orthogonal:
            return 0.5 * u.mat.cwiseProduct(v.mat).sum();  // tr(u v^T)/2
        case AlgebraFamily::Lorentz:
            return 0.5 * (u.mat * v.mat).trace();
        case AlgebraFamily::OrthogonalPlusLine:
            return 0.5 * u.mat.cwiseProduct(v.mat).sum() + u.line * v.line;
        case AlgebraFamily::LorentzPlusLine:
            return 0.5 * (u.mat * v.mat).trace() + u.line * v.line;
        case AlgebraFamily::Translation:
            return u.vec.dot(v.vec);
    }
    return 0;
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) {
    require_same_kind(u, v, "bracket");
    AlgebraElement r = AlgebraElement::zero(u.kind);
    if (u.kind.is_matrix_family()) r.mat = u.mat * v.mat - v.mat * u.mat;
    return r;  // line parts and translations commute
}

Mat phi(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw ContractViolation("phi: dimension mismatch");
    return x * y.transpose();
}

Mat lorentz_eta(int m) {
    Mat e = Mat::Identity(m, m);
    e(0, 0) = -1.0;
    return e;
}

Mat psi(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw ContractViolation("psi: dimension mismatch");
    Mat m = x * y.transpose();
    m.col(0) *= -1.0;
    return m;
}

// Scaling-and-squaring with the order-13 Pade approximant (Higham's
// coefficients). Sizes here are <= 5, so accuracy dominates cost.
Mat matrix_exp(const Mat& m) {
    if (m.rows() != m.cols()) throw ContractViolation("matrix_exp: non-square input");
    static const double b[] = {64764752532480000.0, 32382376266240000.0,
                               7771770303897600.0,  1187353796428800.0,
                               129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,
                               1323241920.0,        40840800.0,
                               960960.0,            16380.0,
                               182.0,               1.0};
    const int n = static_cast<int>(m.rows());
    const double theta13 = 5.371920351148152;
    const double norm = m.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
    int squarings = 0;
    Mat a = m;
    if (norm > theta13) {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
        a /= std::pow(2.0, squarings);
    }
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a2 * a4;
    const Mat id = Mat::Identity(n, n);
    const Mat u_odd =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
             b[3] * a2 + b[1] * id);
    const Mat v_even = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                       b[4] * a4 + b[2] * a2 + b[0] * id;
    Mat r = (v_even - u_odd).partialPivLu().solve(v_even + u_odd);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

Eigen::Vector3d l3_identify(const AlgebraElement& u) {
    if (u.kind.family != AlgebraFamily::Lorentz &&
        u.kind.family != AlgebraFamily::LorentzPlusLine)
        throw ContractViolation("l3_identify: element not in o(1,2)");
    if (u.kind.size != 3) throw ContractViolation("l3_identify: matrix size must be 3");
    // [[0,-r,s],[-r,0,-t],[s,t,0]] <-> (t,s,r)
    return {-u.mat(1, 2), u.mat(0, 2), -u.mat(0, 1)};
}

AlgebraElement l3_embed(const Eigen::Vector3d& w) {
    const double t = w[0], s = w[1], r = w[2];
    Mat m(3, 3);
    m << 0, -r, s, -r, 0, -t, s, t, 0;
    return AlgebraElement::from_matrix(AlgebraKind::lorentz(3), m);
}

std::vector<AlgebraElement> algebra_basis(const AlgebraKind& kind) {
    std::vector<AlgebraElement> basis;
    const int m = kind.size;
    auto mat_unit = [&](int a, int b, double sgn) {
        Mat e = Mat::Zero(m, m);
        e(a, b) = 1.0;
        e(b, a) = sgn;
        return e;
    };
    switch (kind.family) {
        case AlgebraFamily::Translation:
            for (int i = 0; i < m; ++i) {
                Vec v = Vec::Zero(m);
                v[i] = 1.0;
                basis.push_back(AlgebraElement::from_vector(m, v));
            }
            return basis;
        case AlgebraFamily::Orthogonal:
        case AlgebraFamily::OrthogonalPlusLine:
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    basis.push_back(AlgebraElement::from_matrix(kind, mat_unit(a, b, -1.0)));
            break;
        case AlgebraFamily::Lorentz:
        case AlgebraFamily::LorentzPlusLine:
            for (int b = 1; b < m; ++b)
                basis.push_back(AlgebraElement::from_matrix(kind, mat_unit(0, b, +1.0)));
            for (int a = 1; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    basis.push_back(AlgebraElement::from_matrix(kind, mat_unit(a, b, -1.0)));
            break;
    }
    if (kind.has_line()) {
        AlgebraElement e = AlgebraElement::zero(kind);
        e.line = 1.0;
        basis.push_back(e);
    }
    return basis;
}

Vec algebra_coordinates(const AlgebraElement& u) {
    const int m = u.kind.size;
    Vec c(u.kind.dimension());
    int k = 0;
    switch (u.kind.family) {
        case AlgebraFamily::Translation:
            return u.vec;
        case AlgebraFamily::Orthogonal:
        case AlgebraFamily::OrthogonalPlusLine:
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) c[k++] = u.mat(a, b);
            break;
        case AlgebraFamily::Lorentz:
        case AlgebraFamily::LorentzPlusLine:
            for (int b = 1; b < m; ++b) c[k++] = u.mat(0, b);
            for (int a = 1; a < m; ++a)
                for (int b = a + 1; b < m; ++b) c[k++] = u.mat(a, b);
            break;
    }
    if (u.kind.has_line()) c[k++] = u.line;
    return c;
}

AlgebraElement algebra_from_coordinates(const AlgebraKind& kind, const Vec& coords) {
    if (coords.size() != kind.dimension())
        throw ContractViolation("algebra_from_coordinates: wrong coordinate count for " +
                                kind.str());
    AlgebraElement u = AlgebraElement::zero(kind);
    const int m = kind.size;
    int k = 0;
    switch (kind.family) {
        case AlgebraFamily::Translation:
            u.vec = coords;
            return u;
        case AlgebraFamily::Orthogonal:
        case AlgebraFamily::OrthogonalPlusLine:
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    u.mat(a, b) = coords[k];
                    u.mat(b, a) = -coords[k];
                    ++k;
                }
            break;
        case AlgebraFamily::Lorentz:
        case AlgebraFamily::LorentzPlusLine:
            for (int b = 1; b < m; ++b) {
                u.mat(0, b) = coords[k];
                u.mat(b, 0) = coords[k];
                ++k;
            }
            for (int a = 1; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    u.mat(a, b) = coords[k];
                    u.mat(b, a) = -coords[k];
                    ++k;
                }
            break;
    }
    if (kind.has_line()) u.line = coords[k];
    return u;
}

}  // namespace gaussmap
