#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

using namespace gaussmap;
using gmtest::make_rng;

namespace {

Mat unit_pair(int m, int a, int b, double sgn) {
    Mat e = Mat::Zero(m, m);
    e(a, b) = 1.0;
    e(b, a) = sgn;
    return e;
}

Vec rvec(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    return v;
}

double lorentz_dot(const Vec& a, const Vec& b) {
    double s = -a[0] * b[0];
    for (int i = 1; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Truncated exponential series, the independent oracle for matrix_exp.
Mat exp_series(const Mat& m, int terms = 60) {
    Mat acc = Mat::Identity(m.rows(), m.cols());
    Mat term = acc;
    for (int k = 1; k < terms; ++k) {
        term = term * m / double(k);
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("bi-invariant pairing on basis pairs") {
    const auto o4 = AlgebraKind::orthogonal(4);
    const auto l4 = AlgebraKind::lorentz(4);
    const auto u1 = AlgebraElement::from_matrix(o4, unit_pair(4, 0, 1, -1));
    CHECK(algebra_inner(u1, u1) == doctest::Approx(1.0).epsilon(1e-14));
    const auto u2 = AlgebraElement::from_matrix(l4, unit_pair(4, 0, 1, +1));
    CHECK(algebra_inner(u2, u2) == doctest::Approx(1.0).epsilon(1e-14));
    // rotation block of o(1,3) pairs negatively: the metric is indefinite
    const auto u3 = AlgebraElement::from_matrix(l4, unit_pair(4, 1, 2, -1));
    CHECK(algebra_inner(u3, u3) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("pairing is symmetric, bilinear, ad-invariant") {
    auto rng = make_rng(1);
    const std::vector<AlgebraKind> kinds = {
        AlgebraKind::orthogonal(4), AlgebraKind::lorentz(4),
        AlgebraKind::orthogonal_plus_line(3), AlgebraKind::lorentz_plus_line(3),
        AlgebraKind::translation(3)};
    for (const auto& kind : kinds)
        for (int s = 0; s < 200; ++s) {
            const auto u = random_algebra_element(kind, rng);
            const auto v = random_algebra_element(kind, rng);
            const auto w = random_algebra_element(kind, rng);
            CHECK(algebra_inner(u, v) == doctest::Approx(algebra_inner(v, u)).epsilon(1e-14));
            CHECK(algebra_inner(u + v, w) ==
                  doctest::Approx(algebra_inner(u, w) + algebra_inner(v, w)).epsilon(1e-12));
            CHECK(std::abs(algebra_inner(bracket(u, v), w) +
                           algebra_inner(v, bracket(u, w))) < 1e-12);
        }
}

TEST_CASE("pairing rejects kind mismatch") {
    const auto u = AlgebraElement::zero(AlgebraKind::orthogonal(4));
    const auto v = AlgebraElement::zero(AlgebraKind::lorentz(4));
    CHECK_THROWS_AS(algebra_inner(u, v), ContractViolation);
    CHECK_THROWS_AS(bracket(u, v), ContractViolation);
}

TEST_CASE("bracket: commutator arithmetic and Jacobi") {
    const auto o3 = AlgebraKind::orthogonal(3);
    const auto a = AlgebraElement::from_matrix(o3, unit_pair(3, 0, 1, -1));  // E12-E21
    const auto b = AlgebraElement::from_matrix(o3, unit_pair(3, 0, 2, -1));  // E13-E31
    const auto c = AlgebraElement::from_matrix(o3, unit_pair(3, 1, 2, -1));  // E23-E32
    CHECK(approx_equal(bracket(a, b), c * (-1.0), 1e-15));

    auto rng = make_rng(2);
    for (const auto& kind : {AlgebraKind::orthogonal(4), AlgebraKind::lorentz(4)})
        for (int s = 0; s < 100; ++s) {
            const auto u = random_algebra_element(kind, rng);
            const auto v = random_algebra_element(kind, rng);
            const auto w = random_algebra_element(kind, rng);
            CHECK(coord_norm(bracket(u, u)) < 1e-15);
            const auto jac = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) +
                             bracket(w, bracket(u, v));
            CHECK(coord_norm(jac) < 1e-12);
            // brackets stay in the algebra
            bracket(u, v).validate(1e-12);
        }
}

TEST_CASE("product algebras have an abelian line factor") {
    auto rng = make_rng(3);
    const auto kind = AlgebraKind::lorentz_plus_line(3);
    for (int s = 0; s < 50; ++s) {
        const auto u = random_algebra_element(kind, rng);
        const auto v = random_algebra_element(kind, rng);
        const auto c = bracket(u, v);
        CHECK(c.line == 0.0);
        CHECK(approx_equal(c, bracket(u, v), 1e-15));
    }
}

TEST_CASE("phi and psi basis examples") {
    Vec e1 = Vec::Zero(4), e2 = Vec::Zero(4);
    e1[0] = 1;
    e2[1] = 1;
    const Mat p = phi(e1, e2);
    CHECK(p(0, 1) == 1.0);
    CHECK(p.cwiseAbs().sum() == 1.0);
    const Mat q = psi(e1, e2);
    CHECK(q(0, 1) == 1.0);
    CHECK(q.cwiseAbs().sum() == 1.0);
    const Mat q2 = psi(e2, e1);
    CHECK(q2(1, 0) == -1.0);  // first column carries the Lorentz sign
    CHECK(q2.cwiseAbs().sum() == 1.0);
    // Phi(x,y) - Phi(y,x) is antisymmetric, an o(n+1) element
    auto rng = make_rng(4);
    for (int s = 0; s < 50; ++s) {
        const Vec x = rvec(4, rng), y = rvec(4, rng);
        const Mat m = phi(x, y) - phi(y, x);
        CHECK((m + m.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("trace identities for phi and psi") {
    auto rng = make_rng(5);
    for (int s = 0; s < 1000; ++s) {
        const Vec x = rvec(4, rng), y = rvec(4, rng), u = rvec(4, rng), v = rvec(4, rng);
        CHECK(std::abs((phi(x, u) * phi(y, v)).trace() - x.dot(v) * y.dot(u)) < 1e-13);
        CHECK(std::abs((psi(x, u) * psi(y, v)).trace() -
                       lorentz_dot(x, v) * lorentz_dot(y, u)) < 1e-13);
    }
}

TEST_CASE("matrix_exp: closed forms, series oracle, group laws") {
    const double t = 0.83;
    Mat rot = t * unit_pair(2, 0, 1, -1);  // [[0, t], [-t, 0]]
    Mat expected(2, 2);
    expected << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
    CHECK((matrix_exp(rot) - expected).cwiseAbs().maxCoeff() < 1e-14);

    Mat boost = t * unit_pair(2, 0, 1, +1);
    expected << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
    CHECK((matrix_exp(boost) - expected).cwiseAbs().maxCoeff() < 1e-14);

    auto rng = make_rng(6);
    for (int s = 0; s < 30; ++s) {
        const auto u = random_algebra_element(AlgebraKind::lorentz(4), rng);
        CHECK((matrix_exp(0.0 * u.mat) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
        CHECK((matrix_exp(u.mat) - exp_series(u.mat)).cwiseAbs().maxCoeff() < 1e-12);
        // exp(tu) exp(su) = exp((t+s)u)
        const double a = 0.37, b = -1.21;
        CHECK((matrix_exp(a * u.mat) * matrix_exp(b * u.mat) -
               matrix_exp((a + b) * u.mat))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("matrix_exp preserves the model quadratic forms up to |t| = 10") {
    auto rng = make_rng(7);
    const Mat eta = lorentz_eta(4);
    for (double t : {-10.0, -3.0, 0.5, 10.0})
        for (int s = 0; s < 10; ++s) {
            auto u = random_algebra_element(AlgebraKind::orthogonal(4), rng);
            u = u * (1.0 / std::max(1.0, coord_norm(u)));
            const Mat g = matrix_exp(t * u.mat);
            CHECK((g.transpose() * g - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
            auto w = random_algebra_element(AlgebraKind::lorentz(4), rng);
            w = w * (1.0 / std::max(1.0, coord_norm(w)));
            const Mat h = matrix_exp(t * w.mat);
            CHECK((h.transpose() * eta * h - eta).cwiseAbs().maxCoeff() < 1e-10);
        }
}

TEST_CASE("o(1,2) <-> L^3 identification") {
    // the pattern [[0,-r,s],[-r,0,-t],[s,t,0]] with t=1, s=r=0
    Mat m(3, 3);
    m << 0, 0, 0, 0, 0, -1, 0, 1, 0;
    const auto u = AlgebraElement::from_matrix(AlgebraKind::lorentz(3), m);
    const Eigen::Vector3d w = l3_identify(u);
    CHECK(w[0] == 1.0);
    CHECK(w[1] == 0.0);
    CHECK(w[2] == 0.0);

    CHECK(l3_identify(AlgebraElement::zero(AlgebraKind::lorentz(3))).norm() == 0.0);

    auto rng = make_rng(8);
    for (int s = 0; s < 100; ++s) {
        const auto v = random_algebra_element(AlgebraKind::lorentz(3), rng);
        CHECK(approx_equal(l3_embed(l3_identify(v)), v, 0.0));  // exact round trip
    }
    CHECK_THROWS_AS(l3_identify(AlgebraElement::zero(AlgebraKind::orthogonal(3))),
                    ContractViolation);
    // the identification carries the pairing to the Lorentz product of L^3
    for (int s = 0; s < 100; ++s) {
        const auto a = random_algebra_element(AlgebraKind::lorentz(3), rng);
        const auto b = random_algebra_element(AlgebraKind::lorentz(3), rng);
        const Eigen::Vector3d wa = l3_identify(a), wb = l3_identify(b);
        const double lor = -wa[0] * wb[0] + wa[1] * wb[1] + wa[2] * wb[2];
        CHECK(algebra_inner(a, b) == doctest::Approx(lor).epsilon(1e-12));
    }
}

TEST_CASE("structural validation catches broken patterns") {
    Mat bad = Mat::Zero(4, 4);
    bad(0, 1) = 1.0;  // not antisymmetric
    CHECK_THROWS_AS(AlgebraElement::from_matrix(AlgebraKind::orthogonal(4), bad),
                    ContractViolation);
    bad(1, 0) = 1.0;  // symmetric first row is the Lorentz pattern, not o(4)
    CHECK_THROWS_AS(AlgebraElement::from_matrix(AlgebraKind::orthogonal(4), bad),
                    ContractViolation);
    CHECK_NOTHROW(AlgebraElement::from_matrix(AlgebraKind::lorentz(4), bad));
}

TEST_CASE("canonical coordinates round-trip") {
    auto rng = make_rng(9);
    for (const auto& kind :
         {AlgebraKind::orthogonal(4), AlgebraKind::lorentz(4),
          AlgebraKind::orthogonal_plus_line(3), AlgebraKind::lorentz_plus_line(3),
          AlgebraKind::translation(3)}) {
        const auto basis = algebra_basis(kind);
        CHECK(static_cast<int>(basis.size()) == kind.dimension());
        for (int s = 0; s < 50; ++s) {
            const auto u = random_algebra_element(kind, rng);
            const Vec c = algebra_coordinates(u);
            CHECK(approx_equal(algebra_from_coordinates(kind, c), u, 1e-15));
            // coordinates agree with the basis expansion
            AlgebraElement acc = AlgebraElement::zero(kind);
            for (size_t k = 0; k < basis.size(); ++k) acc += basis[k] * c[k];
            CHECK(approx_equal(acc, u, 1e-14));
        }
    }
}
