#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

using namespace gaussmap;
using gmtest::all_spaces;
using gmtest::make_rng;

namespace {

Vec vec3(double a, double b, double c) {
    Vec v(3);
    v << a, b, c;
    return v;
}
Vec vec4(double a, double b, double c, double d) {
    Vec v(4);
    v << a, b, c, d;
    return v;
}

// Brute-force Ricci from the curvature tensor, the oracle for ricci().
double ricci_brute(const ModelSpace& sp, const Vec& p, const Vec& v) {
    double s = 0;
    for (const Vec& b : orthonormal_tangent_basis(sp, p))
        s += embed_inner(sp, curvature_tensor(sp, p, v, b, v), b);
    return s;
}

// Classical RK4 integration of the Killing flow.
Vec rk4_flow(const ModelSpace& sp, const AlgebraElement& V, Vec p, double t, int steps) {
    const double h = t / steps;
    for (int s = 0; s < steps; ++s) {
        const Vec k1 = killing_field(sp, V, p);
        const Vec k2 = killing_field(sp, V, rescale_to_model(sp, p + 0.5 * h * k1));
        const Vec k3 = killing_field(sp, V, rescale_to_model(sp, p + 0.5 * h * k2));
        const Vec k4 = killing_field(sp, V, rescale_to_model(sp, p + h * k3));
        p = rescale_to_model(sp, p + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4));
    }
    return p;
}

}  // namespace

TEST_CASE("point membership and tangency") {
    auto rng = make_rng(11);
    for (const auto& sp : all_spaces())
        for (int s = 0; s < 100; ++s) {
            const Vec p = random_point(sp, rng);
            CHECK(on_space(sp, p, 1e-12));
            const Vec u = random_tangent(sp, p, rng);
            CHECK(tangency_residual(sp, p, u) < 1e-12);
        }
    // hyperboloid points live on the upper sheet
    Vec bad = vec4(-1.5, 0, 0, std::sqrt(1.25));
    CHECK(!on_space(ModelSpace::hyperbolic(3), bad));
}

TEST_CASE("ambient inner product basics") {
    const ModelSpace h2 = ModelSpace::hyperbolic(2);
    const Vec p = vec3(1, 0, 0);
    const Vec e2 = vec3(0, 1, 0);
    CHECK(ambient_inner(h2, p, e2, e2) == 1.0);

    const ModelSpace s2 = ModelSpace::sphere(2);
    const Vec q = vec3(1, 0, 0);
    CHECK(ambient_inner(s2, q, vec3(0, 1, 0), vec3(0, 0, 1)) == 0.0);
    CHECK(ambient_inner(s2, q, vec3(0, 1, 0), vec3(0, 1, 0)) == 1.0);

    // the induced metric on hyperbolic tangent spaces is positive definite
    auto rng = make_rng(12);
    const ModelSpace h3 = ModelSpace::hyperbolic(3);
    for (int s = 0; s < 200; ++s) {
        const Vec pp = random_point(h3, rng);
        const Vec u = random_unit_tangent(h3, pp, rng);
        CHECK(ambient_inner(h3, pp, u, u) > 0.0);
    }
    // non-tangent input violates the contract
    CHECK_THROWS_AS(ambient_inner(h2, p, vec3(1, 0, 0), e2), ContractViolation);
}

TEST_CASE("killing fields: basis examples") {
    const ModelSpace s2 = ModelSpace::sphere(2);
    AlgebraElement v = AlgebraElement::zero(AlgebraKind::orthogonal(3));
    v.mat(0, 1) = 1;
    v.mat(1, 0) = -1;  // E12 - E21
    const Vec z = killing_field(s2, v, vec3(1, 0, 0));
    CHECK((z - vec3(0, -1, 0)).norm() == 0.0);

    const ModelSpace h2r = ModelSpace::h2xr();
    const AlgebraElement vert = killing_preset(h2r, "vertical");
    const Vec zv = killing_field(h2r, vert, vec4(1, 0, 0, 0.37));
    CHECK((zv - vec4(0, 0, 0, 1)).norm() == 0.0);

    // rotation generator around the vertical axis vanishes on its axis
    const AlgebraElement rot = killing_preset(h2r, "axis-rotation");
    CHECK(killing_field(h2r, rot, vec4(1, 0, 0, 2.0)).norm() == 0.0);
    CHECK(rot.mat(1, 2) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("isometry action: identity, half turn, boost") {
    const ModelSpace s2 = ModelSpace::sphere(2);
    const Vec e1 = vec3(1, 0, 0);
    CHECK((isometry_action(s2, GroupElement::identity(s2), e1) - e1).norm() == 0.0);

    AlgebraElement rot = AlgebraElement::zero(AlgebraKind::orthogonal(3));
    rot.mat(0, 1) = 1;
    rot.mat(1, 0) = -1;
    const Vec flipped = isometry_action(s2, group_exp(s2, rot, M_PI), e1);
    CHECK((flipped + e1).norm() < 1e-14);

    const ModelSpace h3 = ModelSpace::hyperbolic(3);
    auto rng = make_rng(13);
    for (int s = 0; s < 50; ++s) {
        const AlgebraElement b = random_algebra_element(h3.algebra_kind(), rng);
        const GroupElement g = group_exp(h3, b, 0.6);
        const Vec p = random_point(h3, rng);
        const Vec q = isometry_action(h3, g, p);
        CHECK(std::abs(point_residual(h3, q)) < 1e-10);
    }
    // a non-isometry is rejected
    GroupElement bad = GroupElement::identity(s2);
    bad.mat(0, 0) = 2.0;
    CHECK_THROWS_AS(isometry_action(s2, bad, e1), ContractViolation);
}

TEST_CASE("isometries preserve inner products") {
    auto rng = make_rng(14);
    for (const auto& sp : all_spaces()) {
        for (int s = 0; s < 25; ++s) {
            const AlgebraElement v = random_algebra_element(sp.algebra_kind(), rng);
            const GroupElement g = group_exp(sp, v, 0.5);
            const Vec p = random_point(sp, rng);
            const Vec u = random_tangent(sp, p, rng);
            const Vec w = random_tangent(sp, p, rng);
            const Vec gp = isometry_action(sp, g, p);
            const Vec gu = isometry_pushforward(sp, g, u);
            const Vec gw = isometry_pushforward(sp, g, w);
            CHECK(embed_inner(sp, gu, gw) ==
                  doctest::Approx(embed_inner(sp, u, w)).epsilon(1e-10));
            CHECK(tangency_residual(sp, gp, gu) < 1e-10);
        }
    }
}

TEST_CASE("ricci: closed form vs brute-force tensor sums") {
    auto rng = make_rng(15);
    for (const auto& sp : all_spaces())
        for (int s = 0; s < 100; ++s) {
            const Vec p = random_point(sp, rng);
            const Vec v = random_unit_tangent(sp, p, rng);
            CHECK(ricci(sp, p, v) == doctest::Approx(ricci_brute(sp, p, v)).epsilon(1e-10));
        }
    // S^3: Ric = 2 for any unit direction
    const ModelSpace s3 = ModelSpace::sphere(3);
    const Vec p = random_point(s3, rng);
    const Vec v = random_unit_tangent(s3, p, rng);
    CHECK(ricci_brute(s3, p, v) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(ricci(s3, p, 2.0 * v), ContractViolation);
}

TEST_CASE("ricci_min and the subharmonicity thresholds") {
    CHECK(ricci_min(ModelSpace::euclid(3)) == 0.0);
    CHECK(ricci_min(ModelSpace::sphere(3)) == 2.0);
    CHECK(ricci_min(ModelSpace::hyperbolic(3)) == -2.0);
    CHECK(ricci_min(ModelSpace::s2xr()) == 0.0);
    CHECK(ricci_min(ModelSpace::h2xr()) == -1.0);
    // 2H^2 + Ric_N >= 0 pins H >= 1 in H^3 and H >= 1/sqrt(2) in H^2 x R
    CHECK(2.0 * 1.0 * 1.0 + ricci_min(ModelSpace::hyperbolic(3)) == 0.0);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(2.0 * h * h + ricci_min(ModelSpace::h2xr()) ==
          doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("sectional curvature of product planes") {
    auto rng = make_rng(16);
    const ModelSpace h2r = ModelSpace::h2xr();
    const Vec p = random_point(h2r, rng);
    // mixed plane (contains dt): flat
    Vec horiz = random_unit_tangent(h2r, p, rng);
    horiz[3] = 0;
    horiz /= std::sqrt(embed_inner(h2r, horiz, horiz));
    Vec vert = vec4(0, 0, 0, 1);
    CHECK(sectional(h2r, p, horiz, vert) == doctest::Approx(0.0).epsilon(1e-14));
    // horizontal planes carry the factor curvature
    const ModelSpace s2r = ModelSpace::s2xr();
    const Vec q = random_point(s2r, rng);
    Vec a = random_unit_tangent(s2r, q, rng);
    a[3] = 0;
    a /= std::sqrt(embed_inner(s2r, a, a));
    Vec b = random_tangent(s2r, q, rng);
    b[3] = 0;
    b -= embed_inner(s2r, b, a) * a;
    b /= std::sqrt(embed_inner(s2r, b, b));
    CHECK(sectional(s2r, q, a, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(sectional(s2r, q, a, a), ContractViolation);
}

TEST_CASE("Ricci identity: Ric(eta) + 2 Ktilde = Ric(E1) + Ric(E2)") {
    auto rng = make_rng(17);
    for (const auto& sp : all_spaces())
        for (int s = 0; s < 50; ++s) {
            const Vec p = random_point(sp, rng);
            const Vec eta = random_unit_tangent(sp, p, rng);
            Vec e1 = random_tangent(sp, p, rng);
            e1 -= embed_inner(sp, e1, eta) * eta;
            e1 /= std::sqrt(embed_inner(sp, e1, e1));
            Vec e2 = random_tangent(sp, p, rng);
            e2 -= embed_inner(sp, e2, eta) * eta;
            e2 -= embed_inner(sp, e2, e1) * e1;
            const double n2 = embed_inner(sp, e2, e2);
            if (n2 < 1e-6) continue;
            e2 /= std::sqrt(n2);
            const double lhs = ricci_brute(sp, p, eta) + 2 * sectional(sp, p, e1, e2);
            const double rhs = ricci_brute(sp, p, e1) + ricci_brute(sp, p, e2);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
}

TEST_CASE("Killing equation: symmetrized derivative vanishes") {
    auto rng = make_rng(18);
    const double h = 1e-4;
    for (const auto& sp : all_spaces())
        for (int s = 0; s < 30; ++s) {
            const Vec p = random_point(sp, rng);
            const AlgebraElement V = random_algebra_element(sp.algebra_kind(), rng);
            const Vec u = random_unit_tangent(sp, p, rng);
            const Vec v = random_unit_tangent(sp, p, rng);
            auto dzeta = [&](const Vec& dir) {
                const Vec pp = rescale_to_model(sp, p + h * dir);
                const Vec pm = rescale_to_model(sp, p - h * dir);
                const Vec d =
                    (killing_field(sp, V, pp) - killing_field(sp, V, pm)) / (2 * h);
                return project_tangent(sp, p, d);
            };
            const double sym = embed_inner(sp, dzeta(u), v) + embed_inner(sp, dzeta(v), u);
            CHECK(std::abs(sym) < 1e-6);
        }
}

TEST_CASE("exp(tV) action matches ODE integration of the Killing field") {
    auto rng = make_rng(19);
    for (const auto& sp : all_spaces())
        for (int s = 0; s < 10; ++s) {
            AlgebraElement V = random_algebra_element(sp.algebra_kind(), rng);
            V = V * (1.0 / std::max(1.0, coord_norm(V)));
            const Vec p = random_point(sp, rng);
            for (double t : {-1.0, 0.5, 1.0}) {
                const Vec via_exp = isometry_action(sp, group_exp(sp, V, t), p);
                const Vec via_ode = rk4_flow(sp, V, p, t, 200);
                CHECK((via_exp - via_ode).cwiseAbs().maxCoeff() < 1e-6);
            }
        }
}

TEST_CASE("orthonormal tangent basis is orthonormal and spans") {
    auto rng = make_rng(20);
    for (const auto& sp : all_spaces())
        for (int s = 0; s < 20; ++s) {
            const Vec p = random_point(sp, rng);
            const auto basis = orthonormal_tangent_basis(sp, p);
            CHECK(static_cast<int>(basis.size()) == sp.n);
            for (size_t a = 0; a < basis.size(); ++a)
                for (size_t b = a; b < basis.size(); ++b) {
                    const double want = a == b ? 1.0 : 0.0;
                    CHECK(embed_inner(sp, basis[a], basis[b]) ==
                          doctest::Approx(want).epsilon(1e-12));
                }
        }
}
