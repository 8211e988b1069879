#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

using namespace gaussmap;
using gmtest::fd_shape_operator;
using gmtest::make_rng;

namespace {

// Interior parameter samples for a surface (off the boundary so FD probes
// of the normal stay inside well-behaved chart regions).
std::vector<std::pair<double, double>> interior_samples(const ParamSurface& s, int n) {
    std::vector<std::pair<double, double>> pts;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const double fu = (k + 1.0) / (n + 1.0), fv = (l + 1.0) / (n + 1.0);
            pts.emplace_back(s.dom.u0 + fu * (s.dom.u1 - s.dom.u0),
                             s.dom.v0 + fv * (s.dom.v1 - s.dom.v0));
        }
    return pts;
}

void check_catalog_h(const std::string& name, const std::map<std::string, double>& params,
                     double tol = 1e-8) {
    const ParamSurface s = catalog(name, params);
    INFO(name);
    for (const auto& [u, v] : interior_samples(s, 4)) {
        const SurfaceJet j = frame_at(s, u, v);
        if (s.cmc) CHECK(std::abs(j.H - s.H_exact) < 1e-10);
        // independent FD oracle for the shape operator
        const Eigen::Matrix2d a_fd = fd_shape_operator(s, u, v);
        CHECK((a_fd - j.A).cwiseAbs().maxCoeff() < tol);
    }
}

}  // namespace

TEST_CASE("catalog H values and FD shape-operator oracle") {
    check_catalog_h("plane-r3", {});
    check_catalog_h("sphere-r3", {{"r", 1.3}});
    check_catalog_h("cylinder-r3", {{"r", 0.8}});
    check_catalog_h("great-sphere-s3", {});
    check_catalog_h("geodesic-sphere-s3", {{"rho", 0.7}});
    check_catalog_h("clifford-torus", {});
    check_catalog_h("geodesic-sphere-h3", {{"rho", 0.7}});
    check_catalog_h("equidistant-h3", {{"d", 0.5}});
    check_catalog_h("horosphere-h3", {});
    check_catalog_h("slice-h2xr", {});
    check_catalog_h("vertical-plane-h2xr", {});
    check_catalog_h("vertical-cylinder-h2xr", {{"kg", 1.6}});
    check_catalog_h("vertical-graph-h2xr", {});
    check_catalog_h("slice-s2xr", {});
    check_catalog_h("vertical-cylinder-s2xr", {{"kg", 1.0}});
    check_catalog_h("ellipsoid-r3", {});
}

TEST_CASE("umbilic closed forms: round sphere") {
    const ParamSurface s = catalog("sphere-r3", {{"r", 2.0}});
    const SurfaceJet j = frame_at(s, 0.21, -0.37);
    CHECK(j.H == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j.K == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(j.B2 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("geodesic spheres: cot and coth radii, both sides of the equator") {
    const SurfaceJet js = frame_at(catalog("geodesic-sphere-s3", {{"rho", 0.7}}), 0.1, 0.2);
    CHECK(js.H == doctest::Approx(1.0 / std::tan(0.7)).epsilon(1e-12));
    // beyond the equator the normal flips toward the antipodal center
    const SurfaceJet jb = frame_at(catalog("geodesic-sphere-s3", {{"rho", 2.2}}), 0.1, 0.2);
    CHECK(jb.H == doctest::Approx(std::abs(std::cos(2.2) / std::sin(2.2))).epsilon(1e-12));
    CHECK(jb.H >= 0.0);
    const SurfaceJet jh = frame_at(catalog("geodesic-sphere-h3", {{"rho", 0.7}}), 0.1, 0.2);
    CHECK(jh.H == doctest::Approx(1.0 / std::tanh(0.7)).epsilon(1e-12));
}

TEST_CASE("horosphere: H = 1, B2 = 2, intrinsically flat") {
    const ParamSurface s = catalog("horosphere-h3");
    for (const auto& [u, v] : interior_samples(s, 3)) {
        const SurfaceJet j = frame_at(s, u, v);
        CHECK(j.H == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(j.B2 == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(j.K == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("equidistant surfaces are intrinsic H^2(c) with c in [-1, 0)") {
    for (double d : {0.0, 0.5, 1.2}) {
        const ParamSurface s = catalog("equidistant-h3", {{"d", d}});
        const SurfaceJet j = frame_at(s, 0.02, -0.13);
        CHECK(j.H == doctest::Approx(std::tanh(d)).epsilon(1e-12));
        const double c = -1.0 / (std::cosh(d) * std::cosh(d));
        CHECK(j.K == doctest::Approx(c).epsilon(1e-10));
        CHECK(j.K < 0.0);
        CHECK(j.K >= -1.0);
    }
}

TEST_CASE("clifford torus: minimal with B2 = 2") {
    const ParamSurface s = catalog("clifford-torus");
    const SurfaceJet j = frame_at(s, 1.1, 2.7);
    CHECK(std::abs(j.H) < 1e-14);
    CHECK(j.B2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("vertical cylinders: H = kg/2 and horizontal normals") {
    const SurfaceJet jh = frame_at(catalog("vertical-cylinder-h2xr", {{"kg", 1.6}}), 0.3, 0.1);
    CHECK(jh.H == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(std::abs(jh.nu) < 1e-15);
    const SurfaceJet jp = frame_at(catalog("vertical-plane-h2xr"), 0.3, 0.1);
    CHECK(std::abs(jp.H) < 1e-15);
    CHECK(std::abs(jp.nu) < 1e-15);
    const SurfaceJet jc2 = frame_at(catalog("vertical-cylinder-s2xr", {{"kg", 1.0}}), 0.3, 0.1);
    CHECK(jc2.H == doctest::Approx(0.5).epsilon(1e-12));
    // slices have vertical normals
    CHECK(frame_at(catalog("slice-h2xr"), 0.1, 0.1).nu == 1.0);
    CHECK(frame_at(catalog("slice-s2xr"), 0.1, 0.1).nu == 1.0);
}

TEST_CASE("surface invariants sweep: membership, conformality, level sets") {
    for (const auto& e : catalog_entries()) {
        ParamSurface s = catalog(e.name);
        s = s.with_grid(24, 24);
        INFO(e.name);
        CHECK_NOTHROW(validate_surface(s));
        CHECK(s.is_conformal == e.conformal);
        CHECK(s.has_level_set() == e.has_level_set);
        CHECK(s.cmc == e.cmc);
    }
}

TEST_CASE("jets are self-consistent under finite differences") {
    for (const auto& e : catalog_entries()) {
        const ParamSurface s = catalog(e.name);
        INFO(e.name);
        const double h1 = 1e-5, h2 = 1e-4;
        for (const auto& [u, v] : interior_samples(s, 3)) {
            const Jet2 j = s.jet(u, v);
            const Vec fu_fd = (s.jet(u + h1, v).F - s.jet(u - h1, v).F) / (2 * h1);
            const Vec fv_fd = (s.jet(u, v + h1).F - s.jet(u, v - h1).F) / (2 * h1);
            CHECK((fu_fd - j.Fu).cwiseAbs().maxCoeff() < 1e-8);
            CHECK((fv_fd - j.Fv).cwiseAbs().maxCoeff() < 1e-8);
            const Vec fuu_fd = (s.jet(u + h2, v).Fu - s.jet(u - h2, v).Fu) / (2 * h2);
            const Vec fuv_fd = (s.jet(u, v + h2).Fu - s.jet(u, v - h2).Fu) / (2 * h2);
            const Vec fvv_fd = (s.jet(u, v + h2).Fv - s.jet(u, v - h2).Fv) / (2 * h2);
            const double scale = 1.0 + j.Fuu.cwiseAbs().maxCoeff();
            CHECK((fuu_fd - j.Fuu).cwiseAbs().maxCoeff() / scale < 1e-6);
            CHECK((fuv_fd - j.Fuv).cwiseAbs().maxCoeff() / scale < 1e-6);
            CHECK((fvv_fd - j.Fvv).cwiseAbs().maxCoeff() / scale < 1e-6);
        }
    }
}

TEST_CASE("Gauss equation against the intrinsic Brioschi curvature") {
    for (const char* name : {"sphere-r3", "geodesic-sphere-s3", "geodesic-sphere-h3",
                             "equidistant-h3", "horosphere-h3", "vertical-cylinder-h2xr",
                             "ellipsoid-r3", "vertical-graph-h2xr", "clifford-torus"}) {
        const ParamSurface s = catalog(name);
        INFO(name);
        for (const auto& [u, v] : interior_samples(s, 3)) {
            const SurfaceJet j = frame_at(s, u, v);
            const double kint = intrinsic_gauss_curvature(s, u, v);
            CHECK(std::abs(kint - j.K) < 1e-8);
            CHECK(std::abs(j.B2 - (4 * j.H * j.H - 2 * (kint - j.Ktilde))) < 1e-8);
        }
    }
}

TEST_CASE("catalog rejects unknown names and bad parameters") {
    CHECK_THROWS_AS(catalog("moebius-strip"), ContractViolation);
    CHECK_THROWS_AS(catalog("sphere-r3", {{"r", -1.0}}), ContractViolation);
    CHECK_THROWS_AS(catalog("sphere-r3", {{"radius", 1.0}}), ContractViolation);
    CHECK_THROWS_AS(catalog("geodesic-sphere-s3", {{"rho", 3.5}}), ContractViolation);
    CHECK_THROWS_AS(catalog("geodesic-sphere-s3", {{"rho", 0.0}}), ContractViolation);
    CHECK_THROWS_AS(catalog("geodesic-sphere-h3", {{"rho", -0.2}}), ContractViolation);
    CHECK_THROWS_AS(catalog("vertical-cylinder-h2xr", {{"kg", 0.9}}), ContractViolation);
    CHECK_THROWS_AS(catalog("vertical-cylinder-s2xr", {{"kg", -0.1}}), ContractViolation);
    CHECK_THROWS_AS(catalog("ellipsoid-r3", {{"a", 0.0}}), ContractViolation);
}

TEST_CASE("normals are oriented as documented") {
    // Euclidean sphere: inward normal
    const SurfaceJet j = frame_at(catalog("sphere-r3", {{"r", 1.0}}), 0.2, 0.1);
    CHECK(j.eta.dot(j.p) == doctest::Approx(-1.0).epsilon(1e-12));
    // vertical graph: upward normal (positive vertical component)
    const SurfaceJet jg = frame_at(catalog("vertical-graph-h2xr"), 0.1, -0.2);
    CHECK(jg.nu > 0.0);
    // cylinder in H^2 x R: normal points toward the axis
    const SurfaceJet jc = frame_at(catalog("vertical-cylinder-h2xr", {{"kg", 1.6}}), 0.5, 0.0);
    CHECK(jc.eta[0] < 0.0);
}

TEST_CASE("generic normal path matches hinted normals") {
    // strip the hint from a catalog surface and compare up to sign
    for (const char* name : {"geodesic-sphere-h3", "clifford-torus", "slice-h2xr"}) {
        ParamSurface s = catalog(name);
        auto jet_with_hint = s.jet;
        s.jet = [jet_with_hint](double u, double v) {
            Jet2 j = jet_with_hint(u, v);
            j.eta_hint = Vec();
            return j;
        };
        const ParamSurface hinted = catalog(name);
        INFO(name);
        for (const auto& [u, v] : interior_samples(s, 3)) {
            const Vec a = frame_at(s, u, v).eta;
            const Vec b = frame_at(hinted, u, v).eta;
            const double d = std::min((a - b).cwiseAbs().maxCoeff(),
                                      (a + b).cwiseAbs().maxCoeff());
            CHECK(d < 1e-9);
        }
    }
}

TEST_CASE("degenerate immersion points are rejected") {
    ParamSurface s = catalog("plane-r3");
    auto base = s.jet;
    s.jet = [base](double u, double v) {
        Jet2 j = base(u, v);
        j.Fv = j.Fu;  // rank drops
        return j;
    };
    CHECK_THROWS_AS(frame_at(s, 0.0, 0.0), ContractViolation);
}
