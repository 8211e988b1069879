#include <cmath>

#include "gaussmap/surface.hpp"

namespace gaussmap {

namespace {

constexpr double kPi = 3.14159265358979323846;

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

// 2-jet of a map into R^3 (used for the conformal charts).
struct C3 {
    double F[3], Fu[3], Fv[3], Fuu[3], Fuv[3], Fvv[3];
};

// Stereographic chart of the unit 2-sphere:
// omega = (2u, 2v, u^2+v^2-1) / (u^2+v^2+1); conformal factor 2/(1+s).
C3 stereo_sphere(double u, double v) {
    const double u2 = u * u, v2 = v * v, s = u2 + v2;
    const double D = s + 1, D2 = D * D, D3 = D2 * D;
    C3 c;
    c.F[0] = 2 * u / D;
    c.F[1] = 2 * v / D;
    c.F[2] = (s - 1) / D;
    c.Fu[0] = 2 * (1 + v2 - u2) / D2;
    c.Fu[1] = -4 * u * v / D2;
    c.Fu[2] = 4 * u / D2;
    c.Fv[0] = -4 * u * v / D2;
    c.Fv[1] = 2 * (1 + u2 - v2) / D2;
    c.Fv[2] = 4 * v / D2;
    c.Fuu[0] = -4 * u * (3 + 3 * v2 - u2) / D3;
    c.Fuu[1] = -4 * v * (1 + v2 - 3 * u2) / D3;
    c.Fuu[2] = (4 * D - 16 * u2) / D3;
    c.Fuv[0] = -4 * v * (1 + v2 - 3 * u2) / D3;
    c.Fuv[1] = -4 * u * (1 + u2 - 3 * v2) / D3;
    c.Fuv[2] = -16 * u * v / D3;
    c.Fvv[0] = -4 * u * (1 + u2 - 3 * v2) / D3;
    c.Fvv[1] = -4 * v * (3 + 3 * u2 - v2) / D3;
    c.Fvv[2] = (4 * D - 16 * v2) / D3;
    return c;
}

// Poincare-disk chart of H^2 in L^3:
// q = (1+u^2+v^2, 2u, 2v) / (1-u^2-v^2); conformal factor 2/(1-s).
C3 disk_hyp(double u, double v) {
    const double u2 = u * u, v2 = v * v, s = u2 + v2;
    const double P = s - 1, P2 = P * P, P3 = P2 * P;  // P < 0 on the disk
    C3 c;
    c.F[0] = (-s - 1) / P;
    c.F[1] = -2 * u / P;
    c.F[2] = -2 * v / P;
    c.Fu[0] = 4 * u / P2;
    c.Fu[1] = 2 * (u2 - v2 + 1) / P2;
    c.Fu[2] = 4 * u * v / P2;
    c.Fv[0] = 4 * v / P2;
    c.Fv[1] = 4 * u * v / P2;
    c.Fv[2] = 2 * (-u2 + v2 + 1) / P2;
    c.Fuu[0] = 2 * (4 * u2 * P - P2 - (s + 1) * (3 * u2 - v2 + 1)) / P3;
    c.Fuu[1] = -4 * u * (u2 - 3 * v2 + 3) / P3;
    c.Fuu[2] = -4 * v * (3 * u2 - v2 + 1) / P3;
    c.Fuv[0] = -16 * u * v / P3;
    c.Fuv[1] = -4 * v * (3 * u2 - v2 + 1) / P3;
    c.Fuv[2] = -4 * u * (-u2 + 3 * v2 + 1) / P3;
    c.Fvv[0] = 2 * (4 * v2 * P - (-u2 + 3 * v2 + 1) * (s + 1) - P2) / P3;
    c.Fvv[1] = -4 * u * (-u2 + 3 * v2 + 1) / P3;
    c.Fvv[2] = -4 * v * (-3 * u2 + v2 + 3) / P3;
    return c;
}

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void check_known_params(const std::string& name,
                        const std::map<std::string, double>& params,
                        std::initializer_list<const char*> known) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (const char* kn : known)
            if (k == kn) ok = true;
        if (!ok)
            throw ContractViolation("catalog: unknown parameter '" + k + "' for " + name);
    }
}

// ---------------------------------------------------------------- R^3

ParamSurface make_plane_r3() {
    ParamSurface s;
    s.space = ModelSpace::euclid(3);
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0;
    s.name = "plane-r3";
    s.jet = [](double u, double v) {
        Jet2 j;
        j.F = vec3(u, v, 0);
        j.Fu = vec3(1, 0, 0);
        j.Fv = vec3(0, 1, 0);
        j.Fuu = vec3(0, 0, 0);
        j.Fuv = vec3(0, 0, 0);
        j.Fvv = vec3(0, 0, 0);
        j.eta_hint = vec3(0, 0, 1);
        return j;
    };
    s.level_set = [](const Vec& p) { return p[2]; };
    return s;
}

ParamSurface make_sphere_r3(double r) {
    if (r <= 0) throw ContractViolation("sphere-r3: need r > 0");
    ParamSurface s;
    s.space = ModelSpace::euclid(3);
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 1.0 / r;  // inward normal
    s.name = "sphere-r3";
    s.params = {{"r", r}};
    s.jet = [r](double u, double v) {
        const C3 w = stereo_sphere(u, v);
        Jet2 j;
        j.F = r * vec3(w.F[0], w.F[1], w.F[2]);
        j.Fu = r * vec3(w.Fu[0], w.Fu[1], w.Fu[2]);
        j.Fv = r * vec3(w.Fv[0], w.Fv[1], w.Fv[2]);
        j.Fuu = r * vec3(w.Fuu[0], w.Fuu[1], w.Fuu[2]);
        j.Fuv = r * vec3(w.Fuv[0], w.Fuv[1], w.Fuv[2]);
        j.Fvv = r * vec3(w.Fvv[0], w.Fvv[1], w.Fvv[2]);
        j.eta_hint = -vec3(w.F[0], w.F[1], w.F[2]);
        return j;
    };
    s.level_set = [r](const Vec& p) { return p.squaredNorm() - r * r; };
    return s;
}

ParamSurface make_cylinder_r3(double r) {
    if (r <= 0) throw ContractViolation("cylinder-r3: need r > 0");
    ParamSurface s;
    s.space = ModelSpace::euclid(3);
    s.dom = {0, 2 * kPi * r, -1, 1, true, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0.5 / r;  // inward normal
    s.name = "cylinder-r3";
    s.params = {{"r", r}};
    s.jet = [r](double u, double v) {
        const double t = u / r, ct = std::cos(t), st = std::sin(t);
        Jet2 j;
        j.F = vec3(r * ct, r * st, v);
        j.Fu = vec3(-st, ct, 0);
        j.Fv = vec3(0, 0, 1);
        j.Fuu = vec3(-ct / r, -st / r, 0);
        j.Fuv = vec3(0, 0, 0);
        j.Fvv = vec3(0, 0, 0);
        j.eta_hint = vec3(-ct, -st, 0);
        return j;
    };
    s.level_set = [r](const Vec& p) { return p[0] * p[0] + p[1] * p[1] - r * r; };
    return s;
}

ParamSurface make_ellipsoid_r3(double a, double b, double c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw ContractViolation("ellipsoid-r3: need positive semi-axes");
    ParamSurface s;
    s.space = ModelSpace::euclid(3);
    s.dom = {0, 2 * kPi, 0.35, kPi - 0.35, true, false};
    s.is_conformal = false;
    s.cmc = false;
    s.name = "ellipsoid-r3";
    s.params = {{"a", a}, {"b", b}, {"c", c}};
    s.jet = [a, b, c](double u, double v) {
        const double cu = std::cos(u), su = std::sin(u);
        const double cv = std::cos(v), sv = std::sin(v);
        Jet2 j;
        j.F = vec3(a * cu * sv, b * su * sv, c * cv);
        j.Fu = vec3(-a * su * sv, b * cu * sv, 0);
        j.Fv = vec3(a * cu * cv, b * su * cv, -c * sv);
        j.Fuu = vec3(-a * cu * sv, -b * su * sv, 0);
        j.Fuv = vec3(-a * su * cv, b * cu * cv, 0);
        j.Fvv = vec3(-a * cu * sv, -b * su * sv, -c * cv);
        // Fu x Fv points inward for v in (0, pi)
        Eigen::Vector3d fu = j.Fu, fv = j.Fv;
        j.eta_hint = fu.cross(fv);
        return j;
    };
    s.level_set = [a, b, c](const Vec& p) {
        return p[0] * p[0] / (a * a) + p[1] * p[1] / (b * b) + p[2] * p[2] / (c * c) - 1.0;
    };
    return s;
}

// ---------------------------------------------------------------- S^3

ParamSurface make_great_sphere_s3() {
    ParamSurface s;
    s.space = ModelSpace::sphere(3);
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0;
    s.name = "great-sphere-s3";
    s.jet = [](double u, double v) {
        const C3 w = stereo_sphere(u, v);
        Jet2 j;
        j.F = vec4(w.F[0], w.F[1], w.F[2], 0);
        j.Fu = vec4(w.Fu[0], w.Fu[1], w.Fu[2], 0);
        j.Fv = vec4(w.Fv[0], w.Fv[1], w.Fv[2], 0);
        j.Fuu = vec4(w.Fuu[0], w.Fuu[1], w.Fuu[2], 0);
        j.Fuv = vec4(w.Fuv[0], w.Fuv[1], w.Fuv[2], 0);
        j.Fvv = vec4(w.Fvv[0], w.Fvv[1], w.Fvv[2], 0);
        j.eta_hint = vec4(0, 0, 0, 1);
        return j;
    };
    s.level_set = [](const Vec& p) { return p[3]; };
    return s;
}

ParamSurface make_geodesic_sphere_s3(double rho) {
    if (rho <= 0 || rho >= kPi)
        throw ContractViolation("geodesic-sphere-s3: need rho in (0, pi)");
    ParamSurface s;
    s.space = ModelSpace::sphere(3);
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = std::abs(std::cos(rho) / std::sin(rho));  // normal toward nearest center
    s.name = "geodesic-sphere-s3";
    s.params = {{"rho", rho}};
    const double sgn = (std::cos(rho) >= 0) ? 1.0 : -1.0;
    s.jet = [rho, sgn](double u, double v) {
        const C3 w = stereo_sphere(u, v);
        const double cr = std::cos(rho), sr = std::sin(rho);
        Jet2 j;
        j.F = vec4(cr, sr * w.F[0], sr * w.F[1], sr * w.F[2]);
        j.Fu = vec4(0, sr * w.Fu[0], sr * w.Fu[1], sr * w.Fu[2]);
        j.Fv = vec4(0, sr * w.Fv[0], sr * w.Fv[1], sr * w.Fv[2]);
        j.Fuu = vec4(0, sr * w.Fuu[0], sr * w.Fuu[1], sr * w.Fuu[2]);
        j.Fuv = vec4(0, sr * w.Fuv[0], sr * w.Fuv[1], sr * w.Fuv[2]);
        j.Fvv = vec4(0, sr * w.Fvv[0], sr * w.Fvv[1], sr * w.Fvv[2]);
        j.eta_hint = sgn * vec4(sr, -cr * w.F[0], -cr * w.F[1], -cr * w.F[2]);
        return j;
    };
    s.level_set = [rho](const Vec& p) { return p[0] - std::cos(rho); };
    return s;
}

ParamSurface make_clifford_torus() {
    ParamSurface s;
    s.space = ModelSpace::sphere(3);
    s.dom = {0, 2 * kPi, 0, 2 * kPi, true, true};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0;
    s.name = "clifford-torus";
    const double q = 1.0 / std::sqrt(2.0);
    s.jet = [q](double u, double v) {
        const double cu = std::cos(u), su = std::sin(u);
        const double cv = std::cos(v), sv = std::sin(v);
        Jet2 j;
        j.F = q * vec4(cu, su, cv, sv);
        j.Fu = q * vec4(-su, cu, 0, 0);
        j.Fv = q * vec4(0, 0, -sv, cv);
        j.Fuu = q * vec4(-cu, -su, 0, 0);
        j.Fuv = vec4(0, 0, 0, 0);
        j.Fvv = q * vec4(0, 0, -cv, -sv);
        j.eta_hint = q * vec4(cu, su, -cv, -sv);
        return j;
    };
    s.level_set = [](const Vec& p) { return p[0] * p[0] + p[1] * p[1] - 0.5; };
    return s;
}

// ---------------------------------------------------------------- H^3

ParamSurface make_geodesic_sphere_h3(double rho) {
    if (rho <= 0) throw ContractViolation("geodesic-sphere-h3: need rho > 0");
    ParamSurface s;
    s.space = ModelSpace::hyperbolic(3);
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = std::cosh(rho) / std::sinh(rho);  // inward normal
    s.name = "geodesic-sphere-h3";
    s.params = {{"rho", rho}};
    s.jet = [rho](double u, double v) {
        const C3 w = stereo_sphere(u, v);
        const double cr = std::cosh(rho), sr = std::sinh(rho);
        Jet2 j;
        j.F = vec4(cr, sr * w.F[0], sr * w.F[1], sr * w.F[2]);
        j.Fu = vec4(0, sr * w.Fu[0], sr * w.Fu[1], sr * w.Fu[2]);
        j.Fv = vec4(0, sr * w.Fv[0], sr * w.Fv[1], sr * w.Fv[2]);
        j.Fuu = vec4(0, sr * w.Fuu[0], sr * w.Fuu[1], sr * w.Fuu[2]);
        j.Fuv = vec4(0, sr * w.Fuv[0], sr * w.Fuv[1], sr * w.Fuv[2]);
        j.Fvv = vec4(0, sr * w.Fvv[0], sr * w.Fvv[1], sr * w.Fvv[2]);
        j.eta_hint = -vec4(sr, cr * w.F[0], cr * w.F[1], cr * w.F[2]);
        return j;
    };
    s.level_set = [rho](const Vec& p) { return p[0] - std::cosh(rho); };
    return s;
}

ParamSurface make_equidistant_h3(double d) {
    if (d < 0) throw ContractViolation("equidistant-h3: need d >= 0");
    ParamSurface s;
    s.space = ModelSpace::hyperbolic(3);
    s.dom = {-0.35, 0.35, -0.35, 0.35, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = std::tanh(d);
    s.name = "equidistant-h3";
    s.params = {{"d", d}};
    s.jet = [d](double u, double v) {
        const C3 w = disk_hyp(u, v);
        const double cd = std::cosh(d), sd = std::sinh(d);
        Jet2 j;
        j.F = vec4(cd * w.F[0], cd * w.F[1], cd * w.F[2], sd);
        j.Fu = vec4(cd * w.Fu[0], cd * w.Fu[1], cd * w.Fu[2], 0);
        j.Fv = vec4(cd * w.Fv[0], cd * w.Fv[1], cd * w.Fv[2], 0);
        j.Fuu = vec4(cd * w.Fuu[0], cd * w.Fuu[1], cd * w.Fuu[2], 0);
        j.Fuv = vec4(cd * w.Fuv[0], cd * w.Fuv[1], cd * w.Fuv[2], 0);
        j.Fvv = vec4(cd * w.Fvv[0], cd * w.Fvv[1], cd * w.Fvv[2], 0);
        j.eta_hint = -vec4(sd * w.F[0], sd * w.F[1], sd * w.F[2], cd);
        return j;
    };
    s.level_set = [d](const Vec& p) { return p[3] - std::sinh(d); };
    return s;
}

ParamSurface make_horosphere_h3() {
    ParamSurface s;
    s.space = ModelSpace::hyperbolic(3);
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 1.0;
    s.name = "horosphere-h3";
    s.jet = [](double u, double v) {
        const double q = 0.5 * (u * u + v * v);
        Jet2 j;
        j.F = vec4(1 + q, q, u, v);
        j.Fu = vec4(u, u, 1, 0);
        j.Fv = vec4(v, v, 0, 1);
        j.Fuu = vec4(1, 1, 0, 0);
        j.Fuv = vec4(0, 0, 0, 0);
        j.Fvv = vec4(1, 1, 0, 0);
        j.eta_hint = vec4(-q, 1 - q, -u, -v);  // l - F, l = e1 + e2
        return j;
    };
    // (x * l) + 1 with l = e1 + e2
    s.level_set = [](const Vec& p) { return -p[0] + p[1] + 1.0; };
    return s;
}

// ------------------------------------------------------------- H^2 x R

ParamSurface make_slice_h2xr() {
    ParamSurface s;
    s.space = ModelSpace::h2xr();
    s.dom = {-0.35, 0.35, -0.35, 0.35, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0;
    s.name = "slice-h2xr";
    s.jet = [](double u, double v) {
        const C3 w = disk_hyp(u, v);
        Jet2 j;
        j.F = vec4(w.F[0], w.F[1], w.F[2], 0);
        j.Fu = vec4(w.Fu[0], w.Fu[1], w.Fu[2], 0);
        j.Fv = vec4(w.Fv[0], w.Fv[1], w.Fv[2], 0);
        j.Fuu = vec4(w.Fuu[0], w.Fuu[1], w.Fuu[2], 0);
        j.Fuv = vec4(w.Fuv[0], w.Fuv[1], w.Fuv[2], 0);
        j.Fvv = vec4(w.Fvv[0], w.Fvv[1], w.Fvv[2], 0);
        j.eta_hint = vec4(0, 0, 0, 1);
        return j;
    };
    s.level_set = [](const Vec& p) { return p[3]; };
    return s;
}

ParamSurface make_vertical_plane_h2xr() {
    ParamSurface s;
    s.space = ModelSpace::h2xr();
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0;
    s.name = "vertical-plane-h2xr";
    s.jet = [](double u, double v) {
        Jet2 j;
        j.F = vec4(std::cosh(u), std::sinh(u), 0, v);
        j.Fu = vec4(std::sinh(u), std::cosh(u), 0, 0);
        j.Fv = vec4(0, 0, 0, 1);
        j.Fuu = vec4(std::cosh(u), std::sinh(u), 0, 0);
        j.Fuv = vec4(0, 0, 0, 0);
        j.Fvv = vec4(0, 0, 0, 0);
        j.eta_hint = vec4(0, 0, 1, 0);
        return j;
    };
    s.level_set = [](const Vec& p) { return p[2]; };
    return s;
}

ParamSurface make_vertical_cylinder_h2xr(double kg) {
    if (kg <= 1)
        throw ContractViolation(
            "vertical-cylinder-h2xr: need kg > 1 (circle of geodesic curvature kg)");
    const double r = std::atanh(1.0 / kg);  // arccoth(kg)
    ParamSurface s;
    s.space = ModelSpace::h2xr();
    const double sr = std::sinh(r);
    s.dom = {0, 2 * kPi * sr, -1, 1, true, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0.5 * kg;
    s.name = "vertical-cylinder-h2xr";
    s.params = {{"kg", kg}};
    const double cr = std::cosh(r);
    s.jet = [sr, cr](double u, double v) {
        const double t = u / sr, ct = std::cos(t), st = std::sin(t);
        Jet2 j;
        j.F = vec4(cr, sr * ct, sr * st, v);
        j.Fu = vec4(0, -st, ct, 0);
        j.Fv = vec4(0, 0, 0, 1);
        j.Fuu = vec4(0, -ct / sr, -st / sr, 0);
        j.Fuv = vec4(0, 0, 0, 0);
        j.Fvv = vec4(0, 0, 0, 0);
        j.eta_hint = -vec4(sr, cr * ct, cr * st, 0);  // toward the axis
        return j;
    };
    s.level_set = [cr](const Vec& p) { return p[0] - cr; };
    return s;
}

ParamSurface make_vertical_graph_h2xr(double amp) {
    ParamSurface s;
    s.space = ModelSpace::h2xr();
    s.dom = {-0.35, 0.35, -0.35, 0.35, false, false};
    s.is_conformal = false;
    s.cmc = false;
    s.name = "vertical-graph-h2xr";
    s.params = {{"amp", amp}};
    auto h = [amp](double u, double v) { return amp * std::sin(u + 0.3) * std::cos(v - 0.2); };
    s.jet = [amp](double u, double v) {
        const C3 w = disk_hyp(u, v);
        const double su = std::sin(u + 0.3), cu = std::cos(u + 0.3);
        const double sv = std::sin(v - 0.2), cv = std::cos(v - 0.2);
        Jet2 j;
        j.F = vec4(w.F[0], w.F[1], w.F[2], amp * su * cv);
        j.Fu = vec4(w.Fu[0], w.Fu[1], w.Fu[2], amp * cu * cv);
        j.Fv = vec4(w.Fv[0], w.Fv[1], w.Fv[2], -amp * su * sv);
        j.Fuu = vec4(w.Fuu[0], w.Fuu[1], w.Fuu[2], -amp * su * cv);
        j.Fuv = vec4(w.Fuv[0], w.Fuv[1], w.Fuv[2], -amp * cu * sv);
        j.Fvv = vec4(w.Fvv[0], w.Fvv[1], w.Fvv[2], -amp * su * cv);
        j.eta_hint = vec4(0, 0, 0, 1);  // orientation only: upward normal
        return j;
    };
    // invert the disk chart: u = x2/(1+x1), v = x3/(1+x1)
    s.level_set = [h](const Vec& p) {
        const double cu = p[1] / (1.0 + p[0]), cv = p[2] / (1.0 + p[0]);
        return p[3] - h(cu, cv);
    };
    return s;
}

// ------------------------------------------------------------- S^2 x R

ParamSurface make_slice_s2xr() {
    ParamSurface s;
    s.space = ModelSpace::s2xr();
    s.dom = {-0.8, 0.8, -0.8, 0.8, false, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0;
    s.name = "slice-s2xr";
    s.jet = [](double u, double v) {
        const C3 w = stereo_sphere(u, v);
        Jet2 j;
        j.F = vec4(w.F[0], w.F[1], w.F[2], 0);
        j.Fu = vec4(w.Fu[0], w.Fu[1], w.Fu[2], 0);
        j.Fv = vec4(w.Fv[0], w.Fv[1], w.Fv[2], 0);
        j.Fuu = vec4(w.Fuu[0], w.Fuu[1], w.Fuu[2], 0);
        j.Fuv = vec4(w.Fuv[0], w.Fuv[1], w.Fuv[2], 0);
        j.Fvv = vec4(w.Fvv[0], w.Fvv[1], w.Fvv[2], 0);
        j.eta_hint = vec4(0, 0, 0, 1);
        return j;
    };
    s.level_set = [](const Vec& p) { return p[3]; };
    return s;
}

ParamSurface make_vertical_cylinder_s2xr(double kg) {
    if (kg < 0)
        throw ContractViolation("vertical-cylinder-s2xr: need kg >= 0");
    const double rho = std::atan2(1.0, kg);  // cot(rho) = kg, rho in (0, pi/2]
    ParamSurface s;
    s.space = ModelSpace::s2xr();
    const double sr = std::sin(rho), cr = std::cos(rho);
    s.dom = {0, 2 * kPi * sr, -1, 1, true, false};
    s.is_conformal = true;
    s.cmc = true;
    s.H_exact = 0.5 * kg;
    s.name = "vertical-cylinder-s2xr";
    s.params = {{"kg", kg}};
    s.jet = [sr, cr](double u, double v) {
        const double t = u / sr, ct = std::cos(t), st = std::sin(t);
        Jet2 j;
        j.F = vec4(sr * ct, sr * st, cr, v);
        j.Fu = vec4(-st, ct, 0, 0);
        j.Fv = vec4(0, 0, 0, 1);
        j.Fuu = vec4(-ct / sr, -st / sr, 0, 0);
        j.Fuv = vec4(0, 0, 0, 0);
        j.Fvv = vec4(0, 0, 0, 0);
        j.eta_hint = vec4(-cr * ct, -cr * st, sr, 0);  // toward the pole e3
        return j;
    };
    s.level_set = [cr](const Vec& p) { return p[2] - cr; };
    return s;
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"plane-r3", "r3", {}, "", "0", true, true, true},
        {"sphere-r3", "r3", {{"r", 1.0}}, "r > 0", "1/r", true, true, true},
        {"cylinder-r3", "r3", {{"r", 0.8}}, "r > 0", "1/(2r)", true, true, true},
        {"ellipsoid-r3", "r3", {{"a", 1.0}, {"b", 1.3}, {"c", 1.6}}, "a,b,c > 0",
         "non-CMC control", false, true, false},
        {"great-sphere-s3", "s3", {}, "", "0", true, true, true},
        {"geodesic-sphere-s3", "s3", {{"rho", 0.7}}, "0 < rho < pi", "|cot(rho)|", true,
         true, true},
        {"clifford-torus", "s3", {}, "", "0", true, true, true},
        {"geodesic-sphere-h3", "h3", {{"rho", 0.7}}, "rho > 0", "coth(rho)", true, true,
         true},
        {"equidistant-h3", "h3", {{"d", 0.5}}, "d >= 0", "tanh(d)", true, true, true},
        {"horosphere-h3", "h3", {}, "", "1", true, true, true},
        {"slice-h2xr", "h2xr", {}, "", "0", true, true, true},
        {"vertical-plane-h2xr", "h2xr", {}, "", "0", true, true, true},
        {"vertical-cylinder-h2xr", "h2xr", {{"kg", 1.6}}, "kg > 1", "kg/2", true, true,
         true},
        {"vertical-graph-h2xr", "h2xr", {{"amp", 0.4}}, "", "non-CMC control", false,
         true, false},
        {"slice-s2xr", "s2xr", {}, "", "0", true, true, true},
        {"vertical-cylinder-s2xr", "s2xr", {{"kg", 1.0}}, "kg >= 0", "kg/2", true, true,
         true},
    };
}

ParamSurface catalog(const std::string& name, const std::map<std::string, double>& params) {
    ParamSurface s;
    if (name == "plane-r3") {
        check_known_params(name, params, {});
        s = make_plane_r3();
    } else if (name == "sphere-r3") {
        check_known_params(name, params, {"r"});
        s = make_sphere_r3(get_param(params, "r", 1.0));
    } else if (name == "cylinder-r3") {
        check_known_params(name, params, {"r"});
        s = make_cylinder_r3(get_param(params, "r", 0.8));
    } else if (name == "ellipsoid-r3") {
        check_known_params(name, params, {"a", "b", "c"});
        s = make_ellipsoid_r3(get_param(params, "a", 1.0), get_param(params, "b", 1.3),
                              get_param(params, "c", 1.6));
    } else if (name == "great-sphere-s3") {
        check_known_params(name, params, {});
        s = make_great_sphere_s3();
    } else if (name == "geodesic-sphere-s3") {
        check_known_params(name, params, {"rho"});
        s = make_geodesic_sphere_s3(get_param(params, "rho", 0.7));
    } else if (name == "clifford-torus") {
        check_known_params(name, params, {});
        s = make_clifford_torus();
    } else if (name == "geodesic-sphere-h3") {
        check_known_params(name, params, {"rho"});
        s = make_geodesic_sphere_h3(get_param(params, "rho", 0.7));
    } else if (name == "equidistant-h3") {
        check_known_params(name, params, {"d"});
        s = make_equidistant_h3(get_param(params, "d", 0.5));
    } else if (name == "horosphere-h3") {
        check_known_params(name, params, {});
        s = make_horosphere_h3();
    } else if (name == "slice-h2xr") {
        check_known_params(name, params, {});
        s = make_slice_h2xr();
    } else if (name == "vertical-plane-h2xr") {
        check_known_params(name, params, {});
        s = make_vertical_plane_h2xr();
    } else if (name == "vertical-cylinder-h2xr") {
        check_known_params(name, params, {"kg"});
        s = make_vertical_cylinder_h2xr(get_param(params, "kg", 1.6));
    } else if (name == "vertical-graph-h2xr") {
        check_known_params(name, params, {"amp"});
        s = make_vertical_graph_h2xr(get_param(params, "amp", 0.4));
    } else if (name == "slice-s2xr") {
        check_known_params(name, params, {});
        s = make_slice_s2xr();
    } else if (name == "vertical-cylinder-s2xr") {
        check_known_params(name, params, {"kg"});
        s = make_vertical_cylinder_s2xr(get_param(params, "kg", 1.0));
    } else {
        throw ContractViolation("catalog: unknown surface '" + name + "'");
    }
    return s;
}

}  // namespace gaussmap
