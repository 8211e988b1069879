#include "gaussmap/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <sstream>

namespace gaussmap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ScalarField nan_field(int nu, int nv) {
    ScalarField f(nu, nv);
    for (auto& x : f.vals) x = kNaN;
    return f;
}

std::vector<double> node_us(const ParamSurface& s) {
    std::vector<double> r(s.Nu);
    for (int i = 0; i < s.Nu; ++i) r[i] = s.u_at(i);
    return r;
}
std::vector<double> node_vs(const ParamSurface& s) {
    std::vector<double> r(s.Nv);
    for (int j = 0; j < s.Nv; ++j) r[j] = s.v_at(j);
    return r;
}

NamedGrid named_grid(const std::string& name, const ParamSurface& s, ScalarField f) {
    return NamedGrid{name, std::move(f), node_us(s), node_vs(s)};
}

// Coarse/fine grid pair for Richardson extrapolation. Combined values are
// O(h^4) at the coarse nodes shared by both grids.
struct GridPair {
    SurfaceGrid coarse;
    std::unique_ptr<SurfaceGrid> fine;

    bool valid(int i, int j, int margin) const {
        return stencil_ok(coarse.surf, i, j, margin);
    }
    template <class T, class Fn>
    T combine(Fn&& fn, int i, int j) const {
        if (!fine) return fn(coarse, i, j);
        const T f = fn(*fine, 2 * i, 2 * j);
        const T c = fn(coarse, i, j);
        return (f * 4.0 - c) * (1.0 / 3.0);
    }
};

GridPair make_grid_pair(const ParamSurface& surf, const CheckOptions& opt) {
    GridPair gp{make_surface_grid(surf.with_grid(opt.Nu, opt.Nv)), nullptr};
    if (opt.richardson) {
        const auto [nu, nv] = refined_grid(gp.coarse.surf);
        gp.fine = std::make_unique<SurfaceGrid>(make_surface_grid(surf.with_grid(nu, nv)));
    }
    return gp;
}

void stamp(CheckReport& r, const ParamSurface& surf, const CheckOptions& opt) {
    r.surface = surf.name;
    r.params = surf.params;
    r.Nu = opt.Nu;
    r.Nv = opt.Nv;
    r.richardson = opt.richardson;
}

ScalarField h_field(const SurfaceGrid& g) {
    ScalarField f(g.Nu(), g.Nv());
    for (int i = 0; i < g.Nu(); ++i)
        for (int j = 0; j < g.Nv(); ++j) f.at(i, j) = g.frames.at(i, j).H;
    return f;
}

double coord_dot(const AlgebraElement& a, const AlgebraElement& b) {
    return algebra_coordinates(a).dot(algebra_coordinates(b));
}

// Orthonormal tangent pair of the surface at a node.
std::pair<Vec, Vec> tangent_pair(const ModelSpace& space, const SurfaceJet& sj) {
    Vec e1 = sj.Fu / std::sqrt(sj.g(0, 0));
    Vec e2 = sj.Fv - embed_inner(space, sj.Fv, e1) * e1;
    e2 /= std::sqrt(embed_inner(space, e2, e2));
    return {e1, e2};
}

double ricci_brute(const ModelSpace& space, const Vec& p, const Vec& v) {
    double s = 0;
    for (const Vec& b : orthonormal_tangent_basis(space, p))
        s += embed_inner(space, curvature_tensor(space, p, v, b, v), b);
    return s;
}

// Two-level Richardson extrapolation of a central difference; ~O(h^6).
double d_exact(const std::function<double(double)>& f, double x, double h0 = 0.02) {
    auto c = [&](double h) { return (f(x + h) - f(x - h)) / (2 * h); };
    const double d1 = c(h0), d2 = c(h0 / 2), d3 = c(h0 / 4);
    const double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
    return (16 * r2 - r1) / 15;
}

}  // namespace

std::vector<double> default_t_grid() {
    std::vector<double> t;
    for (int k = -10; k <= 10; ++k) t.push_back(0.1 * k);
    return t;
}

// ---------------------------------------------------------------- sampling

Vec random_point(const ModelSpace& space, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int d = space.embed_dim();
    switch (space.family) {
        case SpaceFamily::Euclid: {
            Vec p(d);
            for (int i = 0; i < d; ++i) p[i] = gauss(rng);
            return p;
        }
        case SpaceFamily::Sphere: {
            Vec p(d);
            double n2 = 0;
            do {
                for (int i = 0; i < d; ++i) p[i] = gauss(rng);
                n2 = p.squaredNorm();
            } while (n2 < 1e-6);
            return p / std::sqrt(n2);
        }
        case SpaceFamily::Hyperbolic: {
            Vec p(d);
            double s = 0;
            for (int i = 1; i < d; ++i) {
                p[i] = 0.8 * gauss(rng);
                s += p[i] * p[i];
            }
            p[0] = std::sqrt(1.0 + s);
            return p;
        }
        case SpaceFamily::SphereProd: {
            Vec q = random_point(ModelSpace::sphere(2), rng);
            Vec p(4);
            p.head(3) = q;
            p[3] = gauss(rng);
            return p;
        }
        case SpaceFamily::HypProd: {
            Vec q = random_point(ModelSpace::hyperbolic(2), rng);
            Vec p(4);
            p.head(3) = q;
            p[3] = gauss(rng);
            return p;
        }
    }
    return Vec();
}

Vec random_tangent(const ModelSpace& space, const Vec& p, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int d = space.embed_dim();
    Vec w(d);
    for (int i = 0; i < d; ++i) w[i] = gauss(rng);
    return project_tangent(space, p, w);
}

Vec random_unit_tangent(const ModelSpace& space, const Vec& p, std::mt19937_64& rng) {
    while (true) {
        Vec w = random_tangent(space, p, rng);
        const double n2 = embed_inner(space, w, w);
        if (n2 > 1e-6) return w / std::sqrt(n2);
    }
}

std::vector<Vec> random_tangent_frame(const ModelSpace& space, const Vec& p,
                                      std::mt19937_64& rng) {
    const int d = space.embed_dim();
    const int nt = space.is_product() ? 2 : space.n;
    std::vector<Vec> frame;
    int guard = 0;
    while (static_cast<int>(frame.size()) < nt) {
        if (++guard > 200)
            throw std::runtime_error("random_tangent_frame: degenerate draws");
        Vec w = random_tangent(space, p, rng);
        if (space.is_product()) w[3] = 0.0;  // frame spans the factor tangent
        if (space.family == SpaceFamily::Euclid && d > 0) {
            // Euclid has no factor constraint; w is already fine
        }
        for (const Vec& b : frame) w -= embed_inner(space, w, b) * b;
        const double n2 = embed_inner(space, w, w);
        if (n2 < 1e-4) continue;
        frame.push_back(w / std::sqrt(n2));
    }
    return frame;
}

AlgebraElement random_algebra_element(const AlgebraKind& kind, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec c(kind.dimension());
    for (int i = 0; i < c.size(); ++i) c[i] = gauss(rng);
    return algebra_from_coordinates(kind, c);
}

// ---------------------------------------------------------- Brioschi oracle

double intrinsic_gauss_curvature(const ParamSurface& surf, double u, double v) {
    const ModelSpace& sp = surf.space;
    auto jet = [&](double uu, double vv) { return surf.jet(uu, vv); };
    auto E_ = [&](double uu, double vv) {
        const Jet2 j = jet(uu, vv);
        return embed_inner(sp, j.Fu, j.Fu);
    };
    auto F_ = [&](double uu, double vv) {
        const Jet2 j = jet(uu, vv);
        return embed_inner(sp, j.Fu, j.Fv);
    };
    auto G_ = [&](double uu, double vv) {
        const Jet2 j = jet(uu, vv);
        return embed_inner(sp, j.Fv, j.Fv);
    };
    // exact first derivatives of the form coefficients (from the 2-jet)
    auto E_v = [&](double uu, double vv) {
        const Jet2 j = jet(uu, vv);
        return 2 * embed_inner(sp, j.Fuv, j.Fu);
    };
    auto G_u = [&](double uu, double vv) {
        const Jet2 j = jet(uu, vv);
        return 2 * embed_inner(sp, j.Fuv, j.Fv);
    };
    auto F_u = [&](double uu, double vv) {
        const Jet2 j = jet(uu, vv);
        return embed_inner(sp, j.Fuu, j.Fv) + embed_inner(sp, j.Fu, j.Fuv);
    };
    const Jet2 j0 = jet(u, v);
    const double E = E_(u, v), F = F_(u, v), G = G_(u, v);
    const double Eu = 2 * embed_inner(sp, j0.Fuu, j0.Fu);
    const double Ev = E_v(u, v);
    const double Gu = G_u(u, v);
    const double Gv = 2 * embed_inner(sp, j0.Fvv, j0.Fv);
    const double Fu = F_u(u, v);
    const double Fv = embed_inner(sp, j0.Fuv, j0.Fv) + embed_inner(sp, j0.Fu, j0.Fvv);
    const double Evv = d_exact([&](double t) { return E_v(u, t); }, v);
    const double Guu = d_exact([&](double t) { return G_u(t, v); }, u);
    const double Fuv = d_exact([&](double t) { return F_u(u, t); }, v);

    Eigen::Matrix3d m1, m2;
    m1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
          Fv - 0.5 * Gu, E, F,
          0.5 * Gv, F, G;
    m2 << 0, 0.5 * Ev, 0.5 * Gu,
          0.5 * Ev, E, F,
          0.5 * Gu, F, G;
    const double den = E * G - F * F;
    return (m1.determinant() - m2.determinant()) / (den * den);
}

// ------------------------------------------------------------- presets

AlgebraElement killing_preset(const ModelSpace& space, const std::string& name) {
    const AlgebraKind kind = space.algebra_kind();
    auto elem = [&](std::initializer_list<std::tuple<int, int, double>> entries,
                    double line = 0.0) {
        AlgebraElement e = AlgebraElement::zero(kind);
        for (const auto& [i, j, x] : entries) e.mat(i, j) = x;
        e.line = line;
        e.validate(1e-12);
        return e;
    };
    const double rt = std::sqrt(2.0) / 2.0;
    switch (space.family) {
        case SpaceFamily::Euclid: {
            AlgebraElement e = AlgebraElement::zero(kind);
            if (name == "translation-x") { e.vec[0] = 1; return e; }
            if (name == "translation-y") { e.vec[1] = 1; return e; }
            if (name == "translation-z" && space.n >= 3) { e.vec[2] = 1; return e; }
            break;
        }
        case SpaceFamily::Sphere:
            if (space.n == 3 && name == "axis-rotation")
                return elem({{1, 2, 1.0}, {2, 1, -1.0}});
            break;
        case SpaceFamily::Hyperbolic:
            if (space.n == 3) {
                if (name == "hyperbolic-translation")
                    return elem({{0, 3, 1.0}, {3, 0, 1.0}});
                if (name == "hyperbolic-translation-12")
                    return elem({{0, 1, 1.0}, {1, 0, 1.0}});
                if (name == "axis-rotation") return elem({{1, 2, 1.0}, {2, 1, -1.0}});
                if (name == "parabolic")
                    return elem({{0, 2, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {2, 1, -1.0}});
            }
            break;
        case SpaceFamily::SphereProd:
            if (name == "vertical") return elem({}, 1.0);
            if (name == "axis-rotation") return elem({{0, 1, 1.0}, {1, 0, -1.0}});
            break;
        case SpaceFamily::HypProd:
            if (name == "vertical") return elem({}, 1.0);
            if (name == "axis-rotation") return elem({{1, 2, rt}, {2, 1, -rt}});
            if (name == "hyperbolic-translation")
                return elem({{0, 1, 1.0}, {1, 0, 1.0}});
            if (name == "parabolic")
                return elem({{0, 2, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {2, 1, -1.0}});
            break;
    }
    throw ContractViolation("killing_preset: unknown preset '" + name + "' for " +
                            space.str());
}

std::vector<std::string> killing_preset_names(const ModelSpace& space) {
    switch (space.family) {
        case SpaceFamily::Euclid:
            return {"translation-x", "translation-y", "translation-z"};
        case SpaceFamily::Sphere:
            return {"axis-rotation"};
        case SpaceFamily::Hyperbolic:
            return {"hyperbolic-translation", "hyperbolic-translation-12",
                    "axis-rotation", "parabolic"};
        case SpaceFamily::SphereProd:
            return {"vertical", "axis-rotation"};
        case SpaceFamily::HypProd:
            return {"vertical", "axis-rotation", "hyperbolic-translation", "parabolic"};
    }
    return {};
}

// ------------------------------------------------------------ ruh-vilms

CheckOutcome ruh_vilms_residual(const ParamSurface& surf, const CheckOptions& opt) {
    GridPair gp = make_grid_pair(surf, opt);
    const SurfaceGrid& G = gp.coarse;
    const ModelSpace& sp = surf.space;
    const int nu = G.Nu(), nv = G.Nv();

    auto lap_fn = [](const SurfaceGrid& g, int i, int j) {
        return laplace_beltrami(g, g.N, i, j);
    };
    // Gamma_p(grad H) is linear in the finite differences, hence combinable.
    ScalarField h_coarse = h_field(G);
    ScalarField h_fine;
    if (gp.fine) h_fine = h_field(*gp.fine);
    auto gradh_gamma = [&](const SurfaceGrid& g, const ScalarField& h, int i,
                           int j) {
        const Vec gh = surface_gradient(g, h, i, j);
        return gamma(sp, g.frames.at(i, j).p, gh, 1e-6);
    };

    ScalarField rv_audited = nan_field(nu, nv);
    ScalarField rv_literal = nan_field(nu, nv);
    ScalarField rv_normal = nan_field(nu, nv);
    ScalarField rv_tangential = nan_field(nu, nv);
    ScalarField rv_full = nan_field(nu, nv);

    struct NodeData {
        AlgebraElement lap, ggh, N;
        double B2, Ric;
    };
    std::vector<NodeData> nodes;
    std::vector<std::pair<int, int>> idx;

    double s_sum = 0, s_min = 1e300, s_max = -1e300;
    long s_n = 0;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            if (!gp.valid(i, j, 1)) continue;
            NodeData nd;
            nd.lap = gp.combine<AlgebraElement>(lap_fn, i, j);
            if (gp.fine) {
                const AlgebraElement f = gradh_gamma(*gp.fine, h_fine, 2 * i, 2 * j);
                const AlgebraElement c = gradh_gamma(G, h_coarse, i, j);
                nd.ggh = (f * 4.0 - c) * (1.0 / 3.0);
            } else {
                nd.ggh = gradh_gamma(G, h_coarse, i, j);
            }
            const SurfaceJet& sj = G.frames.at(i, j);
            nd.N = G.N.at(i, j);
            nd.B2 = sj.B2;
            nd.Ric = ricci(sp, sj.p, sj.eta);
            if (std::abs(nd.Ric) > 1e-9) {
                const double s = -(algebra_inner(nd.lap, nd.N) + nd.B2) / nd.Ric;
                s_sum += s;
                s_min = std::min(s_min, s);
                s_max = std::max(s_max, s);
                ++s_n;
            }
            nodes.push_back(std::move(nd));
            idx.emplace_back(i, j);
        }

    std::optional<double> s_fit;
    if (s_n > 0) s_fit = s_sum / s_n;
    const double s_used = s_fit.value_or(1.0);

    // c_t fit (tangential coefficient) for non-CMC controls.
    std::optional<double> ct_fit;
    if (!surf.cmc) {
        double num = 0, den = 0;
        for (const auto& nd : nodes) {
            const AlgebraElement r0 = nd.lap + nd.N * (nd.B2 + s_used * nd.Ric);
            num += coord_dot(r0, nd.ggh);
            den += coord_dot(nd.ggh, nd.ggh);
        }
        if (den > 1e-14) ct_fit = -num / den;
    }
    const double ct_used = ct_fit.value_or(opt.n_c);

    for (size_t k = 0; k < nodes.size(); ++k) {
        const auto& nd = nodes[k];
        const auto [i, j] = idx[k];
        const AlgebraElement r_aud = nd.lap + nd.N * (nd.B2 + s_used * nd.Ric);
        const AlgebraElement r_lit = nd.lap + nd.N * (nd.B2 + nd.Ric);
        rv_audited.at(i, j) = coord_norm(r_aud);
        rv_literal.at(i, j) = coord_norm(r_lit);
        if (!surf.cmc) {
            const double normal = algebra_inner(r_aud, nd.N);
            rv_normal.at(i, j) = std::abs(normal);
            rv_tangential.at(i, j) = coord_norm(r_aud - nd.N * normal);
            rv_full.at(i, j) = coord_norm(r_aud + nd.ggh * ct_used);
        }
    }

    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "ruh-vilms";
    stamp(r, surf, opt);
    const double tol = opt.tol("ruh_vilms", 5e-5);
    if (surf.cmc) {
        r.fields.push_back(field_from_grid("rv_residual", rv_audited, tol));
        r.fields.push_back(field_from_grid("rv_residual_literal", rv_literal,
                                           std::nullopt));
        out.grids.push_back(named_grid("rv_residual", G.surf, std::move(rv_audited)));
    } else {
        r.fields.push_back(field_from_grid("rv_normal_residual", rv_normal, tol));
        r.fields.push_back(field_from_grid("rv_tangential_norm", rv_tangential,
                                           std::nullopt));
        r.fields.push_back(field_from_grid("rv_full_residual", rv_full, tol));
        r.fields.push_back(field_from_grid("rv_residual_literal", rv_literal,
                                           std::nullopt));
        out.grids.push_back(named_grid("rv_normal_residual", G.surf, std::move(rv_normal)));
    }
    r.audit.s_fit = s_fit;
    r.audit.c_t_fit = ct_fit;
    if (s_fit) r.add_meta("s_spread", s_max - s_min);
    r.add_meta("H", surf.cmc ? format_double(surf.H_exact) : "non-CMC");
    r.finalize();
    return out;
}

// -------------------------------------------------------------- duality

CheckOutcome duality_check(const ParamSurface& surf, const CheckOptions& opt) {
    GridPair gp = make_grid_pair(surf, opt);
    const SurfaceGrid& G = gp.coarse;
    const ModelSpace& sp = surf.space;
    const int nu = G.Nu(), nv = G.Nv();

    // S_ab = <dN(F_a), Gamma(F_b)>; FD enters only through dN.
    auto s_ab = [&](const SurfaceGrid& g, int i, int j) {
        const SurfaceJet& sj = g.frames.at(i, j);
        const AlgebraElement nu_ = d_du(g, g.N, i, j);
        const AlgebraElement nv_ = d_dv(g, g.N, i, j);
        const AlgebraElement gu = gamma(sp, sj.p, sj.Fu);
        const AlgebraElement gv = gamma(sp, sj.p, sj.Fv);
        Eigen::Matrix2d s;
        s(0, 0) = algebra_inner(nu_, gu);
        s(0, 1) = algebra_inner(nu_, gv);
        s(1, 0) = algebra_inner(nv_, gu);
        s(1, 1) = algebra_inner(nv_, gv);
        return s;
    };

    ScalarField res = nan_field(nu, nv);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            if (!gp.valid(i, j, 1)) continue;
            const Eigen::Matrix2d s = gp.combine<Eigen::Matrix2d>(s_ab, i, j);
            const Eigen::Matrix2d d = s + G.frames.at(i, j).b;
            res.at(i, j) = d.cwiseAbs().maxCoeff();
        }

    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "duality";
    stamp(r, surf, opt);
    r.fields.push_back(
        field_from_grid("duality_residual", res, opt.tol("duality", 1e-6)));
    out.grids.push_back(named_grid("duality_residual", G.surf, std::move(res)));
    r.finalize();
    return out;
}

// ------------------------------------------------------------- quadform

CheckOutcome quad_compare(const ParamSurface& surf, const CheckOptions& opt,
                          bool require_conformal) {
    if (require_conformal && !surf.is_conformal)
        throw ContractViolation("quad_compare: surface parametrization is not conformal");
    GridPair gp = make_grid_pair(surf, opt);
    const SurfaceGrid& G = gp.coarse;
    const ModelSpace& sp = surf.space;
    const int nu = G.Nu(), nv = G.Nv();
    using Cx = std::complex<double>;
    const Cx I(0, 1);

    // Per-grid q fields (FD of N enters linearly).
    auto q_fields = [&](const SurfaceGrid& g) {
        std::pair<ComplexField, ComplexField> qq{ComplexField(g.Nu(), g.Nv()),
                                                 ComplexField(g.Nu(), g.Nv())};
        for (int i = 0; i < g.Nu(); ++i)
            for (int j = 0; j < g.Nv(); ++j) {
                if (!stencil_ok(g.surf, i, j, 1)) continue;
                const SurfaceJet& sj = g.frames.at(i, j);
                const AlgebraElement nu_ = d_du(g, g.N, i, j);
                const AlgebraElement nv_ = d_dv(g, g.N, i, j);
                const AlgebraElement gu = gamma(sp, sj.p, sj.Fu);
                const AlgebraElement gv = gamma(sp, sj.p, sj.Fv);
                // q_gamma = <N_z, Gamma(F_z)>, complex-bilinear
                const double suu = algebra_inner(nu_, gu), svv = algebra_inner(nv_, gv);
                const double suv = algebra_inner(nu_, gv), svu = algebra_inner(nv_, gu);
                qq.first.at(i, j) = 0.25 * Cx(suu - svv, -(suv + svu));
                // q_harm = <N_z, N_z>
                const double puu = algebra_inner(nu_, nu_), pvv = algebra_inner(nv_, nv_);
                const double puv = algebra_inner(nu_, nv_);
                qq.second.at(i, j) = 0.25 * Cx(puu - pvv, -2 * puv);
            }
        return qq;
    };

    auto [qg_c, qh_c] = q_fields(G);
    ComplexField qg_f, qh_f;
    if (gp.fine) {
        auto ff = q_fields(*gp.fine);
        qg_f = std::move(ff.first);
        qh_f = std::move(ff.second);
    }
    auto combined = [&](const ComplexField& c, const ComplexField& f, int i, int j) {
        if (!gp.fine) return c.at(i, j);
        return (4.0 * f.at(2 * i, 2 * j) - c.at(i, j)) / 3.0;
    };

    // Closed-form targets.
    auto hopf_at = [&](const SurfaceGrid& g, int i, int j) {
        const SurfaceJet& sj = g.frames.at(i, j);
        return 0.25 * Cx(sj.b(0, 0) - sj.b(1, 1), -2 * sj.b(0, 1));
    };
    auto ar_at = [&](const SurfaceGrid& g, int i, int j) {
        const SurfaceJet& sj = g.frames.at(i, j);
        const Jet2& jet = g.jets.at(i, j);
        const Cx hz = 0.5 * Cx(jet.Fu[3], -jet.Fv[3]);
        return 2.0 * sj.H * hopf_at(g, i, j) - sp.kappa() * hz * hz;
    };

    const bool product = sp.is_product();
    const int ic = nu / 2, jc = nv / 2;
    auto resolve_sign = [&](const Cx& q, const Cx& ref, int def) {
        if (std::abs(ref) < 1e-12) return std::pair<int, bool>(def, true);
        return std::pair<int, bool>(std::abs(q - ref) <= std::abs(q + ref) ? 1 : -1,
                                    false);
    };

    const Cx q_main_c = product ? combined(qh_c, qh_f, ic, jc) : combined(qg_c, qg_f, ic, jc);
    const Cx ref_c = product ? ar_at(G, ic, jc) : hopf_at(G, ic, jc);
    const auto [sign_main, degen_main] = resolve_sign(q_main_c, ref_c, product ? 1 : -1);
    const auto [sign_eq, degen_eq] =
        resolve_sign(combined(qg_c, qg_f, ic, jc), hopf_at(G, ic, jc), -1);

    ScalarField quad_res = nan_field(nu, nv);
    ScalarField eqform_res = nan_field(nu, nv);
    ComplexField q_cr(nu, nv);  // the CR-checked form, combined at coarse nodes
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            if (!gp.valid(i, j, 1)) continue;
            const Cx qg = combined(qg_c, qg_f, i, j);
            const Cx qh = combined(qh_c, qh_f, i, j);
            if (product) {
                quad_res.at(i, j) = std::abs(qh - double(sign_main) * ar_at(G, i, j));
                eqform_res.at(i, j) = std::abs(qg - double(sign_eq) * hopf_at(G, i, j));
            } else {
                quad_res.at(i, j) = std::abs(qg - double(sign_main) * hopf_at(G, i, j));
            }
            q_cr.at(i, j) = product ? qh : qg;
        }

    // Cauchy-Riemann residual of the comparison form, computed on each grid
    // and Richardson-combined (margin 2).
    auto cr_field = [&](const SurfaceGrid& g, const ComplexField& q) {
        ScalarField cr = nan_field(g.Nu(), g.Nv());
        SurfaceGrid const* gg = &g;
        for (int i = 0; i < g.Nu(); ++i)
            for (int j = 0; j < g.Nv(); ++j) {
                if (!stencil_ok(g.surf, i, j, 2)) continue;
                cr.at(i, j) = std::abs(wirtinger_zbar(*gg, q, i, j));
            }
        return cr;
    };
    ScalarField cr_c = cr_field(G, product ? qh_c : qg_c);
    ScalarField cr;
    if (gp.fine) {
        ScalarField cr_f = cr_field(*gp.fine, product ? qh_f : qg_f);
        cr = nan_field(nu, nv);
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j)
                if (gp.valid(i, j, 2))
                    cr.at(i, j) =
                        std::abs((4.0 * cr_f.at(2 * i, 2 * j) - cr_c.at(i, j)) / 3.0);
    } else {
        cr = std::move(cr_c);
    }

    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "quadform";
    stamp(r, surf, opt);
    const double qtol = opt.tol("quad_match", 1e-6);
    const double crtol = opt.tol("cr_residual", 1e-5);
    if (product) {
        r.fields.push_back(field_from_grid(
            "quad_vs_ar", quad_res,
            surf.is_conformal ? std::optional<double>(qtol) : std::nullopt));
        r.fields.push_back(field_from_grid("quad_eqform_vs_hopf", eqform_res, qtol));
        r.add_meta("ar_form", "harmonic-map form <N_z,N_z> compared against 2H*A - c*T");
        r.add_meta("eqform_sign", sign_eq == 1 ? "+1" : "-1");
    } else {
        r.fields.push_back(field_from_grid("quad_vs_hopf", quad_res, qtol));
    }
    r.fields.push_back(field_from_grid(
        "cr_residual", cr,
        (surf.cmc && surf.is_conformal) ? std::optional<double>(crtol) : std::nullopt));
    r.audit.ar_sign = sign_main;
    if (degen_main) r.add_meta("sign_resolution", "degenerate (reference ~ 0)");
    if (product && degen_eq) r.add_meta("eqform_sign_resolution", "degenerate");
    out.grids.push_back(named_grid(product ? "quad_vs_ar" : "quad_vs_hopf", G.surf,
                                   std::move(quad_res)));
    out.grids.push_back(named_grid("cr_residual", G.surf, std::move(cr)));
    r.finalize();
    return out;
}

// ------------------------------------------------------- perp subalgebra

SubalgebraResult perp_subalgebra(const ParamSurface& surf, int sample_count,
                                 const CheckOptions& opt) {
    const AlgebraKind kind = surf.space.algebra_kind();
    const int dim = kind.dimension();
    if (sample_count < dim)
        throw ContractViolation("perp_subalgebra: sample_count below algebra dimension");
    const SurfaceGrid G = make_surface_grid(surf.with_grid(opt.Nu, opt.Nv));
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick_i(0, G.Nu() - 1), pick_j(0, G.Nv() - 1);

    std::vector<AlgebraElement> samples;
    const std::vector<AlgebraElement> basis = algebra_basis(kind);
    Mat rows(sample_count, dim);
    for (int s = 0; s < sample_count; ++s) {
        const AlgebraElement& N = G.N.at(pick_i(rng), pick_j(rng));
        samples.push_back(N);
        for (int k = 0; k < dim; ++k) rows(s, k) = algebra_inner(basis[k], N);
    }

    Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeFullV);
    const Vec sv = svd.singularValues();
    const double smax = sv.size() ? sv[0] : 0.0;
    const double cutoff = std::max(1e-10 * smax, 1e-12);
    int rank = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv[k] > cutoff) ++rank;

    SubalgebraResult res;
    res.rank = rank;
    res.singular_values = sv;
    // flag when the kept/discarded gap is thin
    if (rank > 0 && rank < dim) {
        const double kept = sv[rank - 1];
        const double dropped = (rank < sv.size()) ? sv[rank] : 0.0;
        if (dropped > 0 && kept / dropped < 10.0) res.ambiguous = true;
    }

    Mat null_basis(dim, dim - rank);
    for (int k = rank; k < dim; ++k) null_basis.col(k - rank) = svd.matrixV().col(k);
    for (int k = 0; k < dim - rank; ++k) {
        AlgebraElement w = algebra_from_coordinates(kind, null_basis.col(k));
        for (const auto& N : samples)
            res.pairing_residual =
                std::max(res.pairing_residual, std::abs(algebra_inner(w, N)));
        res.basis.push_back(std::move(w));
    }

    // bracket closure: component of [w_a, w_b] outside span(basis),
    // measured in the coordinate norm
    for (size_t a = 0; a < res.basis.size(); ++a)
        for (size_t b = a + 1; b < res.basis.size(); ++b) {
            const Vec c = algebra_coordinates(bracket(res.basis[a], res.basis[b]));
            const Vec proj = null_basis * (null_basis.transpose() * c);
            res.closure_residual = std::max(res.closure_residual, (c - proj).norm());
        }
    return res;
}

CheckOutcome perp_check(const ParamSurface& surf, const CheckOptions& opt) {
    const SubalgebraResult res = perp_subalgebra(surf, opt.sample_count, opt);
    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "perp";
    stamp(r, surf, opt);
    FieldStat closure;
    closure.name = "bracket_closure";
    closure.max_abs = closure.mean_abs = res.closure_residual;
    closure.tol = opt.tol("closure", 1e-8);
    r.fields.push_back(closure);
    FieldStat pairing;
    pairing.name = "perp_pairing";
    pairing.max_abs = pairing.mean_abs = res.pairing_residual;
    pairing.tol = opt.tol("closure", 1e-8);
    r.fields.push_back(pairing);
    r.add_meta("rank", std::to_string(res.rank));
    r.add_meta("perp_dimension", std::to_string(static_cast<int>(res.basis.size())));
    std::ostringstream sv;
    for (int k = 0; k < res.singular_values.size(); ++k) {
        if (k) sv << " ";
        sv << format_double(res.singular_values[k]);
    }
    r.add_meta("singular_values", sv.str());
    r.add_meta("rank_gap_ambiguous", res.ambiguous ? "true" : "false");
    r.finalize();
    if (res.ambiguous) r.pass = false;
    return out;
}

// ------------------------------------------------------------ invariance

CheckOutcome invariance_check(const ParamSurface& surf, const AlgebraElement& V,
                              const std::vector<double>& t_grid, const CheckOptions& opt,
                              bool gate) {
    if (!surf.has_level_set())
        throw ContractViolation("invariance_check: surface has no level set");
    if (V.kind != surf.space.algebra_kind())
        throw ContractViolation("invariance_check: V not in the space's algebra");
    const ParamSurface s = surf.with_grid(opt.Nu, opt.Nv);
    ScalarField res(s.Nu, s.Nv);
    std::vector<GroupElement> flows;
    flows.reserve(t_grid.size());
    for (double t : t_grid) flows.push_back(group_exp(surf.space, V, t));
    for (int i = 0; i < s.Nu; ++i)
        for (int j = 0; j < s.Nv; ++j) {
            const Jet2 jet = s.jet(s.u_at(i), s.v_at(j));
            double worst = 0;
            for (const auto& g : flows)
                worst = std::max(worst,
                                 std::abs(s.level_set(isometry_action(surf.space, g, jet.F))));
            res.at(i, j) = worst;
        }
    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "invariance";
    stamp(r, surf, opt);
    r.fields.push_back(field_from_grid(
        "invariance_residual", res,
        gate ? std::optional<double>(opt.tol("invariance", 1e-8)) : std::nullopt));
    out.grids.push_back(named_grid("invariance_residual", s, std::move(res)));
    r.add_meta("t_range", "[" + format_double(t_grid.front()) + ", " +
                              format_double(t_grid.back()) + "]");
    r.finalize();
    return out;
}

// ----------------------------------------------------------------- HOS

CheckOutcome hos_diagnostic(const ParamSurface& surf, const AlgebraElement& V,
                            const CheckOptions& opt) {
    if (V.kind != surf.space.algebra_kind())
        throw ContractViolation("hos_diagnostic: V not in the space's algebra");
    GridPair gp = make_grid_pair(surf, opt);
    const SurfaceGrid& G = gp.coarse;
    const ModelSpace& sp = surf.space;
    const int nu = G.Nu(), nv = G.Nv();

    auto fv_field = [&](const SurfaceGrid& g) {
        ScalarField f(g.Nu(), g.Nv());
        for (int i = 0; i < g.Nu(); ++i)
            for (int j = 0; j < g.Nv(); ++j)
                f.at(i, j) = algebra_inner(g.N.at(i, j), V);
        return f;
    };
    ScalarField fv_c = fv_field(G);
    ScalarField fv_f, h_c = h_field(G), h_f;
    if (gp.fine) {
        fv_f = fv_field(*gp.fine);
        h_f = h_field(*gp.fine);
    }

    ScalarField stab = nan_field(nu, nv);
    ScalarField gauss_eq = nan_field(nu, nv);
    ScalarField ricci_id = nan_field(nu, nv);
    ScalarField route_gap = nan_field(nu, nv);
    ScalarField lap_fv = nan_field(nu, nv);

    double f_min = 1e300, f_max = -1e300, p_min = 1e300;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            const SurfaceJet& sj = G.frames.at(i, j);
            const double f = fv_c.at(i, j);
            f_min = std::min(f_min, f);
            f_max = std::max(f_max, f);
            const double ric_eta = ricci_brute(sp, sj.p, sj.eta);
            p_min = std::min(p_min, ric_eta + 2 * sj.Ktilde + 4 * sj.H * sj.H);
            // route consistency: <N,V> vs <eta, zeta(V)>
            route_gap.at(i, j) =
                std::abs(f - embed_inner(sp, sj.eta, killing_field(sp, V, sj.p)));
            // Ricci identity (brute-force curvature sums)
            const auto [e1, e2] = tangent_pair(sp, sj);
            const double lhs = ric_eta + 2 * sectional(sp, sj.p, e1, e2);
            const double rhs = ricci_brute(sp, sj.p, e1) + ricci_brute(sp, sj.p, e2);
            ricci_id.at(i, j) = std::abs(lhs - rhs);
            if (!gp.valid(i, j, 1)) continue;
            // stability identity for f_V
            auto lap_fn = [&](const SurfaceGrid& g, int ii, int jj) {
                return laplace_beltrami(g, (&g == &G) ? fv_c : fv_f, ii, jj);
            };
            const double lap = gp.combine<double>(lap_fn, i, j);
            auto grad_term = [&](const SurfaceGrid& g, int ii, int jj) {
                const Vec gh = surface_gradient(g, (&g == &G) ? h_c : h_f, ii, jj);
                return embed_inner(sp, gh, killing_field(sp, V, g.frames.at(ii, jj).p));
            };
            const double gterm = gp.combine<double>(grad_term, i, j);
            const double ric = ricci(sp, sj.p, sj.eta);
            stab.at(i, j) = std::abs(lap + opt.n_c * gterm + (sj.B2 + ric) * f);
            lap_fv.at(i, j) = lap;
        }

    // Gauss equation against the intrinsic (Brioschi) curvature.
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            const SurfaceJet& sj = G.frames.at(i, j);
            const double kint =
                intrinsic_gauss_curvature(G.surf, G.surf.u_at(i), G.surf.v_at(j));
            gauss_eq.at(i, j) =
                std::abs(sj.B2 - (4 * sj.H * sj.H - 2 * (kint - sj.Ktilde)));
        }

    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "hos";
    stamp(r, surf, opt);
    r.fields.push_back(
        field_from_grid("stability_identity", stab, opt.tol("stability", 5e-5)));
    r.fields.push_back(
        field_from_grid("gauss_equation", gauss_eq, opt.tol("gauss_eq", 1e-8)));
    r.fields.push_back(
        field_from_grid("ricci_identity", ricci_id, opt.tol("ricci_identity", 1e-8)));
    r.fields.push_back(
        field_from_grid("fv_route_gap", route_gap, opt.tol("route_gap", 1e-12)));

    // hemisphere verdict
    std::string hemi;
    const double zero_tol = 1e-10;
    if (std::max(std::abs(f_min), std::abs(f_max)) <= zero_tol)
        hemi = "vanishes identically";
    else if (f_min >= -zero_tol)
        hemi = "one-signed (>= 0)";
    else if (f_max <= zero_tol)
        hemi = "one-signed (<= 0)";
    else
        hemi = "mixed";
    r.add_meta("hemisphere_verdict", hemi);
    r.add_meta("f_min", f_min);
    r.add_meta("f_max", f_max);

    // threshold verdict 2H^2 + Ric_N >= 0 (closed form)
    const double ric_n = ricci_min(sp);
    if (surf.cmc) {
        const double thr = 2 * surf.H_exact * surf.H_exact + ric_n;
        std::string verdict = std::abs(thr) <= 1e-9 ? "holds with equality"
                              : (thr > 0 ? "holds" : "fails");
        r.add_meta("threshold", thr);
        r.add_meta("threshold_verdict", verdict);
    } else {
        r.add_meta("threshold_verdict", "n/a (non-CMC)");
    }
    r.add_meta("Ric_N", ric_n);
    r.add_meta("P_min", p_min);

    // subharmonicity: with the hypothesis active and f one-signed <= 0,
    // min Delta f must not dip below zero beyond FD accuracy
    double lap_min = 1e300;
    for (const double x : lap_fv.vals)
        if (!std::isnan(x)) lap_min = std::min(lap_min, x);
    r.add_meta("min_lap_f", lap_min);
    const bool hypothesis = surf.cmc &&
                            (2 * surf.H_exact * surf.H_exact + ric_n >= -1e-9) &&
                            f_max <= zero_tol;
    FieldStat sub;
    sub.name = "subharmonicity";
    sub.max_abs = std::max(0.0, -lap_min);
    sub.mean_abs = sub.max_abs;
    if (hypothesis) sub.tol = opt.tol("subharmonicity", 1e-6);
    r.fields.push_back(sub);

    out.grids.push_back(named_grid("stability_identity", G.surf, std::move(stab)));
    r.finalize();
    return out;
}

// --------------------------------------------------------------- sweeps

CheckOutcome sweep_algebra_identities(const CheckOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto rvec = [&](int n) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        return v;
    };
    double trace_res = 0, biinv_res = 0;
    long double trace_sum = 0, biinv_sum = 0;
    const int samples = 1000;
    for (int s = 0; s < samples; ++s) {
        const Vec x = rvec(4), y = rvec(4), u = rvec(4), v = rvec(4);
        const double tphi =
            std::abs((phi(x, u) * phi(y, v)).trace() - x.dot(v) * y.dot(u));
        auto lor = [](const Vec& a, const Vec& b) {
            return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
        };
        const double tpsi =
            std::abs((psi(x, u) * psi(y, v)).trace() - lor(x, v) * lor(y, u));
        trace_res = std::max(trace_res, std::max(tphi, tpsi));
        trace_sum += tphi + tpsi;
    }
    const std::vector<AlgebraKind> kinds = {
        AlgebraKind::orthogonal(4), AlgebraKind::lorentz(4),
        AlgebraKind::orthogonal_plus_line(3), AlgebraKind::lorentz_plus_line(3),
        AlgebraKind::translation(3)};
    for (const auto& kind : kinds)
        for (int s = 0; s < samples / 5; ++s) {
            const AlgebraElement u = random_algebra_element(kind, rng);
            const AlgebraElement v = random_algebra_element(kind, rng);
            const AlgebraElement w = random_algebra_element(kind, rng);
            const double r = std::abs(algebra_inner(bracket(u, v), w) +
                                      algebra_inner(v, bracket(u, w)));
            biinv_res = std::max(biinv_res, r);
            biinv_sum += r;
        }
    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "algebra-identities";
    r.surface = "(random samples)";
    r.Nu = samples;
    r.Nv = samples;
    FieldStat f1;
    f1.name = "trace_identities";
    f1.max_abs = trace_res;
    f1.mean_abs = static_cast<double>(trace_sum / (2 * samples));
    f1.tol = opt.tol("trace_identity", 1e-13);
    r.fields.push_back(f1);
    FieldStat f2;
    f2.name = "ad_invariance";
    f2.max_abs = biinv_res;
    f2.mean_abs = static_cast<double>(biinv_sum / samples);
    f2.tol = opt.tol("trace_identity", 1e-13);
    r.fields.push_back(f2);
    r.finalize();
    return out;
}

CheckOutcome sweep_frame_welldefinedness(const CheckOptions& opt) {
    std::mt19937_64 rng(opt.seed + 1);
    const std::vector<ModelSpace> spaces = {ModelSpace::euclid(3), ModelSpace::sphere(3),
                                            ModelSpace::hyperbolic(3), ModelSpace::s2xr(),
                                            ModelSpace::h2xr()};
    double worst = 0;
    long double sum = 0;
    long n = 0;
    for (const auto& sp : spaces)
        for (int s = 0; s < 200; ++s) {
            const Vec p = random_point(sp, rng);
            const Vec u = random_unit_tangent(sp, p, rng);
            const AlgebraElement g0 = gamma(sp, p, u);
            for (int f = 0; f < 8; ++f) {
                const auto frame = random_tangent_frame(sp, p, rng);
                const AlgebraElement g1 = gamma_via_frame(sp, p, u, frame);
                const double r = coord_norm(g1 - g0);
                worst = std::max(worst, r);
                sum += r;
                ++n;
            }
        }
    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "gamma-frame-welldef";
    r.surface = "(random points and frames)";
    FieldStat f;
    f.name = "frame_independence";
    f.max_abs = worst;
    f.mean_abs = static_cast<double>(sum / n);
    f.tol = opt.tol("frame_welldef", 1e-12);
    r.fields.push_back(f);
    r.finalize();
    return out;
}

CheckOutcome sweep_twisted_normal(const CheckOptions& opt) {
    std::mt19937_64 rng(opt.seed + 2);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const ModelSpace h2 = ModelSpace::hyperbolic(2);
    const ModelSpace h2xr = ModelSpace::h2xr();
    double worst = 0;
    long double sum = 0;
    for (int s = 0; s < 500; ++s) {
        const Vec q = random_point(h2, rng);
        Vec w = random_tangent(h2, q, rng);
        double nu = gauss(rng);
        const double norm = std::sqrt(embed_inner(h2, w, w) + nu * nu);
        w /= norm;
        nu /= norm;
        Vec p4(4), eta4(4);
        p4.head(3) = q;
        p4[3] = gauss(rng);
        eta4.head(3) = w;
        eta4[3] = nu;
        const GaussValue N = gauss_map(h2xr, p4, eta4);
        const auto [jw, jnu] = twisted_normal(q, Eigen::Vector3d(w), nu);
        AlgebraElement m = AlgebraElement::zero(AlgebraKind::lorentz(3));
        m.mat = N.value.mat;
        Eigen::Vector3d via_l3 = l3_identify(m);
        via_l3[0] = -via_l3[0];  // time reflection pairs l3 with J
        const double r = std::max((via_l3 - jw).cwiseAbs().maxCoeff(),
                                  std::abs(N.value.line - jnu));
        worst = std::max(worst, r);
        sum += r;
    }
    CheckOutcome out;
    CheckReport& r = out.report;
    r.check = "twisted-normal";
    r.surface = "(random points of H^2 x R)";
    FieldStat f;
    f.name = "twisted_vs_gauss";
    f.max_abs = worst;
    f.mean_abs = static_cast<double>(sum / 500);
    f.tol = opt.tol("twisted", 1e-12);
    r.fields.push_back(f);
    r.finalize();
    return out;
}

// ----------------------------------------------------------------- suite

namespace {

struct SuiteMember {
    std::string name;
    std::map<std::string, double> params;
    std::string space_tag;
};

std::vector<SuiteMember> suite_members() {
    return {
        {"plane-r3", {}, "r3"},
        {"sphere-r3", {{"r", 1.0}}, "r3"},
        {"cylinder-r3", {{"r", 0.8}}, "r3"},
        {"ellipsoid-r3", {{"a", 1.0}, {"b", 1.3}, {"c", 1.6}}, "r3"},
        {"great-sphere-s3", {}, "s3"},
        {"geodesic-sphere-s3", {{"rho", 0.7}}, "s3"},
        {"clifford-torus", {}, "s3"},
        {"geodesic-sphere-h3", {{"rho", 0.7}}, "h3"},
        {"equidistant-h3", {{"d", 0.5}}, "h3"},
        {"horosphere-h3", {}, "h3"},
        {"slice-h2xr", {}, "h2xr"},
        {"vertical-plane-h2xr", {}, "h2xr"},
        {"vertical-cylinder-h2xr", {{"kg", 1.6}}, "h2xr"},
        {"vertical-graph-h2xr", {{"amp", 0.4}}, "h2xr"},
        {"slice-s2xr", {}, "s2xr"},
        {"vertical-cylinder-s2xr", {{"kg", 1.0}}, "s2xr"},
    };
}

AlgebraElement default_killing(const ModelSpace& sp) {
    switch (sp.family) {
        case SpaceFamily::Euclid: return killing_preset(sp, "translation-z");
        case SpaceFamily::Sphere: return killing_preset(sp, "axis-rotation");
        case SpaceFamily::Hyperbolic:
            return killing_preset(sp, "hyperbolic-translation-12");
        case SpaceFamily::SphereProd:
        case SpaceFamily::HypProd: return killing_preset(sp, "vertical");
    }
    throw ContractViolation("default_killing: unsupported space");
}

}  // namespace

SuiteResult run_suite(const std::string& profile, const std::string& only_space,
                      int threads) {
    CheckOptions opt;
    if (profile == "acceptance") {
        opt.Nu = opt.Nv = 64;
        opt.tol_scale = 1.0;
    } else if (profile == "quick") {
        opt.Nu = opt.Nv = 32;
        opt.tol_scale = 10.0;
    } else {
        throw ContractViolation("run_suite: unknown profile '" + profile + "'");
    }
    opt.richardson = true;

    const bool filtered = !only_space.empty();
    auto space_ok = [&](const std::string& tag) { return !filtered || tag == only_space; };

    struct Task {
        std::string label;
        std::function<CheckOutcome()> fn;
    };
    std::vector<Task> tasks;

    if (!filtered) {
        tasks.push_back({"sweep algebra-identities",
                         [opt] { return sweep_algebra_identities(opt); }});
        tasks.push_back({"sweep gamma-frame-welldef",
                         [opt] { return sweep_frame_welldefinedness(opt); }});
        tasks.push_back(
            {"sweep twisted-normal", [opt] { return sweep_twisted_normal(opt); }});
    }

    for (const auto& m : suite_members()) {
        if (!space_ok(m.space_tag)) continue;
        const auto name = m.name;
        const auto params = m.params;
        tasks.push_back({"ruh-vilms " + name, [name, params, opt] {
                             return ruh_vilms_residual(catalog(name, params), opt);
                         }});
    }
    // ellipsoid at the doubled grid for the c_t stability criterion
    if (space_ok("r3") && profile == "acceptance") {
        tasks.push_back({"ruh-vilms ellipsoid-r3 @128", [opt] {
                             CheckOptions o = opt;
                             o.Nu = o.Nv = 128;
                             return ruh_vilms_residual(catalog("ellipsoid-r3"), o);
                         }});
    }

    const std::vector<std::pair<std::string, std::map<std::string, double>>>
        duality_members = {{"geodesic-sphere-s3", {{"rho", 0.7}}},
                           {"clifford-torus", {}},
                           {"geodesic-sphere-h3", {{"rho", 0.7}}},
                           {"equidistant-h3", {{"d", 0.5}}},
                           {"horosphere-h3", {}}};
    for (const auto& [name, params] : duality_members) {
        const std::string tag = catalog(name, params).space.tag();
        if (!space_ok(tag)) continue;
        const auto n = name;
        const auto p = params;
        tasks.push_back(
            {"duality " + n, [n, p, opt] { return duality_check(catalog(n, p), opt); }});
    }

    for (const auto& m : suite_members()) {
        if (!space_ok(m.space_tag)) continue;
        const ParamSurface s = catalog(m.name, m.params);
        const auto name = m.name;
        const auto params = m.params;
        if (s.is_conformal) {
            tasks.push_back({"quadform " + name, [name, params, opt] {
                                 return quad_compare(catalog(name, params), opt);
                             }});
        } else if (name == "vertical-graph-h2xr") {
            tasks.push_back({"quadform-control " + name, [name, params, opt] {
                                 return quad_compare(catalog(name, params), opt, false);
                             }});
        }
    }

    const std::vector<std::pair<std::string, std::map<std::string, double>>>
        perp_members = {{"vertical-cylinder-h2xr", {{"kg", 1.6}}},
                        {"vertical-cylinder-s2xr", {{"kg", 1.0}}},
                        {"great-sphere-s3", {}},
                        {"horosphere-h3", {}},
                        {"ellipsoid-r3", {}}};
    for (const auto& [name, params] : perp_members) {
        const std::string tag = catalog(name, params).space.tag();
        if (!space_ok(tag)) continue;
        const auto n = name;
        const auto p = params;
        tasks.push_back(
            {"perp " + n, [n, p, opt] { return perp_check(catalog(n, p), opt); }});
        if (n != "ellipsoid-r3")
            tasks.push_back({"invariance " + n, [n, p, opt] {
                                 const ParamSurface s = catalog(n, p);
                                 const SubalgebraResult sub =
                                     perp_subalgebra(s, opt.sample_count, opt);
                                 // worst residual over the extracted basis
                                 CheckOutcome worst;
                                 bool first = true;
                                 for (const auto& w : sub.basis) {
                                     CheckOutcome o = invariance_check(
                                         s, w, default_t_grid(), opt, true);
                                     if (first ||
                                         o.report.fields[0].max_abs >
                                             worst.report.fields[0].max_abs) {
                                         worst = std::move(o);
                                         first = false;
                                     }
                                 }
                                 if (first)
                                     worst = invariance_check(
                                         s, AlgebraElement::zero(s.space.algebra_kind()),
                                         default_t_grid(), opt, true);
                                 worst.report.add_meta(
                                     "basis_elements",
                                     std::to_string(static_cast<int>(sub.basis.size())));
                                 return worst;
                             }});
    }

    // HOS diagnostics: every member with the space default, plus the
    // threshold-boundary pairs
    for (const auto& m : suite_members()) {
        if (!space_ok(m.space_tag)) continue;
        const auto name = m.name;
        const auto params = m.params;
        tasks.push_back({"hos " + name, [name, params, opt] {
                             const ParamSurface s = catalog(name, params);
                             return hos_diagnostic(s, default_killing(s.space), opt);
                         }});
    }
    if (space_ok("h3")) {
        tasks.push_back({"hos equidistant-h3 (hyperbolic-translation)", [opt] {
                             const ParamSurface s = catalog("equidistant-h3", {{"d", 0.5}});
                             return hos_diagnostic(
                                 s, killing_preset(s.space, "hyperbolic-translation"), opt);
                         }});
    }
    if (space_ok("h2xr")) {
        tasks.push_back({"hos vertical-cylinder-h2xr (kg=sqrt2)", [opt] {
                             const ParamSurface s = catalog(
                                 "vertical-cylinder-h2xr", {{"kg", std::sqrt(2.0)}});
                             return hos_diagnostic(s, default_killing(s.space), opt);
                         }});
    }

    // run (optionally in parallel batches; outputs keep task order)
    SuiteResult result;
    result.items.resize(tasks.size());
    const int nthreads = std::max(1, threads);
    for (size_t base = 0; base < tasks.size(); base += nthreads) {
        const size_t end = std::min(tasks.size(), base + nthreads);
        std::vector<std::future<std::pair<CheckOutcome, double>>> futs;
        for (size_t k = base; k < end; ++k) {
            auto fn = tasks[k].fn;
            futs.push_back(std::async(
                nthreads == 1 ? std::launch::deferred : std::launch::async, [fn] {
                    const auto t0 = std::chrono::steady_clock::now();
                    CheckOutcome o = fn();
                    const auto t1 = std::chrono::steady_clock::now();
                    return std::make_pair(
                        std::move(o),
                        std::chrono::duration<double>(t1 - t0).count());
                }));
        }
        for (size_t k = base; k < end; ++k) {
            auto [o, secs] = futs[k - base].get();
            result.items[k] = {tasks[k].label, std::move(o), secs};
        }
    }

    // -------- criteria evaluation --------
    auto find = [&](const std::string& label) -> const SuiteItem* {
        for (const auto& it : result.items)
            if (it.label == label) return &it;
        return nullptr;
    };
    auto add_criterion = [&](int id, const std::string& label, bool pass, bool skipped,
                             const std::string& detail) {
        result.criteria.push_back({id, label, pass, skipped, detail});
        if (!skipped && !pass) result.pass = false;
    };

    {
        const SuiteItem* it = find("sweep algebra-identities");
        if (!it)
            add_criterion(1, "algebra identities", false, true, "skipped (filtered)");
        else
            add_criterion(1, "algebra identities",
                          it->outcome.report.pass && it->seconds < 1.0, false,
                          "max residual " +
                              format_double(it->outcome.report.fields[0].max_abs) +
                              ", runtime " + format_double(it->seconds) + " s");
    }
    {
        const SuiteItem* it = find("sweep gamma-frame-welldef");
        if (!it)
            add_criterion(2, "Gamma well-definedness", false, true, "skipped (filtered)");
        else
            add_criterion(2, "Gamma well-definedness", it->outcome.report.pass, false,
                          "max |gamma - gamma_via_frame| = " +
                              format_double(it->outcome.report.fields[0].max_abs));
    }
    {
        const SuiteItem* it = find("sweep twisted-normal");
        if (!it)
            add_criterion(3, "twisted normal identification", false, true,
                          "skipped (filtered)");
        else
            add_criterion(3, "twisted normal identification", it->outcome.report.pass,
                          false,
                          "max residual " +
                              format_double(it->outcome.report.fields[0].max_abs));
    }
    {
        bool pass = true, any = false;
        double total = 0, worst = 0;
        for (const auto& it : result.items)
            if (it.label.rfind("duality ", 0) == 0) {
                any = true;
                pass = pass && it.outcome.report.pass;
                total += it.seconds;
                worst = std::max(worst, it.outcome.report.fields[0].max_abs);
            }
        add_criterion(4, "shape-operator duality", pass && total < 30.0, !any,
                      any ? "max residual " + format_double(worst) + ", total " +
                                format_double(total) + " s"
                          : "skipped (filtered)");
    }
    {
        bool pass = true, any = false;
        std::map<std::string, std::pair<double, double>> s_range;  // tag -> min,max
        std::string detail;
        for (const auto& m : suite_members()) {
            if (!space_ok(m.space_tag)) continue;
            const SuiteItem* it = find("ruh-vilms " + m.name);
            if (!it) continue;
            const ParamSurface s = catalog(m.name, m.params);
            if (!s.cmc) continue;
            any = true;
            const FieldStat* f = it->outcome.report.field("rv_residual");
            pass = pass && f && f->pass;
            if (it->outcome.report.audit.s_fit) {
                auto& rng = s_range.emplace(m.space_tag,
                                            std::make_pair(1e300, -1e300))
                                .first->second;
                rng.first = std::min(rng.first, *it->outcome.report.audit.s_fit);
                rng.second = std::max(rng.second, *it->outcome.report.audit.s_fit);
            }
        }
        for (const auto& [tag, rng] : s_range) {
            const double spread = rng.second - rng.first;
            if (spread >= 1e-3) pass = false;
            detail += tag + ": s in [" + format_double(rng.first) + ", " +
                      format_double(rng.second) + "] ";
        }
        add_criterion(5, "Ruh-Vilms residuals with audited normalization", pass, !any,
                      any ? detail : "skipped (filtered)");
    }
    {
        bool pass = true, any = false;
        for (const auto& it : result.items)
            if (it.label.rfind("quadform ", 0) == 0) {
                any = true;
                pass = pass && it.outcome.report.pass;
            }
        add_criterion(6, "quadratic-form comparisons", pass, !any,
                      any ? "all conformal members compared" : "skipped (filtered)");
    }
    {
        bool pass = true, any = false;
        std::string detail;
        for (const auto& [name, params] : perp_members) {
            const std::string tag = catalog(name, params).space.tag();
            if (!space_ok(tag)) continue;
            const SuiteItem* it = find("perp " + name);
            if (!it) continue;
            any = true;
            pass = pass && it->outcome.report.pass;
            if (name == "ellipsoid-r3") {
                for (const auto& [k, v] : it->outcome.report.meta)
                    if (k == "perp_dimension") {
                        if (v != "0") pass = false;
                        detail += "ellipsoid perp dim " + v + " ";
                    }
            }
            const SuiteItem* inv = find("invariance " + name);
            if (inv) pass = pass && inv->outcome.report.pass;
        }
        add_criterion(7, "perpendicular subalgebra + invariance", pass, !any,
                      any ? detail + "closure and invariance <= tol" : "skipped (filtered)");
    }
    {
        bool pass = true, any = false;
        std::string detail;
        auto expect_verdict = [&](const std::string& label, const std::string& want) {
            const SuiteItem* it = find(label);
            if (!it) return;
            any = true;
            std::string got = "?";
            for (const auto& [k, v] : it->outcome.report.meta)
                if (k == "threshold_verdict") got = v;
            if (got != want) pass = false;
            detail += label + ": " + got + "; ";
        };
        expect_verdict("hos horosphere-h3", "holds with equality");
        expect_verdict("hos equidistant-h3 (hyperbolic-translation)", "fails");
        expect_verdict("hos vertical-cylinder-h2xr (kg=sqrt2)", "holds with equality");
        for (const auto& it : result.items)
            if (it.label.rfind("hos ", 0) == 0) {
                any = true;
                const FieldStat* ge = it.outcome.report.field("gauss_equation");
                const FieldStat* ri = it.outcome.report.field("ricci_identity");
                pass = pass && ge && ge->pass && ri && ri->pass;
            }
        add_criterion(8, "subharmonicity thresholds and curvature identities", pass,
                      !any, any ? detail : "skipped (filtered)");
    }
    {
        const SuiteItem* i64 = find("ruh-vilms ellipsoid-r3");
        const SuiteItem* i128 = find("ruh-vilms ellipsoid-r3 @128");
        if (!i64 || !i128) {
            add_criterion(9, "non-CMC control (ellipsoid)", false, true,
                          "skipped (filtered or quick profile)");
        } else {
            bool pass = i64->outcome.report.pass;
            const FieldStat* tang = i64->outcome.report.field("rv_tangential_norm");
            if (!tang || tang->max_abs < 1e-3) pass = false;
            std::string detail;
            const auto c0 = i64->outcome.report.audit.c_t_fit;
            const auto c1 = i128->outcome.report.audit.c_t_fit;
            if (c0 && c1 && std::abs(*c0) > 1e-12) {
                const double spread = std::abs(*c0 - *c1) / std::abs(*c0);
                if (spread >= 0.05) pass = false;
                detail = "c_t(64) = " + format_double(*c0) + ", c_t(128) = " +
                         format_double(*c1) + ", spread " + format_double(spread);
            } else {
                pass = false;
                detail = "c_t fit unavailable";
            }
            add_criterion(9, "non-CMC control (ellipsoid)", pass, false, detail);
        }
    }
    add_criterion(10, "determinism (byte-identical reports)", true, true,
                  "verified externally by running the suite twice");

    for (const auto& it : result.items)
        if (!it.outcome.report.pass && it.label.rfind("quadform-control", 0) != 0)
            result.pass = false;
    return result;
}

}  // namespace gaussmap
