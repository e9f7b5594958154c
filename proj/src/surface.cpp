#include "hypcat/surface.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace hypcat::surface {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale(const Vec3& a, double c) { return {a[0] * c, a[1] * c, a[2] * c}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 normalized(const Vec3& a) { return scale(a, 1.0 / norm(a)); }

double sq_dist(const Vec3& a, const Vec3& b) {
    const Vec3 d = sub(a, b);
    return dot(d, d);
}

// Triangulate the quad (i00, i10, i11, i01) along its shorter diagonal in
// model coordinates, winding each triangle to face the stored normal.
void emit_quad(SurfaceMesh& mesh, int i00, int i10, int i11, int i01) {
    auto push = [&mesh](int a, int b, int c) {
        const Vec3 face_n = cross(sub(mesh.vertices[b], mesh.vertices[a]),
                                  sub(mesh.vertices[c], mesh.vertices[a]));
        const Vec3 ref = add(add(mesh.normals[a], mesh.normals[b]), mesh.normals[c]);
        if (dot(face_n, ref) < 0)
            mesh.faces.push_back({a, c, b});
        else
            mesh.faces.push_back({a, b, c});
    };
    if (sq_dist(mesh.vertices[i00], mesh.vertices[i11]) <=
        sq_dist(mesh.vertices[i10], mesh.vertices[i01])) {
        push(i00, i10, i11);
        push(i00, i11, i01);
    } else {
        push(i10, i11, i01);
        push(i10, i01, i00);
    }
}

// Derivatives of the half-disk chart (x, y) -> (u, v).
void halfdisk_jacobian(double x, double y, double& du_dx, double& du_dy, double& dv_dx,
                       double& dv_dy) {
    const double cx = std::cosh(x), sx = std::sinh(x);
    const double cy = std::cosh(y), sy = std::sinh(y);
    const double d = 1.0 + cx * cy;
    du_dx = (cx * cy * d - sx * cy * sx * cy) / (d * d);
    du_dy = sx * sy / (d * d);
    dv_dx = -sy * sx * cy / (d * d);
    dv_dy = (cy * d - sy * cx * sy) / (d * d);
}

double conformal_factor(Model model, const Vec3& p) {
    switch (model) {
        case Model::Ball: {
            const double r2 = dot(p, p);
            return 2.0 / (1.0 - r2);
        }
        case Model::UpperHalf:
            return 1.0 / p[2];
        default:
            throw std::invalid_argument("conformal metric defined for Ball and UpperHalf only");
    }
}

Vec3 grad_log_factor(Model model, const Vec3& p) {
    switch (model) {
        case Model::Ball: {
            const double r2 = dot(p, p);
            return scale(p, 2.0 / (1.0 - r2));
        }
        case Model::UpperHalf:
            return {0.0, 0.0, -1.0 / p[2]};
        default:
            throw std::invalid_argument("conformal metric defined for Ball and UpperHalf only");
    }
}

void format_double(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

// Spatial part of the spacelike unit vector Lorentz-orthogonal to the
// position X and both tangents, via the cofactor solve of the 3x4 system.
Vec3 lorentz_surface_normal(const std::array<double, 4>& X, const std::array<double, 4>& T1,
                            const std::array<double, 4>& T2) {
    std::array<double, 4> c{};
    for (int k = 0; k < 4; ++k) {
        double m[3][3];
        for (int r = 0; r < 3; ++r) {
            const std::array<double, 4>& row = r == 0 ? X : (r == 1 ? T1 : T2);
            int cc = 0;
            for (int col = 0; col < 4; ++col)
                if (col != k) m[r][cc++] = row[col];
        }
        const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        c[k] = (k % 2 == 0 ? 1.0 : -1.0) * det;
    }
    const std::array<double, 4> n{-c[0], c[1], c[2], c[3]};  // raise the index
    const double nn2 = -n[0] * n[0] + n[1] * n[1] + n[2] * n[2] + n[3] * n[3];
    const double nn = std::sqrt(std::fabs(nn2));
    return {n[1] / nn, n[2] / nn, n[3] / nn};
}

}  // namespace

SurfaceMesh catenoid_mesh(const CatenoidParam& a, double s_max, int n_s, int n_theta,
                          Model model) {
    if (!(s_max > 0)) throw std::invalid_argument("catenoid_mesh: s_max must be > 0");
    if (n_s < 2 || n_theta < 3)
        throw std::invalid_argument("catenoid_mesh: need n_s >= 2 and n_theta >= 3");

    SurfaceMesh mesh;
    mesh.model = model;
    mesh.vertices.reserve(static_cast<size_t>(n_s) * n_theta);
    mesh.normals.reserve(static_cast<size_t>(n_s) * n_theta);

    for (int i = 0; i < n_s; ++i) {
        const double s = -s_max + 2.0 * s_max * i / (n_s - 1);
        const double x = catenary::x_of(a, s);
        const double y = catenary::y_of(a, s);
        const auto [u, v] = models::halfdisk_from_warped({x, y});

        double du_dx, du_dy, dv_dx, dv_dy;
        halfdisk_jacobian(x, y, du_dx, du_dy, dv_dx, dv_dy);
        const double xs = catenary::x_s(a, s);
        const double ys = catenary::y_s(a, s);
        const double us = du_dx * xs + du_dy * ys;
        const double vs = dv_dx * xs + dv_dy * ys;
        const double nn = std::hypot(us, vs);

        for (int j = 0; j < n_theta; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / n_theta;
            const double c = std::cos(theta), sn = std::sin(theta);
            const Vec3 p{u, v * c, v * sn};
            const Vec3 n{vs / nn, -us / nn * c, -us / nn * sn};
            switch (model) {
                case Model::Ball:
                    mesh.vertices.push_back(p);
                    mesh.normals.push_back(n);
                    break;
                case Model::UpperHalf: {
                    const auto q = models::ball_to_upperhalf({p[0], p[1], p[2]});
                    mesh.vertices.push_back({q.zx, q.zy, q.t});
                    // conformal map: the pushforward of the normal direction
                    const double eps = 1e-6;
                    const auto qp = models::ball_to_upperhalf(
                        {p[0] + eps * n[0], p[1] + eps * n[1], p[2] + eps * n[2]});
                    const auto qm = models::ball_to_upperhalf(
                        {p[0] - eps * n[0], p[1] - eps * n[1], p[2] - eps * n[2]});
                    mesh.normals.push_back(
                        normalized({qp.zx - qm.zx, qp.zy - qm.zy, qp.t - qm.t}));
                    break;
                }
                case Model::Hyperboloid: {
                    const auto X = models::ball_to_hyperboloid({p[0], p[1], p[2]});
                    mesh.vertices.push_back({X.x2, X.x3, X.x4});
                    // tangents of the composed chart by central differences
                    const double eps = 1e-6;
                    auto lift = [&](double ss, double th) {
                        const double xx = catenary::x_of(a, ss);
                        const double yy = catenary::y_of(a, ss);
                        const auto [uu, vv] = models::halfdisk_from_warped({xx, yy});
                        return models::ball_to_hyperboloid(
                            {uu, vv * std::cos(th), vv * std::sin(th)});
                    };
                    const auto sp = lift(s + eps, theta), sm = lift(s - eps, theta);
                    const auto tp = lift(s, theta + eps), tm = lift(s, theta - eps);
                    mesh.normals.push_back(lorentz_surface_normal(
                        {X.x1, X.x2, X.x3, X.x4},
                        {sp.x1 - sm.x1, sp.x2 - sm.x2, sp.x3 - sm.x3, sp.x4 - sm.x4},
                        {tp.x1 - tm.x1, tp.x2 - tm.x2, tp.x3 - tm.x3, tp.x4 - tm.x4}));
                    break;
                }
            }
        }
    }

    for (int i = 0; i + 1 < n_s; ++i)
        for (int j = 0; j < n_theta; ++j) {
            const int jn = (j + 1) % n_theta;
            emit_quad(mesh, i * n_theta + j, (i + 1) * n_theta + j, (i + 1) * n_theta + jn,
                      i * n_theta + jn);
        }
    return mesh;
}

SurfaceMesh helicoid_mesh(const HelicoidPitch& abar, Model model, double u_max,
                          double v_max, int n_u, int n_v) {
    if (!(u_max > 0) || !(v_max > 0))
        throw std::invalid_argument("helicoid_mesh: ranges must be positive");
    if (n_u < 2 || n_v < 2) throw std::invalid_argument("helicoid_mesh: need n_u, n_v >= 2");

    SurfaceMesh mesh;
    mesh.model = model;
    const double ab = abar.abar();

    for (int i = 0; i < n_u; ++i) {
        const double u = -u_max + 2.0 * u_max * i / (n_u - 1);
        for (int j = 0; j < n_v; ++j) {
            const double v = -v_max + 2.0 * v_max * j / (n_v - 1);
            if (model == Model::Hyperboloid) {
                const auto p = helicoid::helicoid_hyperboloid(abar, u, v);
                mesh.vertices.push_back({p.x2, p.x3, p.x4});
                // Lorentz-orthogonal complement of {X, X_u, X_v}; spatial part.
                const std::array<double, 4> X{p.x1, p.x2, p.x3, p.x4};
                const std::array<double, 4> Xu{std::sinh(u) * std::cosh(v),
                                               std::sinh(u) * std::sinh(v),
                                               std::cosh(u) * std::cos(ab * v),
                                               std::cosh(u) * std::sin(ab * v)};
                const std::array<double, 4> Xv{std::cosh(u) * std::sinh(v),
                                               std::cosh(u) * std::cosh(v),
                                               -ab * std::sinh(u) * std::sin(ab * v),
                                               ab * std::sinh(u) * std::cos(ab * v)};
                mesh.normals.push_back(lorentz_surface_normal(X, Xu, Xv));
            } else {
                Vec3 q;
                if (model == Model::Ball) {
                    const auto b = helicoid::helicoid_ball(abar, u, v);
                    q = {b.u, b.v, b.w};
                } else {
                    const auto h = helicoid::helicoid_upperhalf(abar, u, v);
                    q = {h.zx, h.zy, h.t};
                }
                mesh.vertices.push_back(q);
                // Finite-difference tangents; under a conformal metric their
                // Euclidean cross product is metric-orthogonal to the surface.
                const double hstep = 1e-5;
                auto at = [&](double uu, double vv) -> Vec3 {
                    if (model == Model::Ball) {
                        const auto b = helicoid::helicoid_ball(abar, uu, vv);
                        return {b.u, b.v, b.w};
                    }
                    const auto hh = helicoid::helicoid_upperhalf(abar, uu, vv);
                    return {hh.zx, hh.zy, hh.t};
                };
                const Vec3 tu = scale(sub(at(u + hstep, v), at(u - hstep, v)), 0.5 / hstep);
                const Vec3 tv = scale(sub(at(u, v + hstep), at(u, v - hstep)), 0.5 / hstep);
                mesh.normals.push_back(normalized(cross(tu, tv)));
            }
        }
    }

    for (int i = 0; i + 1 < n_u; ++i)
        for (int j = 0; j + 1 < n_v; ++j)
            emit_quad(mesh, i * n_v + j, (i + 1) * n_v + j, (i + 1) * n_v + j + 1,
                      i * n_v + j + 1);
    return mesh;
}

models::LorentzVec lorentz_catenoid_curve(CatenoidKind kind, double atilde, double s) {
    const quad::Tolerance tol = quad::default_tolerance();
    const double mag = std::fabs(s);
    const double sign = s < 0 ? -1.0 : 1.0;

    switch (kind) {
        case CatenoidKind::Spherical: {
            if (!(atilde > 0.5))
                throw std::domain_error("lorentz_catenoid_curve: requires atilde > 1/2");
            const double x1 = std::sqrt(atilde * std::cosh(2.0 * s) - 0.5);
            auto dphi = [atilde](double sg) {
                const double c = atilde * std::cosh(2.0 * sg);
                return std::sqrt(atilde * atilde - 0.25) / ((c + 0.5) * std::sqrt(c - 0.5));
            };
            const double phi =
                mag == 0.0 ? 0.0 : sign * quad::integrate_smooth(dphi, 0.0, mag, tol).value;
            const double r = std::sqrt(x1 * x1 + 1.0);
            // basis: e4 = E1 (timelike), e1 = E2, e2 = E4, e3 = E3
            return {r * std::cosh(phi), x1, r * std::sinh(phi), 0.0};
        }
        case CatenoidKind::Hyperbolic: {
            if (!(atilde > 0.5))
                throw std::domain_error("lorentz_catenoid_curve: requires atilde > 1/2");
            const double x1 = std::sqrt(atilde * std::cosh(2.0 * s) + 0.5);
            auto dphi = [atilde](double sg) {
                const double c = atilde * std::cosh(2.0 * sg);
                return std::sqrt(atilde * atilde - 0.25) / ((c - 0.5) * std::sqrt(c + 0.5));
            };
            const double phi =
                mag == 0.0 ? 0.0 : sign * quad::integrate_smooth(dphi, 0.0, mag, tol).value;
            const double r = std::sqrt(x1 * x1 - 1.0);
            // basis: e1 = E1 (timelike), e2 = E2, e3 = E3, e4 = E4
            return {x1, 0.0, r * std::sin(phi), r * std::cos(phi)};
        }
        case CatenoidKind::Parabolic: {
            const double x1 = std::sqrt(std::cosh(2.0 * s));
            auto dphi = [](double sg) {
                const double c = std::cosh(2.0 * sg);
                return 1.0 / (c * std::sqrt(c));
            };
            const double integral =
                mag == 0.0 ? 0.0 : sign * quad::integrate_smooth(dphi, 0.0, mag, tol).value;
            const double x4 = x1 * integral;
            const double x3 = -(1.0 + x4 * x4) / (2.0 * x1);
            // null basis: e1 = (E1+E2)/sqrt2, e3 = (E2-E1)/sqrt2, e2 = E3, e4 = E4
            const double rt2 = std::sqrt(2.0);
            return {(x1 - x3) / rt2, (x1 + x3) / rt2, 0.0, x4};
        }
    }
    throw std::logic_error("lorentz_catenoid_curve: unknown kind");
}

FundamentalForms first_fundamental_form(const Chart& chart, Model model, double p1,
                                        double p2, double h) {
    if (!(h >= 1e-5 && h <= 1e-2))
        throw std::invalid_argument("first_fundamental_form: step must lie in [1e-5, 1e-2]");
    if (model == Model::Hyperboloid)
        throw std::invalid_argument(
            "first_fundamental_form: supported for the conformal models (Ball, UpperHalf)");

    const Vec3 X = chart(p1, p2);
    const Vec3 Xpu = chart(p1 + h, p2), Xmu = chart(p1 - h, p2);
    const Vec3 Xpv = chart(p1, p2 + h), Xmv = chart(p1, p2 - h);
    const Vec3 Xu = scale(sub(Xpu, Xmu), 0.5 / h);
    const Vec3 Xv = scale(sub(Xpv, Xmv), 0.5 / h);
    const Vec3 Xuu = scale(add(sub(Xpu, scale(X, 2.0)), Xmu), 1.0 / (h * h));
    const Vec3 Xvv = scale(add(sub(Xpv, scale(X, 2.0)), Xmv), 1.0 / (h * h));
    const Vec3 Xuv = scale(sub(sub(chart(p1 + h, p2 + h), chart(p1 + h, p2 - h)),
                               sub(chart(p1 - h, p2 + h), chart(p1 - h, p2 - h))),
                           0.25 / (h * h));

    const double lam = conformal_factor(model, X);
    const Vec3 wg = grad_log_factor(model, X);

    FundamentalForms ff;
    ff.at = {p1, p2};
    ff.E = lam * lam * dot(Xu, Xu);
    ff.F = lam * lam * dot(Xu, Xv);
    ff.G = lam * lam * dot(Xv, Xv);
    const double det = ff.E * ff.G - ff.F * ff.F;
    if (det < 1e-12)
        throw std::runtime_error("first_fundamental_form: near-singular parametrization");

    const Vec3 n_euc = normalized(cross(Xu, Xv));
    // Christoffel correction of the conformal metric:
    // Gamma(U,V) = U (V.w) + V (U.w) - (U.V) w, w = grad log(lambda).
    auto second = [&](const Vec3& U, const Vec3& V, const Vec3& Duv) {
        const Vec3 gamma =
            sub(add(scale(U, dot(V, wg)), scale(V, dot(U, wg))), scale(wg, dot(U, V)));
        return lam * dot(add(Duv, gamma), n_euc);
    };
    const double h11 = second(Xu, Xu, Xuu);
    const double h12 = second(Xu, Xv, Xuv);
    const double h22 = second(Xv, Xv, Xvv);
    ff.H = (ff.G * h11 - 2.0 * ff.F * h12 + ff.E * h22) / det;
    return ff;
}

Chart catenoid_ball_chart(const CatenoidParam& a) {
    return [a](double s, double theta) -> Vec3 {
        const double x = catenary::x_of(a, s);
        const double y = catenary::y_of(a, s);
        const auto [u, v] = models::halfdisk_from_warped({x, y});
        return {u, v * std::cos(theta), v * std::sin(theta)};
    };
}

Chart helicoid_chart(const HelicoidPitch& abar, Model model) {
    if (model == Model::Ball)
        return [abar](double u, double v) -> Vec3 {
            const auto b = helicoid::helicoid_ball(abar, u, v);
            return {b.u, b.v, b.w};
        };
    if (model == Model::UpperHalf)
        return [abar](double u, double v) -> Vec3 {
            const auto h = helicoid::helicoid_upperhalf(abar, u, v);
            return {h.zx, h.zy, h.t};
        };
    throw std::invalid_argument("helicoid_chart: supported for Ball and UpperHalf");
}

Chart geodesic_plane_chart() {
    return [](double p1, double p2) -> Vec3 { return {p1, p2, 0.0}; };
}

Chart metric_sphere_chart(double radius) {
    const double r = std::tanh(radius / 2.0);
    return [r](double theta, double phi) -> Vec3 {
        return {r * std::sin(phi) * std::cos(theta), r * std::sin(phi) * std::sin(theta),
                r * std::cos(phi)};
    };
}

void export_obj(const SurfaceMesh& mesh, std::ostream& out) {
    std::string text;
    text.reserve(mesh.vertices.size() * 80 + mesh.faces.size() * 32);
    for (const auto& v : mesh.vertices) {
        text += "v ";
        format_double(text, v[0]);
        text += ' ';
        format_double(text, v[1]);
        text += ' ';
        format_double(text, v[2]);
        text += '\n';
    }
    for (const auto& n : mesh.normals) {
        text += "vn ";
        format_double(text, n[0]);
        text += ' ';
        format_double(text, n[1]);
        text += ' ';
        format_double(text, n[2]);
        text += '\n';
    }
    for (const auto& f : mesh.faces) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "f %d//%d %d//%d %d//%d\n", f[0] + 1, f[0] + 1,
                      f[1] + 1, f[1] + 1, f[2] + 1, f[2] + 1);
        text += buf;
    }
    out << text;
}

void export_obj(const SurfaceMesh& mesh, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("export_obj: cannot write " + path.string());
    export_obj(mesh, file);
    if (!file) throw std::runtime_error("export_obj: cannot write " + path.string());
}

void export_csv(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
    std::string text;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) text += ',';
        text += header[i];
    }
    text += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            format_double(text, row[i]);
        }
        text += '\n';
    }
    out << text;
}

void export_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("export_csv: cannot write " + path.string());
    export_csv(file, header, rows);
    if (!file) throw std::runtime_error("export_csv: cannot write " + path.string());
}

}  // namespace hypcat::surface
