#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypcat/catenary.hpp"
#include "hypcat/helicoid.hpp"
#include "hypcat/jacobi.hpp"
#include "hypcat/leastarea.hpp"
#include "hypcat/lemmas.hpp"
#include "hypcat/models.hpp"
#include "hypcat/quad.hpp"
#include "hypcat/surface.hpp"

namespace py = pybind11;
using namespace hypcat;
using catenary::CatenoidParam;
using helicoid::HelicoidPitch;

namespace {

py::dict classify_catenoid_py(double a) {
    const auto c = jacobi::classify_catenoid(CatenoidParam(a));
    py::dict d;
    d["a"] = a;
    d["kind"] = c.kind == jacobi::StabilityClassCatenoid::Kind::UnstableIndexOne
                    ? "unstable_index_one"
                    : "globally_stable";
    d["least_area"] = c.least_area;
    d["E"] = c.E;
    if (c.z) d["z"] = *c.z;
    return d;
}

py::dict classify_helicoid_py(double abar) {
    const auto c = helicoid::classify_helicoid(HelicoidPitch(abar));
    py::dict conj;
    switch (c.conjugate.kind) {
        case helicoid::ConjugacyRelation::Kind::Plane: conj["kind"] = "plane"; break;
        case helicoid::ConjugacyRelation::Kind::Spherical: conj["kind"] = "spherical"; break;
        case helicoid::ConjugacyRelation::Kind::Hyperbolic: conj["kind"] = "hyperbolic"; break;
        case helicoid::ConjugacyRelation::Kind::Parabolic: conj["kind"] = "parabolic"; break;
    }
    if (c.conjugate.atilde) conj["atilde"] = *c.conjugate.atilde;
    if (c.conjugate.a_ball) conj["a"] = *c.conjugate.a_ball;
    py::dict d;
    d["pitch"] = abar;
    d["kind"] = c.kind == helicoid::StabilityClassHelicoid::Kind::GloballyStable
                    ? "globally_stable"
                    : "unstable_infinite_index";
    d["conjugate"] = conj;
    return d;
}

py::dict mesh_to_dict(const surface::SurfaceMesh& m) {
    py::dict d;
    d["vertices"] = m.vertices;
    d["normals"] = m.normals;
    d["faces"] = m.faces;
    d["model"] = m.model == surface::Model::Ball        ? "ball"
                 : m.model == surface::Model::UpperHalf ? "upper"
                                                        : "hyperboloid";
    return d;
}

surface::Model model_from(const std::string& name) {
    if (name == "ball") return surface::Model::Ball;
    if (name == "upper") return surface::Model::UpperHalf;
    if (name == "hyperboloid") return surface::Model::Hyperboloid;
    throw std::invalid_argument("model must be ball, upper or hyperboloid");
}

}  // namespace

PYBIND11_MODULE(hypcat, m) {
    m.doc() = "Geometry and stability of minimal catenoids and helicoids in hyperbolic 3-space.";

    // constants
    m.def("a_c", &jacobi::find_a_c, "Critical neck parameter of the catenoid family.");
    m.def("critical_pitch", &helicoid::critical_pitch, "Helicoid stability threshold coth(a_c).");
    m.def("K_const", [] { return leastarea::K_const(); });
    m.def("a_l", &leastarea::a_l_const, "Least-area threshold acosh(1/(1-K)).");
    m.def("A3", &lemmas::A3_const);
    m.def("A4", &lemmas::A4_const);
    m.def("oliveira_soret_delta", &leastarea::oliveira_soret_delta);

    // catenary family
    m.def("rho", [](double a, double t) { return catenary::rho(CatenoidParam(a), t); },
          py::arg("a"), py::arg("t"));
    m.def("varrho", [](double a) { return catenary::varrho(CatenoidParam(a)); }, py::arg("a"));
    m.def("varrho_prime", [](double a) { return catenary::varrho_prime(CatenoidParam(a)); });
    m.def("varrho_second", [](double a) { return catenary::varrho_second(CatenoidParam(a)); });
    m.def("arclength", [](double a, double t) { return catenary::arclength(CatenoidParam(a), t); });
    m.def("x_of", [](double a, double s) { return catenary::x_of(CatenoidParam(a), s); });
    m.def("y_of", [](double a, double s) { return catenary::y_of(CatenoidParam(a), s); });
    m.def("sin_theta", [](double a, double y) { return catenary::sin_theta(CatenoidParam(a), y); });

    // jacobi fields and stability
    m.def("zeta", [](double a, double s) { return jacobi::zeta(CatenoidParam(a), s); });
    m.def("xi", [](double a, double s) { return jacobi::xi(CatenoidParam(a), s); });
    m.def("E_of", [](double a) { return jacobi::E_of(CatenoidParam(a)); });
    m.def("find_z", [](double a) { return jacobi::find_z(CatenoidParam(a)); });
    m.def("classify_catenoid", &classify_catenoid_py, py::arg("a"));
    m.def("classify_helicoid", &classify_helicoid_py, py::arg("abar"));
    m.def("intersect_catenaries", [](double a1, double a2) -> py::object {
        const auto hit = jacobi::intersect_catenaries(CatenoidParam(a1), CatenoidParam(a2));
        if (!hit) return py::none();
        return py::make_tuple(hit->first, hit->second);
    });
    m.def("envelope_point", [](double a) {
        const auto e = jacobi::envelope_point(CatenoidParam(a));
        py::dict d;
        d["a"] = e.a;
        d["x"] = e.x;
        d["y"] = e.y;
        d["tangency_residual"] = e.tangency_residual;
        return d;
    });

    // areas
    m.def("band_area", [](double a, double y1) { return leastarea::band_area(CatenoidParam(a), y1); });
    m.def("disk_pair_area", &leastarea::disk_pair_area);
    m.def("area_deficit", [](double a) { return leastarea::area_deficit(CatenoidParam(a)); });
    m.def("compare_areas", [](double a, double y1) {
        const auto c = leastarea::compare_areas(CatenoidParam(a), y1);
        py::dict d;
        d["a"] = c.a;
        d["y1"] = c.y1;
        d["x1"] = c.x1;
        d["band_area"] = c.band_area;
        d["disks_area"] = c.disks_area;
        d["band_smaller"] = c.band_smaller;
        return d;
    });

    // model conversions
    m.def("hyperboloid_to_ball", [](double x1, double x2, double x3, double x4) {
        const auto b = models::hyperboloid_to_ball({x1, x2, x3, x4});
        return py::make_tuple(b.u, b.v, b.w);
    });
    m.def("ball_to_upperhalf", [](double u, double v, double w) {
        const auto q = models::ball_to_upperhalf({u, v, w});
        return py::make_tuple(q.zx, q.zy, q.t);
    });
    m.def("ball_distance", [](py::sequence p, py::sequence q) {
        return models::ball_distance(
            {p[0].cast<double>(), p[1].cast<double>(), p[2].cast<double>()},
            {q[0].cast<double>(), q[1].cast<double>(), q[2].cast<double>()});
    });

    // helicoid charts
    m.def("helicoid_ball", [](double abar, double u, double v) {
        const auto b = helicoid::helicoid_ball(HelicoidPitch(abar), u, v);
        return py::make_tuple(b.u, b.v, b.w);
    });
    m.def("helicoid_upperhalf", [](double abar, double u, double v) {
        const auto q = helicoid::helicoid_upperhalf(HelicoidPitch(abar), u, v);
        return py::make_tuple(q.zx, q.zy, q.t);
    });

    // meshes
    m.def("catenoid_mesh",
          [](double a, double s_max, int n_s, int n_theta, const std::string& model) {
              return mesh_to_dict(surface::catenoid_mesh(CatenoidParam(a), s_max, n_s, n_theta,
                                                         model_from(model)));
          },
          py::arg("a"), py::arg("s_max") = 3.0, py::arg("n_s") = 32, py::arg("n_theta") = 24,
          py::arg("model") = "ball");
    m.def("helicoid_mesh",
          [](double abar, const std::string& model, double u_max, double v_max, int n_u,
             int n_v) {
              return mesh_to_dict(surface::helicoid_mesh(HelicoidPitch(abar), model_from(model),
                                                         u_max, v_max, n_u, n_v));
          },
          py::arg("abar"), py::arg("model") = "ball", py::arg("u_max") = 2.0,
          py::arg("v_max") = 3.0, py::arg("n_u") = 24, py::arg("n_v") = 32);
    m.def("mean_curvature", [](const std::string& which, double param, double p1, double p2) {
        const auto chart = which == "catenoid"
                               ? surface::catenoid_ball_chart(CatenoidParam(param))
                               : surface::helicoid_chart(HelicoidPitch(param),
                                                         surface::Model::Ball);
        return surface::first_fundamental_form(chart, surface::Model::Ball, p1, p2).H;
    });

    // lemma kernels and verdicts
    m.def("phi_fn", &lemmas::phi_fn);
    m.def("psi_fn", &lemmas::psi_fn);
    m.def("w_fn", &lemmas::w_fn);
    m.def("verify_lemmas", [](int grid) {
        py::list out;
        for (const auto& v : lemmas::verify_all(grid)) {
            py::dict d;
            d["name"] = v.name;
            d["holds"] = v.holds;
            d["worst_value"] = v.worst_value;
            d["worst_point"] = py::make_tuple(v.worst_point.first, v.worst_point.second);
            d["fd_disagreement"] = v.fd_disagreement;
            out.append(d);
        }
        return out;
    }, py::arg("grid") = 100);

    // quadrature
    m.def("integrate", [](const std::function<double(double)>& f, double lo, double hi) {
        return quad::integrate_smooth(f, lo, hi).value;
    });
}
