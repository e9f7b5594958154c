#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypcat/catenary.hpp"
#include "hypcat/helicoid.hpp"
#include "hypcat/models.hpp"

namespace hypcat::surface {

using catenary::CatenoidParam;
using helicoid::HelicoidPitch;

enum class Model { Ball, UpperHalf, Hyperboloid };

/// Triangulated surface sample. Ball vertices satisfy |p| < 1, upper-half
/// vertices have positive third coordinate. Hyperboloid meshes store the
/// spatial coordinates (x2, x3, x4); x1 = sqrt(1 + |p|^2) is implied.
struct SurfaceMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<double, 3>> normals;
    std::vector<std::array<int, 3>> faces;
    Model model = Model::Ball;
};

struct FundamentalForms {
    double E = 0.0, F = 0.0, G = 0.0;  // first form in the model metric
    double H = 0.0;                    // mean curvature (trace of the shape operator)
    std::pair<double, double> at{0.0, 0.0};
};

/// Chart into model coordinates (3 components, per the SurfaceMesh layout).
using Chart = std::function<std::array<double, 3>(double, double)>;

/// Catenoid of revolution: arc length s in [-s_max, s_max] (n_s samples),
/// rotation angle theta (n_theta samples around). Built in the ball model
/// and carried into the requested one by the model isometries.
SurfaceMesh catenoid_mesh(const CatenoidParam& a, double s_max, int n_s, int n_theta,
                          Model model = Model::Ball);

SurfaceMesh helicoid_mesh(const HelicoidPitch& abar, Model model, double u_max,
                          double v_max, int n_u, int n_v);

enum class CatenoidKind { Spherical, Hyperbolic, Parabolic };

/// Generating curve of the hyperboloid-model catenoids, in standard Lorentz
/// coordinates. atilde (> 1/2) applies to the spherical and hyperbolic kinds
/// and is ignored for the parabolic one, whose null basis is realized as
/// e1 = (E1+E2)/sqrt2, e3 = (E2-E1)/sqrt2, e2 = E3, e4 = E4.
models::LorentzVec lorentz_catenoid_curve(CatenoidKind kind, double atilde, double s);

/// First fundamental form and mean curvature of a chart by central
/// differences (step h in [1e-5, 1e-2]) under the model's conformal metric.
/// Supported for the Ball and UpperHalf models.
FundamentalForms first_fundamental_form(const Chart& chart, Model model, double p1,
                                        double p2, double h = 1e-3);

// Charts used by the oracles and the CLI.
Chart catenoid_ball_chart(const CatenoidParam& a);
Chart helicoid_chart(const HelicoidPitch& abar, Model model);
Chart geodesic_plane_chart();              // equatorial disk, H = 0
Chart metric_sphere_chart(double radius);  // distance sphere, |H| = 2 coth R

/// ASCII OBJ with v/vn/f records; faces are 1-indexed and wound
/// counterclockwise as seen from the normal side.
void export_obj(const SurfaceMesh& mesh, std::ostream& out);
void export_obj(const SurfaceMesh& mesh, const std::filesystem::path& path);

/// RFC-4180-style CSV, header row mandatory, 17 significant digits.
void export_csv(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows);
void export_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows);

}  // namespace hypcat::surface
