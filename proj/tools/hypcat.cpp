// hypcat: catenoid/helicoid geometry and stability in hyperbolic 3-space.
//
// Every subcommand writes machine-readable output (JSON for scalars, CSV for
// curves, OBJ for meshes) to stdout or --output. Identical invocations give
// byte-identical output. HYPCAT_MAX_EVALS overrides the quadrature budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypcat/catenary.hpp"
#include "hypcat/helicoid.hpp"
#include "hypcat/jacobi.hpp"
#include "hypcat/leastarea.hpp"
#include "hypcat/lemmas.hpp"
#include "hypcat/models.hpp"
#include "hypcat/quad.hpp"
#include "hypcat/surface.hpp"

using json = nlohmann::ordered_json;
using namespace hypcat;
using catenary::CatenoidParam;
using helicoid::HelicoidPitch;

namespace {

// JSON carries 12 significant digits; CSV/OBJ carry 17 (handled in surface).
double round12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << text))
            throw std::runtime_error("cannot write output file " + path);
    }
};

void emit_json(const Output& out, const json& j) { out.write(j.dump(2) + "\n"); }

void emit_csv(const Output& out, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows,
              const std::string& footer = "") {
    std::ostringstream ss;
    surface::export_csv(ss, header, rows);
    if (!footer.empty()) ss << footer << "\n";
    out.write(ss.str());
}

std::string kind_name(jacobi::StabilityClassCatenoid::Kind k) {
    return k == jacobi::StabilityClassCatenoid::Kind::UnstableIndexOne ? "unstable_index_one"
                                                                       : "globally_stable";
}

std::string kind_name(helicoid::StabilityClassHelicoid::Kind k) {
    return k == helicoid::StabilityClassHelicoid::Kind::GloballyStable
               ? "globally_stable"
               : "unstable_infinite_index";
}

std::string kind_name(helicoid::ConjugacyRelation::Kind k) {
    switch (k) {
        case helicoid::ConjugacyRelation::Kind::Plane: return "plane";
        case helicoid::ConjugacyRelation::Kind::Spherical: return "spherical";
        case helicoid::ConjugacyRelation::Kind::Hyperbolic: return "hyperbolic";
        case helicoid::ConjugacyRelation::Kind::Parabolic: return "parabolic";
    }
    return "unknown";
}

json constants_json() {
    const double a_c = jacobi::find_a_c();
    const double v_c = catenary::varrho(CatenoidParam(a_c));
    const double K = leastarea::K_const();
    const double a_l = leastarea::a_l_const();
    const double v_l = catenary::varrho(CatenoidParam(a_l));
    json list = json::array();
    auto add = [&list](const char* name, double value, const char* ref) {
        list.push_back({{"name", name}, {"value", round12(value)}, {"paper_ref", ref}});
    };
    add("a_c", a_c, "Thm 1.1");
    add("varrho_a_c", v_c, "Gomes theorem");
    add("two_varrho_a_c", 2 * v_c, "Gomes theorem");
    add("K", K, "Lemma 5.1");
    add("a_l", a_l, "Thm 1.2");
    add("two_varrho_a_l", 2 * v_l, "Corollary after Thm 1.2");
    add("abar_c", helicoid::critical_pitch(), "Thm 1.3");
    add("A3", lemmas::A3_const(), "Lemma 7.1");
    add("A4", lemmas::A4_const(), "Lemma 7.2");
    add("delta_de_oliveira_soret", leastarea::oliveira_soret_delta(),
        "remark after the Gomes theorem");
    return {{"paper_ref", "Thms 1.1-1.3; Lemmas 5.1, 7.1-7.3"}, {"constants", list}};
}

std::string constants_table() {
    std::ostringstream ss;
    const json all = constants_json();
    for (const auto& c : all["constants"]) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%-26s %-16.10g (%s)\n",
                      c["name"].get<std::string>().c_str(), c["value"].get<double>(),
                      c["paper_ref"].get<std::string>().c_str());
        ss << buf;
    }
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal catenoids and helicoids in hyperbolic 3-space"};
    app.require_subcommand(1);

    auto* cmd_constants = app.add_subcommand("constants", "every named constant");
    bool constants_as_json = false;
    Output constants_out;
    cmd_constants->add_flag("--json", constants_as_json, "emit JSON instead of a table");
    cmd_constants->add_option("--output", constants_out.path, "output file (default stdout)");

    auto* cmd_cat = app.add_subcommand("classify-catenoid", "stability of the catenoid C_a");
    double cat_a = 0;
    Output cat_out;
    cmd_cat->add_option("--a", cat_a, "neck parameter a > 0")->required();
    cmd_cat->add_option("--output", cat_out.path, "");

    auto* cmd_hel = app.add_subcommand("classify-helicoid", "stability of the helicoid H_abar");
    double hel_pitch = 0;
    Output hel_out;
    cmd_hel->add_option("--pitch", hel_pitch, "pitch abar >= 0")->required();
    cmd_hel->add_option("--output", hel_out.path, "");

    auto* cmd_rho = app.add_subcommand("rho-curve", "varrho (or a derivative) sampled in a");
    double rho_amin = 0.05, rho_amax = 3.0;
    int rho_samples = 512, rho_derivative = 0;
    Output rho_out;
    cmd_rho->add_option("--a-min", rho_amin, "")->required();
    cmd_rho->add_option("--a-max", rho_amax, "")->required();
    cmd_rho->add_option("--samples", rho_samples, "")->required();
    cmd_rho->add_option("--derivative", rho_derivative, "0, 1 or 2")->check(CLI::Range(0, 2));
    cmd_rho->add_option("--output", rho_out.path, "");

    auto* cmd_curve = app.add_subcommand("catenary-curve", "arc-length samples of sigma_a");
    double curve_a = 0, curve_smax = 0;
    int curve_samples = 0;
    Output curve_out;
    cmd_curve->add_option("--a", curve_a, "")->required();
    cmd_curve->add_option("--s-max", curve_smax, "")->required();
    cmd_curve->add_option("--samples", curve_samples, "")->required();
    cmd_curve->add_option("--output", curve_out.path, "");

    auto* cmd_jac = app.add_subcommand("jacobi-profile", "zeta and xi along sigma_a");
    double jac_a = 0, jac_smax = 0;
    int jac_samples = 0;
    Output jac_out;
    cmd_jac->add_option("--a", jac_a, "")->required();
    cmd_jac->add_option("--s-max", jac_smax, "")->required();
    cmd_jac->add_option("--samples", jac_samples, "")->required();
    cmd_jac->add_option("--output", jac_out.path, "");

    auto* cmd_env = app.add_subcommand("envelope", "envelope of the unstable family");
    double env_amin = 0, env_amax = 0;
    int env_samples = 0;
    Output env_out;
    cmd_env->add_option("--a-min", env_amin, "")->required();
    cmd_env->add_option("--a-max", env_amax, "")->required();
    cmd_env->add_option("--samples", env_samples, "")->required();
    cmd_env->add_option("--output", env_out.path, "");

    auto* cmd_int = app.add_subcommand("intersect", "intersection of two catenaries");
    double int_a1 = 0, int_a2 = 0;
    Output int_out;
    cmd_int->add_option("--a1", int_a1, "")->required();
    cmd_int->add_option("--a2", int_a2, "")->required();
    cmd_int->add_option("--output", int_out.path, "");

    auto* cmd_area = app.add_subcommand("area", "catenoid band vs spanning disks");
    double area_a = 0, area_y1 = 0;
    Output area_out;
    cmd_area->add_option("--a", area_a, "")->required();
    cmd_area->add_option("--y1", area_y1, "")->required();
    cmd_area->add_option("--output", area_out.path, "");

    auto* cmd_mesh = app.add_subcommand("mesh", "triangulated surface as OBJ");
    std::string mesh_surface, mesh_model = "ball";
    double mesh_param = 0, mesh_smax = 3.0, mesh_umax = 2.0, mesh_vmax = 3.0;
    int mesh_ns = 64, mesh_ntheta = 48, mesh_nu = 48, mesh_nv = 64;
    Output mesh_out;
    cmd_mesh->add_option("--surface", mesh_surface, "catenoid or helicoid")
        ->required()
        ->check(CLI::IsMember({"catenoid", "helicoid"}));
    cmd_mesh->add_option("--model", mesh_model, "ball, upper or hyperboloid")
        ->check(CLI::IsMember({"ball", "upper", "hyperboloid"}));
    cmd_mesh->add_option("--param", mesh_param, "a (catenoid) or abar (helicoid)")->required();
    cmd_mesh->add_option("--s-max", mesh_smax, "catenoid arc-length range");
    cmd_mesh->add_option("--n-s", mesh_ns, "");
    cmd_mesh->add_option("--n-theta", mesh_ntheta, "");
    cmd_mesh->add_option("--u-max", mesh_umax, "helicoid u range");
    cmd_mesh->add_option("--v-max", mesh_vmax, "helicoid v range");
    cmd_mesh->add_option("--n-u", mesh_nu, "");
    cmd_mesh->add_option("--n-v", mesh_nv, "");
    cmd_mesh->add_option("--output", mesh_out.path, "");

    auto* cmd_lem = app.add_subcommand("lemmas-verify", "grid verdicts for the inequalities");
    int lem_grid = 200;
    Output lem_out;
    cmd_lem->add_option("--grid", lem_grid, "grid size per axis (>= 100)");
    cmd_lem->add_option("--output", lem_out.path, "");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_constants) {
            if (constants_as_json)
                emit_json(constants_out, constants_json());
            else
                constants_out.write(constants_table());
        } else if (*cmd_cat) {
            const auto cls = jacobi::classify_catenoid(CatenoidParam(cat_a));
            json j{{"a", round12(cat_a)},
                   {"kind", kind_name(cls.kind)},
                   {"least_area", cls.least_area},
                   {"E", round12(cls.E)},
                   {"a_c", round12(jacobi::find_a_c())},
                   {"a_l", round12(leastarea::a_l_const())},
                   {"paper_ref", "Thm 1.1; Thm 1.2"}};
            if (cls.z) j["z"] = round12(*cls.z);
            emit_json(cat_out, j);
        } else if (*cmd_hel) {
            const auto cls = helicoid::classify_helicoid(HelicoidPitch(hel_pitch));
            json conj{{"kind", kind_name(cls.conjugate.kind)}};
            if (cls.conjugate.atilde) conj["atilde"] = round12(*cls.conjugate.atilde);
            if (cls.conjugate.a_ball) conj["a"] = round12(*cls.conjugate.a_ball);
            json j{{"pitch", round12(hel_pitch)},
                   {"kind", kind_name(cls.kind)},
                   {"abar_c", round12(helicoid::critical_pitch())},
                   {"conjugate", conj},
                   {"paper_ref", "Thm 1.3"}};
            if (cls.kind == helicoid::StabilityClassHelicoid::Kind::UnstableInfiniteIndex)
                j["index_note"] =
                    "index is infinite per the abstract and the proof; the restated "
                    "theorem's 'index one' is a typo";
            emit_json(hel_out, j);
        } else if (*cmd_rho) {
            if (rho_samples < 2) throw std::domain_error("rho-curve: need samples >= 2");
            if (rho_amin < catenary::kNearDegenerateThreshold)
                std::cerr << "hypcat: warning: samples with a < 1e-4 are near-degenerate "
                             "(the profile integrand's singular scales merge as a -> 0)\n";
            std::vector<std::vector<double>> rows;
            rows.reserve(rho_samples);
            for (int i = 0; i < rho_samples; ++i) {
                const double a = rho_amin + (rho_amax - rho_amin) * i / (rho_samples - 1);
                const CatenoidParam p(a);
                const double v = rho_derivative == 0   ? catenary::varrho(p)
                                 : rho_derivative == 1 ? catenary::varrho_prime(p)
                                                       : catenary::varrho_second(p);
                rows.push_back({a, v});
            }
            const char* names[] = {"varrho", "varrho_prime", "varrho_second"};
            emit_csv(rho_out, {"a", names[rho_derivative]}, rows);
        } else if (*cmd_curve) {
            if (curve_samples < 2) throw std::domain_error("catenary-curve: need samples >= 2");
            const CatenoidParam p(curve_a);
            std::vector<std::vector<double>> rows;
            rows.reserve(curve_samples);
            for (int i = 0; i < curve_samples; ++i) {
                const double s = -curve_smax + 2 * curve_smax * i / (curve_samples - 1);
                const auto pt = catenary::catenary_point(p, s);
                const auto [u, v] = models::halfdisk_from_warped({pt.x, pt.y});
                rows.push_back({s, pt.x, pt.y, pt.sin_theta, u, v});
            }
            emit_csv(curve_out, {"s", "x", "y", "sin_theta", "u", "v"}, rows);
        } else if (*cmd_jac) {
            if (jac_samples < 2) throw std::domain_error("jacobi-profile: need samples >= 2");
            const CatenoidParam p(jac_a);
            std::vector<std::vector<double>> rows;
            rows.reserve(jac_samples);
            for (int i = 0; i < jac_samples; ++i) {
                const double s = -jac_smax + 2 * jac_smax * i / (jac_samples - 1);
                rows.push_back(
                    {s, jacobi::zeta(p, s), jacobi::zeta_closed(p, s), jacobi::xi(p, s)});
            }
            std::string footer;
            if (jac_a < jacobi::find_a_c()) {
                json j{{"z", round12(jacobi::find_z(p))},
                       {"a", round12(jac_a)},
                       {"paper_ref", "stability classification, unstable branch"}};
                footer = j.dump();
            }
            emit_csv(jac_out, {"s", "zeta", "zeta_alt", "xi"}, rows, footer);
        } else if (*cmd_env) {
            if (env_samples < 2) throw std::domain_error("envelope: need samples >= 2");
            const double a_c = jacobi::find_a_c();
            if (env_amax >= a_c)
                throw std::domain_error("envelope: requires a-max < a_c (unstable family)");
            std::vector<std::vector<double>> rows;
            rows.reserve(env_samples);
            for (int i = 0; i < env_samples; ++i) {
                const double a = env_amin + (env_amax - env_amin) * i / (env_samples - 1);
                const CatenoidParam p(a);
                const double z = jacobi::find_z(p);
                rows.push_back({a, z, catenary::x_of(p, z), catenary::y_of(p, z),
                                jacobi::tangency_residual(p, z)});
            }
            emit_csv(env_out, {"a", "z", "x", "y", "tangency_residual"}, rows);
        } else if (*cmd_int) {
            const CatenoidParam p1(int_a1), p2(int_a2);
            const auto hit = jacobi::intersect_catenaries(p1, p2);
            json j{{"a1", round12(int_a1)},
                   {"a2", round12(int_a2)},
                   {"varrho_a1", round12(catenary::varrho(p1))},
                   {"varrho_a2", round12(catenary::varrho(p2))},
                   {"intersects", hit.has_value()},
                   {"paper_ref", "Fig. 8"}};
            if (hit) {
                j["x"] = round12(hit->first);
                j["y"] = round12(hit->second);
            }
            emit_json(int_out, j);
        } else if (*cmd_area) {
            const auto cmp = leastarea::compare_areas(CatenoidParam(area_a), area_y1);
            emit_json(area_out, json{{"a", round12(cmp.a)},
                                     {"y1", round12(cmp.y1)},
                                     {"x1", round12(cmp.x1)},
                                     {"band_area", round12(cmp.band_area)},
                                     {"disks_area", round12(cmp.disks_area)},
                                     {"band_smaller", cmp.band_smaller},
                                     {"paper_ref", "Fig. 5"}});
        } else if (*cmd_mesh) {
            const surface::Model model = mesh_model == "ball"    ? surface::Model::Ball
                                         : mesh_model == "upper" ? surface::Model::UpperHalf
                                                                 : surface::Model::Hyperboloid;
            surface::SurfaceMesh mesh;
            if (mesh_surface == "catenoid")
                mesh = surface::catenoid_mesh(CatenoidParam(mesh_param), mesh_smax, mesh_ns,
                                              mesh_ntheta, model);
            else
                mesh = surface::helicoid_mesh(HelicoidPitch(mesh_param), model, mesh_umax,
                                              mesh_vmax, mesh_nu, mesh_nv);
            std::ostringstream ss;
            surface::export_obj(mesh, ss);
            mesh_out.write(ss.str());
        } else if (*cmd_lem) {
            json verdicts = json::array();
            for (const auto& v : lemmas::verify_all(lem_grid)) {
                json jv{{"name", v.name},
                        {"grid_size", v.grid_size},
                        {"holds", v.holds},
                        {"worst_value", round12(v.worst_value)},
                        {"worst_point",
                         {round12(v.worst_point.first), round12(v.worst_point.second)}},
                        {"note", v.note}};
                if (v.fd_disagreement > 0) jv["fd_disagreement"] = round12(v.fd_disagreement);
                verdicts.push_back(jv);
            }
            emit_json(lem_out, json{{"paper_ref", "Lemmas 7.1-7.3"}, {"verdicts", verdicts}});
        }
    } catch (const std::domain_error& e) {
        std::cerr << "hypcat: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hypcat: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hypcat: computation failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
