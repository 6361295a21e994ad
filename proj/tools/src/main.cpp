#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "helly/constructions.hpp"
#include "helly/covering.hpp"
#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "helly/fitting.hpp"
#include "helly/helly.hpp"
#include "helly/intersections.hpp"
#include "helly_tools/io.hpp"
#include "helly_tools/svg.hpp"
#include "helly_tools/verify.hpp"

using namespace helly;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kMalformed = 2;

void report_error(std::string_view kind, const std::string& message) {
    std::cerr << json{{"error", {{"kind", std::string(kind)}, {"message", message}}}}.dump() << '\n';
}

bool input_error(ErrorKind k) { return k != ErrorKind::NoConvergence && k != ErrorKind::TheoremViolation; }

TolerancePolicy tolerance(double residual_tol) {
    TolerancePolicy tol;
    tol.residual_tol = residual_tol;
    tol.validate();
    return tol;
}

void write_svg(const std::string& path, const svg::Drawing& d) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::MalformedInput, "cannot write '" + path + "'");
    out << d.str();
}

void draw_family(svg::Drawing& d, const FamilySpec& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        d.add_curve(f.base, f.placements[i]);
    }
}

// Draws any result JSON written by this tool; `curve` supplies the base
// curve for results that do not embed one.
svg::Drawing render(const json& j, const std::optional<CurveSpec>& curve_opt) {
    svg::Drawing d;
    std::optional<CurveSpec> curve = curve_opt;
    if (j.is_object() && j.contains("curve")) curve = io::curve_from_json(j["curve"]);
    auto need_curve = [&]() -> const CurveSpec& {
        if (!curve) throw Error(ErrorKind::MalformedInput, "this result needs --curve to be drawn");
        return *curve;
    };
    auto label_points = [&](const json& arr, const char* prefix) {
        std::size_t k = 0;
        for (const json& p : arr) d.add_marker(io::point_from_json(p), prefix + std::to_string(++k));
    };

    if (!j.is_object()) throw Error(ErrorKind::MalformedInput, "render expects a JSON object");
    if (j.contains("kind")) {
        d.add_curve(io::curve_from_json(j), {});
    } else if (j.contains("base") && j.contains("placements")) {
        draw_family(d, io::family_from_json(j));
    } else if (j.contains("isolated")) {
        SolutionSet s = io::solution_set_from_json(j);
        for (const Placement& p : s.isolated) d.add_curve(need_curve(), p);
        for (const PlacementSegment& c : s.continua) {
            d.add_curve(need_curve(), c.at(0.0));
            d.add_curve(need_curve(), c.end());
        }
        if (j.contains("points")) label_points(j["points"], "p");
    } else if (j.contains("vertices") && j.contains("center")) {
        HexagonWitness h = io::hexagon_from_json(j);
        if (curve) d.add_curve(*curve, {});
        d.add_polygon({h.vertices.begin(), h.vertices.end()});
        for (std::size_t i = 0; i < 6; ++i) d.add_marker(h.vertices[i], "x" + std::to_string(i + 1));
        d.add_marker(h.center, "c");
    } else if (j.contains("subset_placements")) {
        OrderWitness w = io::witness_from_json(j);
        if (curve) {
            for (const SubsetPlacement& sp : w.subset_placements) d.add_curve(*curve, sp.placement);
        }
        label_points(j["points"], "p");
    } else if (j.contains("all_k_wise")) {
        HellyReport r = io::helly_report_from_json(j);
        if (j.contains("family")) draw_family(d, io::family_from_json(j["family"]));
        if (r.global_point) d.add_marker(*r.global_point, "common");
        else if (r.all_but_one_point) d.add_marker(r.all_but_one_point->point, "all but one");
    } else if (j.contains("pairs")) {
        if (j.contains("family")) draw_family(d, io::family_from_json(j["family"]));
        for (const json& pr : j["pairs"]) {
            if (pr.contains("points")) {
                for (const json& p : pr["points"]) d.add_marker(io::point_from_json(p), "");
            }
        }
    } else if (j.contains("placement")) {
        if (!j["placement"].is_null()) d.add_curve(need_curve(), io::placement_from_json(j["placement"]));
        if (j.contains("points")) label_points(j["points"], "p");
    } else {
        throw Error(ErrorKind::MalformedInput, "unrecognised result JSON");
    }
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Helly-type checks for translates and homothets of plane convex curves"};
    app.require_subcommand(1);

    std::string curve_path, points_path, out_path, family_path, svg_path, in_path, mode_name = "translate", suite;
    double tol_value = TolerancePolicy{}.residual_tol;
    std::size_t k = 3;
    int order = 3, trials = 50;
    std::uint64_t seed = 0;

    auto* fit = app.add_subcommand("fit", "placements of the curve through 2 or 3 points");
    fit->add_option("--curve", curve_path, "curve JSON")->required();
    fit->add_option("--points", points_path, "points JSON")->required();
    fit->add_option("--mode", mode_name, "translate or homothet");
    fit->add_option("--tol", tol_value, "boundary residual tolerance");
    fit->add_option("--out", out_path, "result JSON")->required();

    auto* cover = app.add_subcommand("cover", "a placement of the curve carrying every point");
    cover->add_option("--curve", curve_path)->required();
    cover->add_option("--points", points_path)->required();
    cover->add_option("--mode", mode_name);
    cover->add_option("--tol", tol_value);
    cover->add_option("--out", out_path)->required();

    auto* intersect = app.add_subcommand("intersect", "pairwise intersections of a family");
    intersect->add_option("--family", family_path)->required();
    intersect->add_option("--out", out_path)->required();

    auto* family_check = app.add_subcommand("family-check", "k-wise and global intersection of a family");
    family_check->add_option("--family", family_path)->required();
    family_check->add_option("--k", k)->required();
    family_check->add_option("--out", out_path)->required();

    auto* hexagon = app.add_subcommand("hexagon", "inscribed affinely regular hexagon");
    hexagon->add_option("--curve", curve_path)->required();
    hexagon->add_option("--svg", svg_path);
    hexagon->add_option("--out", out_path)->required();

    auto* witness = app.add_subcommand("witness", "search for a point set certifying order above m");
    witness->add_option("--curve", curve_path)->required();
    witness->add_option("--order", order)->required();
    witness->add_option("--mode", mode_name);
    witness->add_option("--trials", trials);
    witness->add_option("--seed", seed)->required();
    witness->add_option("--out", out_path)->required();

    auto* verify_paper = app.add_subcommand("verify-paper", "run the acceptance suites");
    verify_paper->add_option("--suite", suite)->required()->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "all"}));
    verify_paper->add_option("--seed", seed)->required();

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of a curve, family or result JSON");
    render_cmd->add_option("--in", in_path)->required();
    render_cmd->add_option("--svg", svg_path)->required();
    render_cmd->add_option("--curve", curve_path, "base curve for results that do not embed one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        report_error("MalformedInput", e.what());
        return kMalformed;
    }

    try {
        if (*fit) {
            CurveSpec curve = io::curve_from_json(io::read_json_file(curve_path));
            std::vector<Point> pts = io::points_from_json(io::read_json_file(points_path));
            TolerancePolicy tol = tolerance(tol_value);
            FitMode mode = fit_mode_from_string(mode_name);
            SolutionSet s;
            if (mode == FitMode::Translate && pts.size() == 2) s = translate_through_two(curve, pts[0], pts[1], tol);
            else if (mode == FitMode::Translate && pts.size() == 3) s = translate_through_three(curve, pts[0], pts[1], pts[2], tol);
            else if (mode == FitMode::Homothet && pts.size() == 3) s = homothet_through_three(curve, pts[0], pts[1], pts[2], tol);
            else throw Error(ErrorKind::MalformedInput, "fit takes 2 or 3 points for translates and 3 for homothets");
            io::write_json_file(out_path, io::to_json(s));
        } else if (*cover) {
            CurveSpec curve = io::curve_from_json(io::read_json_file(curve_path));
            std::vector<Point> pts = io::points_from_json(io::read_json_file(points_path));
            auto pl = helly::cover(curve, pts, fit_mode_from_string(mode_name), tolerance(tol_value));
            json pts_json = json::array();
            for (const Point& p : pts) pts_json.push_back(io::to_json(p));
            io::write_json_file(out_path, {{"placement", pl ? io::to_json(*pl) : json(nullptr)},
                                           {"curve", io::to_json(curve)},
                                           {"points", pts_json}});
        } else if (*intersect) {
            FamilySpec fam = io::family_from_json(io::read_json_file(family_path));
            json pairs = json::array();
            for (std::size_t i = 0; i < fam.size(); ++i) {
                for (std::size_t j = i + 1; j < fam.size(); ++j) {
                    json entry = {{"i", i}, {"j", j}};
                    try {
                        json pts = json::array();
                        for (const Point& p : curve_pair_intersections(fam.member(i), fam.member(j))) pts.push_back(io::to_json(p));
                        entry["points"] = pts;
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::IdenticalPlacement) throw;
                        entry["identical"] = true;
                    }
                    pairs.push_back(entry);
                }
            }
            json common = nullptr;
            if (classify(fam.base).strictly_convex) {
                if (auto p = family_common_point(fam).point) common = io::to_json(*p);
            }
            io::write_json_file(out_path, {{"pairs", pairs}, {"common_point", common}, {"family", io::to_json(fam)}});
        } else if (*family_check) {
            FamilySpec fam = io::family_from_json(io::read_json_file(family_path));
            HellyReport r = helly_check(fam, k);
            json j = io::to_json(r);
            j["family"] = io::to_json(fam);
            io::write_json_file(out_path, j);
            if (!r.consistent) {
                report_error("TheoremViolation", "k-wise intersection without a global point where one is predicted");
                return kVerificationFailed;
            }
        } else if (*hexagon) {
            CurveSpec curve = io::curve_from_json(io::read_json_file(curve_path));
            HexagonWitness h = inscribe_affine_regular_hexagon(curve);
            json j = io::to_json(h);
            j["curve"] = io::to_json(curve);
            io::write_json_file(out_path, j);
            if (!svg_path.empty()) write_svg(svg_path, render(j, std::nullopt));
        } else if (*witness) {
            CurveSpec curve = io::curve_from_json(io::read_json_file(curve_path));
            auto w = order_witness_search(curve, order, fit_mode_from_string(mode_name), trials, seed);
            if (!w) {
                io::write_json_file(out_path, nullptr);
                report_error("NoConvergence", "no witness found in " + std::to_string(trials) + " trials");
                return kVerificationFailed;
            }
            json j = io::to_json(*w);
            j["curve"] = io::to_json(curve);
            io::write_json_file(out_path, j);
        } else if (*verify_paper) {
            bool all_passed = true;
            std::cout << "suite " << suite << ", seed " << seed << '\n';
            for (int id : verify::suite_criteria(suite)) {
                verify::CriterionResult r = verify::run_criterion(id, seed);
                all_passed = all_passed && r.passed;
                std::cout << verify::format_row(r) << std::endl;
                std::fprintf(stderr, "criterion %d: %.2f s (budget %.0f s)\n", r.id, r.seconds, r.budget);
            }
            std::cout << (all_passed ? "all criteria passed" : "some criteria FAILED") << '\n';
            return all_passed ? kOk : kVerificationFailed;
        } else if (*render_cmd) {
            std::optional<CurveSpec> curve;
            if (!curve_path.empty()) curve = io::curve_from_json(io::read_json_file(curve_path));
            write_svg(svg_path, render(io::read_json_file(in_path), curve));
        }
    } catch (const Error& e) {
        report_error(to_string(e.kind()), e.what());
        return input_error(e.kind()) ? kMalformed : kVerificationFailed;
    } catch (const std::exception& e) {
        report_error("MalformedInput", e.what());
        return kMalformed;
    }
    return kOk;
}
