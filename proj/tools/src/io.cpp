#include "helly_tools/io.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>
#include <variant>

#include "helly/covering.hpp"
#include "helly/curves.hpp"
#include "helly/errors.hpp"

namespace helly::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) malformed(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) malformed(std::string("missing field '") + key + "'");
    return *it;
}

double number(const json& j, const char* what) {
    if (!j.is_number()) malformed(std::string("field '") + what + "' must be a number");
    return j.get<double>();
}

double number_field(const json& j, const char* key) { return number(field(j, key), key); }

std::size_t index(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        malformed(std::string("field '") + what + "' must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

const json& array_field(const json& j, const char* key) {
    const json& a = field(j, key);
    if (!a.is_array()) malformed(std::string("field '") + key + "' must be an array");
    return a;
}

json to_json(Vector v) { return json::array({v.dx, v.dy}); }

Vector vector_from_json(const json& j) {
    Point p = point_from_json(j);
    return p.as_vector();
}

}  // namespace

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const CurveSpec& curve) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return {{"kind", "circle"}, {"radius", s.radius}};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {{"kind", "ellipse"}, {"a", s.a}, {"b", s.b}};
            } else if constexpr (std::is_same_v<T, Superellipse>) {
                return {{"kind", "superellipse"}, {"p", s.p}, {"a", s.a}, {"b", s.b}};
            } else if constexpr (std::is_same_v<T, SupportSampled>) {
                return {{"kind", "support"}, {"n", s.h.size()}, {"h", s.h}};
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                json v = json::array();
                for (const Point& p : s.vertices) v.push_back(to_json(p));
                return {{"kind", "polygon"}, {"vertices", v}};
            } else {
                json j = {{"kind", "parabola"}, {"coef", s.coef}};
                if (s.downward) j["downward"] = true;
                return j;
            }
        },
        curve.shape());
}

json to_json(const Placement& p) { return {{"lambda", p.lambda}, {"v", to_json(p.v)}}; }

json to_json(const PlacementSegment& s) {
    return {{"lambda", s.lambda}, {"v0", to_json(s.v0)}, {"direction", to_json(s.direction)}, {"length", s.length}};
}

json to_json(const SolutionSet& s) {
    json iso = json::array();
    for (const Placement& p : s.isolated) iso.push_back(to_json(p));
    json cont = json::array();
    for (const PlacementSegment& c : s.continua) cont.push_back(to_json(c));
    return {{"isolated", iso}, {"continua", cont}};
}

json to_json(const FamilySpec& f) {
    json pl = json::array();
    for (const Placement& p : f.placements) pl.push_back(to_json(p));
    json j = {{"base", to_json(f.base)}, {"placements", pl}};
    if (!f.labels.empty()) j["labels"] = f.labels;
    return j;
}

json to_json(const HexagonWitness& h) {
    json v = json::array();
    for (const Point& p : h.vertices) v.push_back(to_json(p));
    return {{"center", to_json(h.center)}, {"vertices", v}, {"residual", h.residual}, {"affine_defect", h.affine_defect}};
}

json to_json(const OrderWitness& w) {
    json pts = json::array();
    for (const Point& p : w.points) pts.push_back(to_json(p));
    json subs = json::array();
    for (const SubsetPlacement& s : w.subset_placements) {
        subs.push_back({{"subset", s.subset}, {"placement", to_json(s.placement)}});
    }
    return {{"points", pts},
            {"m", w.m},
            {"mode", std::string(to_string(w.mode))},
            {"subset_placements", subs},
            {"noncover_evidence",
             {{"search", w.noncover_evidence.search},
              {"starts", w.noncover_evidence.starts},
              {"residual_floor", w.noncover_evidence.residual_floor}}}};
}

json to_json(const HellyReport& r) {
    json abo = nullptr;
    if (r.all_but_one_point) {
        abo = {{"point", to_json(r.all_but_one_point->point)},
               {"excluded", r.all_but_one_point->excluded ? json(*r.all_but_one_point->excluded) : json(nullptr)}};
    }
    return {{"k", r.k},
            {"subsets_checked", r.subsets_checked},
            {"all_k_wise", r.all_k_wise},
            {"first_failing_subset", r.first_failing_subset ? json(*r.first_failing_subset) : json(nullptr)},
            {"global_point", r.global_point ? to_json(*r.global_point) : json(nullptr)},
            {"all_but_one_point", abo},
            {"theorem_predicts_global", r.theorem_predicts_global},
            {"consistent", r.consistent}};
}

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) malformed("a point must be an [x, y] pair");
    return {number(j[0], "x"), number(j[1], "y")};
}

CurveSpec curve_from_json(const json& j) {
    const json& kind = field(j, "kind");
    if (!kind.is_string()) malformed("field 'kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "circle") return circle(number_field(j, "radius"));
    if (k == "ellipse") return ellipse(number_field(j, "a"), number_field(j, "b"));
    if (k == "superellipse") return superellipse(number_field(j, "p"), number_field(j, "a"), number_field(j, "b"));
    if (k == "support") {
        const json& h = array_field(j, "h");
        std::vector<double> samples;
        for (const json& x : h) samples.push_back(number(x, "h"));
        if (j.contains("n") && index(j["n"], "n") != samples.size()) malformed("field 'n' disagrees with the length of 'h'");
        return support_sampled(std::move(samples));
    }
    if (k == "polygon") {
        std::vector<Point> vertices;
        for (const json& v : array_field(j, "vertices")) vertices.push_back(point_from_json(v));
        return convex_polygon(std::move(vertices));
    }
    if (k == "parabola") {
        bool down = false;
        if (j.contains("downward")) {
            if (!j["downward"].is_boolean()) malformed("field 'downward' must be a boolean");
            down = j["downward"].get<bool>();
        }
        return parabola(number_field(j, "coef"), down);
    }
    malformed("unknown curve kind '" + k + "'");
}

Placement placement_from_json(const json& j) {
    Placement p{number_field(j, "lambda"), vector_from_json(field(j, "v"))};
    if (!(p.lambda > 0.0)) malformed("field 'lambda' must be positive");
    return p;
}

PlacementSegment segment_from_json(const json& j) {
    return {number_field(j, "lambda"), vector_from_json(field(j, "v0")), vector_from_json(field(j, "direction")),
            number_field(j, "length")};
}

SolutionSet solution_set_from_json(const json& j) {
    SolutionSet s;
    for (const json& p : array_field(j, "isolated")) s.isolated.push_back(placement_from_json(p));
    for (const json& c : array_field(j, "continua")) s.continua.push_back(segment_from_json(c));
    return s;
}

FamilySpec family_from_json(const json& j) {
    FamilySpec f{curve_from_json(field(j, "base")), {}, {}};
    for (const json& p : array_field(j, "placements")) f.placements.push_back(placement_from_json(p));
    if (f.placements.empty()) malformed("a family needs at least one member");
    if (j.contains("labels")) {
        const json& labels = array_field(j, "labels");
        for (const json& l : labels) {
            if (!l.is_string()) malformed("labels must be strings");
            f.labels.push_back(l.get<std::string>());
        }
        if (f.labels.size() != f.placements.size()) malformed("one label per placement is required");
    }
    return f;
}

HexagonWitness hexagon_from_json(const json& j) {
    HexagonWitness h;
    h.center = point_from_json(field(j, "center"));
    const json& v = array_field(j, "vertices");
    if (v.size() != 6) malformed("a hexagon has six vertices");
    for (std::size_t i = 0; i < 6; ++i) h.vertices[i] = point_from_json(v[i]);
    h.residual = number_field(j, "residual");
    h.affine_defect = number_field(j, "affine_defect");
    return h;
}

OrderWitness witness_from_json(const json& j) {
    OrderWitness w;
    for (const json& p : array_field(j, "points")) w.points.push_back(point_from_json(p));
    w.m = static_cast<int>(index(field(j, "m"), "m"));
    const json& mode = field(j, "mode");
    if (!mode.is_string()) malformed("field 'mode' must be a string");
    w.mode = fit_mode_from_string(mode.get<std::string>());
    for (const json& s : array_field(j, "subset_placements")) {
        SubsetPlacement sp;
        for (const json& i : array_field(s, "subset")) sp.subset.push_back(index(i, "subset"));
        sp.placement = placement_from_json(field(s, "placement"));
        w.subset_placements.push_back(std::move(sp));
    }
    const json& ev = field(j, "noncover_evidence");
    const json& search = field(ev, "search");
    if (!search.is_string()) malformed("field 'search' must be a string");
    w.noncover_evidence.search = search.get<std::string>();
    w.noncover_evidence.starts = static_cast<int>(index(field(ev, "starts"), "starts"));
    w.noncover_evidence.residual_floor = number_field(ev, "residual_floor");
    return w;
}

HellyReport helly_report_from_json(const json& j) {
    auto boolean = [&](const char* key) {
        const json& b = field(j, key);
        if (!b.is_boolean()) malformed(std::string("field '") + key + "' must be a boolean");
        return b.get<bool>();
    };
    HellyReport r;
    r.k = index(field(j, "k"), "k");
    r.subsets_checked = index(field(j, "subsets_checked"), "subsets_checked");
    r.all_k_wise = boolean("all_k_wise");
    if (const json& f = field(j, "first_failing_subset"); !f.is_null()) {
        std::vector<std::size_t> idx;
        for (const json& i : f) idx.push_back(index(i, "first_failing_subset"));
        r.first_failing_subset = idx;
    }
    if (const json& g = field(j, "global_point"); !g.is_null()) r.global_point = point_from_json(g);
    if (const json& a = field(j, "all_but_one_point"); !a.is_null()) {
        AllButOne abo{point_from_json(field(a, "point")), std::nullopt};
        if (const json& e = field(a, "excluded"); !e.is_null()) abo.excluded = index(e, "excluded");
        r.all_but_one_point = abo;
    }
    r.theorem_predicts_global = boolean("theorem_predicts_global");
    r.consistent = boolean("consistent");
    return r;
}

std::vector<Point> points_from_json(const json& j) {
    const json& arr = j.is_object() ? array_field(j, "points") : j;
    if (!arr.is_array()) malformed("expected an array of points");
    std::vector<Point> pts;
    for (const json& p : arr) pts.push_back(point_from_json(p));
    return pts;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        malformed("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) malformed("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace helly::io
