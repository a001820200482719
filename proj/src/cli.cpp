#include "assocfold/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "assocfold/affine.hpp"
#include "assocfold/arquiver.hpp"
#include "assocfold/exactfield.hpp"
#include "assocfold/folding.hpp"
#include "assocfold/polytope.hpp"
#include "assocfold/rootsystem.hpp"
#include "assocfold/section.hpp"

namespace assocfold::cli {

using arquiver::ObjId;
using exactfield::Scalar;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Selection handling

/** Parse a type string, letting --m complete a bare dihedral selection. */
rootsystem::TypeLabel resolve_type(const std::string& text, int dihedral) {
    std::string name = text;
    if (dihedral != 0 && (name == "I2" || name == "I"))
        name = "I2(" + std::to_string(dihedral) + ")";
    const auto type = rootsystem::parse_type(name);
    if (dihedral != 0 && type.family == 'I' && type.order != dihedral)
        throw invalid_input("--m " + std::to_string(dihedral) +
                            " contradicts the selected type " + type.str());
    return type;
}

/** Ambient enumerations above the vertex-count threshold need --deep. */
void deep_gate(const rootsystem::TypeLabel& ambient, bool deep) {
    if (deep) return;
    if (rootsystem::catalan_count(ambient) > kDeepThreshold)
        throw invalid_input("building " + ambient.str() + " enumerates " +
                            rootsystem::catalan_count(ambient).str() +
                            " vertices; pass --deep to allow runs of this size");
}

std::vector<rootsystem::Arrow> parse_orientation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot read orientation file: " + path);
    std::vector<rootsystem::Arrow> arrows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int from = 0, to = 0;
        if (!(fields >> from)) continue;  // blank or comment-only line
        if (!(fields >> to))
            throw invalid_input("orientation file " + path +
                                ": expected two vertex numbers per line, got \"" + line +
                                "\"");
        int extra;
        if (fields >> extra)
            throw invalid_input("orientation file " + path +
                                ": expected two vertex numbers per line, got \"" + line +
                                "\"");
        arrows.push_back({from, to});
    }
    return arrows;
}

rootsystem::QuiverSpec make_quiver(const rootsystem::TypeLabel& type,
                                   const std::string& orientation) {
    if (orientation == "bipartite") return rootsystem::build_quiver(type);
    return rootsystem::build_quiver(type, parse_orientation_file(orientation));
}

// ---------------------------------------------------------------------------
// Builds

struct AmbientBuild {
    rootsystem::QuiverSpec quiver;
    arquiver::MeshQuiver mesh;
    affine::ParamSet params;
    std::map<ObjId, affine::AffineForm> forms;
    polytope::Polytope poly;
};

AmbientBuild make_ambient(const Options& opts) {
    const auto type = resolve_type(opts.type, opts.dihedral);
    deep_gate(type, opts.deep);
    AmbientBuild b;
    b.quiver = make_quiver(type, opts.orientation);
    b.mesh = arquiver::knit(b.quiver);
    const auto field = rootsystem::natural_field(type);
    b.params = affine::uniform_params(
        b.mesh, Scalar::from_rational(field, parse_rational(opts.base)));
    b.forms = affine::propagate_forms(b.mesh, b.params);
    b.poly = polytope::build_polytope(polytope::facet_forms(b.forms, field));
    return b;
}

struct SectionBuild {
    folding::Folding fold;
    section::Section sec;
    polytope::Polytope poly;  ///< the restricted polytope
    polytope::NormalFan fan;
};

SectionBuild make_section(const Options& opts, const rootsystem::TypeLabel& target) {
    const auto source = opts.source.empty() ? folding::default_source(target)
                                            : resolve_type(opts.source, 0);
    deep_gate(source, opts.deep);
    if (opts.orientation != "bipartite")
        throw invalid_input("sections always use the alternating orientation; "
                            "--orientation applies to build and knit only");
    SectionBuild b;
    b.fold = folding::load_folding(source, target);
    b.sec = section::build_section(b.fold, parse_rational(opts.base));
    b.poly = polytope::build_polytope(b.sec.facets);
    b.fan = polytope::normal_fan(b.poly);
    return b;
}

// ---------------------------------------------------------------------------
// Canonical artifact representation (shared by builders and the importer)

struct ArtifactData {
    std::string type;
    std::string source;  ///< empty for an ambient build
    int field_m = 3;
    exactfield::FieldPtr field;
    std::vector<rootsystem::Arrow> orientation;  ///< ambient only
    std::vector<std::pair<ObjId, Scalar>> params;
    struct Vert {
        std::vector<ObjId> cluster;
        std::vector<Scalar> coords;
    };
    std::vector<Vert> vertices;
    std::vector<std::pair<int, int>> edges;
    bool folded = false;
    struct Facet {
        ObjId object;
        std::vector<int> g;            ///< ambient linear part
        std::vector<ObjId> members;    ///< folded: the facet class
        std::vector<Scalar> normal;    ///< folded linear part
        Scalar constant;
    };
    std::vector<Facet> facets;
    std::vector<std::vector<Scalar>> rays;  ///< folded only, one per facet
    std::vector<std::vector<int>> cones;    ///< folded only, one per vertex
};

ArtifactData from_ambient(const AmbientBuild& b) {
    ArtifactData d;
    d.type = b.quiver.type.str();
    d.field = b.poly.field;
    d.field_m = d.field->m;
    d.orientation = b.quiver.arrows;
    for (const auto& [id, c] : b.params) d.params.emplace_back(id, c);
    for (const auto& v : b.poly.vertices) d.vertices.push_back({v.cluster, v.coords});
    d.edges = b.poly.edges;
    for (const auto& f : b.poly.facets) {
        ArtifactData::Facet out;
        out.object = f.label;
        out.g = b.forms.at(f.label).linear;
        out.constant = f.constant;
        d.facets.push_back(std::move(out));
    }
    return d;
}

ArtifactData from_section(const SectionBuild& b) {
    ArtifactData d;
    d.folded = true;
    d.type = b.fold.target.str();
    d.source = b.fold.source.str();
    d.field = b.poly.field;
    d.field_m = d.field->m;
    for (const auto& [id, c] : b.sec.params) d.params.emplace_back(id, c);
    for (const auto& v : b.poly.vertices) d.vertices.push_back({v.cluster, v.coords});
    d.edges = b.poly.edges;
    for (std::size_t f = 0; f < b.poly.facets.size(); ++f) {
        ArtifactData::Facet out;
        out.object = b.poly.facets[f].label;
        out.members = b.sec.classes[f].members;
        out.normal = b.poly.facets[f].linear;
        out.constant = b.poly.facets[f].constant;
        d.facets.push_back(std::move(out));
    }
    d.rays = b.fan.rays;
    d.cones = b.fan.cones;
    return d;
}

// ---------------------------------------------------------------------------
// JSON serialization

ordered_json scalar_json(const Scalar& value) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : value.coeffs()) coeffs.push_back(rational_to_string(c));
    return ordered_json{{"coeffs", std::move(coeffs)}, {"approx", value.decimal()}};
}

ordered_json scalar_vec_json(const std::vector<Scalar>& values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(scalar_json(v));
    return out;
}

ordered_json obj_json(const ObjId& id) { return ordered_json::array({id.first, id.second}); }

ordered_json obj_vec_json(const std::vector<ObjId>& ids) {
    ordered_json out = ordered_json::array();
    for (const auto& id : ids) out.push_back(obj_json(id));
    return out;
}

ordered_json artifact_json(const ArtifactData& d) {
    ordered_json j;
    j["type"] = d.type;
    if (d.folded) j["source"] = d.source;
    j["field"] = d.field_m;
    if (!d.folded) {
        ordered_json arrows = ordered_json::array();
        for (const auto& a : d.orientation)
            arrows.push_back(ordered_json::array({a.from, a.to}));
        j["orientation"] = std::move(arrows);
    }
    ordered_json params = ordered_json::array();
    for (const auto& [id, c] : d.params)
        params.push_back(ordered_json{{"object", obj_json(id)}, {"c", scalar_json(c)}});
    j["params"] = std::move(params);

    ordered_json vertices = ordered_json::array();
    for (const auto& v : d.vertices)
        vertices.push_back(ordered_json{{"cluster", obj_vec_json(v.cluster)},
                                        {"coords", scalar_vec_json(v.coords)}});
    j["vertices"] = std::move(vertices);

    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : d.edges) edges.push_back(ordered_json::array({a, b}));
    j["edges"] = std::move(edges);

    ordered_json facets = ordered_json::array();
    for (const auto& f : d.facets) {
        ordered_json entry;
        entry["object"] = obj_json(f.object);
        if (d.folded) {
            entry["class"] = obj_vec_json(f.members);
            entry["normal"] = scalar_vec_json(f.normal);
        } else {
            entry["g"] = f.g;
        }
        entry["const"] = scalar_json(f.constant);
        facets.push_back(std::move(entry));
    }
    j["facets"] = std::move(facets);

    if (d.folded) {
        ordered_json rays = ordered_json::array();
        for (const auto& r : d.rays) rays.push_back(scalar_vec_json(r));
        ordered_json cones = ordered_json::array();
        for (const auto& c : d.cones) cones.push_back(c);
        j["fan"] = ordered_json{{"rays", std::move(rays)}, {"cones", std::move(cones)}};
    }
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// JSON import (the inverse of artifact_json, validating as it goes)

[[noreturn]] void malformed(const std::string& what) {
    throw invalid_input("malformed artifact: " + what);
}

ObjId parse_obj(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        malformed("object ids must be [row-index, vertex] pairs");
    return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<ObjId> parse_obj_vec(const ordered_json& j) {
    if (!j.is_array()) malformed("expected an array of object ids");
    std::vector<ObjId> out;
    for (const auto& e : j) out.push_back(parse_obj(e));
    return out;
}

Scalar parse_scalar(const ordered_json& j, const exactfield::FieldPtr& field) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        malformed("scalars must carry a \"coeffs\" array");
    if (static_cast<int>(j["coeffs"].size()) != field->degree)
        malformed("scalar has " + std::to_string(j["coeffs"].size()) +
                  " coefficients, field degree is " + std::to_string(field->degree));
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) malformed("scalar coefficients must be rational strings");
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return Scalar(field, std::move(coeffs));
}

std::vector<Scalar> parse_scalar_vec(const ordered_json& j,
                                     const exactfield::FieldPtr& field) {
    if (!j.is_array()) malformed("expected an array of scalars");
    std::vector<Scalar> out;
    for (const auto& e : j) out.push_back(parse_scalar(e, field));
    return out;
}

ArtifactData parse_artifact(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        malformed("missing \"type\"");

    ArtifactData d;
    d.type = j["type"].get<std::string>();
    const auto type = rootsystem::parse_type(d.type);  // rejects unknown labels
    d.folded = j.contains("source");
    if (d.folded) {
        if (!j["source"].is_string()) malformed("\"source\" must be a type label");
        d.source = j["source"].get<std::string>();
        rootsystem::parse_type(d.source);
    }
    if (!j.contains("field") || !j["field"].is_number_integer())
        malformed("missing \"field\"");
    d.field_m = j["field"].get<int>();
    d.field = exactfield::make_field(d.field_m);

    if (!d.folded) {
        if (!j.contains("orientation") || !j["orientation"].is_array())
            malformed("missing \"orientation\"");
        for (const auto& a : j["orientation"]) {
            const auto pair = parse_obj(a);
            d.orientation.push_back({pair.first, pair.second});
        }
    }

    if (!j.contains("params") || !j["params"].is_array()) malformed("missing \"params\"");
    for (const auto& p : j["params"]) {
        if (!p.is_object() || !p.contains("object") || !p.contains("c"))
            malformed("params entries need \"object\" and \"c\"");
        d.params.emplace_back(parse_obj(p["object"]), parse_scalar(p["c"], d.field));
    }

    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        malformed("missing \"vertices\"");
    const int dim = type.rank;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("cluster") || !v.contains("coords"))
            malformed("vertices need \"cluster\" and \"coords\"");
        ArtifactData::Vert vert{parse_obj_vec(v["cluster"]),
                                parse_scalar_vec(v["coords"], d.field)};
        if (static_cast<int>(vert.coords.size()) != dim)
            malformed("vertex coordinates do not match the rank of " + d.type);
        if (static_cast<int>(vert.cluster.size()) != dim)
            malformed("vertex clusters must list exactly rank-many facets");
        d.vertices.push_back(std::move(vert));
    }

    if (!j.contains("edges") || !j["edges"].is_array()) malformed("missing \"edges\"");
    for (const auto& e : j["edges"]) {
        const auto pair = parse_obj(e);
        if (pair.first < 0 || pair.second < 0 ||
            pair.first >= static_cast<int>(d.vertices.size()) ||
            pair.second >= static_cast<int>(d.vertices.size()))
            malformed("edge endpoints out of range");
        d.edges.push_back(pair);
    }

    if (!j.contains("facets") || !j["facets"].is_array()) malformed("missing \"facets\"");
    for (const auto& f : j["facets"]) {
        if (!f.is_object() || !f.contains("object") || !f.contains("const"))
            malformed("facets need \"object\" and \"const\"");
        ArtifactData::Facet facet;
        facet.object = parse_obj(f["object"]);
        facet.constant = parse_scalar(f["const"], d.field);
        if (d.folded) {
            if (!f.contains("class") || !f.contains("normal"))
                malformed("folded facets need \"class\" and \"normal\"");
            facet.members = parse_obj_vec(f["class"]);
            facet.normal = parse_scalar_vec(f["normal"], d.field);
            if (static_cast<int>(facet.normal.size()) != dim)
                malformed("facet normals do not match the rank of " + d.type);
        } else {
            if (!f.contains("g") || !f["g"].is_array()) malformed("facets need \"g\"");
            for (const auto& x : f["g"]) {
                if (!x.is_number_integer()) malformed("\"g\" entries must be integers");
                facet.g.push_back(x.get<int>());
            }
            if (static_cast<int>(facet.g.size()) != dim)
                malformed("facet directions do not match the rank of " + d.type);
        }
        d.facets.push_back(std::move(facet));
    }

    if (d.folded) {
        if (!j.contains("fan") || !j["fan"].is_object() || !j["fan"].contains("rays") ||
            !j["fan"].contains("cones"))
            malformed("folded artifacts need a \"fan\" with \"rays\" and \"cones\"");
        for (const auto& r : j["fan"]["rays"]) d.rays.push_back(parse_scalar_vec(r, d.field));
        if (d.rays.size() != d.facets.size()) malformed("one fan ray per facet expected");
        if (!j["fan"]["cones"].is_array()) malformed("\"cones\" must be an array");
        for (const auto& c : j["fan"]["cones"]) {
            if (!c.is_array()) malformed("cones must be arrays of facet indices");
            std::vector<int> cone;
            for (const auto& x : c) {
                if (!x.is_number_integer()) malformed("cone entries must be integers");
                const int idx = x.get<int>();
                if (idx < 0 || idx >= static_cast<int>(d.facets.size()))
                    malformed("cone facet index out of range");
                cone.push_back(idx);
            }
            d.cones.push_back(std::move(cone));
        }
        if (d.cones.size() != d.vertices.size()) malformed("one cone per vertex expected");
    }
    return d;
}

// ---------------------------------------------------------------------------
// OFF export

struct P3 {
    double x = 0, y = 0, z = 0;
};

P3 sub(const P3& a, const P3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
P3 cross(const P3& a, const P3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const P3& a, const P3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const P3& a) { return std::sqrt(dot(a, a)); }
P3 unit(const P3& a) {
    const double n = norm(a);
    return n > 0 ? P3{a.x / n, a.y / n, a.z / n} : a;
}

/**
 * Order the vertices of one (planar, convex) face counterclockwise as seen
 * from outside, starting at the smallest index.  Display-only, so doubles
 * are fine here.
 */
std::vector<int> order_face(std::vector<int> face, const std::vector<P3>& pts,
                            const P3& center) {
    P3 c{0, 0, 0};
    for (int i : face) {
        c.x += pts[static_cast<std::size_t>(i)].x;
        c.y += pts[static_cast<std::size_t>(i)].y;
        c.z += pts[static_cast<std::size_t>(i)].z;
    }
    const double k = static_cast<double>(face.size());
    c = {c.x / k, c.y / k, c.z / k};

    const P3 u0 = sub(pts[static_cast<std::size_t>(face[0])], c);
    P3 normal{0, 0, 1};
    double best = 0;
    for (std::size_t t = 1; t < face.size(); ++t) {
        const P3 cand = cross(u0, sub(pts[static_cast<std::size_t>(face[t])], c));
        if (norm(cand) > best) {
            best = norm(cand);
            normal = cand;
        }
    }
    normal = unit(normal);
    if (dot(normal, sub(c, center)) < 0) normal = {-normal.x, -normal.y, -normal.z};
    const P3 u = unit(u0);
    const P3 w = cross(normal, u);

    std::vector<std::pair<double, int>> keyed;
    for (int i : face) {
        const P3 dvec = sub(pts[static_cast<std::size_t>(i)], c);
        keyed.emplace_back(std::atan2(dot(dvec, w), dot(dvec, u)), i);
    }
    std::sort(keyed.begin(), keyed.end());
    face.clear();
    for (const auto& [angle, i] : keyed) {
        (void)angle;
        face.push_back(i);
    }
    const auto least = std::min_element(face.begin(), face.end());
    std::rotate(face.begin(), least, face.end());
    return face;
}

std::string off_text(const ArtifactData& d) {
    const std::size_t count = d.vertices.size();
    const int dim = static_cast<int>(d.vertices.front().coords.size());

    // Display coordinates: sections use their own coordinates (the last three
    // in high rank); ambient builds in rank >= 3 use the values of the three
    // forms knitted last in the trailing rows, which draws the classical
    // picture instead of a sheared simplex-coordinate one.
    std::vector<std::array<std::string, 3>> text(count, {"0", "0", "0"});
    std::vector<P3> pts(count);
    auto place = [&](std::size_t v, int axis, const Scalar& value) {
        text[v][static_cast<std::size_t>(axis)] = value.decimal();
        double* coord = axis == 0 ? &pts[v].x : axis == 1 ? &pts[v].y : &pts[v].z;
        *coord = value.approx_double();
    };
    if (!d.folded && dim >= 3) {
        std::map<ObjId, const ArtifactData::Facet*> by_object;
        for (const auto& f : d.facets) by_object[f.object] = &f;
        for (int axis = 0; axis < 3; ++axis) {
            const ObjId label{3, dim - 2 + axis};
            const auto found = by_object.find(label);
            if (found == by_object.end())
                throw internal_error("display form " + arquiver::obj_name(label) +
                                     " is missing");
            const auto& facet = *found->second;
            for (std::size_t v = 0; v < count; ++v) {
                Scalar value = facet.constant;
                for (std::size_t x = 0; x < facet.g.size(); ++x)
                    value.add_scaled(d.vertices[v].coords[x], facet.g[x]);
                place(v, axis, value);
            }
        }
    } else {
        const int from = dim > 3 ? dim - 3 : 0;
        for (std::size_t v = 0; v < count; ++v)
            for (int axis = 0; axis + from < dim && axis < 3; ++axis)
                place(v, axis, d.vertices[v].coords[static_cast<std::size_t>(axis + from)]);
    }

    P3 center{0, 0, 0};
    for (const auto& p : pts) {
        center.x += p.x;
        center.y += p.y;
        center.z += p.z;
    }
    center = {center.x / static_cast<double>(count), center.y / static_cast<double>(count),
              center.z / static_cast<double>(count)};

    std::vector<std::vector<int>> faces;
    if (dim == 2) {
        std::vector<int> everything(count);
        for (std::size_t v = 0; v < count; ++v) everything[v] = static_cast<int>(v);
        faces.push_back(order_face(std::move(everything), pts, {0, 0, -1}));
    } else if (dim >= 3) {
        for (const auto& facet : d.facets) {
            std::vector<int> face;
            for (std::size_t v = 0; v < count; ++v)
                if (std::binary_search(d.vertices[v].cluster.begin(),
                                       d.vertices[v].cluster.end(), facet.object))
                    face.push_back(static_cast<int>(v));
            faces.push_back(order_face(std::move(face), pts, center));
        }
    }

    std::ostringstream out;
    out << "OFF\n"
        << count << " " << faces.size() << " " << d.edges.size() << "\n";
    for (const auto& t : text) out << t[0] << " " << t[1] << " " << t[2] << "\n";
    for (const auto& face : faces) {
        out << face.size();
        for (int i : face) out << " " << i;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Tables

std::string exponents_string(const std::vector<int>& exponents) {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(exponents[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification report

void count_check(const std::string& what, long long got, const Integer& expected) {
    if (Integer(got) != expected)
        throw verification_error(what + ": expected " + expected.str() + ", found " +
                                 std::to_string(got));
}

ordered_json verify_report(const Options& opts, bool& all_passed) {
    const auto target = resolve_type(opts.target, opts.dihedral);
    const auto source = opts.source.empty() ? folding::default_source(target)
                                            : resolve_type(opts.source, 0);
    deep_gate(source, opts.deep);
    const Rational base = parse_rational(opts.base);
    const int samples =
        rootsystem::catalan_count(source) > kDeepThreshold ? 32 : 1000;

    ordered_json report;
    report["source"] = source.str();
    report["target"] = target.str();
    report["base"] = rational_to_string(base);
    report["seed"] = opts.seed;
    report["samples"] = samples;

    ordered_json checks = ordered_json::array();
    all_passed = true;
    bool alive = true;  // once a prerequisite fails, later checks are skipped
    auto record = [&](const std::string& name, auto&& body) {
        ordered_json entry;
        entry["name"] = name;
        if (!alive) {
            entry["pass"] = false;
            entry["witness"] = "skipped: an earlier check failed";
            all_passed = false;
        } else {
            try {
                entry["witness"] = body();
                entry["pass"] = true;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Verification) throw;
                entry["pass"] = false;
                entry["witness"] = std::string(e.what());
                all_passed = false;
                alive = false;
            }
        }
        // keep name first, then pass, then witness
        ordered_json shaped;
        shaped["name"] = entry["name"];
        shaped["pass"] = entry["pass"];
        shaped["witness"] = entry["witness"];
        checks.push_back(std::move(shaped));
    };

    const auto fold = folding::load_folding(source, target);
    arquiver::MeshQuiver mesh;
    record("knitting", [&] {
        mesh = arquiver::knit(rootsystem::build_quiver(source));
        return "objects=" + std::to_string(mesh.total_objects) +
               " meshes=" + std::to_string(mesh.meshes.size());
    });
    record("folding-tables", [&] {
        folding::validate_folding(fold, mesh);
        std::string weights;
        for (std::size_t i = 0; i < fold.weights.size(); ++i) {
            if (i) weights += ",";
            weights += fold.weights[i].decimal();
        }
        return "blocks=" + std::to_string(fold.blocks.size()) + " weights=[" + weights +
               "]";
    });
    record("projection-identities", [&] {
        folding::verify_projection_identities(fold, opts.seed, 1000);
        return std::string("vectors=1000");
    });

    section::Section sec;
    record("section-forms", [&] {
        sec = section::build_section(fold, base);
        return "classes=" + std::to_string(sec.classes.size());
    });

    polytope::Polytope restricted;
    record("restricted-polytope", [&] {
        restricted = polytope::build_polytope(sec.facets);
        const auto expected_facets =
            Integer(target.rank) * (rootsystem::coxeter_data(target).h + 2) / 2;
        count_check("restricted vertices", static_cast<long long>(restricted.vertices.size()),
                    rootsystem::catalan_count(target));
        count_check("restricted facets", static_cast<long long>(restricted.facets.size()),
                    expected_facets);
        return "vertices=" + std::to_string(restricted.vertices.size()) +
               " facets=" + std::to_string(restricted.facets.size());
    });

    polytope::Polytope ambient;
    record("ambient-polytope", [&] {
        ambient = section::ambient_polytope(sec);
        const auto expected_facets =
            Integer(source.rank) * (rootsystem::coxeter_data(source).h + 2) / 2;
        count_check("ambient vertices", static_cast<long long>(ambient.vertices.size()),
                    rootsystem::catalan_count(source));
        count_check("ambient facets", static_cast<long long>(ambient.facets.size()),
                    expected_facets);
        return "vertices=" + std::to_string(ambient.vertices.size()) +
               " facets=" + std::to_string(ambient.facets.size());
    });

    record("ray-match", [&] {
        section::verify_ray_match(sec, restricted);
        return "rays=" + std::to_string(restricted.facets.size());
    });
    record("fan-match", [&] {
        section::verify_fan_match(sec, ambient, restricted, opts.seed, samples);
        return "samples=" + std::to_string(samples);
    });
    record("facet-intersections", [&] {
        section::verify_facet_intersections(sec, restricted);
        return "facets=" + std::to_string(restricted.facets.size());
    });
    record("tail-cluster", [&] {
        section::verify_tail_cluster(sec, ambient);
        return "objects=" + std::to_string(mesh.rank);
    });

    report["checks"] = std::move(checks);
    report["pass"] = all_passed;
    return report;
}

// ---------------------------------------------------------------------------
// Output plumbing

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot open output file: " + path);
    out << text;
    out.flush();
    if (!out.good()) throw invalid_input("cannot write output file: " + path);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ArtifactData data_for_build(const Options& opts) {
    const auto type = resolve_type(opts.type, opts.dihedral);
    if (type.simply_laced()) return from_ambient(make_ambient(opts));
    return from_section(make_section(opts, type));
}

ArtifactData data_for_fold(const Options& opts) {
    const auto target = resolve_type(opts.target, opts.dihedral);
    return from_section(make_section(opts, target));
}

int error_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Verification: return 1;
        case ErrorKind::InvalidInput: return 2;
        case ErrorKind::Internal: return 3;
    }
    return 3;
}

const char* error_kind_name(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Verification: return "verification";
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::Internal: return "internal";
    }
    return "internal";
}

int report_error(const Error& e) {
    ordered_json j;
    j["error"] = ordered_json{{"kind", error_kind_name(e)}, {"message", e.what()}};
    std::cout << dump_json(j);
    return error_code(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public string helpers

std::string list_types_text() {
    std::ostringstream out;
    out << std::left << std::setw(8) << "type" << std::setw(6) << "h" << std::setw(22)
        << "exponents" << std::setw(8) << "roots" << std::setw(12) << "vertices"
        << "folded from" << "\n";
    for (const auto& type : rootsystem::supported_types()) {
        const auto cox = rootsystem::coxeter_data(type);
        out << std::left << std::setw(8) << type.str() << std::setw(6) << cox.h
            << std::setw(22) << exponents_string(cox.exponents) << std::setw(8)
            << cox.positive_root_count << std::setw(12)
            << rootsystem::catalan_count(type).str()
            << (type.simply_laced() ? "-" : folding::default_source(type).str()) << "\n";
    }
    return out.str();
}

std::string list_types_json_text() {
    ordered_json types = ordered_json::array();
    for (const auto& type : rootsystem::supported_types()) {
        const auto cox = rootsystem::coxeter_data(type);
        ordered_json entry;
        entry["type"] = type.str();
        entry["rank"] = type.rank;
        entry["coxeter_number"] = cox.h;
        entry["exponents"] = cox.exponents;
        entry["positive_roots"] = cox.positive_root_count;
        entry["vertices"] = rootsystem::catalan_count(type).str();
        entry["simply_laced"] = type.simply_laced();
        if (!type.simply_laced())
            entry["folded_from"] = folding::default_source(type).str();
        types.push_back(std::move(entry));
    }
    return dump_json(ordered_json{{"types", std::move(types)}});
}

std::string fold_pairs_text() {
    return "C_n    <-  A_{2n-1}   (n >= 2)\n"
           "B_n    <-  D_{n+1}    (n >= 3)\n"
           "F4     <-  E6\n"
           "H3     <-  D6\n"
           "H4     <-  E8\n"
           "I2(m)  <-  A_{m-1}    (m >= 3)\n"
           "I2(2k) <-  D_{k+1}    (k >= 3)\n"
           "I2(12) <-  E6\n"
           "I2(18) <-  E7\n"
           "I2(30) <-  E8\n";
}

std::string knit_grid_text(const Options& opts) {
    const auto type = resolve_type(opts.type, opts.dihedral);
    return arquiver::dump_grid(arquiver::knit(make_quiver(type, opts.orientation)));
}

std::string knit_json_text(const Options& opts) {
    const auto type = resolve_type(opts.type, opts.dihedral);
    const auto quiver = make_quiver(type, opts.orientation);
    const auto mesh = arquiver::knit(quiver);
    ordered_json j;
    j["type"] = type.str();
    ordered_json arrows = ordered_json::array();
    for (const auto& a : quiver.arrows) arrows.push_back(ordered_json::array({a.from, a.to}));
    j["orientation"] = std::move(arrows);
    ordered_json objects = ordered_json::array();
    for (const auto& [id, root] : mesh.roots)
        objects.push_back(ordered_json{{"id", obj_json(id)}, {"root", root}});
    j["objects"] = std::move(objects);
    ordered_json meshes = ordered_json::array();
    for (const auto& m : mesh.meshes)
        meshes.push_back(ordered_json{{"start", obj_json(m.start)},
                                      {"end", obj_json(m.end)},
                                      {"middles", obj_vec_json(m.middles)}});
    j["meshes"] = std::move(meshes);
    return dump_json(j);
}

std::string build_json_text(const Options& opts) {
    return dump_json(artifact_json(data_for_build(opts)));
}

std::string build_off_text(const Options& opts) { return off_text(data_for_build(opts)); }

std::string fold_json_text(const Options& opts) {
    return dump_json(artifact_json(data_for_fold(opts)));
}

std::string fold_off_text(const Options& opts) { return off_text(data_for_fold(opts)); }

std::string verify_report_text(const Options& opts, bool* all_passed) {
    bool ok = false;
    const auto report = verify_report(opts, ok);
    if (all_passed) *all_passed = ok;
    return dump_json(report);
}

std::string reserialize_polytope(const std::string& json_text) {
    return dump_json(artifact_json(parse_artifact(json_text)));
}

std::string off_from_artifact(const std::string& json_text) {
    return off_text(parse_artifact(json_text));
}

// ---------------------------------------------------------------------------
// Entry point

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact simple polytope realizations of generalized associahedra,\n"
                 "with folded plane sections for the multiply-laced and\n"
                 "noncrystallographic types."};
    app.require_subcommand(1);

    Options opts;
    std::string json_path, off_path, in_path;
    bool dump = false, list_pairs = false, want_json = false;

    auto add_selection = [&](CLI::App* cmd, bool with_type, bool with_fold) {
        if (with_type)
            cmd->add_option("--type", opts.type, "type label, e.g. A3, D6, H3, I2(7)");
        if (with_fold) {
            cmd->add_option("--target", opts.target, "folding target, e.g. C2, F4, H4");
            cmd->add_option("--source", opts.source,
                            "folding source (defaults to the canonical one)");
        }
        cmd->add_option("--m", opts.dihedral, "dihedral order completing a bare I2");
        cmd->add_option("--c", opts.base,
                        "base mesh parameter, a positive rational like 1 or 3/2");
        cmd->add_option("--seed", opts.seed, "seed for the sampling checks");
        cmd->add_flag("--deep", opts.deep, "allow enumerations beyond 10000 vertices");
    };

    auto* list_cmd = app.add_subcommand("list-types", "print the supported types");
    list_cmd->add_flag("--json", want_json, "print the table as JSON");

    auto* build_cmd =
        app.add_subcommand("build", "build a polytope (ambient, or folded for "
                                    "multiply-laced and noncrystallographic types)");
    add_selection(build_cmd, true, true);
    build_cmd->add_option("--orientation", opts.orientation,
                          "\"bipartite\" or a file of \"from to\" arrow lines");
    build_cmd->add_option("--json", json_path, "write the JSON artifact here");
    build_cmd->add_option("--off", off_path, "write an OFF model here");
    build_cmd->add_flag("--dump", dump, "also print the knitted grid");

    auto* knit_cmd = app.add_subcommand("knit", "knit the translation quiver of a type");
    add_selection(knit_cmd, true, false);
    knit_cmd->add_option("--orientation", opts.orientation,
                         "\"bipartite\" or a file of \"from to\" arrow lines");
    knit_cmd->add_option("--json", json_path, "write the mesh data as JSON here");
    knit_cmd->add_flag("--dump", dump, "print the grid with roots and relations");

    auto* fold_cmd =
        app.add_subcommand("fold", "fold an ambient polytope onto a target section");
    add_selection(fold_cmd, false, true);
    fold_cmd->add_option("--json", json_path, "write the JSON artifact here");
    fold_cmd->add_option("--off", off_path, "write an OFF model here");
    fold_cmd->add_flag("--list", list_pairs, "print the supported folding pairs");
    bool fold_verify = false;
    fold_cmd->add_flag("--verify", fold_verify, "run the full verification suite too");

    auto* verify_cmd =
        app.add_subcommand("verify", "verify a folding end to end and print a report");
    add_selection(verify_cmd, false, true);
    verify_cmd->add_option("--json", json_path, "write the report here");

    auto* export_cmd = app.add_subcommand(
        "export", "re-serialize a JSON artifact, or compute one and write files");
    add_selection(export_cmd, true, true);
    export_cmd->add_option("--in", in_path, "existing JSON artifact to convert");
    export_cmd->add_option("--json", json_path, "write canonical JSON here");
    export_cmd->add_option("--off", off_path, "write an OFF model here");

    std::vector<const char*> argv;
    argv.push_back("assocfold");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            std::cout << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            std::cout << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            throw invalid_input(std::string(e.what()));
        }

        if (list_cmd->parsed()) {
            std::cout << (want_json ? list_types_json_text() : list_types_text());
            return 0;
        }

        if (knit_cmd->parsed()) {
            if (opts.type.empty()) throw invalid_input("knit needs --type");
            if (dump || json_path.empty()) std::cout << knit_grid_text(opts);
            if (!json_path.empty()) emit(knit_json_text(opts), json_path);
            return 0;
        }

        if (build_cmd->parsed()) {
            if (opts.type.empty()) throw invalid_input("build needs --type");
            const auto data = data_for_build(opts);
            if (dump) {
                Options grid = opts;
                grid.type = data.folded ? data.source : data.type;
                std::cout << knit_grid_text(grid);
            }
            const std::string text = dump_json(artifact_json(data));
            if (!off_path.empty()) write_text_file(off_path, off_text(data));
            emit(text, json_path);
            return 0;
        }

        if (fold_cmd->parsed()) {
            if (list_pairs) {
                std::cout << fold_pairs_text();
                return 0;
            }
            if (opts.target.empty()) throw invalid_input("fold needs --target");
            ordered_json report;
            if (fold_verify) {
                bool ok = false;
                report = verify_report(opts, ok);
                if (!ok) {  // no artifact for a folding that fails its checks
                    std::cout << dump_json(report);
                    return 1;
                }
            }
            const auto data = data_for_fold(opts);
            ordered_json artifact = artifact_json(data);
            if (fold_verify) artifact["verification"] = std::move(report);
            if (!off_path.empty()) write_text_file(off_path, off_text(data));
            emit(dump_json(artifact), json_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (opts.target.empty()) throw invalid_input("verify needs --target");
            bool ok = false;
            const std::string report = verify_report_text(opts, &ok);
            emit(report, json_path);
            return ok ? 0 : 1;
        }

        if (export_cmd->parsed()) {
            if (json_path.empty() && off_path.empty())
                throw invalid_input("export needs --json or --off output paths");
            std::string canonical, off;
            if (!in_path.empty()) {
                const auto data = parse_artifact(read_text_file(in_path));
                canonical = dump_json(artifact_json(data));
                if (!off_path.empty()) off = off_text(data);
            } else if (!opts.target.empty()) {
                const auto data = data_for_fold(opts);
                canonical = dump_json(artifact_json(data));
                if (!off_path.empty()) off = off_text(data);
            } else if (!opts.type.empty()) {
                const auto data = data_for_build(opts);
                canonical = dump_json(artifact_json(data));
                if (!off_path.empty()) off = off_text(data);
            } else {
                throw invalid_input("export needs --in, --type, or --target");
            }
            if (!off_path.empty()) write_text_file(off_path, off);
            if (!json_path.empty()) write_text_file(json_path, canonical);
            return 0;
        }

        throw invalid_input("no subcommand selected");
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        return report_error(internal_error(e.what()));
    }
}

}  // namespace assocfold::cli
