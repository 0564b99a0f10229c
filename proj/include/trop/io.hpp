// Interchange formats: torus/curve files, invariant tables, and reports.
// Rationals always serialize as "num/den" strings; output key order is fixed
// so identical inputs give byte-identical files.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "curve.hpp"
#include "enumerate.hpp"
#include "laurent.hpp"
#include "lifting.hpp"
#include "multiplicity.hpp"
#include "torus.hpp"

namespace trop {

using Json = nlohmann::ordered_json;

/// Malformed input file or flag (CLI exit code 2).
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Torus and class

inline Json torus_to_json(const TropicalTorus& t) {
    const auto& s = t.period();
    Json j;
    j["period"] = Json::array({Json::array({rat_str(s.a), rat_str(s.b)}),
                               Json::array({rat_str(s.c), rat_str(s.d)})});
    return j;
}

inline TropicalTorus torus_from_json(const Json& j) {
    try {
        const auto& p = j.at("period");
        if (!p.is_array() || p.size() != 2 || p[0].size() != 2 || p[1].size() != 2)
            throw ParseError("period must be a 2x2 array");
        M2q s(parse_rat(p[0][0].get<std::string>()), parse_rat(p[0][1].get<std::string>()),
              parse_rat(p[1][0].get<std::string>()), parse_rat(p[1][1].get<std::string>()));
        return TropicalTorus(s);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad torus object: ") + e.what());
    }
}

inline Json class_to_json(const CurveClass& c) {
    auto to_l = [](const Int& v) { return static_cast<long>(v.get_si()); };
    return Json::array({Json::array({to_l(c.m.a), to_l(c.m.b)}),
                        Json::array({to_l(c.m.c), to_l(c.m.d)})});
}

inline CurveClass class_from_json(const Json& j) {
    try {
        return CurveClass(j[0][0].get<long>(), j[0][1].get<long>(), j[1][0].get<long>(),
                          j[1][1].get<long>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad class array: ") + e.what());
    }
}

/// "a,b,c,d" row-major.
inline CurveClass class_from_string(const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw ParseError("bad class entry: " + item);
        }
    }
    if (v.size() != 4) throw ParseError("class needs four integers a,b,c,d");
    return CurveClass(v[0], v[1], v[2], v[3]);
}

// ---------------------------------------------------------------------------
// Curves

inline Json marked_curve_to_json(const MarkedCurve& mc) {
    Json j;
    j["torus"] = torus_to_json(mc.curve.torus);
    Json verts = Json::object();
    for (std::size_t v = 0; v < mc.curve.positions.size(); ++v)
        verts[std::to_string(v)] = Json::array(
            {rat_str(mc.curve.positions[v].x), rat_str(mc.curve.positions[v].y)});
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const auto& e : mc.curve.graph.edges) {
        Json je;
        je["tail"] = e.tail;
        je["head"] = e.head;
        je["weight"] = e.weight;
        je["primitive_slope"] =
            Json::array({static_cast<long>(e.prim.x.get_si()),
                         static_cast<long>(e.prim.y.get_si())});
        je["length"] = rat_str(e.length);
        je["winding"] = Json::array({static_cast<long>(e.winding.x.get_si()),
                                     static_cast<long>(e.winding.y.get_si())});
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    if (!mc.marks.empty()) {
        Json marks = Json::array();
        for (const auto& m : mc.marks) {
            Json jm;
            jm["edge"] = m.edge;
            jm["t"] = rat_str(m.t);
            marks.push_back(std::move(jm));
        }
        j["marks"] = std::move(marks);
    }
    return j;
}

inline Json curve_to_json(const ParamCurve& c) { return marked_curve_to_json({c, {}}); }

inline MarkedCurve marked_curve_from_json(const Json& j) {
    try {
        TropicalTorus torus = torus_from_json(j.at("torus"));
        const auto& jv = j.at("vertices");
        int nv = static_cast<int>(jv.size());
        std::vector<TorusPoint> pos(nv);
        for (auto it = jv.begin(); it != jv.end(); ++it) {
            int id = std::stoi(it.key());
            if (id < 0 || id >= nv) throw ParseError("vertex ids must be 0..n-1");
            pos[id] = TorusPoint(parse_rat((*it)[0].get<std::string>()),
                                 parse_rat((*it)[1].get<std::string>()));
        }
        CurveGraph g;
        g.num_vertices = nv;
        for (const auto& je : j.at("edges")) {
            EdgeData e;
            e.tail = je.at("tail").get<int>();
            e.head = je.at("head").get<int>();
            e.weight = je.at("weight").get<long>();
            e.prim = V2i{je.at("primitive_slope")[0].get<long>(),
                         je.at("primitive_slope")[1].get<long>()};
            e.length = parse_rat(je.at("length").get<std::string>());
            e.winding =
                V2i{je.at("winding")[0].get<long>(), je.at("winding")[1].get<long>()};
            g.edges.push_back(std::move(e));
        }
        MarkedCurve mc{ParamCurve(std::move(g), std::move(torus), std::move(pos)), {}};
        if (j.contains("marks"))
            for (const auto& jm : j.at("marks"))
                mc.marks.push_back({jm.at("edge").get<int>(),
                                    parse_rat(jm.at("t").get<std::string>())});
        return mc;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad curve object: ") + e.what());
    }
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw ParseError("cannot parse " + path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline std::string dump_json(const Json& j) { return j.dump(1) + "\n"; }

/// Planar (lifted) curve: positions in N-coordinates, bounded edges, and an
/// ends array carrying the pairing involution.
inline Json planar_curve_to_json(const PlanarCurve& pc) {
    Json j;
    Json pos = Json::object();
    for (std::size_t v = 0; v < pc.positions.size(); ++v)
        pos[std::to_string(v)] =
            Json::array({rat_str(pc.positions[v].x), rat_str(pc.positions[v].y)});
    j["positions"] = std::move(pos);
    Json edges = Json::array();
    for (const auto& e : pc.edges) {
        Json je;
        je["tail"] = e.tail;
        je["head"] = e.head;
        je["weight"] = e.weight;
        je["primitive_slope"] = Json::array({static_cast<long>(e.prim.x.get_si()),
                                             static_cast<long>(e.prim.y.get_si())});
        je["length"] = rat_str(e.length);
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    Json ends = Json::array();
    for (const auto& e : pc.ends) {
        Json je;
        je["vertex"] = e.vertex;
        je["slope"] = Json::array(
            {static_cast<long>(e.slope.x.get_si()), static_cast<long>(e.slope.y.get_si())});
        je["weight"] = e.weight;
        je["partner"] = e.partner;
        je["gamma"] = Json::array(
            {static_cast<long>(e.gamma.x.get_si()), static_cast<long>(e.gamma.y.get_si())});
        je["cut_edge"] = e.orig_edge;
        ends.push_back(std::move(je));
    }
    j["ends"] = std::move(ends);
    return j;
}

// ---------------------------------------------------------------------------
// Laurent polynomials and invariant tables

inline Json laurent_to_json(const Laurent& p) {
    Json coeffs = Json::object();
    for (const auto& [e, v] : p.coeffs()) coeffs[std::to_string(e)] = v.get_str();
    Json j;
    j["coeffs_by_doubled_exponent"] = std::move(coeffs);
    j["pretty"] = p.pretty();
    j["symmetric"] = p.symmetric();
    return j;
}

inline Json invariant_table_to_json(const InvariantTable& t) {
    Json per_k = Json::array();
    for (const auto& [k, nk] : t.n_k) {
        Json row;
        row["gcd"] = k;
        row["N_k"] = nk.get_str();
        row["BG_k"] = laurent_to_json(t.bg_k.at(k));
        per_k.push_back(std::move(row));
    }
    Json j;
    j["per_gcd"] = std::move(per_k);
    j["M"] = t.m_total.get_str();
    j["N"] = t.n_total.get_str();
    j["BG"] = laurent_to_json(t.bg_total);
    j["R"] = laurent_to_json(t.r_total);
    return j;
}

// ---------------------------------------------------------------------------
// Solution sets

inline Json bounds_to_json(const ResolvedBounds& b) {
    Json j;
    j["slope_x"] = b.slope_x;
    j["slope_y"] = b.slope_y;
    j["winding"] = b.winding;
    j["mark_offset"] = b.mu;
    return j;
}

/// The part compared under bound doubling: everything except the bounds.
inline Json solutions_only_json(const SolutionSet& s) {
    Json j;
    j["torus"] = torus_to_json(s.torus);
    j["class"] = class_to_json(s.cls);
    j["genus"] = 2;
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(Json::array({rat_str(p.x), rat_str(p.y)}));
    j["points"] = std::move(pts);
    Json sols = Json::array();
    for (const auto& sol : s.solutions) {
        Json js;
        js["curve"] = marked_curve_to_json(sol.mc);
        js["gcd"] = sol.gcd.get_str();
        js["classical_multiplicity"] = sol.classical.get_str();
        js["refined_multiplicity"] = laurent_to_json(sol.refined);
        js["nontrivial_automorphism"] = sol.automorphism_flag;
        sols.push_back(std::move(js));
    }
    j["solutions"] = std::move(sols);
    return j;
}

inline Json solution_set_to_json(const SolutionSet& s) {
    Json j = solutions_only_json(s);
    j["bounds"] = bounds_to_json(s.bounds);
    Json cert;
    cert["points_distinct"] = s.certificate.points_distinct;
    cert["marks_interior"] = s.certificate.marks_interior;
    cert["single_point_preimages"] = s.certificate.single_point_preimages;
    cert["all_verified"] = s.certificate.all_verified;
    j["genericity"] = std::move(cert);
    return j;
}

// ---------------------------------------------------------------------------
// Per-curve reports

inline Json check_report_json(const MarkedCurve& mc) {
    Json j;
    auto violations = validate(mc);
    Json v = Json::array();
    for (const auto& s : violations) v.push_back(s);
    j["violations"] = std::move(v);
    bool balanced = check_balanced(mc.curve);
    j["balanced"] = balanced;
    if (!balanced) {
        Json bad = Json::array();
        for (int u : unbalanced_vertices(mc.curve)) bad.push_back(u);
        j["unbalanced_vertices"] = std::move(bad);
    }
    j["genus"] = genus(mc.curve);
    bool degree_ok = false;
    if (balanced && violations.empty()) {
        try {
            j["class"] = class_to_json(degree_class(mc.curve));
            degree_ok = true;
        } catch (const std::exception& e) {
            j["class_error"] = e.what();
        }
    }
    if (!mc.curve.graph.edges.empty()) j["gcd"] = curve_gcd(mc.curve).get_str();
    auto simple = is_simple(mc.curve);
    j["simple"] = simple.ok;
    if (!simple.ok) j["simple_reason"] = simple.reason;
    j["ok"] = violations.empty() && balanced && degree_ok;
    return j;
}

inline Json mult_report_json(const MultReport& r) {
    Json j;
    Json mv = Json::array();
    for (const auto& m : r.vertex_mults) mv.push_back(m.get_str());
    j["vertex_multiplicities"] = std::move(mv);
    j["classical"] = r.classical.get_str();
    j["refined"] = laurent_to_json(r.refined);
    j["gcd"] = r.gcd.get_str();
    j["complex_via_product"] = r.complex_product.get_str();
    j["complex_via_theta"] = r.complex_theta.get_str();
    j["parity_ok"] = r.parity_ok;
    j["agreement"] = r.agreement;
    return j;
}

}  // namespace trop
