// Parametrized tropical curves in a torus: metric graph with integer slopes,
// per-edge windings, balancing, degree, gcd, simplicity, scaling, and the
// canonical form used for deduplication.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "numeric.hpp"
#include "torus.hpp"

namespace trop {

struct EdgeData {
    int tail = 0, head = 0;
    long weight = 1;    // w_e >= 1
    V2i prim;           // primitive slope u'_e; (0,0) marks a contracted edge
    Rat length{1};      // l_e > 0
    V2i winding;        // lambda_e in Lambda-coordinates, for the tail->head orientation

    /// Full slope u_e = w_e * u'_e.
    V2i slope() const { return prim * Int(weight); }
};

struct CurveGraph {
    int num_vertices = 0;
    std::vector<EdgeData> edges;
};

struct ParamCurve {
    CurveGraph graph;
    TropicalTorus torus;
    std::vector<TorusPoint> positions;  // one per vertex, Lambda-coordinates in [0,1)

    ParamCurve(CurveGraph g, TropicalTorus t, std::vector<TorusPoint> pos)
        : graph(std::move(g)), torus(std::move(t)), positions(std::move(pos)) {}

    /// Lambda-coordinate displacement of an edge: coords(head) + winding - coords(tail).
    V2q lambda_displacement(const EdgeData& e) const {
        return positions[e.head].as_vec() + V2q(e.winding) - positions[e.tail].as_vec();
    }
};

struct Mark {
    int edge = 0;
    Rat t{0};  // arc parameter in (0, l_e), measured from the tail
};

struct MarkedCurve {
    ParamCurve curve;
    std::vector<Mark> marks;  // labeled: order is the point labeling
};

// ---------------------------------------------------------------------------
// Basic graph facts

namespace detail {
class UnionFind {
  public:
    explicit UnionFind(int n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
    int find(int x) { return p_[x] == x ? x : p_[x] = find(p_[x]); }
    void unite(int a, int b) { p_[find(a)] = find(b); }

  private:
    std::vector<int> p_;
};
}  // namespace detail

inline int component_count(const CurveGraph& g) {
    detail::UnionFind uf(g.num_vertices);
    for (const auto& e : g.edges) uf.unite(e.tail, e.head);
    int c = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (uf.find(v) == v) ++c;
    return c;
}

/// First Betti number |E| - |V| + #components.
inline int genus(const ParamCurve& c) {
    return static_cast<int>(c.graph.edges.size()) - c.graph.num_vertices +
           component_count(c.graph);
}

/// Genus of each connected component, ordered by smallest vertex index.
inline std::vector<int> component_genera(const ParamCurve& c) {
    const auto& g = c.graph;
    detail::UnionFind uf(g.num_vertices);
    for (const auto& e : g.edges) uf.unite(e.tail, e.head);
    std::vector<int> root_order;
    std::vector<int> vcount(g.num_vertices, 0), ecount(g.num_vertices, 0);
    for (int v = 0; v < g.num_vertices; ++v) {
        int r = uf.find(v);
        if (vcount[r] == 0) root_order.push_back(r);
        ++vcount[r];
    }
    for (const auto& e : g.edges) ++ecount[uf.find(e.tail)];
    std::vector<int> out;
    for (int r : root_order) out.push_back(ecount[r] - vcount[r] + 1);
    return out;
}

inline bool check_balanced(const ParamCurve& c) {
    std::vector<V2i> sum(c.graph.num_vertices);
    for (const auto& e : c.graph.edges) {
        V2i s = e.slope();
        sum[e.tail] = sum[e.tail] + s;
        sum[e.head] = sum[e.head] - s;
    }
    for (const auto& v : sum)
        if (!v.is_zero()) return false;
    return true;
}

/// Vertices at which balancing fails (diagnostics for reports).
inline std::vector<int> unbalanced_vertices(const ParamCurve& c) {
    std::vector<V2i> sum(c.graph.num_vertices);
    for (const auto& e : c.graph.edges) {
        V2i s = e.slope();
        sum[e.tail] = sum[e.tail] + s;
        sum[e.head] = sum[e.head] - s;
    }
    std::vector<int> bad;
    for (int v = 0; v < c.graph.num_vertices; ++v)
        if (!sum[v].is_zero()) bad.push_back(v);
    return bad;
}

/// gcd delta_Gamma of the edge weights.
inline Int curve_gcd(const ParamCurve& c) {
    if (c.graph.edges.empty()) throw std::domain_error("gcd of an edgeless curve");
    Int g = 0;
    for (const auto& e : c.graph.edges) g = int_gcd(g, Int(e.weight));
    return g;
}

struct SimpleCheck {
    bool ok = true;
    std::string reason;
};

/// Simple = trivalent + immersion: no contracted edges, no flat vertices.
inline SimpleCheck is_simple(const ParamCurve& c) {
    std::vector<std::vector<V2i>> out(c.graph.num_vertices);
    for (std::size_t i = 0; i < c.graph.edges.size(); ++i) {
        const auto& e = c.graph.edges[i];
        if (e.prim.is_zero())
            return {false, "edge " + std::to_string(i) + " is contracted (zero slope)"};
        out[e.tail].push_back(e.slope());
        out[e.head].push_back(-e.slope());
    }
    for (int v = 0; v < c.graph.num_vertices; ++v) {
        if (out[v].size() != 3)
            return {false, "vertex " + std::to_string(v) + " is not trivalent (valence " +
                               std::to_string(out[v].size()) + ")"};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (cross(out[v][i], out[v][j]) == 0)
                    return {false,
                            "vertex " + std::to_string(v) + " is flat (collinear slopes)"};
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// Degree class, by lattice holonomy and independently by wall crossings

/// Holonomy route: C = sum_e u_e (lambda_e)^T. Gauge-independent because the
/// slopes at every vertex balance.
inline CurveClass degree_class_holonomy(const ParamCurve& c) {
    M2i m;
    for (const auto& e : c.graph.edges) m = m + outer(e.slope(), e.winding);
    return CurveClass(m);
}

namespace detail {
/// Signed count of crossings of the wall family {coord = theta + Z} along the
/// straight segment a -> b (looking at one Lambda-coordinate).
inline Int signed_wall_crossings(const Rat& a, const Rat& b, const Rat& theta) {
    if (a == b) return 0;
    Rat lo = std::min(a, b), hi = std::max(a, b);
    // integers k with lo < theta + k < hi; endpoint hits are excluded by the
    // wall-offset choice
    Int count = floor_rat(hi - theta) - floor_rat(lo - theta);
    return b > a ? count : -count;
}

inline bool theta_valid(const ParamCurve& c, const Rat& theta, bool use_x) {
    for (std::size_t v = 0; v < c.positions.size(); ++v) {
        Rat coord = use_x ? c.positions[v].x : c.positions[v].y;
        if (frac_rat(coord - theta) == 0) return false;
    }
    for (const auto& e : c.graph.edges) {
        // also exclude segment endpoints shifted by windings
        V2q end = c.positions[e.head].as_vec() + V2q(e.winding);
        Rat coord = use_x ? end.x : end.y;
        if (frac_rat(coord - theta) == 0) return false;
    }
    return true;
}
}  // namespace detail

/// Crossing route: walk each edge segment in Lambda-coordinates and count
/// signed crossings of a generic wall in each lattice direction.
inline CurveClass degree_class_by_crossings(const ParamCurve& c) {
    static const std::pair<long, long> offsets[] = {{1, 2}, {1, 3}, {2, 5}, {3, 7},
                                                    {5, 11}, {7, 13}, {11, 17}};
    Rat theta_x, theta_y;
    bool found_x = false, found_y = false;
    for (const auto& [p, q] : offsets) {
        Rat th(p, q);
        if (!found_x && detail::theta_valid(c, th, true)) {
            theta_x = th;
            found_x = true;
        }
        if (!found_y && detail::theta_valid(c, th, false)) {
            theta_y = th;
            found_y = true;
        }
        if (found_x && found_y) break;
    }
    if (!found_x || !found_y)
        throw std::runtime_error("could not place generic walls for crossing count");

    V2i n1, n2;  // n1 = C(lambda_1^*), n2 = C(lambda_2^*)
    for (const auto& e : c.graph.edges) {
        V2q a = c.positions[e.tail].as_vec();
        V2q b = c.positions[e.head].as_vec() + V2q(e.winding);
        n1 = n1 + e.slope() * detail::signed_wall_crossings(a.x, b.x, theta_x);
        n2 = n2 + e.slope() * detail::signed_wall_crossings(a.y, b.y, theta_y);
    }
    return CurveClass(M2i{n1.x, n2.x, n1.y, n2.y});
}

/// Degree of a balanced curve; the two independent routes must agree.
inline CurveClass degree_class(const ParamCurve& c) {
    if (!check_balanced(c)) throw std::domain_error("degree of an unbalanced curve");
    CurveClass h = degree_class_holonomy(c);
    CurveClass x = degree_class_by_crossings(c);
    if (h != x) throw std::runtime_error("degree routes disagree (corrupted curve data)");
    return h;
}

// ---------------------------------------------------------------------------

/// k-fold scaling: weights times k, lengths divided by k; the image is fixed.
inline ParamCurve scale_curve(const ParamCurve& c, long k) {
    if (k < 1) throw std::domain_error("scale factor must be >= 1");
    ParamCurve r = c;
    for (auto& e : r.graph.edges) {
        e.weight *= k;
        e.length /= k;
    }
    return r;
}

inline std::vector<bool> bridge_edges(const CurveGraph& g) {
    std::vector<bool> bridge(g.edges.size(), false);
    for (std::size_t skip = 0; skip < g.edges.size(); ++skip) {
        detail::UnionFind uf(g.num_vertices);
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            if (i != skip) uf.unite(g.edges[i].tail, g.edges[i].head);
        bridge[skip] = uf.find(g.edges[skip].tail) != uf.find(g.edges[skip].head);
    }
    return bridge;
}

/// Geometric consistency, edge by edge. Empty result means well-formed.
inline std::vector<std::string> validate(const ParamCurve& c) {
    std::vector<std::string> bad;
    const auto& g = c.graph;
    if (static_cast<int>(c.positions.size()) != g.num_vertices)
        bad.push_back("vertex/position count mismatch");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        std::string tag = "edge " + std::to_string(i);
        if (e.tail < 0 || e.tail >= g.num_vertices || e.head < 0 || e.head >= g.num_vertices) {
            bad.push_back(tag + ": vertex index out of range");
            continue;
        }
        if (e.weight < 1) bad.push_back(tag + ": weight must be >= 1");
        if (e.length <= 0) bad.push_back(tag + ": length must be positive");
        if (!e.prim.is_zero() && !is_primitive(e.prim))
            bad.push_back(tag + ": slope direction is not primitive");
        // S * (coords(head) + winding - coords(tail)) == l_e * w_e * u'_e
        V2q lhs = c.torus.to_n(c.lambda_displacement(e));
        V2q rhs = V2q(e.slope()) * e.length;
        if (lhs != rhs) bad.push_back(tag + ": position/winding/slope/length inconsistency");
    }
    auto bridges = bridge_edges(g);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (bridges[i] && !g.edges[i].prim.is_zero())
            bad.push_back("edge " + std::to_string(i) +
                          ": disconnecting edge with nonzero slope");
    return bad;
}

inline std::vector<std::string> validate(const MarkedCurve& mc) {
    auto bad = validate(mc.curve);
    for (std::size_t i = 0; i < mc.marks.size(); ++i) {
        const auto& m = mc.marks[i];
        if (m.edge < 0 || m.edge >= static_cast<int>(mc.curve.graph.edges.size())) {
            bad.push_back("mark " + std::to_string(i) + ": edge index out of range");
            continue;
        }
        const auto& e = mc.curve.graph.edges[m.edge];
        if (m.t <= 0 || m.t >= e.length)
            bad.push_back("mark " + std::to_string(i) + ": parameter not interior to its edge");
    }
    return bad;
}

/// Torus point at arc parameter t along an edge.
inline TorusPoint point_on_edge(const ParamCurve& c, int edge, const Rat& t) {
    const auto& e = c.graph.edges[edge];
    V2q p = c.torus.to_n(c.positions[e.tail].as_vec()) + V2q(e.slope()) * t;
    return reduce_to_fundamental(p, c.torus).first;
}

// ---------------------------------------------------------------------------
// Construction from universal-cover data (fixtures and the enumerator)

/// Build a curve from lifted vertex positions in N-coordinates plus
/// (tail, head, slope, length) per edge; windings are derived and must close
/// up to lattice translations.
struct LiftedEdge {
    int tail, head;
    V2i slope;  // full slope w * u'
    Rat length;
};

inline ParamCurve make_curve(const TropicalTorus& torus, const std::vector<V2q>& vertex_n_pos,
                             const std::vector<LiftedEdge>& edges) {
    std::vector<TorusPoint> pos;
    std::vector<V2i> wind;
    for (const auto& p : vertex_n_pos) {
        auto [tp, w] = reduce_to_fundamental(p, torus);
        pos.push_back(tp);
        wind.push_back(w);
    }
    CurveGraph g;
    g.num_vertices = static_cast<int>(vertex_n_pos.size());
    for (const auto& le : edges) {
        EdgeData e;
        e.tail = le.tail;
        e.head = le.head;
        Int w = content(le.slope);
        if (w == 0) {
            e.weight = 1;
            e.prim = V2i{0, 0};
        } else {
            if (!w.fits_slong_p()) throw std::domain_error("edge weight out of range");
            e.weight = w.get_si();
            e.prim = V2i{le.slope.x / w, le.slope.y / w};
        }
        e.length = le.length;
        // lattice gap between the arrival lift and the stored head lift
        V2q disp = V2q(le.slope) * le.length;
        V2q gap = torus.to_lambda(vertex_n_pos[le.tail] + disp - vertex_n_pos[le.head]);
        if (!is_integer(gap.x) || !is_integer(gap.y))
            throw std::domain_error("edge does not close up to a lattice translation");
        e.winding = V2i{gap.x.get_num(), gap.y.get_num()} + wind[le.head] - wind[le.tail];
        g.edges.push_back(std::move(e));
    }
    return ParamCurve(std::move(g), torus, std::move(pos));
}

// ---------------------------------------------------------------------------
// Canonical form: vertices sorted by position, each edge in its
// lexicographically smaller orientation, edges sorted; used for isomorphism
// testing and deterministic output.

namespace detail {
struct EdgeKey {
    int tail, head;
    Int px, py, wx, wy;
    Rat len;
    long weight;

    bool operator<(const EdgeKey& o) const {
        return std::tie(tail, head, px, py, wx, wy, len, weight) <
               std::tie(o.tail, o.head, o.px, o.py, o.wx, o.wy, o.len, o.weight);
    }
    bool operator==(const EdgeKey& o) const {
        return std::tie(tail, head, px, py, wx, wy, len, weight) ==
               std::tie(o.tail, o.head, o.px, o.py, o.wx, o.wy, o.len, o.weight);
    }
};

inline EdgeKey oriented_key(const EdgeData& e, const std::vector<int>& relabel, bool flip) {
    EdgeKey k;
    if (!flip) {
        k.tail = relabel[e.tail];
        k.head = relabel[e.head];
        k.px = e.prim.x;
        k.py = e.prim.y;
        k.wx = e.winding.x;
        k.wy = e.winding.y;
    } else {
        k.tail = relabel[e.head];
        k.head = relabel[e.tail];
        k.px = -e.prim.x;
        k.py = -e.prim.y;
        k.wx = -e.winding.x;
        k.wy = -e.winding.y;
    }
    k.len = e.length;
    k.weight = e.weight;
    return k;
}
}  // namespace detail

inline MarkedCurve canonical_form(const MarkedCurve& mc) {
    const auto& g = mc.curve.graph;
    // vertex order by position, ties by original index
    std::vector<int> order(g.num_vertices);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return mc.curve.positions[a] < mc.curve.positions[b];
    });
    std::vector<int> relabel(g.num_vertices);
    for (int i = 0; i < g.num_vertices; ++i) relabel[order[i]] = i;

    struct Oriented {
        detail::EdgeKey key;
        bool flipped;
        int orig;
    };
    std::vector<Oriented> oriented;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto fwd = detail::oriented_key(g.edges[i], relabel, false);
        auto bwd = detail::oriented_key(g.edges[i], relabel, true);
        bool flip = bwd < fwd;
        oriented.push_back({flip ? bwd : fwd, flip, static_cast<int>(i)});
    }
    std::stable_sort(oriented.begin(), oriented.end(),
                     [](const Oriented& a, const Oriented& b) { return a.key < b.key; });

    CurveGraph ng;
    ng.num_vertices = g.num_vertices;
    std::vector<int> edge_relabel(g.edges.size());
    std::vector<bool> edge_flipped(g.edges.size());
    for (std::size_t i = 0; i < oriented.size(); ++i) {
        const auto& ok = oriented[i];
        EdgeData e;
        e.tail = ok.key.tail;
        e.head = ok.key.head;
        e.prim = V2i{ok.key.px, ok.key.py};
        e.winding = V2i{ok.key.wx, ok.key.wy};
        e.length = ok.key.len;
        e.weight = ok.key.weight;
        ng.edges.push_back(std::move(e));
        edge_relabel[ok.orig] = static_cast<int>(i);
        edge_flipped[ok.orig] = ok.flipped;
    }

    std::vector<TorusPoint> npos(g.num_vertices, TorusPoint{});
    for (int v = 0; v < g.num_vertices; ++v) npos[relabel[v]] = mc.curve.positions[v];

    MarkedCurve out{ParamCurve(std::move(ng), mc.curve.torus, std::move(npos)), {}};
    for (const auto& m : mc.marks) {
        Mark nm;
        nm.edge = edge_relabel[m.edge];
        nm.t = edge_flipped[m.edge] ? mc.curve.graph.edges[m.edge].length - m.t : m.t;
        out.marks.push_back(std::move(nm));
    }
    return out;
}

/// Compact deterministic text form of the canonical curve; equal strings
/// mean isomorphic marked curves (matching labels).
inline std::string canonical_key(const MarkedCurve& mc) {
    MarkedCurve c = canonical_form(mc);
    std::ostringstream os;
    const auto& s = c.curve.torus.period();
    os << "S[" << rat_str(s.a) << "," << rat_str(s.b) << "," << rat_str(s.c) << ","
       << rat_str(s.d) << "]";
    os << "V[";
    for (const auto& p : c.curve.positions) os << rat_str(p.x) << "," << rat_str(p.y) << ";";
    os << "]E[";
    for (const auto& e : c.curve.graph.edges)
        os << e.tail << ">" << e.head << ":" << e.weight << ":" << e.prim.x.get_str() << ","
           << e.prim.y.get_str() << ":" << rat_str(e.length) << ":" << e.winding.x.get_str()
           << "," << e.winding.y.get_str() << ";";
    os << "]M[";
    for (const auto& m : c.marks) os << m.edge << "@" << rat_str(m.t) << ";";
    os << "]";
    return os.str();
}

/// Audit flag: conservative detection of marked-curve automorphisms
/// (identical parallel edges or coincident vertices).
inline bool has_nontrivial_automorphism(const MarkedCurve& mc) {
    MarkedCurve c = canonical_form(mc);
    const auto& es = c.curve.graph.edges;
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
        const auto& a = es[i];
        const auto& b = es[i + 1];
        if (a.tail == b.tail && a.head == b.head && a.prim == b.prim && a.winding == b.winding &&
            a.length == b.length && a.weight == b.weight)
            return true;
    }
    for (std::size_t i = 0; i + 1 < c.curve.positions.size(); ++i)
        if (c.curve.positions[i] == c.curve.positions[i + 1]) return true;
    return false;
}

}  // namespace trop
