// Cutting/lifting: cut a torus curve along a lifting set, unfold the
// complement to the plane N_R, and verify the moment and gluing identities.
// Also the deformation-space dimension of a simple curve.
#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "curve.hpp"
#include "intmatrix.hpp"
#include "numeric.hpp"

namespace trop {

/// Cut points on the edges of a ParamCurve.
struct LiftingSet {
    std::vector<Mark> points;
};

struct PlanarEdge {
    int tail = 0, head = 0;
    long weight = 1;
    V2i prim;
    Rat length{1};
};

struct PlanarEnd {
    int vertex = 0;       // incident lifted vertex
    V2i slope;            // outgoing full slope w * u'
    long weight = 1;
    V2i prim;
    int partner = -1;     // index of the matching end
    V2i gamma;            // class of the loop closed by reinserting the cut point
    int orig_edge = -1;   // edge of the torus curve that was cut
    bool tail_side = true;
    Rat cut_t{0};
};

/// A curve in the plane with paired unbounded ends; `positions` are
/// N-coordinates of the lifted vertices.
struct PlanarCurve {
    std::vector<V2q> positions;
    std::vector<PlanarEdge> edges;
    std::vector<PlanarEnd> ends;
};

namespace detail {

struct LiftScaffold {
    std::vector<bool> edge_cut;
    std::vector<std::optional<V2i>> offset;  // lattice offset of each vertex lift
    bool connected = true;
    bool holonomy_free = true;  // all cycle windings of the cut graph vanish
    bool multi_cut_edge = false;
};

inline LiftScaffold build_scaffold(const ParamCurve& c, const LiftingSet& q) {
    const auto& g = c.graph;
    LiftScaffold sc;
    sc.edge_cut.assign(g.edges.size(), false);
    for (const auto& m : q.points) {
        if (m.edge < 0 || m.edge >= static_cast<int>(g.edges.size()))
            throw std::domain_error("lifting set refers to a nonexistent edge");
        const auto& e = g.edges[m.edge];
        if (m.t <= 0 || m.t >= e.length)
            throw std::domain_error("lifting set point not interior to its edge");
        if (sc.edge_cut[m.edge]) sc.multi_cut_edge = true;
        sc.edge_cut[m.edge] = true;
    }

    // BFS over uncut edges from vertex 0, accumulating winding offsets.
    sc.offset.assign(g.num_vertices, std::nullopt);
    if (g.num_vertices == 0) return sc;
    std::vector<std::vector<std::pair<int, bool>>> adj(g.num_vertices);  // (edge, forward)
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (sc.edge_cut[i]) continue;
        adj[g.edges[i].tail].push_back({static_cast<int>(i), true});
        adj[g.edges[i].head].push_back({static_cast<int>(i), false});
    }
    std::queue<int> bfs;
    sc.offset[0] = V2i{0, 0};
    bfs.push(0);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (auto [ei, fwd] : adj[v]) {
            const auto& e = g.edges[ei];
            int w = fwd ? e.head : e.tail;
            V2i off = fwd ? *sc.offset[v] + e.winding : *sc.offset[v] - e.winding;
            if (!sc.offset[w]) {
                sc.offset[w] = off;
                bfs.push(w);
            } else if (*sc.offset[w] != off) {
                sc.holonomy_free = false;  // a cycle of the cut graph winds nontrivially
            }
        }
    }
    for (int v = 0; v < g.num_vertices; ++v)
        if (!sc.offset[v]) sc.connected = false;
    return sc;
}

}  // namespace detail

/// True iff every cycle of the complement of the cut points has zero winding
/// (the curve restricted to the complement lifts to the plane).
inline bool is_lifting_set(const ParamCurve& c, const LiftingSet& q) {
    auto sc = detail::build_scaffold(c, q);
    if (sc.connected) return sc.holonomy_free;
    // disconnected complement: check each component separately
    const auto& g = c.graph;
    std::vector<int> comp(g.num_vertices, -1);
    int ncomp = 0;
    std::vector<std::vector<std::pair<int, bool>>> adj(g.num_vertices);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (sc.edge_cut[i]) continue;
        adj[g.edges[i].tail].push_back({static_cast<int>(i), true});
        adj[g.edges[i].head].push_back({static_cast<int>(i), false});
    }
    std::vector<std::optional<V2i>> off(g.num_vertices);
    for (int root = 0; root < g.num_vertices; ++root) {
        if (comp[root] >= 0) continue;
        std::queue<int> bfs;
        comp[root] = ncomp++;
        off[root] = V2i{0, 0};
        bfs.push(root);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (auto [ei, fwd] : adj[v]) {
                const auto& e = c.graph.edges[ei];
                int w = fwd ? e.head : e.tail;
                V2i o = fwd ? *off[v] + e.winding : *off[v] - e.winding;
                if (comp[w] < 0) {
                    comp[w] = comp[v];
                    off[w] = o;
                    bfs.push(w);
                } else if (*off[w] != o) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Unfold the complement of a lifting set to N_R. The lowest-indexed vertex
/// anchors the lift at its fundamental-domain representative. Requires a
/// lifting set whose complement is connected (one cut point per edge at most).
inline PlanarCurve cut_and_lift(const ParamCurve& c, const LiftingSet& q) {
    auto sc = detail::build_scaffold(c, q);
    if (sc.multi_cut_edge)
        throw std::domain_error("cut_and_lift: several cut points on one edge");
    if (!sc.connected) throw std::domain_error("cut_and_lift: complement is disconnected");
    if (!sc.holonomy_free) throw std::domain_error("cut_and_lift: set is not lifting");

    const auto& g = c.graph;
    PlanarCurve pc;
    pc.positions.reserve(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v)
        pc.positions.push_back(c.torus.to_n(c.positions[v].as_vec() + V2q(*sc.offset[v])));

    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (sc.edge_cut[i]) continue;
        pc.edges.push_back({e.tail, e.head, e.weight, e.prim, e.length});
    }
    for (const auto& m : q.points) {
        const auto& e = g.edges[m.edge];
        // loop through the reinserted point: the cut edge forward, then back
        // through the complement; its class is the winding mismatch.
        V2i gamma = e.winding + *sc.offset[e.tail] - *sc.offset[e.head];
        int i_tail = static_cast<int>(pc.ends.size());
        int i_head = i_tail + 1;
        PlanarEnd end_tail{e.tail, e.slope(),  e.weight, e.prim,
                           i_head, gamma,      static_cast<int>(m.edge), true, m.t};
        PlanarEnd end_head{e.head, -e.slope(), e.weight, -e.prim,
                           i_tail, gamma,      static_cast<int>(m.edge), false, m.t};
        pc.ends.push_back(end_tail);
        pc.ends.push_back(end_head);
    }
    return pc;
}

/// Moment det(n_e, p) of an unbounded end; independent of the point chosen
/// on the end because det(n, n) = 0.
inline Rat end_moment(const PlanarCurve& pc, int end_index) {
    const auto& e = pc.ends[end_index];
    return cross(V2q(e.slope), pc.positions[e.vertex]);
}

/// Tropical Menelaus: the moments of the unbounded ends sum to zero.
inline bool check_menelaus(const PlanarCurve& pc) {
    Rat s = 0;
    for (int i = 0; i < static_cast<int>(pc.ends.size()); ++i) s += end_moment(pc, i);
    return s == 0;
}

/// The gluing identity det(n_i, e_i) + det(-n_i, f_i) = det(n_i, S gamma) at
/// every cut point, plus straightness of the lifted bounded edges. Fails on
/// any corrupted winding or position; errors only on malformed lifting sets.
inline bool check_gluing(const ParamCurve& c, const LiftingSet& q) {
    auto sc = detail::build_scaffold(c, q);
    if (sc.multi_cut_edge || !sc.connected) throw std::domain_error("gluing check needs a one-cut-per-edge lifting set with connected complement");
    if (!sc.holonomy_free) return false;

    const auto& g = c.graph;
    auto lift = [&](int v) {
        return c.torus.to_n(c.positions[v].as_vec() + V2q(*sc.offset[v]));
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (sc.edge_cut[i]) continue;
        const auto& e = g.edges[i];
        if (lift(e.head) - lift(e.tail) != V2q(e.slope()) * e.length) return false;
    }
    for (const auto& m : q.points) {
        const auto& e = g.edges[m.edge];
        V2i gamma = e.winding + *sc.offset[e.tail] - *sc.offset[e.head];
        V2q n(e.slope());
        Rat lhs = cross(n, lift(e.tail)) - cross(n, lift(e.head));
        Rat rhs = cross(n, c.torus.to_n(gamma));
        if (lhs != rhs) return false;
    }
    return true;
}

/// Dimension of the space of deformations of a simple curve: kernel of the
/// per-edge collinearity system det(u'_e, dpos_head - dpos_tail) = 0 with the
/// windings held fixed and the lengths eliminated. Equals the genus.
inline int deformation_dimension(const ParamCurve& c) {
    auto simple = is_simple(c);
    if (!simple.ok) throw std::domain_error("deformation dimension needs a simple curve: " + simple.reason);
    const auto& g = c.graph;
    IntMatrix d(static_cast<int>(g.edges.size()), 2 * g.num_vertices);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        int r = static_cast<int>(i);
        // det(u', p) = u'_x p_y - u'_y p_x
        d(r, 2 * e.head) -= e.prim.y;
        d(r, 2 * e.head + 1) += e.prim.x;
        d(r, 2 * e.tail) += e.prim.y;
        d(r, 2 * e.tail + 1) -= e.prim.x;
    }
    return 2 * g.num_vertices - int_rank(std::move(d));
}

}  // namespace trop
