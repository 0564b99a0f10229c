// Multiplicities of a simple tropical curve: vertex determinants, the
// classical and refined products, and the lattice map whose cokernel torsion
// gives the correspondence-theorem multiplicity.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "curve.hpp"
#include "intmatrix.hpp"
#include "laurent.hpp"
#include "lifting.hpp"
#include "numeric.hpp"

namespace trop {

/// |det| of two of the three outgoing slopes at a trivalent vertex.
inline Int vertex_multiplicity(const ParamCurve& c, int v) {
    std::vector<V2i> out;
    for (const auto& e : c.graph.edges) {
        if (e.tail == v) out.push_back(e.slope());
        if (e.head == v) out.push_back(-e.slope());
    }
    if (out.size() != 3)
        throw std::domain_error("vertex multiplicity needs a trivalent vertex");
    return abs(cross(out[0], out[1]));
}

inline std::vector<Int> vertex_multiplicities(const ParamCurve& c) {
    std::vector<Int> ms;
    for (int v = 0; v < c.graph.num_vertices; ++v) ms.push_back(vertex_multiplicity(c, v));
    return ms;
}

/// m_Gamma = prod_V m_V.
inline Int classical_multiplicity(const ParamCurve& c) {
    Int m = 1;
    for (int v = 0; v < c.graph.num_vertices; ++v) {
        Int mv = vertex_multiplicity(c, v);
        if (mv == 0) throw std::domain_error("vertex of multiplicity zero (curve not simple)");
        m *= mv;
    }
    return m;
}

/// m^q_Gamma = prod_V [m_V]_q.
inline Laurent refined_multiplicity(const ParamCurve& c) {
    Laurent m = Laurent::constant(1);
    for (int v = 0; v < c.graph.num_vertices; ++v) {
        Int mv = vertex_multiplicity(c, v);
        if (mv == 0) throw std::domain_error("vertex of multiplicity zero (curve not simple)");
        if (!mv.fits_slong_p()) throw std::domain_error("vertex multiplicity out of range");
        m = m * quantum_integer(mv.get_si());
    }
    return m;
}

/// m^C_Gamma = delta_Gamma * m_Gamma (product form of the correspondence
/// multiplicity).
inline Int complex_multiplicity(const ParamCurve& c) {
    return curve_gcd(c) * classical_multiplicity(c);
}

/// Parity lemma: sum_V m_V / delta_Gamma is even.
inline bool check_parity(const ParamCurve& c) {
    Int delta = curve_gcd(c);
    Int s = 0;
    for (int v = 0; v < c.graph.num_vertices; ++v) s += vertex_multiplicity(c, v);
    if (s % delta != 0) return false;
    return (s / delta) % 2 == 0;
}

// ---------------------------------------------------------------------------
// The lattice map Theta of a marked curve

namespace detail {

struct SubEdge {
    int tail, head;  // indices into the subdivided vertex set
    V2i prim;
    long weight;
};

struct Subdivision {
    int num_vertices = 0;               // original vertices first, then mark vertices
    std::vector<SubEdge> edges;
    std::vector<int> mark_vertex;       // subdivided vertex of each labeled mark
    std::vector<long> weights;          // per subdivided edge
};

/// Subdivide the marked edges at their mark parameters. Bivalent mark
/// vertices inherit the ambient slope and weight on both halves.
inline Subdivision subdivide_at_marks(const MarkedCurve& mc) {
    const auto& g = mc.curve.graph;
    Subdivision sub;
    sub.num_vertices = g.num_vertices + static_cast<int>(mc.marks.size());
    sub.mark_vertex.resize(mc.marks.size());

    std::vector<std::vector<int>> marks_on_edge(g.edges.size());
    for (std::size_t i = 0; i < mc.marks.size(); ++i) {
        const auto& m = mc.marks[i];
        if (m.edge < 0 || m.edge >= static_cast<int>(g.edges.size()))
            throw std::domain_error("mark on a nonexistent edge");
        const auto& e = g.edges[m.edge];
        if (m.t <= 0 || m.t >= e.length)
            throw std::domain_error("mark parameter not interior to its edge");
        marks_on_edge[m.edge].push_back(static_cast<int>(i));
    }
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const auto& e = g.edges[ei];
        auto ms = marks_on_edge[ei];
        std::sort(ms.begin(), ms.end(),
                  [&](int a, int b) { return mc.marks[a].t < mc.marks[b].t; });
        int prev = e.tail;
        for (int mi : ms) {
            int mv = g.num_vertices + mi;
            sub.mark_vertex[mi] = mv;
            sub.edges.push_back({prev, mv, e.prim, e.weight});
            prev = mv;
        }
        sub.edges.push_back({prev, e.head, e.prim, e.weight});
    }
    for (const auto& se : sub.edges) sub.weights.push_back(se.weight);
    return sub;
}

/// Complement of the marks is a tree <=> the unmarked edges form a spanning
/// tree of the original graph.
inline bool complement_is_tree(const MarkedCurve& mc) {
    const auto& g = mc.curve.graph;
    std::vector<bool> marked(g.edges.size(), false);
    for (const auto& m : mc.marks) {
        if (m.edge < 0 || m.edge >= static_cast<int>(g.edges.size())) return false;
        if (marked[m.edge]) return false;  // two marks on one edge leave a loose segment
        marked[m.edge] = true;
    }
    UnionFind uf(g.num_vertices);
    int kept = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (marked[i]) continue;
        ++kept;
        uf.unite(g.edges[i].tail, g.edges[i].head);
    }
    int comps = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (uf.find(v) == v) ++comps;
    return comps == 1 && kept == g.num_vertices - 1;
}

}  // namespace detail

struct ThetaRow {
    enum class Kind { Edge, Point };
    Kind kind;
    int index;    // subdivided edge index, or mark index
    V2i prim;     // directing vector used for the quotient coordinate (edge rows)
    bool flipped; // orientation actually used, relative to the stored one
};

// Row count: one quotient coordinate per subdivided edge plus two full
// coordinates per marked point, |E'| + 2g rows. Since subdividing at g marks
// adds g edges, this equals |E| + 3g, and for a trivalent genus-g graph
// (|E| = 3g-3) both expressions come to 6g-3 against 2|V'| = 6g-4 columns.
struct ThetaMatrix {
    IntMatrix mat;                          // (|E'| + 2g) x (2|V'|)
    std::vector<ThetaRow> rows;
    std::vector<std::pair<int, int>> cols;  // (subdivided vertex, coordinate)
    std::vector<long> edge_weights;         // weights of the subdivided edges
    int genus = 0;
};

/// The map (phi_v) -> (phi_e mod N_e, phi_{v_i}) of the marked curve, with
/// det(u'_e, .) as the coordinate on each quotient line. Orientations default
/// to tail < head (ties by edge index); `flip_override` lets tests rebuild
/// with arbitrary orientations.
inline ThetaMatrix build_theta(const MarkedCurve& mc,
                               const std::vector<bool>* flip_override = nullptr) {
    auto simple = is_simple(mc.curve);
    if (!simple.ok) throw std::domain_error("Theta needs a simple curve: " + simple.reason);
    int g = genus(mc.curve);
    if (static_cast<int>(mc.marks.size()) != g)
        throw std::domain_error("Theta needs exactly g marked points");
    if (!detail::complement_is_tree(mc))
        throw std::domain_error("Theta needs marks whose complement is a tree");

    auto sub = detail::subdivide_at_marks(mc);
    const int ne = static_cast<int>(sub.edges.size());
    ThetaMatrix th;
    th.genus = g;
    th.edge_weights = sub.weights;
    th.mat = IntMatrix(ne + 2 * g, 2 * sub.num_vertices);
    for (int v = 0; v < sub.num_vertices; ++v) {
        th.cols.push_back({v, 0});
        th.cols.push_back({v, 1});
    }
    for (int i = 0; i < ne; ++i) {
        const auto& e = sub.edges[i];
        bool flip = e.tail > e.head;  // canonical: orient toward the larger index
        if (flip_override) flip = (*flip_override)[i];
        int tail = flip ? e.head : e.tail;
        int head = flip ? e.tail : e.head;
        V2i u = flip ? -e.prim : e.prim;
        // det(u, phi_head) - det(u, phi_tail)
        th.mat(i, 2 * head) -= u.y;
        th.mat(i, 2 * head + 1) += u.x;
        th.mat(i, 2 * tail) += u.y;
        th.mat(i, 2 * tail + 1) -= u.x;
        th.rows.push_back({ThetaRow::Kind::Edge, i, u, flip});
    }
    for (int p = 0; p < g; ++p) {
        int mv = sub.mark_vertex[p];
        th.mat(ne + 2 * p, 2 * mv) = 1;
        th.mat(ne + 2 * p + 1, 2 * mv + 1) = 1;
        th.rows.push_back({ThetaRow::Kind::Point, p, V2i{0, 0}, false});
        th.rows.push_back({ThetaRow::Kind::Point, p, V2i{0, 0}, false});
    }
    return th;
}

/// The linear form with coefficient w_e / delta on each edge row; its
/// composition with Theta vanishes by balancing.
inline std::vector<Int> phi_functional(const ThetaMatrix& th, const Int& delta) {
    std::vector<Int> phi(th.mat.rows(), Int(0));
    for (int r = 0; r < th.mat.rows(); ++r)
        if (th.rows[r].kind == ThetaRow::Kind::Edge)
            phi[r] = Int(th.edge_weights[th.rows[r].index]) / delta;
    return phi;
}

inline bool phi_annihilates_theta(const ThetaMatrix& th, const Int& delta) {
    auto phi = phi_functional(th, delta);
    for (int j = 0; j < th.mat.cols(); ++j) {
        Int s = 0;
        for (int r = 0; r < th.mat.rows(); ++r) s += phi[r] * th.mat(r, j);
        if (s != 0) return false;
    }
    return true;
}

/// |torsion coker Theta| * prod of subdivided-edge weights, torsion computed
/// through the Smith divisors.
inline Int nishinou_multiplicity(const MarkedCurve& mc) {
    ThetaMatrix th = build_theta(mc);
    SnfResult snf = smith_normal_form(th.mat);
    if (snf.rank != th.mat.cols())
        throw std::domain_error("Theta is not injective (unexpected for a rigid marked curve)");
    Int m = snf.divisor_product();
    for (long w : th.edge_weights) m *= w;
    return m;
}

/// Independent route: the torsion order as the gcd of the maximal minors.
inline Int nishinou_multiplicity_via_minors(const MarkedCurve& mc) {
    ThetaMatrix th = build_theta(mc);
    Int m = maximal_minor_gcd(th.mat);
    for (long w : th.edge_weights) m *= w;
    return m;
}

/// Product theorem: the Theta-cokernel multiplicity equals
/// delta_Gamma * prod_V m_V, both routes.
inline bool check_product_theorem(const MarkedCurve& mc) {
    Int product_form = complex_multiplicity(mc.curve);
    return nishinou_multiplicity(mc) == product_form &&
           nishinou_multiplicity_via_minors(mc) == product_form;
}

/// Everything the per-curve CLI report needs.
struct MultReport {
    std::vector<Int> vertex_mults;
    Int classical{0};
    Laurent refined;
    Int gcd{0};
    Int complex_product{0};
    Int complex_theta{0};
    bool parity_ok = false;
    bool agreement = false;
};

inline MultReport multiplicity_report(const MarkedCurve& mc) {
    MultReport r;
    r.vertex_mults = vertex_multiplicities(mc.curve);
    r.classical = classical_multiplicity(mc.curve);
    r.refined = refined_multiplicity(mc.curve);
    r.gcd = curve_gcd(mc.curve);
    r.complex_product = r.gcd * r.classical;
    r.complex_theta = nishinou_multiplicity(mc);
    r.parity_ok = check_parity(mc.curve);
    r.agreement = r.complex_theta == r.complex_product &&
                  nishinou_multiplicity_via_minors(mc) == r.complex_product;
    return r;
}

}  // namespace trop
