// Shared curve fixtures: exact transcriptions of small reference curves on
// rational tori, built from lifted vertex positions.
#pragma once

#include "trop/curve.hpp"
#include "trop/torus.hpp"

namespace fixtures {

using namespace trop;

inline TropicalTorus torus_a() { return TropicalTorus(M2q(Rat(7), Rat(2), Rat(2), Rat(9))); }
inline TropicalTorus torus_b() { return TropicalTorus(M2q(Rat(11), Rat(3), Rat(3), Rat(5))); }

/// Torus with s21 = n * s12, realizing the class diag(1, n).
inline TropicalTorus torus_1n(long n) {
    return TropicalTorus(M2q(Rat(9), Rat(2), Rat(2 * n), Rat(11)));
}

/// Genus-2 theta curve in the class I2: a tripod with legs (-1,-1), (1,0),
/// (0,1) of lengths a, b, c glued at the corner of the fundamental domain.
/// The period matrix is forced to [[a+b, a], [a, a+c]].
inline ParamCurve tripod_I2(long a = 2, long b = 3, long c = 1) {
    TropicalTorus torus(M2q(Rat(a + b), Rat(a), Rat(a), Rat(a + c)));
    V2q v1{Rat(a), Rat(a)};
    V2q v2{Rat(0), Rat(0)};
    std::vector<LiftedEdge> edges = {
        {0, 1, V2i{-1, -1}, Rat(a)},
        {0, 1, V2i{1, 0}, Rat(b)},
        {0, 1, V2i{0, 1}, Rat(c)},
    };
    return make_curve(torus, {v1, v2}, edges);
}

/// The unique genus-2 curve through two points in the class 2*I2: all edge
/// weights 2, gcd 2, both vertex multiplicities 4. Marks sit on the
/// horizontal edge (t = 3/2) and the diagonal edge (t = 1/2).
inline MarkedCurve theta22() {
    TropicalTorus torus(M2q(Rat(8), Rat(2), Rat(2), Rat(8)));
    V2q v1{Rat(6), Rat(3)};
    V2q v2{Rat(8), Rat(5)};
    std::vector<LiftedEdge> edges = {
        {0, 1, V2i{2, 2}, Rat(1)},  // diagonal
        {1, 0, V2i{2, 0}, Rat(3)},  // horizontal, wraps once
        {1, 0, V2i{0, 2}, Rat(3)},  // vertical, wraps once
    };
    ParamCurve c = make_curve(torus, {v1, v2}, edges);
    return {std::move(c), {{1, Rat(3, 2)}, {0, Rat(1, 2)}}};
}

/// Genus-2 curve with vertex multiplicities 2, gcd 1, one weight-2 edge.
/// The two mark placements below realize the two marking patterns whose
/// Theta computations differ (torsion 1 with the heavy edge marked, torsion
/// 2 with it unmarked) while both give complex multiplicity 4.
inline ParamCurve weight2_bridge_curve() {
    TropicalTorus torus(M2q(Rat(8), Rat(-2), Rat(-4), Rat(6)));
    V2q v1{Rat(4), Rat(6)};
    V2q v2{Rat(8), Rat(2)};
    std::vector<LiftedEdge> edges = {
        {0, 1, V2i{1, -1}, Rat(4)},  // diagonal
        {1, 0, V2i{2, 0}, Rat(2)},   // weight-2 edge, wraps
        {0, 1, V2i{1, 1}, Rat(2)},   // second diagonal, wraps
    };
    return make_curve(torus, {v1, v2}, edges);
}

inline MarkedCurve weight2_marked_on_heavy() {
    return {weight2_bridge_curve(), {{1, Rat(1)}, {0, Rat(2)}}};
}

inline MarkedCurve weight2_marked_off_heavy() {
    return {weight2_bridge_curve(), {{2, Rat(1)}, {0, Rat(2)}}};
}

/// Genus-2 tripod with leg slopes (-3,-2), (0,2) (weight 2), (3,0)
/// (weight 3); class [[3,0],[0,2]], vertex multiplicity 6.
inline ParamCurve tripod_weighted() {
    TropicalTorus torus(M2q(Rat(6), Rat(3), Rat(2), Rat(6)));
    V2q v1{Rat(3), Rat(2)};
    V2q v2{Rat(0), Rat(0)};
    std::vector<LiftedEdge> edges = {
        {0, 1, V2i{-3, -2}, Rat(1)},
        {0, 1, V2i{0, 2}, Rat(2)},
        {0, 1, V2i{3, 0}, Rat(1)},
    };
    return make_curve(torus, {v1, v2}, edges);
}

/// Genus-5 curve in the class [[2,0],[0,3]] on the torus [[12,2],[3,8]]:
/// two horizontal strands and three vertical strands.
inline ParamCurve genus5_23() {
    TropicalTorus torus(M2q(Rat(12), Rat(2), Rat(3), Rat(8)));
    std::vector<V2q> v = {
        {Rat(3), Rat(2)},  // A
        {Rat(4), Rat(3)},  // B
        {Rat(6), Rat(3)},  // C
        {Rat(4), Rat(5)},  // D
        {Rat(5), Rat(6)},  // E
        {Rat(9), Rat(6)},  // F
        {Rat(8), Rat(5)},  // G
        {Rat(11), Rat(8)}, // H
    };
    std::vector<LiftedEdge> edges = {
        {0, 1, V2i{1, 1}, Rat(1)},   // A-B
        {1, 3, V2i{0, 1}, Rat(2)},   // B-D
        {1, 2, V2i{1, 0}, Rat(2)},   // B-C
        {3, 4, V2i{1, 1}, Rat(1)},   // D-E
        {4, 5, V2i{1, 0}, Rat(4)},   // E-F
        {6, 2, V2i{0, 1}, Rat(6)},   // G-C, wraps up
        {6, 0, V2i{1, 0}, Rat(7)},   // G-A, wraps right
        {5, 7, V2i{0, -1}, Rat(6)},  // F-H, wraps down
        {5, 7, V2i{1, 1}, Rat(2)},   // F-H direct
        {7, 3, V2i{1, 0}, Rat(5)},   // H-D, wraps right
        {4, 0, V2i{0, 1}, Rat(4)},   // E-A, wraps up
        {2, 6, V2i{1, 1}, Rat(2)},   // C-G
    };
    return make_curve(torus, v, edges);
}

/// Genus-5 curve in the class 2*I2 on the square torus of side 5: the grid
/// curve carrying the five-point lifting set of the unfolding example.
inline ParamCurve genus5_grid() {
    TropicalTorus torus(M2q(Rat(5), Rat(0), Rat(0), Rat(5)));
    std::vector<V2q> v = {
        {Rat(1), Rat(2)}, {Rat(2), Rat(1)}, {Rat(3), Rat(1)}, {Rat(4), Rat(2)},
        {Rat(1), Rat(3)}, {Rat(2), Rat(4)}, {Rat(3), Rat(4)}, {Rat(4), Rat(3)},
    };
    std::vector<LiftedEdge> edges = {
        {0, 1, V2i{1, -1}, Rat(1)},  // 0
        {1, 2, V2i{1, 0}, Rat(1)},   // 1
        {2, 3, V2i{1, 1}, Rat(1)},   // 2
        {3, 0, V2i{1, 0}, Rat(2)},   // 3: bottom horizontal, wraps
        {4, 5, V2i{1, 1}, Rat(1)},   // 4
        {5, 6, V2i{1, 0}, Rat(1)},   // 5
        {6, 7, V2i{1, -1}, Rat(1)},  // 6
        {7, 4, V2i{1, 0}, Rat(2)},   // 7: top horizontal, wraps
        {4, 0, V2i{0, -1}, Rat(1)},  // 8
        {5, 1, V2i{0, 1}, Rat(2)},   // 9: vertical, wraps
        {6, 2, V2i{0, 1}, Rat(2)},   // 10: vertical, wraps
        {7, 3, V2i{0, -1}, Rat(1)},  // 11
    };
    return make_curve(torus, v, edges);
}

/// The five cut points of the unfolding example (complement is a tree).
inline std::vector<Mark> genus5_grid_lifting_points() {
    return {{3, Rat(3, 2)}, {8, Rat(1, 2)}, {10, Rat(3, 2)}, {5, Rat(1, 2)}, {9, Rat(1, 2)}};
}

/// Simple genus-3 curve in the class [[1,0],[0,2]]: one horizontal loop and
/// two vertical loops, each vertical loop a long wrap arc plus a short
/// diagonal step.
inline ParamCurve genus3_stretched() {
    TropicalTorus torus(M2q(Rat(13), Rat(1), Rat(2), Rat(11)));
    std::vector<V2q> v = {
        {Rat(3), Rat(2)},   // loop 1 entry
        {Rat(4), Rat(3)},   // loop 1 exit
        {Rat(9), Rat(3)},   // loop 2 entry
        {Rat(10), Rat(4)},  // loop 2 exit
    };
    std::vector<LiftedEdge> edges = {
        {1, 2, V2i{1, 0}, Rat(5)},    // horizontal link
        {3, 0, V2i{1, 0}, Rat(6)},    // horizontal, wraps
        {0, 1, V2i{1, 1}, Rat(1)},    // diagonal step of loop 1
        {2, 3, V2i{1, 1}, Rat(1)},    // diagonal step of loop 2
        {0, 1, V2i{0, -1}, Rat(10)},  // arc of loop 1, wraps
        {2, 3, V2i{0, -1}, Rat(10)},  // arc of loop 2, wraps
    };
    return make_curve(torus, v, edges);
}

/// Two parallel edges plus a balancing third; cutting the two non-parallel
/// edges leaves a null-homotopic reinsertion loop (gamma = 0).
inline ParamCurve parallel_pair() {
    TropicalTorus torus(M2q(Rat(5), Rat(0), Rat(0), Rat(5)));
    V2q v1{Rat(1), Rat(1)};
    V2q v2{Rat(2), Rat(2)};
    std::vector<LiftedEdge> edges = {
        {0, 1, V2i{1, 1}, Rat(1)},    // 0
        {0, 1, V2i{1, 1}, Rat(1)},    // 1: parallel copy
        {0, 1, V2i{-2, -2}, Rat(2)},  // 2: closes the balancing, wraps
    };
    return make_curve(torus, {v1, v2}, edges);
}

/// Dumbbell with a contracted bridge: two weight-1 circles joined by a
/// zero-slope edge. Balanced, valid, but not simple.
inline ParamCurve contracted_dumbbell() {
    TropicalTorus torus(M2q(Rat(5), Rat(0), Rat(0), Rat(5)));
    CurveGraph g;
    g.num_vertices = 2;
    EdgeData loop1;
    loop1.tail = 0;
    loop1.head = 0;
    loop1.weight = 1;
    loop1.prim = V2i{1, 0};
    loop1.length = Rat(5);
    loop1.winding = V2i{1, 0};
    EdgeData loop2 = loop1;
    loop2.tail = 1;
    loop2.head = 1;
    loop2.prim = V2i{0, 1};
    loop2.winding = V2i{0, 1};
    EdgeData bridge;
    bridge.tail = 0;
    bridge.head = 1;
    bridge.weight = 1;
    bridge.prim = V2i{0, 0};
    bridge.length = Rat(1);
    bridge.winding = V2i{0, 0};
    g.edges = {loop1, loop2, bridge};
    std::vector<TorusPoint> pos = {TorusPoint(Rat(1, 5), Rat(2, 5)),
                                   TorusPoint(Rat(1, 5), Rat(2, 5))};
    return ParamCurve(std::move(g), torus, std::move(pos));
}

/// Marked-curve scaling: weights and mark parameters transform together.
inline MarkedCurve scale_marked(const MarkedCurve& mc, long k) {
    MarkedCurve out{scale_curve(mc.curve, k), mc.marks};
    for (auto& m : out.marks) m.t /= k;
    return out;
}

}  // namespace fixtures
