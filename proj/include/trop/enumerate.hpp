// Exhaustive genus-2 enumeration through two labeled points, invariant
// assembly per gcd, the class-(1,n) closed forms, and the invariance
// regression across point configurations and tori.
//
// A simple genus-2 curve is a theta graph: two trivalent vertices joined by
// three edges (a dumbbell's bridge would carry slope zero and is not simple).
// With the third winding gauged to zero, the slopes determine the windings
// from the class and the windings determine the lengths, so the search space
// is the finite set of balanced slope triples times the discrete mark data.
#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "laurent.hpp"
#include "multiplicity.hpp"
#include "numeric.hpp"
#include "numtheory.hpp"
#include "torus.hpp"

namespace trop {

/// Raised when the configuration fails a genericity check; the caller should
/// resample the points.
class NonGenericConfiguration : public std::runtime_error {
  public:
    explicit NonGenericConfiguration(const std::string& what) : std::runtime_error(what) {}
};

struct EnumOptions {
    long slope_margin = 2;   // added to the row sums of |C|
    long winding_bound = 0;  // 0 = auto: max(delta(C), max |C entry|) + 2
    long mu_margin = 2;      // mark-offset box = winding bound + mu_margin
    long scale = 1;          // multiplies every box (bound-doubling runs use 2)
    int threads = 1;
};

struct ResolvedBounds {
    long slope_x = 0, slope_y = 0;  // |s_x| <= slope_x, |s_y| <= slope_y
    long winding = 0;               // |lambda|_inf bound in the lambda_3 = 0 gauge
    long mu = 0;                    // mark lattice-offset box
};

inline ResolvedBounds resolve_bounds(const CurveClass& c, const EnumOptions& opt) {
    auto to_long = [](const Int& v) {
        if (!v.fits_slong_p()) throw std::domain_error("class entry out of range");
        return std::abs(v.get_si());
    };
    long a = to_long(c.m.a), b = to_long(c.m.b), cc = to_long(c.m.c), d = to_long(c.m.d);
    ResolvedBounds r;
    r.slope_x = (a + b + opt.slope_margin) * opt.scale;
    r.slope_y = (cc + d + opt.slope_margin) * opt.scale;
    long wb = opt.winding_bound;
    if (wb <= 0) {
        Int delta = class_integral_length(c);
        long maxe = std::max(std::max(a, b), std::max(cc, d));
        wb = std::max(delta.fits_slong_p() ? delta.get_si() : maxe, maxe) + 2;
    }
    r.winding = wb * opt.scale;
    r.mu = r.winding + opt.mu_margin * opt.scale;
    return r;
}

struct Solution {
    MarkedCurve mc;  // canonical form
    std::string key;
    Int gcd{1};
    Int classical{1};
    Laurent refined;
    bool automorphism_flag = false;
};

struct GenericityCertificate {
    bool points_distinct = false;
    bool marks_interior = false;       // no mark parameter hit an edge endpoint
    bool single_point_preimages = false;
    bool all_verified = false;         // per-solution invariant battery passed
};

struct SolutionSet {
    TropicalTorus torus;
    CurveClass cls;
    std::vector<TorusPoint> points;
    ResolvedBounds bounds;
    std::vector<Solution> solutions;  // sorted by canonical key
    GenericityCertificate certificate;
};

namespace detail {

struct ThetaShape {
    V2i s[3];     // full slopes, oriented A -> B, s0 + s1 + s2 = 0
    V2i lam[3];   // windings in the lam[2] = 0 gauge
    Rat len[3];   // positive lengths
};

/// Slopes + class determine the gauge windings; windings + torus determine
/// the lengths. Returns nothing when any step fails.
inline std::optional<ThetaShape> solve_shape(const TropicalTorus& torus, const CurveClass& cls,
                                             const V2i& s0, const V2i& s1,
                                             const ResolvedBounds& bounds) {
    ThetaShape sh;
    sh.s[0] = s0;
    sh.s[1] = s1;
    sh.s[2] = -s0 - s1;
    Int det = cross(s0, s1);
    if (det == 0) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        if (sh.s[i].is_zero()) return std::nullopt;
    if (cross(sh.s[1], sh.s[2]) == 0 || cross(sh.s[0], sh.s[2]) == 0) return std::nullopt;

    // windings: column j of C equals lam0[j] s0 + lam1[j] s1
    for (int j = 0; j < 2; ++j) {
        V2i rhs = cls.m.col(j);
        Int n0 = cross(rhs, s1), n1 = cross(s0, rhs);
        if (n0 % det != 0 || n1 % det != 0) return std::nullopt;
        (j == 0 ? sh.lam[0].x : sh.lam[0].y) = n0 / det;
        (j == 0 ? sh.lam[1].x : sh.lam[1].y) = n1 / det;
    }
    sh.lam[2] = V2i{0, 0};
    for (int i = 0; i < 2; ++i) {
        if (abs(sh.lam[i].x) > bounds.winding || abs(sh.lam[i].y) > bounds.winding)
            return std::nullopt;
    }

    // lengths: l_i s_i - l_2 s_2 = S lam_i for i = 0, 1, sharing l_2
    auto sol_a = solve2x2(V2q(sh.s[0]), -V2q(sh.s[2]), torus.to_n(sh.lam[0]));
    auto sol_b = solve2x2(V2q(sh.s[1]), -V2q(sh.s[2]), torus.to_n(sh.lam[1]));
    if (!sol_a || !sol_b) return std::nullopt;
    if (sol_a->y != sol_b->y) return std::nullopt;  // the three-edge closing condition
    sh.len[0] = sol_a->x;
    sh.len[1] = sol_b->x;
    sh.len[2] = sol_a->y;
    for (int i = 0; i < 3; ++i)
        if (sh.len[i] <= 0) return std::nullopt;
    return sh;
}

inline MarkedCurve realize_marked(const TropicalTorus& torus, const ThetaShape& sh,
                                  const V2q& p1_n, int edge_a, const Rat& t_a, int edge_b,
                                  const Rat& t_b) {
    V2q x = p1_n - V2q(sh.s[edge_a]) * t_a;           // lift of vertex A
    V2q y = x + V2q(sh.s[2]) * sh.len[2];             // lift of vertex B (gauge edge)
    std::vector<LiftedEdge> edges;
    for (int i = 0; i < 3; ++i) edges.push_back({0, 1, sh.s[i], sh.len[i]});
    ParamCurve pc = make_curve(torus, {x, y}, edges);
    MarkedCurve mc{std::move(pc), {{edge_a, t_a}, {edge_b, t_b}}};
    return mc;
}

/// Number of interior points of the curve mapping to p (vertex hits throw).
inline int count_preimages(const ParamCurve& c, const TorusPoint& p, long mu_bound) {
    int hits = 0;
    for (int v = 0; v < c.graph.num_vertices; ++v)
        if (c.positions[v] == p)
            throw NonGenericConfiguration("a constraint point coincides with a vertex");
    for (const auto& e : c.graph.edges) {
        V2q base = c.torus.to_n(c.positions[e.tail].as_vec());
        V2q slope(e.slope());
        for (long mx = -mu_bound; mx <= mu_bound; ++mx)
            for (long my = -mu_bound; my <= mu_bound; ++my) {
                V2q target = c.torus.to_n(p.as_vec() + V2q(V2i{mx, my}));
                V2q d = target - base;
                if (cross(slope, d) != 0) continue;
                Rat t = slope.x != 0 ? d.x / slope.x : d.y / slope.y;
                if (t > 0 && t < e.length) ++hits;
                if (t == 0 || t == e.length)
                    throw NonGenericConfiguration("a constraint point sits on a vertex");
            }
    }
    return hits;
}

}  // namespace detail

/// Every invariant a solution must satisfy; returns the violations.
inline std::vector<std::string> verify_solution(const MarkedCurve& mc, const CurveClass& cls,
                                                const std::vector<TorusPoint>& pts) {
    std::vector<std::string> bad = validate(mc);
    if (!check_balanced(mc.curve)) bad.push_back("not balanced");
    auto simple = is_simple(mc.curve);
    if (!simple.ok) bad.push_back("not simple: " + simple.reason);
    if (genus(mc.curve) != 2) bad.push_back("genus is not 2");
    if (bad.empty()) {
        if (degree_class(mc.curve) != cls) bad.push_back("degree mismatch");
        if (!detail::complement_is_tree(mc)) bad.push_back("mark complement is not a tree");
        if (!check_parity(mc.curve)) bad.push_back("parity lemma fails");
        if (!check_product_theorem(mc)) bad.push_back("multiplicity routes disagree");
        if (deformation_dimension(mc.curve) != 2) bad.push_back("deformation dimension != 2");
        for (std::size_t i = 0; i < mc.marks.size(); ++i)
            if (point_on_edge(mc.curve, mc.marks[i].edge, mc.marks[i].t) != pts[i])
                bad.push_back("mark " + std::to_string(i) + " misses its point");
    }
    return bad;
}

/// Exhaustive (within bounds) list of simple genus-2 marked curves in the
/// class through the two labeled points, deduplicated up to isomorphism.
inline SolutionSet enumerate_genus2(const TropicalTorus& torus, const CurveClass& cls,
                                    const TorusPoint& p1, const TorusPoint& p2,
                                    const EnumOptions& opt = {}) {
    if (!is_realizable(cls, torus))
        throw std::domain_error("class is not realizable on this torus (C S^T not symmetric)");
    if (p1 == p2) throw std::domain_error("constraint points must be distinct");

    ResolvedBounds bounds = resolve_bounds(cls, opt);
    const long nx = 2 * bounds.slope_x + 1, ny = 2 * bounds.slope_y + 1;
    const long per_slope = nx * ny;
    const long total_pairs = per_slope * per_slope;

    V2q p1_n = torus.to_n(p1.as_vec());
    V2q p2_n = torus.to_n(p2.as_vec());

    auto run_range = [&](long lo, long hi) {
        std::vector<std::pair<std::string, Solution>> found;
        for (long idx = lo; idx < hi; ++idx) {
            long i0 = idx / per_slope, i1 = idx % per_slope;
            V2i s0{i0 / ny - bounds.slope_x, i0 % ny - bounds.slope_y};
            V2i s1{i1 / ny - bounds.slope_x, i1 % ny - bounds.slope_y};
            V2i s2 = -s0 - s1;
            if (abs(s2.x) > bounds.slope_x || abs(s2.y) > bounds.slope_y) continue;
            auto shape = detail::solve_shape(torus, cls, s0, s1, bounds);
            if (!shape) continue;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (a == b) continue;  // both marks on one edge leave a cycle
                    for (long mx = -bounds.mu; mx <= bounds.mu; ++mx)
                        for (long my = -bounds.mu; my <= bounds.mu; ++my) {
                            V2q rhs = p2_n - p1_n + torus.to_n(V2i{mx, my});
                            auto ts = solve2x2(-V2q(shape->s[a]), V2q(shape->s[b]), rhs);
                            if (!ts) continue;
                            const Rat& t_a = ts->x;
                            const Rat& t_b = ts->y;
                            if ((t_a == 0 || t_a == shape->len[a] || t_b == 0 ||
                                 t_b == shape->len[b]) &&
                                (t_a >= 0 && t_a <= shape->len[a] && t_b >= 0 &&
                                 t_b <= shape->len[b]))
                                throw NonGenericConfiguration(
                                    "a mark lands exactly on a vertex; resample the points");
                            if (t_a <= 0 || t_a >= shape->len[a] || t_b <= 0 ||
                                t_b >= shape->len[b])
                                continue;
                            MarkedCurve mc = detail::realize_marked(torus, *shape, p1_n, a,
                                                                    t_a, b, t_b);
                            MarkedCurve canon = canonical_form(mc);
                            std::string key = canonical_key(canon);
                            Solution sol{std::move(canon),
                                         key,
                                         curve_gcd(mc.curve),
                                         classical_multiplicity(mc.curve),
                                         refined_multiplicity(mc.curve),
                                         false};
                            sol.automorphism_flag = has_nontrivial_automorphism(sol.mc);
                            found.emplace_back(std::move(key), std::move(sol));
                        }
                }
        }
        return found;
    };

    std::vector<std::pair<std::string, Solution>> all;
    int threads = std::max(1, opt.threads);
    if (threads == 1) {
        all = run_range(0, total_pairs);
    } else {
        std::vector<std::future<std::vector<std::pair<std::string, Solution>>>> futs;
        long chunk = (total_pairs + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            long lo = t * chunk, hi = std::min(total_pairs, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& f : futs) {
            auto part = f.get();
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
    }

    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    all.erase(std::unique(all.begin(), all.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              all.end());

    SolutionSet out{torus, cls, {p1, p2}, bounds, {}, {}};
    out.certificate.points_distinct = true;
    out.certificate.marks_interior = true;
    for (auto& [key, sol] : all) {
        auto bad = verify_solution(sol.mc, cls, out.points);
        if (!bad.empty()) {
            std::string msg = "enumerated curve fails verification:";
            for (const auto& b : bad) msg += " " + b;
            throw std::logic_error(msg);
        }
        for (const auto& p : out.points)
            if (detail::count_preimages(sol.mc.curve, p, bounds.mu) != 1)
                throw NonGenericConfiguration(
                    "a solution passes through a constraint point twice");
        out.solutions.push_back(std::move(sol));
    }
    out.certificate.single_point_preimages = true;
    out.certificate.all_verified = true;
    return out;
}

// ---------------------------------------------------------------------------
// Invariant assembly

struct InvariantTable {
    std::map<long, Int> n_k;        // per-gcd classical counts
    std::map<long, Laurent> bg_k;   // per-gcd refined counts
    Int m_total{0};                 // sum m_Gamma
    Int n_total{0};                 // sum delta_Gamma m_Gamma
    Laurent bg_total;               // sum m^q
    Laurent r_total;                // sum delta_Gamma m^q

    bool operator==(const InvariantTable& o) const {
        return n_k == o.n_k && bg_k == o.bg_k && m_total == o.m_total &&
               n_total == o.n_total && bg_total == o.bg_total && r_total == o.r_total;
    }
    bool operator!=(const InvariantTable& o) const { return !(*this == o); }
};

inline InvariantTable assemble_invariants(const SolutionSet& sols) {
    InvariantTable t;
    for (const auto& s : sols.solutions) {
        if (!s.gcd.fits_slong_p()) throw std::domain_error("curve gcd out of range");
        long k = s.gcd.get_si();
        t.n_k[k] += s.classical;
        auto it = t.bg_k.find(k);
        if (it == t.bg_k.end())
            t.bg_k[k] = s.refined;
        else
            it->second = it->second + s.refined;
        t.m_total += s.classical;
        t.n_total += s.gcd * s.classical;
        t.bg_total = t.bg_total + s.refined;
        t.r_total = t.r_total + s.refined * s.gcd;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Closed forms for the class (1, n)

/// N_{g,(1,n)} = g sum_{a_1+...+a_{g-1}=n} prod_i a_i sigma1(a_i).
inline Int closed_form_N_1n(long g, long n) {
    if (g < 2) throw std::domain_error("closed form needs genus >= 2");
    if (n < 1) throw std::domain_error("closed form needs n >= 1");
    Int total = 0;
    for (const auto& comp : compositions(n, g - 1)) {
        Int term = 1;
        for (long a : comp) term *= Int(a) * sigma1(a);
        total += term;
    }
    return total * g;
}

/// BG_{g,(1,n)} = g sum_{a_1+...+a_{g-1}=n} prod_i sum_{k|a_i} k [a_i/k]_q^2.
inline Laurent closed_form_BG_1n(long g, long n) {
    if (g < 2) throw std::domain_error("closed form needs genus >= 2");
    if (n < 1) throw std::domain_error("closed form needs n >= 1");
    Laurent total;
    for (const auto& comp : compositions(n, g - 1)) {
        Laurent term = Laurent::constant(1);
        for (long a : comp) {
            Laurent loop_sum;
            for (long k : divisors_of(a)) {
                Laurent q = quantum_integer(a / k);
                loop_sum = loop_sum + (q * q) * Int(k);
            }
            term = term * loop_sum;
        }
        total = total + term;
    }
    return total * Int(g);
}

/// Compares the closed form against g * [y^n] (sum_m m sigma1(m) y^m)^{g-1},
/// the series computed by exact truncated multiplication. `series_sigma`
/// substitutes a corrupted divisor sum on the series side for mutation tests.
inline bool eisenstein_series_check(long g, long n_max,
                                    Int (*series_sigma)(long) = sigma1) {
    if (g < 2) throw std::domain_error("series check needs genus >= 2");
    std::vector<Int> dg2(static_cast<std::size_t>(n_max) + 1, Int(0));
    for (long m = 1; m <= n_max; ++m) dg2[m] = Int(m) * series_sigma(m);
    std::vector<Int> pw = series_pow(dg2, g - 1, n_max);
    for (long n = 1; n <= n_max; ++n) {
        Int lhs = n < g - 1 ? Int(0) : closed_form_N_1n(g, n);
        if (lhs != pw[n] * g) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Invariance regression

struct RegressionResult {
    bool ok = false;
    int successes = 0;
    std::vector<std::string> skipped;   // seeds/tori rejected as non-generic
    std::vector<InvariantTable> tables; // one per successful run
};

/// Enumerates the class for every (torus, seed) pair and demands identical
/// per-gcd invariant tables. Non-generic configurations are skipped with a
/// note; at least two successful runs are required.
inline RegressionResult invariance_regression(const std::vector<TropicalTorus>& tori,
                                              const CurveClass& cls,
                                              const std::vector<std::uint64_t>& seeds,
                                              const EnumOptions& opt = {}) {
    RegressionResult res;
    for (std::size_t ti = 0; ti < tori.size(); ++ti) {
        for (std::uint64_t seed : seeds) {
            auto pts = sample_generic_points(tori[ti], 2, seed);
            try {
                auto sols = enumerate_genus2(tori[ti], cls, pts[0], pts[1], opt);
                res.tables.push_back(assemble_invariants(sols));
                ++res.successes;
            } catch (const NonGenericConfiguration& e) {
                res.skipped.push_back("torus " + std::to_string(ti) + " seed " +
                                      std::to_string(seed) + ": " + e.what());
            }
        }
    }
    if (res.successes < 2) return res;
    res.ok = true;
    for (const auto& t : res.tables)
        if (t != res.tables.front()) res.ok = false;
    return res;
}

}  // namespace trop
