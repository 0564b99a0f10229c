#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "trop/multiplicity.hpp"

using namespace trop;
using namespace fixtures;

TEST_CASE("vertex multiplicities") {
    ParamCurve tripod = tripod_I2();
    CHECK(vertex_multiplicity(tripod, 0) == 1);
    CHECK(vertex_multiplicity(tripod, 1) == 1);

    ParamCurve t22 = theta22().curve;
    CHECK(vertex_multiplicity(t22, 0) == 4);
    CHECK(vertex_multiplicity(t22, 1) == 4);

    CHECK(vertex_multiplicity(tripod_weighted(), 0) == 6);

    // a flat vertex has multiplicity zero
    CHECK(vertex_multiplicity(parallel_pair(), 0) == 0);

    // the choice of slope pair is irrelevant by balancing
    for (const ParamCurve& c : {tripod, t22, tripod_weighted(), weight2_bridge_curve()})
        for (int v = 0; v < c.graph.num_vertices; ++v) {
            std::vector<V2i> out;
            for (const auto& e : c.graph.edges) {
                if (e.tail == v) out.push_back(e.slope());
                if (e.head == v) out.push_back(-e.slope());
            }
            REQUIRE(out.size() == 3);
            Int m01 = abs(cross(out[0], out[1]));
            CHECK(m01 == abs(cross(out[1], out[2])));
            CHECK(m01 == abs(cross(out[0], out[2])));
            CHECK(m01 == vertex_multiplicity(c, v));
        }

    // the dumbbell vertex is trivalent (its loop counts twice) but degenerate
    ParamCurve dumb = contracted_dumbbell();
    CHECK(vertex_multiplicity(dumb, 0) == 0);
    dumb.graph.edges.pop_back();  // drop the bridge: vertices become bivalent
    CHECK_THROWS_AS(vertex_multiplicity(dumb, 0), std::domain_error);
}

TEST_CASE("classical, refined, complex multiplicities") {
    ParamCurve t22 = theta22().curve;
    CHECK(classical_multiplicity(t22) == 16);
    CHECK(complex_multiplicity(t22) == 32);

    Laurent q4sq = quantum_integer(4) * quantum_integer(4);
    CHECK(refined_multiplicity(t22) == q4sq);  // q^3+2q^2+3q+4+3q^-1+2q^-2+q^-3
    CHECK(refined_multiplicity(t22).eval_one() == classical_multiplicity(t22));

    ParamCurve tripod = tripod_I2();
    CHECK(classical_multiplicity(tripod) == 1);
    CHECK(refined_multiplicity(tripod) == Laurent::constant(1));
    CHECK(complex_multiplicity(tripod) == classical_multiplicity(tripod));

    ParamCurve w2 = weight2_bridge_curve();
    CHECK(classical_multiplicity(w2) == 4);
    CHECK(refined_multiplicity(w2) == quantum_integer(2) * quantum_integer(2));  // q+2+q^-1
    CHECK(complex_multiplicity(w2) == 4);

    CHECK_THROWS_AS(classical_multiplicity(parallel_pair()), std::domain_error);

    // scaling at genus 2: m_{k Gamma} = k^4 m_Gamma
    CHECK(classical_multiplicity(scale_curve(t22, 2)) == 16 * classical_multiplicity(t22));
}

TEST_CASE("refined scaling law") {
    // m^q_{k Gamma}(q) = [k^2]_q^{2g-2} m^q_Gamma(q^{k^2}) at g = 2
    for (long k : {2L, 3L})
        for (const ParamCurve& c : {theta22().curve, tripod_I2(), weight2_bridge_curve()}) {
            Laurent lhs = refined_multiplicity(scale_curve(c, k));
            Laurent factor = quantum_integer(k * k);
            Laurent rhs = factor * factor * refined_multiplicity(c).substitute(k * k);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("parity lemma") {
    CHECK(check_parity(theta22().curve));     // (4+4)/2 = 4
    CHECK(check_parity(tripod_I2()));         // (1+1)/1 = 2
    CHECK(check_parity(tripod_weighted()));   // (6+6)/1 = 12
    CHECK(check_parity(weight2_bridge_curve()));
}

TEST_CASE("theta matrix shape and structure") {
    MarkedCurve mc = theta22();
    ThetaMatrix th = build_theta(mc);
    CHECK(th.mat.rows() == 9);   // 6g-3
    CHECK(th.mat.cols() == 8);   // 6g-4
    CHECK(th.edge_weights.size() == 5);
    for (long w : th.edge_weights) CHECK(w == 2);

    // injectivity and the phi relation of the cokernel analysis
    CHECK(int_rank(th.mat) == 8);
    CHECK(phi_annihilates_theta(th, curve_gcd(mc.curve)));

    // each marked point contributes an identity block on its vertex
    int point_rows = 0;
    for (const auto& r : th.rows)
        if (r.kind == ThetaRow::Kind::Point) ++point_rows;
    CHECK(point_rows == 4);

    // error paths
    MarkedCurve one_mark = mc;
    one_mark.marks.pop_back();
    CHECK_THROWS_AS(build_theta(one_mark), std::domain_error);
    MarkedCurve same_edge = mc;
    same_edge.marks[1].edge = same_edge.marks[0].edge;
    same_edge.marks[1].t = same_edge.marks[0].t / 2;
    CHECK_THROWS_AS(build_theta(same_edge), std::domain_error);  // complement has a cycle
}

TEST_CASE("nishinou multiplicity and the product theorem") {
    MarkedCurve t22 = theta22();
    CHECK(nishinou_multiplicity(t22) == 32);
    CHECK(nishinou_multiplicity_via_minors(t22) == 32);
    CHECK(check_product_theorem(t22));
    // weight product is 2^5, so the cokernel torsion is trivial here
    CHECK(smith_normal_form(build_theta(t22).mat).divisor_product() == 1);

    // the two marking patterns: torsion 1 with the heavy edge marked
    // (its weight then counts twice), torsion 2 with it unmarked
    MarkedCurve on_heavy = weight2_marked_on_heavy();
    CHECK(smith_normal_form(build_theta(on_heavy).mat).divisor_product() == 1);
    CHECK(nishinou_multiplicity(on_heavy) == 4);
    MarkedCurve off_heavy = weight2_marked_off_heavy();
    CHECK(smith_normal_form(build_theta(off_heavy).mat).divisor_product() == 2);
    CHECK(nishinou_multiplicity(off_heavy) == 4);
    CHECK(check_product_theorem(on_heavy));
    CHECK(check_product_theorem(off_heavy));

    // scaled curves: multiplicity scales by delta^{4g-3}
    for (long k : {2L, 3L}) {
        MarkedCurve scaled = scale_marked(t22, k);
        CHECK(check_product_theorem(scaled));
        Int factor = 1;
        for (int i = 0; i < 5; ++i) factor *= k;  // k^{4g-3}
        CHECK(nishinou_multiplicity(scaled) == factor * nishinou_multiplicity(t22));
    }
}

TEST_CASE("theta orientation independence") {
    SplitMix64 rng(2024);
    for (const MarkedCurve& mc :
         {theta22(), weight2_marked_on_heavy(), weight2_marked_off_heavy()}) {
        Int base = nishinou_multiplicity(mc);
        ThetaMatrix canonical = build_theta(mc);
        int ne = static_cast<int>(canonical.edge_weights.size());
        for (int it = 0; it < 40; ++it) {
            std::vector<bool> flips(ne);
            for (int i = 0; i < ne; ++i) flips[i] = rng.next_below(2) == 1;
            ThetaMatrix th = build_theta(mc, &flips);
            Int m = smith_normal_form(th.mat).divisor_product();
            for (long w : th.edge_weights) m *= w;
            CHECK(m == base);
        }
    }
}

TEST_CASE("multiplicity report") {
    MultReport r = multiplicity_report(theta22());
    CHECK(r.classical == 16);
    CHECK(r.gcd == 2);
    CHECK(r.complex_product == 32);
    CHECK(r.complex_theta == 32);
    CHECK(r.parity_ok);
    CHECK(r.agreement);
}
