#include <catch2/catch_amalgamated.hpp>

#include "trop/intmatrix.hpp"
#include "trop/laurent.hpp"
#include "trop/numeric.hpp"
#include "trop/numtheory.hpp"

using namespace trop;

namespace {

Laurent laurent_of(std::initializer_list<std::pair<int, long>> terms) {
    Laurent p;
    for (auto [e, c] : terms) p.set(e, Int(c));
    return p;
}

IntMatrix random_matrix(SplitMix64& rng, int rows, int cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.next_range(lo, hi);
    return m;
}

/// Random unimodular matrix: a product of elementary row operations.
IntMatrix random_unimodular(SplitMix64& rng, int n, int moves = 8) {
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < moves; ++k) {
        int i = static_cast<int>(rng.next_below(n));
        int j = static_cast<int>(rng.next_below(n));
        if (i == j) continue;
        long c = rng.next_range(-3, 3);
        for (int col = 0; col < n; ++col) u(i, col) += Int(c) * u(j, col);
    }
    return u;
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(1) == Laurent::constant(1));
    CHECK(quantum_integer(2) == laurent_of({{-1, 1}, {1, 1}}));
    CHECK(quantum_integer(4) == laurent_of({{-3, 1}, {-1, 1}, {1, 1}, {3, 1}}));
    CHECK_THROWS_AS(quantum_integer(0), std::domain_error);
    CHECK_THROWS_AS(quantum_integer(-3), std::domain_error);

    for (long a = 1; a <= 50; ++a) {
        Laurent q = quantum_integer(a);
        CHECK(q.eval_one() == a);
        CHECK(q.symmetric());
        CHECK(q.term_count() == static_cast<std::size_t>(a));
        for (const auto& [e, c] : q.coeffs()) CHECK(c == 1);
    }
}

TEST_CASE("laurent multiplication") {
    Laurent q2 = quantum_integer(2);
    CHECK(q2 * q2 == laurent_of({{-2, 1}, {0, 2}, {2, 1}}));  // q + 2 + q^-1
    Laurent q4 = quantum_integer(4);
    Laurent expect44 =
        laurent_of({{6, 1}, {4, 2}, {2, 3}, {0, 4}, {-2, 3}, {-4, 2}, {-6, 1}});
    CHECK(q4 * q4 == expect44);
    CHECK((q4 * q4).eval_one() == 16);

    Laurent p = laurent_of({{-3, 5}, {0, -2}, {7, 1}});
    CHECK(p * Laurent::constant(1) == p);
    CHECK((q2 * q2).symmetric());
}

TEST_CASE("laurent evaluation and substitution") {
    CHECK(laurent_of({{-2, 1}, {0, 2}, {2, 1}}).eval_one() == 4);
    CHECK(Laurent().eval_one() == 0);
    for (long a = 1; a <= 10; ++a) CHECK(quantum_integer(a).eval_one() == a);

    CHECK(quantum_integer(2).substitute(4) == laurent_of({{-4, 1}, {4, 1}}));
    Laurent p = laurent_of({{-1, 2}, {3, 7}});
    CHECK(p.substitute(1) == p);
    CHECK_THROWS_AS(p.substitute(0), std::domain_error);

    // [4]_q^2 = [2^2]_q^{2g-2} m^q(q^4) with m^q = 1 at g = 2
    Laurent q4 = quantum_integer(4);
    CHECK(q4 * q4 == (q4 * q4) * Laurent::constant(1).substitute(4));
    // [16]_q = [4]_q * [4]_{q^4}, the block of the refined scaling law
    CHECK(quantum_integer(16) == quantum_integer(4) * quantum_integer(4).substitute(4));

    SplitMix64 rng(7);
    for (int it = 0; it < 100; ++it) {
        Laurent r;
        for (int t = 0; t < 5; ++t)
            r.add(static_cast<int>(rng.next_range(-8, 8)), Int(rng.next_range(-4, 4)));
        long m = rng.next_range(1, 6);
        CHECK(r.substitute(m).eval_one() == r.eval_one());
    }
}

TEST_CASE("smith normal form on pinned cases") {
    {
        IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 6}});
        auto snf = smith_normal_form(m);
        CHECK(snf.rank == 2);
        REQUIRE(snf.divisors.size() == 2);
        CHECK(snf.divisors[0] == 2);
        CHECK(snf.divisors[1] == 6);
    }
    {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
        auto snf = smith_normal_form(m);
        CHECK(snf.rank == 2);
        REQUIRE(snf.divisors.size() == 2);
        CHECK(snf.divisors[0] == 2);
        CHECK(snf.divisors[1] == 4);
    }
    {
        auto snf = smith_normal_form(IntMatrix(3, 4));
        CHECK(snf.rank == 0);
        CHECK(snf.divisors.empty());
    }
}

TEST_CASE("maximal minor gcd on pinned cases") {
    CHECK(maximal_minor_gcd(IntMatrix::identity(2)) == 1);
    IntMatrix col(2, 1);
    col(0, 0) = 2;
    col(1, 0) = 4;
    CHECK(maximal_minor_gcd(col) == 2);
    CHECK(maximal_minor_gcd(IntMatrix(4, 2)) == 0);
}

TEST_CASE("snf vs minor gcd on random matrices") {
    SplitMix64 rng(42);
    int full_rank_seen = 0;
    for (int it = 0; it < 200; ++it) {
        int rows = static_cast<int>(2 + rng.next_below(5));  // 2..6
        int cols = static_cast<int>(2 + rng.next_below(7));  // 2..8
        IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
        auto snf = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < snf.divisors.size(); ++i)
            CHECK(snf.divisors[i + 1] % snf.divisors[i] == 0);
        if (snf.rank == std::min(rows, cols) && rows >= cols) {
            CHECK(maximal_minor_gcd(m) == snf.divisor_product());
            ++full_rank_seen;
        }
        CHECK(int_rank(m) == snf.rank);
    }
    CHECK(full_rank_seen > 50);
}

TEST_CASE("snf invariant under unimodular moves") {
    SplitMix64 rng(99);
    for (int it = 0; it < 60; ++it) {
        int rows = static_cast<int>(2 + rng.next_below(4));
        int cols = static_cast<int>(2 + rng.next_below(4));
        IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
        IntMatrix u = random_unimodular(rng, rows);
        IntMatrix v = random_unimodular(rng, cols);
        auto base = smith_normal_form(m);
        auto moved = smith_normal_form(u * m * v);
        CHECK(base.rank == moved.rank);
        CHECK(base.divisors == moved.divisors);
    }
}

TEST_CASE("sigma1 and compositions") {
    CHECK(sigma1(1) == 1);
    CHECK(sigma1(6) == 12);  // 1+2+3+6
    CHECK(sigma1(4) == 7);   // 1+2+4
    CHECK_THROWS_AS(sigma1(0), std::domain_error);
    CHECK_THROWS_AS(sigma1(-5), std::domain_error);

    auto c32 = compositions(3, 2);
    REQUIRE(c32.size() == 2);
    CHECK(c32[0] == std::vector<long>{1, 2});
    CHECK(c32[1] == std::vector<long>{2, 1});
    CHECK(compositions(7, 1) == std::vector<std::vector<long>>{{7}});
    CHECK(compositions(10, 4).size() == 84);  // binomial(9, 3)
    CHECK(compositions(2, 3).empty());
}

TEST_CASE("rational helpers") {
    CHECK(rat_str(parse_rat("6/-4")) == "-3/2");
    CHECK(rat_str(parse_rat("5")) == "5/1");
    CHECK(floor_rat(parse_rat("-3/2")) == -2);
    CHECK(frac_rat(parse_rat("-1/4")) == parse_rat("3/4"));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}
