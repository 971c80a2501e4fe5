#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pseudocone/constructions.hpp"
#include "pseudocone/tanner.hpp"

using namespace pseudocone;

TEST_CASE("circulant: Example 1 matrix") {
    const auto h = circulant({1, 1, 0, 1, 0, 0, 0});
    CHECK(h.rows() == 7);
    CHECK(h.cols() == 7);
    CHECK(h.row_support(0) == std::vector<std::size_t>{0, 1, 3});
    CHECK(h.row_support(1) == std::vector<std::size_t>{1, 2, 4});
    for (std::size_t r = 0; r < 7; ++r) CHECK(h.row_weight(r) == 3);
    CHECK_THROWS_AS(circulant({0, 0, 0}), ZeroRow);
    const auto one = circulant({1});
    CHECK(one.rows() == 1);
    CHECK(one.get(0, 0));
}

TEST_CASE("hamming_simplex_h: r = 3") {
    const auto h = hamming_simplex_h(3);
    CHECK(h.rows() == 7);
    CHECK(h.cols() == 7);
    CHECK(gf2_rank(h) == 3);  // k = 7 - 3 = 4
    const auto g = build_tanner_graph(h);
    CHECK(g.min_col_weight == 4);
    CHECK(g.max_col_weight == 4);
    CHECK(g.max_pair_intersection == 2);
    // all rows are distinct simplex codewords of weight 2^(r-1)
    std::set<std::vector<std::size_t>> rows;
    for (std::size_t r = 0; r < 7; ++r) {
        CHECK(h.row_weight(r) == 4);
        rows.insert(h.row_support(r));
    }
    CHECK(rows.size() == 7);
    CHECK_THROWS_AS(hamming_simplex_h(1), InvalidR);
}

TEST_CASE("hamming_simplex_h: r = 2 gives the [3,1,3] repetition code") {
    const auto h = hamming_simplex_h(2);
    CHECK(h.rows() == 3);
    CHECK(h.cols() == 3);
    CHECK(gf2_rank(h) == 2);
    CHECK(min_distance(h) == 3);
}

TEST_CASE("GF(2^s) field axioms, exhaustive for GF(4) and GF(8)") {
    for (unsigned s : {2u, 3u}) {
        const Gf2mField f(s);
        const unsigned q = f.size();
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.add(a, b) == f.add(b, a));
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            CHECK(f.mul(a, 1) == a);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
            }
        }
    }
}

TEST_CASE("EG(3,4): dimensions, regularity and rank") {
    const auto h = eg_point_hyperplane_h(3, 2);
    CHECK(h.rows() == 63);
    CHECK(h.cols() == 63);
    for (std::size_t r = 0; r < 63; ++r) CHECK(h.row_weight(r) == 16);
    for (std::size_t c = 0; c < 63; ++c) CHECK(h.col_weight(c) == 16);
    CHECK(gf2_rank(h) == 15);  // k = 2^(sm) - (m+1)^s = 64 - 16 = 48
    CHECK(max_pair_intersection(h) == 4);
}

TEST_CASE("EG(2,2): lines of the 2x2 affine plane avoiding the origin") {
    const auto h = eg_point_hyperplane_h(2, 1);
    CHECK(h.rows() == 3);
    CHECK(h.cols() == 3);
    for (std::size_t r = 0; r < 3; ++r) CHECK(h.row_weight(r) == 2);
    for (std::size_t c = 0; c < 3; ++c) CHECK(h.col_weight(c) == 2);
}

TEST_CASE("EG cap") {
    CHECK_THROWS_AS(eg_point_hyperplane_h(5, 4), DimensionTooLarge);
}

TEST_CASE("full EG(3,4): two distinct points lie on (q^2-1)/(q-1) = 5 hyperplanes") {
    // count over the full hyperplane family (b = 0 included), sampled pairs
    const Gf2mField f(2);
    const unsigned q = 4;
    auto digits = [&](unsigned v) {
        std::vector<unsigned> p(3);
        for (int i = 0; i < 3; ++i) {
            p[i] = v % q;
            v /= q;
        }
        return p;
    };
    std::mt19937 rng(71);
    for (int pick = 0; pick < 40; ++pick) {
        const unsigned pv = 1 + rng() % 63;
        unsigned wv = 1 + rng() % 63;
        if (wv == pv) continue;
        const auto p = digits(pv), w = digits(wv);
        std::size_t count = 0;
        for (unsigned av = 1; av < 64; ++av) {
            const auto a = digits(av);
            unsigned lead = 0;
            for (auto ai : a)
                if (ai) {
                    lead = ai;
                    break;
                }
            if (lead != 1) continue;
            unsigned ap = 0, aw = 0;
            for (int i = 0; i < 3; ++i) {
                ap ^= f.mul(a[i], p[i]);
                aw ^= f.mul(a[i], w[i]);
            }
            if (ap == aw) ++count;  // hyperplane a.x = ap contains both
        }
        CHECK(count == 5);
    }
}

TEST_CASE("cyclic code generator: the [63,48] EG code and its weight-5 codeword") {
    const auto gen = cyclic_code_generator(63, {0, 2, 4, 11, 13, 14, 15});
    CHECK(gen.rows() == 48);
    CHECK(gen.cols() == 63);
    CHECK(gf2_rank(gen) == 48);
    std::vector<std::uint8_t> witness(63, 0);
    for (std::size_t e : {0, 23, 33, 36, 37}) witness[e] = 1;
    CHECK(row_space_contains(gen, witness));
}

TEST_CASE("cyclic code generator: x^3 + x + 1 gives a [7,4,3] Hamming code") {
    const auto gen = cyclic_code_generator(7, {0, 1, 3});
    CHECK(gen.rows() == 4);
    CHECK(gen.cols() == 7);
    CHECK(gf2_rank(gen) == 4);
    // minimum weight over the 15 non-zero row combinations is 3 (any [7,4,3]
    // code is a Hamming code up to coordinate permutation)
    std::size_t min_w = 7;
    for (unsigned combo = 1; combo < 16; ++combo) {
        std::vector<std::uint8_t> v(7, 0);
        for (unsigned r = 0; r < 4; ++r)
            if ((combo >> r) & 1u)
                for (std::size_t c = 0; c < 7; ++c) v[c] ^= gen.get(r, c);
        std::size_t w = 0;
        for (auto b : v) w += b;
        min_w = std::min(min_w, w);
    }
    CHECK(min_w == 3);
}

TEST_CASE("cyclic code generator: g = 1 gives the identity") {
    const auto gen = cyclic_code_generator(5, {0});
    CHECK(gen.rows() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(gen.get(i, i));
    CHECK(gf2_rank(gen) == 5);
}

TEST_CASE("cyclic code generator rejects non-divisors") {
    CHECK_THROWS_AS(cyclic_code_generator(7, {0, 2}), NotADivisor);  // (x+1)^2
}

TEST_CASE("EG(3,4) dual relation to the quoted generator polynomial") {
    // Column ordering of the vector-space construction need not match the
    // cyclic coordinate order, so the check is: the EG dual code has
    // dimension 48 = deg-complement of g, and the quoted weight-5 polynomial
    // lies in the code generated by g.
    const auto h = eg_point_hyperplane_h(3, 2);
    CHECK(h.cols() - gf2_rank(h) == 48);
    const auto gen = cyclic_code_generator(63, {0, 2, 4, 11, 13, 14, 15});
    CHECK(gen.rows() == 48);
}
