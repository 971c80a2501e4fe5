#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pseudocone/cone.hpp"
#include "pseudocone/stopping.hpp"

using namespace pseudocone;

namespace {

std::vector<Rational> rat(std::initializer_list<Rational> v) { return v; }

std::set<std::vector<BigInt>> catalog_set(const RayCatalog& c) {
    std::set<std::vector<BigInt>> s;
    for (const auto& r : c.rays) s.insert(r.representative);
    return s;
}

std::vector<BigInt> big(std::initializer_list<int> v) {
    std::vector<BigInt> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

// the 14 representatives of Example 1: cyclic shifts of (1,0,1,1,1,0,0)
// and of (1,2,1,1,1,2,2)
std::set<std::vector<BigInt>> example1_expected_rays() {
    std::set<std::vector<BigInt>> s;
    const std::vector<int> a{1, 0, 1, 1, 1, 0, 0};
    const std::vector<int> b{1, 2, 1, 1, 1, 2, 2};
    for (std::size_t shift = 0; shift < 7; ++shift) {
        std::vector<BigInt> sa(7), sb(7);
        for (std::size_t i = 0; i < 7; ++i) {
            sa[(i + shift) % 7] = a[i];
            sb[(i + shift) % 7] = b[i];
        }
        s.insert(sa);
        s.insert(sb);
    }
    return s;
}

}  // namespace

TEST_CASE("cone_inequalities: counts and the forced-equality 1x2 case") {
    CHECK(cone_inequalities(fixtures::example1_h()).size() == 28);  // 7 + 7*3

    const auto rows = cone_inequalities(BinaryMatrix::from_rows({{1, 1}}));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == InequalityRow{1, 0});   // x1 >= 0
    CHECK(rows[1] == InequalityRow{0, 1});   // x2 >= 0
    CHECK(rows[2] == InequalityRow{-1, 1});  // x2 - x1 >= 0
    CHECK(rows[3] == InequalityRow{1, -1});  // x1 - x2 >= 0

    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto h = oracles::random_matrix(rng, 3 + rng() % 6, 1 + rng() % 5, 4);
        std::size_t rho_total = 0;
        for (std::size_t r = 0; r < h.rows(); ++r) rho_total += h.row_weight(r);
        CHECK(cone_inequalities(h).size() == h.cols() + rho_total);
    }
}

TEST_CASE("is_pseudo_codeword: paper vector and simple cases") {
    const auto h = fixtures::example1_h();
    CHECK(is_pseudo_codeword(h, rat({1, 2, 1, 1, 1, 2, 2})));
    CHECK(is_pseudo_codeword(h, rat({0, 0, 0, 0, 0, 0, 0})));
    CHECK_FALSE(is_pseudo_codeword(h, rat({1, 0, 0, 0, 0, 0, 0})));
    CHECK_THROWS_AS(is_pseudo_codeword(h, rat({1, 0})), LengthMismatch);
}

TEST_CASE("pseudo_weight: exact values, binary vectors, scale invariance") {
    CHECK(pseudo_weight(rat({1, 2, 1, 1, 1, 2, 2})) == Rational(25, 4));
    CHECK(pseudo_weight(rat({1, 0, 1, 1, 1, 0, 0})) == Rational(4));
    CHECK(pseudo_weight(rat({0, 1, 1, 0})) == Rational(2));  // weight of a 0/1 vector
    // degree-0 homogeneity
    const auto x = rat({Rational(1, 3), Rational(2), Rational(0), Rational(7, 5)});
    std::vector<Rational> x3;
    for (const auto& v : x) x3.push_back(3 * v);
    CHECK(pseudo_weight(x3) == pseudo_weight(x));
    CHECK_THROWS_AS(pseudo_weight(rat({0, 0})), ZeroVector);
}

TEST_CASE("canonicalize: clears denominators and divides by the gcd") {
    CHECK(canonicalize(rat({Rational(1, 2), 1, Rational(1, 2), Rational(1, 2), Rational(1, 2), 1,
                            1})) == big({1, 2, 1, 1, 1, 2, 2}));
    CHECK(canonicalize(rat({3, 3, 3})) == big({1, 1, 1}));
    CHECK(canonicalize(rat({Rational(2, 3), Rational(4, 3)})) == big({1, 2}));
    CHECK_THROWS_AS(canonicalize(rat({0, 0})), ZeroVector);
    CHECK_THROWS_AS(canonicalize(rat({1, -1})), NegativeCoordinate);
}

TEST_CASE("enumerate_rays: Example 1 catalog is exactly the paper's 14 edges") {
    const auto catalog = enumerate_rays(fixtures::example1_h());
    CHECK(catalog.edge_count() == 14);
    CHECK(catalog_set(catalog) == example1_expected_rays());
    CHECK(catalog.d_p == Rational(4));
    CHECK(catalog.b_p == 7);
    for (const auto& ray : catalog.rays) {
        const bool uniform = ray.weight == Rational(4);
        CHECK(ray.classification ==
              (uniform ? RayClass::codeword_multiple : RayClass::non_codeword));
        if (!uniform) CHECK(ray.weight == Rational(25, 4));
    }
}

TEST_CASE("enumerate_rays: 1x2 all-ones check forces the single ray (1,1)") {
    const auto catalog = enumerate_rays(BinaryMatrix::from_rows({{1, 1}}));
    REQUIRE(catalog.edge_count() == 1);
    CHECK(catalog.rays[0].representative == big({1, 1}));
}

TEST_CASE("enumerate_rays: Hamming H gives d_P = 3 with codeword-multiple minima") {
    const auto h = fixtures::hamming7_h();
    const auto catalog = enumerate_rays(h);
    CHECK(catalog.d_p == Rational(3));
    for (const auto& ray : catalog.rays) {
        if (ray.weight == catalog.d_p) {
            CHECK(ray.classification == RayClass::codeword_multiple);
            CHECK(ray.support.size() == 3);
        }
    }
    // B_P = A_3 = 7
    CHECK(catalog.b_p == 7);
}

TEST_CASE("cap is enforced") {
    BinaryMatrix wide(1, kDefaultRayCap + 1);
    wide.set(0, 0, true);
    CHECK_THROWS_AS(enumerate_rays(wide), DimensionTooLarge);
}

TEST_CASE("membership closure and cross-module chain on the golden codes") {
    for (const auto& h : {fixtures::example1_h(), fixtures::hamming7_h()}) {
        const auto catalog = enumerate_rays(h);
        const auto stopping = stopping_distance(h);
        const auto params = compute_code_parameters(h);
        for (const auto& ray : catalog.rays) {
            CHECK(is_pseudo_codeword(h, to_rational_vector(ray.representative)));
            CHECK(is_stopping_set(h, ray.support));
        }
        for (const auto& c : enumerate_codewords(h)) {
            std::vector<Rational> x(c.begin(), c.end());
            CHECK(is_pseudo_codeword(h, x));
        }
        CHECK(catalog.d_p <= Rational(*stopping.stopping_distance));
        CHECK(*stopping.stopping_distance <= *params.min_distance);
    }
}

TEST_CASE("every ray is extreme: active rows have rank n-1 and span its line") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        auto h = oracles::random_matrix(rng, 2 + rng() % 6, 1 + rng() % 5, 4);
        const auto catalog = enumerate_rays(h);
        const auto ineqs = cone_inequalities(h);
        const std::size_t n = h.cols();
        for (const auto& ray : catalog.rays) {
            std::vector<std::vector<Rational>> active;
            for (const auto& row : ineqs) {
                BigInt dot = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (row[i]) dot += row[i] > 0 ? ray.representative[i] : -ray.representative[i];
                if (dot == 0) {
                    std::vector<Rational> r(n);
                    for (std::size_t i = 0; i < n; ++i) r[i] = row[i];
                    active.push_back(std::move(r));
                }
            }
            const auto ech = oracles::echelon_form(active);
            REQUIRE(ech.pivot_cols.size() == n - 1);
            // the null direction of the active system is the ray itself
            auto dir = oracles::null_direction(ech, n);
            auto prim = oracles::primitive_integer(dir);
            bool negated = false;
            for (const auto& v : prim)
                if (v < 0) negated = true;
            if (negated)
                for (auto& v : prim) v = -v;
            CHECK(prim == ray.representative);
        }
    }
}

TEST_CASE("DD catalog equals the brute-force tight-subset oracle") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        auto h = oracles::random_matrix(rng, 2 + rng() % 7, 1 + rng() % 6, 4);
        const auto catalog = enumerate_rays(h);
        CHECK(catalog_set(catalog) == oracles::brute_force_rays(h));
    }
}

TEST_CASE("Lemma 1: w_P >= u on F_u, equality exactly at u coordinates of 1/u") {
    std::mt19937 rng(61);
    for (std::size_t u : {2, 3, 5}) {
        int generated = 0;
        while (generated < 200) {
            const std::size_t n = u + 1 + rng() % (2 * u);
            // random integer weights, normalized; rejection keeps y_i <= 1/u
            std::vector<std::uint64_t> w(n);
            std::uint64_t total = 0;
            for (auto& v : w) {
                v = rng() % 1000;
                total += v;
            }
            if (total == 0) continue;
            bool ok = true;
            for (auto v : w)
                if (Rational(v, total) > Rational(1, u)) ok = false;
            if (!ok) continue;
            ++generated;
            std::vector<Rational> y(n);
            bool is_equality_shape = true;
            std::size_t nonzero = 0;
            for (std::size_t i = 0; i < n; ++i) {
                y[i] = Rational(w[i], total);
                if (y[i] != 0) {
                    ++nonzero;
                    if (y[i] != Rational(1, u)) is_equality_shape = false;
                }
            }
            is_equality_shape = is_equality_shape && nonzero == u;
            const Rational wp = pseudo_weight(y);
            CHECK(wp >= Rational(u));
            CHECK((wp == Rational(u)) == is_equality_shape);
        }
        // constructed equality case: exactly u coordinates equal to 1/u
        std::vector<Rational> y(u + 3, Rational(0));
        for (std::size_t i = 0; i < u; ++i) y[i] = Rational(1, u);
        CHECK(pseudo_weight(y) == Rational(u));
    }
}

TEST_CASE("minimum over rays matches minimum over random cone samples") {
    // a minimum of a degree-0-homogeneous objective over the cone is attained
    // on an extreme ray; sample interior points and check none beats d_P
    std::mt19937 rng(67);
    const auto h = fixtures::example1_h();
    const auto catalog = enumerate_rays(h);
    const auto& rays = catalog.rays;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> x(h.cols(), Rational(0));
        const std::size_t picks = 1 + rng() % 3;
        for (std::size_t p = 0; p < picks; ++p) {
            const auto& ray = rays[rng() % rays.size()];
            const Rational coef(1 + rng() % 5, 1 + rng() % 5);
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] += coef * Rational(ray.representative[i]);
        }
        REQUIRE(is_pseudo_codeword(h, x));
        CHECK(pseudo_weight(x) >= catalog.d_p);
    }
}
