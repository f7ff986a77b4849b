#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "polycert/hermite.hpp"

using namespace polycert;

namespace {

UniPoly poly(std::vector<long> cs) {
    std::vector<Rational> r(cs.begin(), cs.end());
    return UniPoly(std::move(r));
}

std::vector<Rational> pts(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("UniPoly construction and parsing") {
    CHECK(UniPoly::parse("2,-3,1").coeffs() == std::vector<Rational>{2, -3, 1});
    CHECK(UniPoly::parse(" 1/2 , 0 , 1 ").coeffs() == std::vector<Rational>{Rational(1, 2), 0, 1});
    CHECK_THROWS_AS(UniPoly::parse("5"), std::invalid_argument);       // degree 0
    CHECK_THROWS_AS(UniPoly::parse("1,2,0"), std::invalid_argument);   // zero lead
    CHECK_THROWS_AS(UniPoly::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(UniPoly::parse("1,x,2"), std::invalid_argument);
    CHECK(poly({4, -6, 2}).monic().coeffs() == std::vector<Rational>{2, -3, 1});
    const auto fr = UniPoly::from_roots(pts({0, 1, 2}));
    CHECK(fr.coeffs() == std::vector<Rational>{0, 2, -3, 1});
}

TEST_CASE("coefficients to elementary symmetric values") {
    CHECK(coeffs_to_elementary(poly({2, -3, 1})) == std::vector<Rational>{1, 3, 2});
    // scaling the polynomial leaves the root data unchanged
    CHECK(coeffs_to_elementary(poly({4, -6, 2})) == std::vector<Rational>{1, 3, 2});
    CHECK(coeffs_to_elementary(poly({1, 0, 1})) == std::vector<Rational>{1, 0, 1});
}

TEST_CASE("newton_girard power sums") {
    CHECK(newton_girard(poly({2, -3, 1}), 3) == std::vector<Rational>{2, 3, 5, 9});
    CHECK(newton_girard(poly({1, 0, 1}), 2) == std::vector<Rational>{2, 0, -2});
    // roots 0,1,2: p_k = 1 + 2^k
    const auto ps = newton_girard(UniPoly::from_roots(pts({0, 1, 2})), 4);
    CHECK(ps == std::vector<Rational>{3, 3, 5, 9, 17});
}

TEST_CASE("hermite_matrix layout") {
    const auto ps = newton_girard(poly({2, -3, 1}), 2);
    const int lam[2] = {0, 1};
    const auto h = hermite_matrix(ps, lam);
    REQUIRE(h.rows() == 2);
    CHECK(h.at(0, 0) == Rational(2));
    CHECK(h.at(0, 1) == Rational(3));
    CHECK(h.at(1, 0) == Rational(3));
    CHECK(h.at(1, 1) == Rational(5));
    CHECK(leading_minors(h) == std::vector<Rational>{1, 2, 1});

    // generalized index set: row u reads p_{lambda_u + v - 1}
    const auto ps4 = newton_girard(poly({2, -3, 1}), 3);
    const int lam02[2] = {0, 2};
    const auto g = hermite_matrix(ps4, lam02);
    CHECK(g.at(0, 0) == ps4[0]);
    CHECK(g.at(0, 1) == ps4[1]);
    CHECK(g.at(1, 0) == ps4[2]);
    CHECK(g.at(1, 1) == ps4[3]);

    const int bad[2] = {1, 1};
    CHECK_THROWS_AS(hermite_matrix(ps4, bad), std::invalid_argument);
}

TEST_CASE("symbolic hermite matrix matches the numeric one at any root vector") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> lam(n);
        for (int i = 0; i < n; ++i) lam[i] = i;
        const auto sym = hermite_matrix_symbolic(lam, n);
        std::vector<Rational> roots;
        for (int i = 0; i < n; ++i) roots.push_back(Rational(2 * i - 3, i + 1));
        const auto ps = newton_girard(UniPoly::from_roots(roots), 2 * n - 2);
        const auto num = hermite_matrix(ps, lam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(sym.at(i, j).eval(roots) == num.at(i, j));
    }
}

TEST_CASE("classification verdicts on the reference inputs") {
    const auto real2 = classify_real_roots(poly({2, -3, 1}));
    CHECK(real2.verdict == RootVerdict::ALL_REAL_DISTINCT);
    CHECK(!real2.witness.has_value());
    CHECK(real2.minors == std::vector<Rational>{1, 2, 1});

    const auto complex2 = classify_real_roots(poly({1, 0, 1}));
    CHECK(complex2.verdict == RootVerdict::NOT_ALL_REAL);
    REQUIRE(complex2.witness.has_value());
    CHECK(*complex2.witness == 2);
    CHECK(complex2.minors == std::vector<Rational>{1, 2, -4});

    const auto repeated = classify_real_roots(poly({1, -2, 1}));
    CHECK(repeated.verdict == RootVerdict::INCONCLUSIVE_DEGENERATE);
    REQUIRE(repeated.witness.has_value());
    CHECK(*repeated.witness == 2);
    CHECK(repeated.minors == std::vector<Rational>{1, 2, 0});

    const auto cubic = classify_real_roots(UniPoly::from_roots(pts({0, 1, 2})));
    CHECK(cubic.verdict == RootVerdict::ALL_REAL_DISTINCT);
    CHECK(cubic.minors == std::vector<Rational>{1, 3, 6, 4});

    // scaling must not change anything
    const auto scaled = classify_real_roots(poly({4, -6, 2}));
    CHECK(scaled.verdict == RootVerdict::ALL_REAL_DISTINCT);
    CHECK(scaled.minors == std::vector<Rational>{1, 2, 1});

    const auto linear = classify_real_roots(poly({7, 3}));
    CHECK(linear.verdict == RootVerdict::ALL_REAL_DISTINCT);
    CHECK(linear.minors == std::vector<Rational>{1, 1});
}

TEST_CASE("verdict names") {
    CHECK(to_string(RootVerdict::ALL_REAL_DISTINCT) == "ALL_REAL_DISTINCT");
    CHECK(to_string(RootVerdict::NOT_ALL_REAL) == "NOT_ALL_REAL");
    CHECK(to_string(RootVerdict::INCONCLUSIVE_DEGENERATE) == "INCONCLUSIVE_DEGENERATE");
}

TEST_CASE("random real-rooted polynomials certify as such") {
    std::mt19937_64 rng(20240817u);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + static_cast<int>(rep % 4);
        std::vector<Rational> roots;
        while (static_cast<int>(roots.size()) < n) {
            Rational r(num(rng), den(rng));
            bool dup = false;
            for (const auto& s : roots) dup = dup || s == r;
            if (!dup) roots.push_back(r);
        }
        const auto res = classify_real_roots(UniPoly::from_roots(roots));
        CHECK(res.verdict == RootVerdict::ALL_REAL_DISTINCT);
        CHECK(res.minors.size() == static_cast<std::size_t>(n + 1));
        for (const auto& m : res.minors) CHECK(m > Rational(0));
    }
}

TEST_CASE("a complex pair is always detected") {
    std::mt19937_64 rng(911u);
    std::uniform_int_distribution<long> num(-6, 6);
    for (int rep = 0; rep < 60; ++rep) {
        // (x^2 + bx + c) with b^2 < 4c has two non-real roots
        const long b = num(rng);
        const long c = (b * b) / 4 + 1 + (rep % 3);
        std::vector<Rational> factor{Rational(c), Rational(b), Rational(1)};
        std::vector<Rational> cs = factor;
        const int extra = rep % 3;
        for (int i = 0; i < extra; ++i) {
            // multiply by (x - r) for a random real root r
            const Rational r(num(rng));
            cs.insert(cs.begin(), Rational(0));
            for (std::size_t t = 0; t + 1 < cs.size(); ++t) cs[t] -= r * cs[t + 1];
        }
        const auto res = classify_real_roots(UniPoly(std::move(cs)));
        CHECK(res.verdict == RootVerdict::NOT_ALL_REAL);
        REQUIRE(res.witness.has_value());
        CHECK(res.minors[*res.witness] < Rational(0));
    }
}

TEST_CASE("repeated roots are reported as degenerate, never as complex") {
    std::mt19937_64 rng(77u);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int rep = 0; rep < 40; ++rep) {
        const Rational a(num(rng)), b(num(rng) + 11);  // b distinct from a by construction
        std::vector<Rational> roots{a, a, b};
        const auto res = classify_real_roots(UniPoly::from_roots(roots));
        CHECK(res.verdict == RootVerdict::INCONCLUSIVE_DEGENERATE);
        REQUIRE(res.witness.has_value());
        CHECK(res.minors[*res.witness].is_zero());
    }
}
