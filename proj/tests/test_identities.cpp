#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "polycert/identities.hpp"

using namespace polycert;

namespace {

bool has_note(const VerificationReport& r, const std::string& text) {
    return std::find(r.notes.begin(), r.notes.end(), text) != r.notes.end();
}

PairMultiset beta_of(int n, std::vector<std::pair<int, int>> pairs) {
    PairMultiset b;
    b.n = n;
    b.pairs = std::move(pairs);
    return b;
}

}  // namespace

TEST_CASE("schur minor identity") {
    // k = 1: det(H((m); n)) is the power sum p_m itself
    for (int m = 0; m <= 3; ++m) {
        for (int n = 2; n <= 4; ++n) {
            const int lam[1] = {m};
            const auto r = verify_schur_minor(lam, n);
            CHECK(r.holds);
            CHECK(r.lhs_hash == r.rhs_hash);
            CHECK(r.witness.empty());
        }
    }
    const int lam01[2] = {0, 1};
    CHECK(verify_schur_minor(lam01, 3).holds);
    const int lam02[2] = {0, 2};
    CHECK(verify_schur_minor(lam02, 2).holds);
    const int lam13[3] = {1, 2, 4};
    CHECK(verify_schur_minor(lam13, 4).holds);
}

TEST_CASE("alternating vandermonde expansion") {
    for (int k = 1; k <= 4; ++k) {
        const auto r = verify_alternating_vandermonde(k);
        CHECK(r.holds);
        CHECK(r.identity == "alternating_vandermonde");
    }
}

TEST_CASE("E minor formula with discovered constant") {
    const auto r12 = verify_e_minor_formula(1, 2);
    CHECK(r12.holds);
    REQUIRE(r12.constant.has_value());
    CHECK(*r12.constant == Rational(1));

    const auto r23 = verify_e_minor_formula(2, 3);
    CHECK(r23.holds);
    CHECK(*r23.constant == Rational(1));

    const auto r24 = verify_e_minor_formula(2, 4);
    CHECK(r24.holds);
    CHECK(*r24.constant == Rational(1));

    const auto r34 = verify_e_minor_formula(3, 4);
    CHECK(r34.holds);
    CHECK(*r34.constant == Rational(4));
}

TEST_CASE("per beta chain") {
    const auto r1 = verify_per_beta_chain(beta_of(2, {{1, 2}}));
    CHECK(r1.holds);

    const auto r2 = verify_per_beta_chain(beta_of(3, {{1, 2}, {1, 3}}));
    CHECK(r2.holds);
    CHECK(has_note(r2, "det(R1) == (-1)^(k(k-1)/2) * det(R2)"));

    const auto r3 = verify_per_beta_chain(beta_of(3, {{1, 2}, {2, 3}}));
    CHECK(r3.holds);

    const auto r4 = verify_per_beta_chain(beta_of(4, {{1, 2}, {1, 3}, {2, 4}}));
    CHECK(r4.holds);
}

TEST_CASE("minor equivalence") {
    CHECK(verify_minor_equivalence(1, 2).holds);
    CHECK(verify_minor_equivalence(2, 3).holds);
    CHECK(verify_minor_equivalence(2, 4).holds);
    CHECK(verify_minor_equivalence(3, 4).holds);
}

TEST_CASE("main relation constants") {
    for (int n = 2; n <= 4; ++n) {
        const auto r = verify_main_relation(1, n);
        CHECK(r.holds);
        REQUIRE(r.constant.has_value());
        CHECK(*r.constant == Rational(1));
    }
    for (int n = 3; n <= 5; ++n) {
        const auto r = verify_main_relation(2, n);
        CHECK(r.holds);
        REQUIRE(r.constant.has_value());
        CHECK(*r.constant == Rational(1));
        CHECK(has_note(r, "matches (prod_{i=1..k} (i-1)!)^2 = 1"));
        CHECK(has_note(r, "differs from (prod_{i=1..k} i!)^2 = 4"));
    }
    const auto r3 = verify_main_relation(3, 4);
    CHECK(r3.holds);
    CHECK(*r3.constant == Rational(4));
    CHECK(has_note(r3, "matches (prod_{i=1..k} (i-1)!)^2 = 4"));
    CHECK(has_note(r3, "differs from (prod_{i=1..k} i!)^2 = 144"));
}

TEST_CASE("constants are mutually consistent") {
    // c_E(k) from the minor formula must equal c(k) from the main relation,
    // since the remaining factor n^(k-1) is exactly the minor-equivalence one.
    for (int k = 1; k <= 3; ++k) {
        const int n = k + 1;
        const auto minor = verify_e_minor_formula(k, n);
        const auto rel = verify_main_relation(k, n);
        REQUIRE(minor.constant.has_value());
        REQUIRE(rel.constant.has_value());
        CHECK(*minor.constant == *rel.constant);
    }
}

TEST_CASE("discovered constants match the pinned file") {
    std::ifstream golden(std::string(GOLDEN_DIR) + "/constants.txt");
    REQUIRE(golden.good());
    int k = 0;
    std::string value;
    int rows = 0;
    while (golden >> k >> value) {
        const auto r = verify_main_relation(k, k + 1);
        REQUIRE(r.constant.has_value());
        CHECK(r.constant->str() == value);
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("hypergeometric summation identity") {
    // m = 0 is the empty-product base case
    const auto base = verify_hypergeom_identity(0, 3, 2);
    CHECK(base.holds);

    // a root of the leading product forces both sides to zero
    const auto zero = verify_hypergeom_identity(1, 1, 0);
    CHECK(zero.holds);
    CHECK(has_note(zero, "offset-(2m+k) variant agrees here"));

    // the printed offset disagrees at the simplest nontrivial point
    const auto off = verify_hypergeom_identity(1, 0, 0);
    CHECK(off.holds);
    CHECK(has_note(off, "offset-(2m+k) variant differs: -1"));

    CHECK(verify_hypergeom_identity(2, 0, 1).holds);

    for (int m = 0; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int i = -6; i <= 6; i += 2) CHECK(verify_hypergeom_identity(m, i, k).holds);
}

TEST_CASE("report serialization") {
    const auto r = verify_main_relation(2, 3);
    const auto j = nlohmann::ordered_json::parse(r.json_line());
    CHECK(j["identity"] == "main_relation");
    CHECK(j["params"]["k"] == 2);
    CHECK(j["params"]["n"] == 3);
    CHECK(j["holds"] == true);
    CHECK(j["constant"] == "1");
    CHECK(j["lhs_hash"].is_string());
    CHECK(j["rhs_hash"].is_string());
    CHECK(j["notes"].is_array());
    CHECK(!j.contains("witness"));

    const auto held = verify_minor_equivalence(1, 2);
    const auto j2 = nlohmann::ordered_json::parse(held.json_line());
    CHECK(j2["constant"].is_null());
    CHECK(j2["lhs_hash"] == j2["rhs_hash"]);
}
