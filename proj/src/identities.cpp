#include "polycert/identities.hpp"

#include <stdexcept>
#include <utility>

#include "polycert/ematrix.hpp"
#include "polycert/hermite.hpp"
#include "polycert/matrix.hpp"
#include "polycert/symfunc.hpp"

namespace polycert {

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["params"] = params;
    j["holds"] = holds;
    j["constant"] = constant ? nlohmann::ordered_json(constant->str()) : nlohmann::ordered_json(nullptr);
    j["lhs_hash"] = lhs_hash;
    j["rhs_hash"] = rhs_hash;
    if (!notes.empty()) j["notes"] = notes;
    if (!witness.empty()) j["witness"] = witness;
    return j;
}

std::string VerificationReport::json_line() const { return to_json().dump(); }

namespace {

Rational fact(int n) { return Rational::factorial(static_cast<unsigned long>(n)); }

std::string poly_hash(const MultiPoly& p) { return hash_hex(p.str()); }

void fill_sides(VerificationReport& r, const MultiPoly& lhs, const MultiPoly& rhs) {
    r.lhs_hash = poly_hash(lhs);
    r.rhs_hash = poly_hash(rhs);
    r.holds = (lhs == rhs);
    if (!r.holds) r.witness = "lhs = " + lhs.str() + " ; rhs = " + rhs.str();
}

// lhs == c * rhs for a single constant c != 0; nullopt when no such c exists.
std::optional<Rational> constant_ratio(const MultiPoly& lhs, const MultiPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return std::nullopt;
    const auto& lt = *lhs.terms().rbegin();
    const auto& rt = *rhs.terms().rbegin();
    if (lt.first != rt.first) return std::nullopt;
    Rational c = lt.second / rt.second;
    if (lhs == rhs * c) return c;
    return std::nullopt;
}

void note_closed_forms(VerificationReport& r, int k) {
    if (!r.constant) return;
    Rational shifted(1), plain(1);
    for (int i = 1; i <= k; ++i) {
        shifted *= fact(i - 1);
        plain *= fact(i);
    }
    shifted *= shifted;
    plain *= plain;
    auto compare = [&](const char* name, const Rational& v) {
        std::string verdict = (*r.constant == v) ? "matches " : "differs from ";
        r.notes.push_back(verdict + name + " = " + v.str());
    };
    compare("(prod_{i=1..k} (i-1)!)^2", shifted);
    compare("(prod_{i=1..k} i!)^2", plain);
}

}  // namespace

VerificationReport verify_schur_minor(std::span<const int> lambda, int n, ExecMode mode) {
    VerificationReport r;
    r.identity = "schur_minor";
    r.params["lambda"] = std::vector<int>(lambda.begin(), lambda.end());
    r.params["n"] = n;
    const MultiPoly lhs = det(hermite_matrix_symbolic(lambda, n));
    const MultiPoly rhs = schur_weighted_sum(lambda, n, mode);
    fill_sides(r, lhs, rhs);
    return r;
}

VerificationReport verify_alternating_vandermonde(int k) {
    VerificationReport r;
    r.identity = "alternating_vandermonde";
    r.params["k"] = k;
    const int v = k + 1;
    MultiPoly rhs = MultiPoly::constant(v, Rational(1));
    for (int i = 1; i <= v; ++i)
        for (int j = i + 1; j <= v; ++j)
            rhs *= MultiPoly::variable(v, i - 1) - MultiPoly::variable(v, j - 1);
    MultiPoly lhs(v);
    for (int l = 1; l <= v; ++l) {
        MultiPoly term = MultiPoly::variable(v, l - 1, k);
        for (int i = 1; i <= v; ++i) {
            if (i == l) continue;
            for (int j = i + 1; j <= v; ++j) {
                if (j == l) continue;
                term *= MultiPoly::variable(v, i - 1) - MultiPoly::variable(v, j - 1);
            }
        }
        if (l % 2 == 0) term = -term;
        lhs += term;
    }
    fill_sides(r, lhs, rhs);
    return r;
}

VerificationReport verify_e_minor_formula(int k, int n, ExecMode mode) {
    VerificationReport r;
    r.identity = "e_minor_formula";
    r.params["k"] = k;
    r.params["n"] = n;
    const MultiPoly lhs = det(e_block_symbolic(k, n, mode));
    const MultiPoly rhs = sum_det_r3_squared(k, n, mode);
    r.lhs_hash = poly_hash(lhs);
    r.rhs_hash = poly_hash(rhs);
    r.constant = constant_ratio(lhs, rhs);
    r.holds = r.constant.has_value() && r.constant->sign() > 0;
    if (!r.holds) r.witness = "no positive constant c with lhs == c * rhs";
    note_closed_forms(r, k);
    return r;
}

VerificationReport verify_per_beta_chain(const PairMultiset& beta) {
    if (beta.has_repeated_pair())
        throw std::invalid_argument("verify_per_beta_chain: beta must not repeat a pair");
    VerificationReport r;
    r.identity = "per_beta_chain";
    const int k = beta.k();
    const int n = beta.n;
    r.params["k"] = k;
    r.params["n"] = n;
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [a, b] : beta.pairs) pairs.push_back({a, b});
    r.params["beta"] = pairs;

    RingMatrix<MultiPoly> r1(k, k, MultiPoly(n)), r2(k, k, MultiPoly(n));
    for (int u = 1; u <= k; ++u) {
        for (int v = 1; v <= k; ++v) {
            const auto [a, b] = beta.pairs[v - 1];
            const int excluded[2] = {a, b};
            r1.at(u - 1, v - 1) = elementary_incomplete(u - 1, excluded, n);
            r2.at(u - 1, v - 1) = f_geom(u - 1, a, b, n);
        }
    }
    const MultiPoly d1 = det(r1);
    const MultiPoly d2 = det(r2);
    const MultiPoly lhs = (pair_product_D(beta) * d2).squared();
    const MultiPoly rhs = det_r3(beta).squared();
    const bool first = (d1.squared() == d2.squared());
    fill_sides(r, lhs, rhs);
    r.holds = r.holds && first;
    if (!first) r.witness = "det(R1)^2 != det(R2)^2: " + d1.str() + " vs " + d2.str();
    const MultiPoly signed_d2 = (k / 2) % 2 == 1 ? -d2 : d2;
    r.notes.push_back(d1 == signed_d2 ? "det(R1) == (-1)^(k(k-1)/2) * det(R2)"
                                      : "sign relation det(R1) vs det(R2) violated");
    return r;
}

VerificationReport verify_minor_equivalence(int k, int n, ExecMode mode) {
    VerificationReport r;
    r.identity = "minor_equivalence";
    r.params["k"] = k;
    r.params["n"] = n;
    const MultiPoly lhs = sum_det_r3_squared(k, n, mode);
    const MultiPoly rhs = sum_vandermonde_squared(k + 1, n, mode) * Rational(n).pow(k - 1);
    fill_sides(r, lhs, rhs);
    return r;
}

VerificationReport verify_main_relation(int k, int n, ExecMode mode) {
    VerificationReport r;
    r.identity = "main_relation";
    r.params["k"] = k;
    r.params["n"] = n;
    const MultiPoly lhs = det(e_block_symbolic(k, n, mode));
    std::vector<int> lambda(k + 1);
    for (int i = 0; i <= k; ++i) lambda[i] = i;
    const MultiPoly rhs = det(hermite_matrix_symbolic(lambda, n)) * Rational(n).pow(k - 1);
    r.lhs_hash = poly_hash(lhs);
    r.rhs_hash = poly_hash(rhs);
    r.constant = constant_ratio(lhs, rhs);
    r.holds = r.constant.has_value() && r.constant->sign() > 0;
    if (!r.holds) r.witness = "no positive constant c with lhs == c * rhs";
    note_closed_forms(r, k);
    return r;
}

VerificationReport verify_hypergeom_identity(int m, int i, int k) {
    VerificationReport r;
    r.identity = "hypergeom";
    r.params["m"] = m;
    r.params["i"] = i;
    r.params["k"] = k;
    Rational lhs(0);
    for (int j = 0; j <= m; ++j) {
        Rational term = falling_factorial(Rational(m + k + j - i), static_cast<unsigned>(j)) *
                        falling_factorial(Rational(m - i + 1), static_cast<unsigned>(j)) /
                        (fact(j) * fact(j + k));
        if (j % 2 == 1) term = -term;
        lhs += term;
    }
    auto rhs_with_offset = [&](int offset) {
        Rational acc = (m % 2 == 1) ? Rational(-1) : Rational(1);
        for (int h = 1; h <= m; ++h) acc *= Rational(i - h);
        for (int h = 1; h <= m; ++h) acc *= Rational(i - offset + h);
        return acc / (fact(m) * fact(m + k));
    };
    const Rational rhs = rhs_with_offset(2 * m + k + 2);
    const Rational alt = rhs_with_offset(2 * m + k);
    r.lhs_hash = hash_hex(lhs.str());
    r.rhs_hash = hash_hex(rhs.str());
    r.holds = (lhs == rhs);
    if (!r.holds) r.witness = "lhs = " + lhs.str() + " ; rhs = " + rhs.str();
    r.notes.push_back(lhs == alt ? "offset-(2m+k) variant agrees here"
                                 : "offset-(2m+k) variant differs: " + alt.str());
    return r;
}

}  // namespace polycert
