#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "polycert/graphs.hpp"
#include "polycert/parallel.hpp"
#include "polycert/rational.hpp"

namespace polycert {

// One identity check: what was tested, whether it held, and canonical
// fingerprints of both sides. `constant` is filled by the ratio-discovery
// checks; `witness` is non-empty exactly when holds is false.
struct VerificationReport {
    std::string identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    bool holds = false;
    std::optional<Rational> constant;
    std::string lhs_hash;
    std::string rhs_hash;
    std::vector<std::string> notes;
    std::string witness;

    nlohmann::ordered_json to_json() const;
    std::string json_line() const;
};

// det(H(lambda; n)) == sum over k-subsets b of S(z(b); lambda) * D(z(b))^2.
VerificationReport verify_schur_minor(std::span<const int> lambda, int n,
                                      ExecMode mode = ExecMode::Serial);

// sum_l (-1)^(l-1) x_l^k prod_{i<j; i,j != l} (x_i - x_j)
//   == prod_{i<j} (x_i - x_j), symbolically in k+1 variables.
VerificationReport verify_alternating_vandermonde(int k);

// Delta_k(E(n)) == c_E(k) * sum_beta det(R3(beta))^2; c_E(k) is discovered
// from the leading coefficients and certified by full equality.
VerificationReport verify_e_minor_formula(int k, int n, ExecMode mode = ExecMode::Serial);

// det(R1)^2 == det(R2)^2 and (D(beta) * det(R2))^2 == det(R3)^2 for one
// multiset beta without repeated pairs.
VerificationReport verify_per_beta_chain(const PairMultiset& beta);

// sum_beta det(R3(beta))^2 == n^(k-1) * sum over (k+1)-subsets b of D(z(b))^2.
VerificationReport verify_minor_equivalence(int k, int n, ExecMode mode = ExecMode::Serial);

// Delta_k(E(n)) == c(k) * n^(k-1) * Delta_(k+1)(H(n)) with c(k) discovered,
// constant in n and in the variables; the notes compare c(k) against the two
// closed-form candidates (prod_{i=1..k} (i-1)!)^2 and (prod_{i=1..k} i!)^2.
VerificationReport verify_main_relation(int k, int n, ExecMode mode = ExecMode::Serial);

// sum_{j=0..m} (-1)^j (m+k+j-i)_j (m-i+1)_j / (j! (j+k)!)
//   == (-1)^m prod_{h=1..m} (i-h) * prod_{h=1..m} (i-(2m+k+2)+h) / (m! (m+k)!)
// in exact rationals, (x)_j the falling factorial. The variant with offset
// 2m+k in the second product is evaluated as well and reported in the notes.
VerificationReport verify_hypergeom_identity(int m, int i, int k);

}  // namespace polycert
