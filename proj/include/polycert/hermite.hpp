#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycert/matrix.hpp"
#include "polycert/multipoly.hpp"

namespace polycert {

// Dense univariate polynomial, constant term first, nonzero leading
// coefficient, degree >= 1.
class UniPoly {
public:
    explicit UniPoly(std::vector<Rational> coeffs);

    // "c0,c1,...,cn" where each token is an integer or "num/den".
    static UniPoly parse(const std::string& text);
    // Monic polynomial with the given roots.
    static UniPoly from_roots(std::span<const Rational> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    UniPoly monic() const;

private:
    std::vector<Rational> coeffs_;
};

// e_0..e_n of the roots, from the coefficients alone: e_k = (-1)^k a_{n-k}
// after normalizing to a monic polynomial.
std::vector<Rational> coeffs_to_elementary(const UniPoly& p);

// Power sums p_0..p_upto of the roots via the Newton-Girard recurrence;
// p_0 = degree.
std::vector<Rational> newton_girard(const UniPoly& p, int upto);

// Generalized Hermite matrix H(lambda; n): entry (u, v) = p_{lambda_u + v - 1}
// (1-based u, v), built from a precomputed power-sum table. lambda must be
// strictly increasing and non-negative; the classical H(n) is lambda = (0..n-1).
RingMatrix<Rational> hermite_matrix(std::span<const Rational> power_sums,
                                    std::span<const int> lambda);

// Symbolic twin over z_1..z_n.
RingMatrix<MultiPoly> hermite_matrix_symbolic(std::span<const int> lambda, int n);

enum class RootVerdict { ALL_REAL_DISTINCT, NOT_ALL_REAL, INCONCLUSIVE_DEGENERATE };

std::string to_string(RootVerdict v);

struct RootClassification {
    RootVerdict verdict;
    // First k (1-based) with a non-positive k-th leading principal minor;
    // absent when the verdict is ALL_REAL_DISTINCT.
    std::optional<int> witness;
    std::vector<Rational> minors;  // (1, delta_1, ..., delta_n)
};

// Hermite criterion: all roots real and pairwise distinct iff every leading
// principal minor of H(n) is positive. A negative minor certifies a complex
// pair; zeros without a preceding negative leave the test inconclusive
// (repeated roots land here).
RootClassification classify_real_roots(const UniPoly& p);

}  // namespace polycert
