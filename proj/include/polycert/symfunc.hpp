#pragma once

#include <span>
#include <vector>

#include "polycert/multipoly.hpp"

namespace polycert {

// All constructors build polynomials in the ambient ring of n variables
// z_1..z_n (0-based internally, 1-based in printed form). Index arguments are
// 1-based throughout, matching the printed form.

// e_k(z_1..z_n); e_0 = 1, e_k = 0 for k > n or k < 0.
MultiPoly elementary(int k, int n);

// p_k = z_1^k + ... + z_n^k; p_0 = n.
MultiPoly power_sum(int k, int n);

// Sum over ordered tuples (b_1..b_l) of pairwise distinct indices of
// z_{b_1}^{d_1} * ... * z_{b_l}^{d_l}. d must be non-increasing and
// non-negative; trailing zeros scale the sum by the count of unused index
// choices. Throws EmptyDomainError when l > n (the domain is empty, and a
// silent 0 would corrupt callers).
MultiPoly monomial_fn(const std::vector<int>& d, int n);

// monomial_fn on (2 repeated m2 times, 1 repeated m1 times) divided by
// m2!*m1!; the division is exact because ordered tuples overcount each
// monomial by exactly that factor.
MultiPoly monomial2(int m2, int m1, int n);

// e_k of the variables excluding the (distinct, 1-based) indices given.
MultiPoly elementary_incomplete(int k, std::span<const int> excluded, int n);

// monomial_fn restricted to tuples avoiding indices i and j.
MultiPoly monomial_incomplete(const std::vector<int>& d, int i, int j, int n);

// prod_{u<v} (z_{idx_v} - z_{idx_u}).
MultiPoly vandermonde_D(std::span<const int> idx, int n);

// det of V_{u,v} = z_{idx_v}^{lambda_u}; lambda strictly increasing, >= 0.
MultiPoly vandermonde_det(std::span<const int> idx, std::span<const int> lambda, int n);

// Schur polynomial in the variables z(idx): vandermonde_det / vandermonde_D.
// The division is exact; a remainder raises ExactnessError.
MultiPoly schur(std::span<const int> idx, std::span<const int> lambda, int n);

// f_k(x1, x2) = x1^k + x1^{k-1} x2 + ... + x2^k on variables z_i, z_j.
MultiPoly f_geom(int k, int i, int j, int n);

// det of (z_{idx_u}^v)_{u,v=1..k}, computed via the closed product form
// prod_u z_{idx_u} * prod_{u<v} (z_{idx_v} - z_{idx_u}); zero when two
// indices coincide.
MultiPoly d_det(std::span<const int> idx, int n);

// Ascending k-subsets of {1..n}.
std::vector<std::vector<int>> index_subsets(int k, int n);

}  // namespace polycert
