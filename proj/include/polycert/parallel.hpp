#pragma once

#include <span>

#include "polycert/graphs.hpp"
#include "polycert/matrix.hpp"
#include "polycert/multipoly.hpp"

namespace polycert {

// Every kernel exists in a serial reference form and an OpenMP form; both
// produce identical polynomials because the reductions are associative and
// the term store is canonical. Serial is the testing baseline, Parallel the
// default for the verification sweeps.
enum class ExecMode { Serial, Parallel };

// sum over multisets beta in Pairs(k, n) of det_r3(beta)^2. Multisets with a
// repeated pair contribute a determinant with two equal columns and are
// skipped outright.
MultiPoly sum_det_r3_squared(int k, int n, ExecMode mode);

// sum over ascending m-subsets b of {1..n} of vandermonde_D(z(b))^2.
MultiPoly sum_vandermonde_squared(int m, int n, ExecMode mode);

// sum over ascending |lambda|-subsets b of schur(z(b); lambda) * D(z(b))^2.
MultiPoly schur_weighted_sum(std::span<const int> lambda, int n, ExecMode mode);

// Top-left k x k block of E(n) from the definition; entries are independent
// work items.
RingMatrix<MultiPoly> e_block_symbolic(int k, int n, ExecMode mode);

}  // namespace polycert
