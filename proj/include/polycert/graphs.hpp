#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polycert/multipoly.hpp"
#include "polycert/rational.hpp"

namespace polycert {

// Multiset of k unordered pairs from {1..n}. Slots are kept sorted; that slot
// order is the canonical order all selection bookkeeping refers to.
struct PairMultiset {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // each (a, b) with a < b; lexicographically sorted

    int k() const { return static_cast<int>(pairs.size()); }
    bool has_repeated_pair() const;
};

// All multisets of k pairs (combinations with repetition of the C(n,2) pairs).
std::vector<PairMultiset> enumerate_pairs(int k, int n);

// One endpoint chosen per slot; true picks the larger endpoint.
struct Selection {
    std::vector<bool> pick_max;

    int sign() const;  // (-1)^{number of larger endpoints chosen}
    std::vector<int> apply(const PairMultiset& beta) const;
};

std::vector<Selection> selections(int k);  // all 2^k in a fixed order

// |I(beta, s1, s2)|: slots where the two selections differ.
int differing_slots(const Selection& s1, const Selection& s2);

/// det of R3(beta): entry (u, v) = z_a^u - z_b^u for slot v = (a, b), u = 1..k.
MultiPoly det_r3(const PairMultiset& beta);
// The same determinant expanded column-by-column into the signed d-sum
// sum_s sgn(s) * d(s(beta)); kept separate as a sign-convention oracle.
MultiPoly det_r3_by_selections(const PairMultiset& beta);

// prod over slots of (z_a - z_b).
MultiPoly pair_product_D(const PairMultiset& beta);

// Every orientation of the complete graph on v vertices has a vertex with all
// edges outgoing or contains a directed 3-cycle; checked exhaustively.
bool tournament_property_check(int v);

// Decomposition of sum_beta det(R3)^2 by the value sets of the two selections.
// Terms sgn(s1,s2) d(s1(beta)) d(s2(beta)) over distinct-pair beta and
// selections with k distinct values fall into three classes:
//   - value sets equal: total must be n^{k-1}(n-k) sum_{b in C(k,n)} d(b)^2;
//   - value sets differing in one element (a single swap): the class of a
//     triple (b, i, j) with b in C(k+1,n) the union and b_i, b_j the missing
//     values must total n^{k-1} (-1)^{i+j} d(b^i) d(b^j);
//   - value sets differing in two or more elements: must cancel to zero.
// The slot-indexed variant (count slots where the selections differ, keep
// multisets with repeated pairs) does not cancel for k >= 2; its status and a
// sample value are reported rather than asserted.
struct CancellationCheck {
    int k = 0, n = 0;
    bool residual_zero = false;     // value sets differing in >= 2 elements
    bool diagonal_matches = false;  // value-set-equal class
    bool classes_match = false;     // every single-swap class
    bool slot_sum_zero = false;     // the slot-indexed variant
    Rational slot_sample;           // its value at z = (1, 2, ..., n)
    bool holds() const { return residual_zero && diagonal_matches && classes_match; }
};

CancellationCheck cancellation_check(int k, int n);

// ---- forest classes -----------------------------------------------------

// Canonical members of the class A1(k, h): forests with k edges on labeled
// vertices {1..k+1} plus h interchangeable unlabeled vertices (ids -1..-h),
// where vertices 1 and 2 share the one component with no unlabeled vertex,
// every other component has exactly one, and every component has >= 2
// vertices. Unlabeled placements are deduplicated by canonical renaming.
std::vector<std::vector<std::pair<int, int>>> enumerate_A1(int k, int h);

// Class A0(k, h): forests with k edges on labeled vertices {1..k} plus h+1
// unlabeled vertices, every component with exactly one unlabeled vertex and
// >= 2 vertices total.
std::vector<std::vector<std::pair<int, int>>> enumerate_A0(int k, int h);

// B(k, h) defined by x^{k-1} = sum_h B(k, h) * (x-k-1)(x-k-2)...(x-k-h); the
// basis solve is the ground truth. The recurrence row is
// B(k,h) = B(k-1,h-1) + (1+2h+k) B(k-1,h) + (1+h)(1+h+k) B(k-1,h+1) seeded
// from the previous basis row (and from B(0,0) = 1 for k = 1, where it is
// known to disagree with the basis; reported, never patched).
struct BTriangle {
    int k_max = 0;
    std::vector<std::vector<Rational>> basis;       // basis[k][h], rows 1..k_max
    std::vector<std::vector<Rational>> recurrence;  // same shape
};

BTriangle b_table(int k_max);

// ---- forest counting theorems -------------------------------------------

struct ForestCheck {
    int k = 0, n = 0;
    Rational weighted;   // sum_h |class(k,h)| * falling factorial weight
    Rational direct;     // brute-force count of labeled forests
    Rational expected;   // n^{k-1} for A1, n^{k-1}(n-k) for A0
    bool holds = false;
};

// Weighted side uses the enumerated class counts; direct side enumerates
// labeled forests with explicit root-vertex subsets of {1..n}.
ForestCheck forest_count_check_A1(int k, int n);
ForestCheck forest_count_check_A0(int k, int n);

}  // namespace polycert
