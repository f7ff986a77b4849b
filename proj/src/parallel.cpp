#include "polycert/parallel.hpp"

#include <vector>

#include "polycert/ematrix.hpp"
#include "polycert/symfunc.hpp"

namespace polycert {

namespace {

// Shared reduction skeleton: map each index to a polynomial, add everything.
template <class Fn>
MultiPoly reduce_sum(long count, int vars, ExecMode mode, Fn&& item) {
    MultiPoly total(vars);
    if (mode == ExecMode::Serial) {
        for (long i = 0; i < count; ++i) total += item(i);
        return total;
    }
#pragma omp parallel
    {
        MultiPoly local(vars);
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < count; ++i) local += item(i);
#pragma omp critical
        total += local;
    }
    return total;
}

}  // namespace

MultiPoly sum_det_r3_squared(int k, int n, ExecMode mode) {
    const std::vector<PairMultiset> betas = enumerate_pairs(k, n);
    return reduce_sum(static_cast<long>(betas.size()), n, mode, [&](long i) {
        const PairMultiset& beta = betas[i];
        if (beta.has_repeated_pair()) return MultiPoly(n);
        return det_r3(beta).squared();
    });
}

MultiPoly sum_vandermonde_squared(int m, int n, ExecMode mode) {
    const auto subsets = index_subsets(m, n);
    return reduce_sum(static_cast<long>(subsets.size()), n, mode,
                      [&](long i) { return vandermonde_D(subsets[i], n).squared(); });
}

MultiPoly schur_weighted_sum(std::span<const int> lambda, int n, ExecMode mode) {
    const auto subsets = index_subsets(static_cast<int>(lambda.size()), n);
    return reduce_sum(static_cast<long>(subsets.size()), n, mode, [&](long i) {
        const auto& b = subsets[i];
        return schur(b, lambda, n) * vandermonde_D(b, n).squared();
    });
}

RingMatrix<MultiPoly> e_block_symbolic(int k, int n, ExecMode mode) {
    RingMatrix<MultiPoly> E(k, k, MultiPoly(n));
    // upper-triangle work items, mirrored afterwards
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= k; ++r)
        for (int s = r; s <= k; ++s) cells.emplace_back(r, s);
    const long count = static_cast<long>(cells.size());
    if (mode == ExecMode::Serial) {
        for (long i = 0; i < count; ++i)
            E.at(cells[i].first - 1, cells[i].second - 1) =
                e_entry_direct(cells[i].first, cells[i].second, n);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i)
            E.at(cells[i].first - 1, cells[i].second - 1) =
                e_entry_direct(cells[i].first, cells[i].second, n);
    }
    for (int r = 1; r <= k; ++r)
        for (int s = r + 1; s <= k; ++s) E.at(s - 1, r - 1) = E.at(r - 1, s - 1);
    return E;
}

}  // namespace polycert
