#include "polycert/symfunc.hpp"

#include <algorithm>

#include "polycert/matrix.hpp"

namespace polycert {

namespace {

void check_index(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("symfunc: index out of range");
}

// e_k over an explicit list of (0-based) variable slots.
MultiPoly elementary_of(const std::vector<int>& slots, int k, int n) {
    if (k < 0 || k > static_cast<int>(slots.size())) return MultiPoly(n);
    if (k == 0) return MultiPoly::constant(n, Rational(1));
    MultiPoly acc(n);
    std::vector<int> pick(k);
    // pick holds positions into slots, lexicographically advanced
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        MultiPoly::Exponents e(n, 0);
        for (int i = 0; i < k; ++i) e[slots[pick[i]]] = 1;
        acc += MultiPoly::monomial(n, std::move(e), Rational(1));
        int i = k - 1;
        while (i >= 0 && pick[i] == static_cast<int>(slots.size()) - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return acc;
}

MultiPoly monomial_sum(const std::vector<int>& d, const std::vector<int>& slots, int n) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] < d[i + 1]) throw std::invalid_argument("monomial_fn: exponents must be non-increasing");
    for (int e : d)
        if (e < 0) throw std::invalid_argument("monomial_fn: negative exponent");
    const int l = static_cast<int>(d.size());
    if (l > static_cast<int>(slots.size()))
        throw EmptyDomainError("monomial_fn: tuple length exceeds available variables");
    MultiPoly acc(n);
    if (l == 0) return MultiPoly::constant(n, Rational(1));
    std::vector<char> used(slots.size(), 0);
    std::vector<int> tuple(l);
    MultiPoly::Exponents e(n);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == l) {
            std::fill(e.begin(), e.end(), 0);
            for (int t = 0; t < l; ++t) e[slots[tuple[t]]] += d[t];
            acc += MultiPoly::monomial(n, e, Rational(1));
            return;
        }
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (used[s]) continue;
            used[s] = 1;
            tuple[pos] = static_cast<int>(s);
            self(self, pos + 1);
            used[s] = 0;
        }
    };
    rec(rec, 0);
    return acc;
}

std::vector<int> all_slots(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

std::vector<int> slots_excluding(std::span<const int> excluded, int n) {
    std::vector<char> drop(n, 0);
    for (int i : excluded) {
        check_index(i, n);
        if (drop[i - 1]) throw std::invalid_argument("symfunc: excluded indices must be distinct");
        drop[i - 1] = 1;
    }
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (!drop[i]) s.push_back(i);
    return s;
}

void check_lambda(std::span<const int> lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("symfunc: lambda parts must be >= 0");
        if (i + 1 < lambda.size() && lambda[i] >= lambda[i + 1])
            throw std::invalid_argument("symfunc: lambda must be strictly increasing");
    }
}

}  // namespace

MultiPoly elementary(int k, int n) { return elementary_of(all_slots(n), k, n); }

MultiPoly power_sum(int k, int n) {
    if (k < 0) throw std::invalid_argument("power_sum: negative exponent");
    if (k == 0) return MultiPoly::constant(n, Rational(n));
    MultiPoly acc(n);
    for (int i = 0; i < n; ++i) acc += MultiPoly::variable(n, i, k);
    return acc;
}

MultiPoly monomial_fn(const std::vector<int>& d, int n) { return monomial_sum(d, all_slots(n), n); }

MultiPoly monomial2(int m2, int m1, int n) {
    if (m2 < 0 || m1 < 0) throw std::invalid_argument("monomial2: negative multiplicity");
    std::vector<int> d;
    d.insert(d.end(), m2, 2);
    d.insert(d.end(), m1, 1);
    MultiPoly raw = monomial_fn(d, n);
    Rational scale = Rational(1) / (Rational::factorial(m2) * Rational::factorial(m1));
    return raw * scale;
}

MultiPoly elementary_incomplete(int k, std::span<const int> excluded, int n) {
    return elementary_of(slots_excluding(excluded, n), k, n);
}

MultiPoly monomial_incomplete(const std::vector<int>& d, int i, int j, int n) {
    if (i == j) throw std::invalid_argument("monomial_incomplete: indices must differ");
    const int pair[2] = {i, j};
    return monomial_sum(d, slots_excluding(pair, n), n);
}

MultiPoly vandermonde_D(std::span<const int> idx, int n) {
    for (int i : idx) check_index(i, n);
    MultiPoly acc = MultiPoly::constant(n, Rational(1));
    for (std::size_t u = 0; u < idx.size(); ++u)
        for (std::size_t v = u + 1; v < idx.size(); ++v)
            acc *= MultiPoly::variable(n, idx[v] - 1) - MultiPoly::variable(n, idx[u] - 1);
    return acc;
}

MultiPoly vandermonde_det(std::span<const int> idx, std::span<const int> lambda, int n) {
    if (idx.size() != lambda.size())
        throw std::invalid_argument("vandermonde_det: index/lambda arity mismatch");
    check_lambda(lambda);
    for (int i : idx) check_index(i, n);
    const std::size_t k = idx.size();
    RingMatrix<MultiPoly> V(k, k, MultiPoly(n));
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v)
            V.at(u, v) = lambda[u] == 0 ? MultiPoly::constant(n, Rational(1))
                                        : MultiPoly::variable(n, idx[v] - 1, lambda[u]);
    return det(V);
}

MultiPoly schur(std::span<const int> idx, std::span<const int> lambda, int n) {
    return vandermonde_det(idx, lambda, n).divide_exact(vandermonde_D(idx, n));
}

MultiPoly f_geom(int k, int i, int j, int n) {
    if (k < 0) throw std::invalid_argument("f_geom: negative degree");
    check_index(i, n);
    check_index(j, n);
    MultiPoly acc(n);
    for (int t = 0; t <= k; ++t) {
        MultiPoly::Exponents e(n, 0);
        e[i - 1] += k - t;  // += so that i == j folds into a single slot
        e[j - 1] += t;
        acc += MultiPoly::monomial(n, std::move(e), Rational(1));
    }
    return acc;
}

MultiPoly d_det(std::span<const int> idx, int n) {
    MultiPoly acc = MultiPoly::constant(n, Rational(1));
    for (int i : idx) {
        check_index(i, n);
        acc *= MultiPoly::variable(n, i - 1);
    }
    for (std::size_t u = 0; u < idx.size(); ++u)
        for (std::size_t v = u + 1; v < idx.size(); ++v)
            acc *= MultiPoly::variable(n, idx[v] - 1) - MultiPoly::variable(n, idx[u] - 1);
    return acc;
}

std::vector<std::vector<int>> index_subsets(int k, int n) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace polycert
