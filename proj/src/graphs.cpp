#include "polycert/graphs.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <tuple>

#include "polycert/matrix.hpp"
#include "polycert/symfunc.hpp"

namespace polycert {

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) ps.emplace_back(a, b);
    return ps;
}

// Minimal union-find over a dense id range.
class Dsu {
public:
    explicit Dsu(int size) : parent_(size) {
        for (int i = 0; i < size; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

using EdgeList = std::vector<std::pair<int, int>>;

// Enumerates every acyclic spanning structure with exactly `edges` edges over
// the given vertices, subject to the component rules shared by all forest
// classes here: each `special` vertex in its own component with that
// component's only special vertex; every component has >= 2 vertices; if
// join_first_two, labeled[0] and labeled[1] share the unique component
// without a special vertex, and otherwise every component has one.
template <class Fn>
void for_each_forest(const std::vector<int>& labeled, const std::vector<int>& special,
                     int edges, bool join_first_two, Fn&& fn) {
    std::vector<int> ids = labeled;
    ids.insert(ids.end(), special.begin(), special.end());
    const int v = static_cast<int>(ids.size());
    std::map<int, int> slot;  // external id -> dense slot
    for (int i = 0; i < v; ++i) slot[ids[i]] = i;

    EdgeList pool;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) pool.emplace_back(ids[a], ids[b]);
    if (edges > static_cast<int>(pool.size()) || edges < 0) return;

    const int num_labeled = static_cast<int>(labeled.size());
    std::vector<int> choice(edges);
    EdgeList current(edges);
    auto accept = [&]() {
        Dsu dsu(v);
        for (int t = 0; t < edges; ++t) {
            const auto& e = pool[choice[t]];
            if (!dsu.unite(slot[e.first], slot[e.second])) return;  // cycle
            current[t] = e;
        }
        // component audit: sizes, special count per component, join condition
        std::vector<int> size(v, 0), specials(v, 0);
        for (int i = 0; i < v; ++i) {
            int root = dsu.find(i);
            ++size[root];
            if (i >= num_labeled) ++specials[root];
        }
        for (int i = 0; i < v; ++i) {
            int root = dsu.find(i);
            if (size[root] < 2) return;
            if (specials[root] > 1) return;
        }
        if (join_first_two) {
            if (dsu.find(slot.at(labeled[0])) != dsu.find(slot.at(labeled[1]))) return;
            if (specials[dsu.find(slot.at(labeled[0]))] != 0) return;
            // with h special vertices in h distinct components plus the
            // special-free joint component, the count of components is h+1
            // automatically (v - edges components in any forest)
        } else {
            // every component must contain a special vertex: components number
            // v - edges = |special|, and no component holds two
            for (int i = 0; i < num_labeled; ++i)
                if (specials[dsu.find(i)] == 0) return;
        }
        fn(current);
    };
    // lexicographic combinations of edge indices
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == edges) {
            accept();
            return;
        }
        for (int c = next; c <= static_cast<int>(pool.size()) - (edges - pos); ++c) {
            choice[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    rec(rec, 0, 0);
}

// Renames the unlabeled (negative) ids so that components listed by their
// smallest labeled vertex receive -1, -2, ... in order, then sorts the edges.
EdgeList canonical_form(const EdgeList& edges) {
    // tiny DSU over arbitrary (possibly negative) ids
    std::map<int, int> parent;
    auto find = [&](int x) {
        parent.try_emplace(x, x);
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) {
        int a = find(e.first), b = find(e.second);
        if (a != b) parent[a] = b;
    }
    std::map<int, int> comp_min_label;  // representative -> min positive id
    for (const auto& [id, p] : parent) {
        (void)p;
        if (id > 0) {
            int r = find(id);
            auto it = comp_min_label.find(r);
            if (it == comp_min_label.end() || id < it->second) comp_min_label[r] = id;
        }
    }
    std::vector<std::pair<int, int>> negs;  // (component min label, unlabeled id)
    for (const auto& [id, p] : parent) {
        (void)p;
        if (id < 0) negs.emplace_back(comp_min_label.at(find(id)), id);
    }
    std::sort(negs.begin(), negs.end());
    std::map<int, int> rename;
    for (std::size_t t = 0; t < negs.size(); ++t) rename[negs[t].second] = -static_cast<int>(t) - 1;
    EdgeList out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        int a = e.first < 0 ? rename.at(e.first) : e.first;
        int b = e.second < 0 ? rename.at(e.second) : e.second;
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeList> enumerate_class(int num_labeled, int num_unlabeled, int edges,
                                      bool join_first_two) {
    std::vector<int> labeled(num_labeled);
    for (int i = 0; i < num_labeled; ++i) labeled[i] = i + 1;
    std::vector<int> special(num_unlabeled);
    for (int i = 0; i < num_unlabeled; ++i) special[i] = -(i + 1);
    std::set<EdgeList> canon;
    for_each_forest(labeled, special, edges, join_first_two,
                    [&](const EdgeList& e) { canon.insert(canonical_form(e)); });
    return {canon.begin(), canon.end()};
}

}  // namespace

bool PairMultiset::has_repeated_pair() const {
    for (std::size_t t = 0; t + 1 < pairs.size(); ++t)
        if (pairs[t] == pairs[t + 1]) return true;
    return false;
}

std::vector<PairMultiset> enumerate_pairs(int k, int n) {
    if (k < 1 || n < 2) throw std::invalid_argument("enumerate_pairs: require k >= 1, n >= 2");
    const auto pool = all_pairs(n);
    std::vector<PairMultiset> out;
    std::vector<int> pick(k, 0);  // non-decreasing indices into pool
    while (true) {
        PairMultiset beta;
        beta.n = n;
        for (int t = 0; t < k; ++t) beta.pairs.push_back(pool[pick[t]]);
        out.push_back(std::move(beta));
        int i = k - 1;
        while (i >= 0 && pick[i] == static_cast<int>(pool.size()) - 1) --i;
        if (i < 0) break;
        const int v = pick[i] + 1;
        for (int j = i; j < k; ++j) pick[j] = v;
    }
    return out;
}

int Selection::sign() const {
    int c = 0;
    for (bool b : pick_max) c ^= b ? 1 : 0;
    return c ? -1 : 1;
}

std::vector<int> Selection::apply(const PairMultiset& beta) const {
    if (pick_max.size() != beta.pairs.size())
        throw std::invalid_argument("Selection: arity mismatch");
    std::vector<int> out(beta.pairs.size());
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] = pick_max[t] ? beta.pairs[t].second : beta.pairs[t].first;
    return out;
}

std::vector<Selection> selections(int k) {
    std::vector<Selection> out;
    out.reserve(1u << k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Selection s;
        s.pick_max.resize(k);
        for (int t = 0; t < k; ++t) s.pick_max[t] = (mask >> t) & 1;
        out.push_back(std::move(s));
    }
    return out;
}

int differing_slots(const Selection& s1, const Selection& s2) {
    if (s1.pick_max.size() != s2.pick_max.size())
        throw std::invalid_argument("differing_slots: arity mismatch");
    int c = 0;
    for (std::size_t t = 0; t < s1.pick_max.size(); ++t)
        if (s1.pick_max[t] != s2.pick_max[t]) ++c;
    return c;
}

MultiPoly det_r3(const PairMultiset& beta) {
    const int k = beta.k();
    const int n = beta.n;
    RingMatrix<MultiPoly> R(k, k, MultiPoly(n));
    for (int u = 1; u <= k; ++u)
        for (int v = 0; v < k; ++v)
            R.at(u - 1, v) = MultiPoly::variable(n, beta.pairs[v].first - 1, u) -
                             MultiPoly::variable(n, beta.pairs[v].second - 1, u);
    return det(R);
}

MultiPoly det_r3_by_selections(const PairMultiset& beta) {
    MultiPoly acc(beta.n);
    for (const Selection& s : selections(beta.k())) {
        std::vector<int> idx = s.apply(beta);
        MultiPoly term = d_det(idx, beta.n);
        acc += (s.sign() < 0) ? -term : term;
    }
    return acc;
}

MultiPoly pair_product_D(const PairMultiset& beta) {
    MultiPoly acc = MultiPoly::constant(beta.n, Rational(1));
    for (const auto& [a, b] : beta.pairs)
        acc *= MultiPoly::variable(beta.n, a - 1) - MultiPoly::variable(beta.n, b - 1);
    return acc;
}

bool tournament_property_check(int v) {
    if (v < 1) throw std::invalid_argument("tournament_property_check: require v >= 1");
    const auto pairs = all_pairs(v);
    const int m = static_cast<int>(pairs.size());
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        // adj[a][b] true means a -> b
        std::vector<std::vector<bool>> adj(v + 1, std::vector<bool>(v + 1, false));
        for (int t = 0; t < m; ++t) {
            auto [a, b] = pairs[t];
            if ((mask >> t) & 1)
                adj[b][a] = true;
            else
                adj[a][b] = true;
        }
        bool all_out = false;
        for (int a = 1; a <= v && !all_out; ++a) {
            bool ok = true;
            for (int b = 1; b <= v; ++b)
                if (b != a && !adj[a][b]) ok = false;
            all_out = ok;
        }
        if (all_out) continue;
        bool cycle = false;
        for (int a = 1; a <= v && !cycle; ++a)
            for (int b = 1; b <= v && !cycle; ++b)
                for (int c = 1; c <= v && !cycle; ++c)
                    if (a != b && b != c && a != c && adj[a][b] && adj[b][c] && adj[c][a])
                        cycle = true;
        if (!cycle) return false;
    }
    return true;
}

namespace {

bool has_repeat(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

CancellationCheck cancellation_check(int k, int n) {
    CancellationCheck out;
    out.k = k;
    out.n = n;
    const auto sels = selections(k);
    const auto betas = enumerate_pairs(k, n);

    MultiPoly slot_acc(n);
    MultiPoly diag_acc(n);
    MultiPoly residual_acc(n);
    std::map<std::tuple<std::vector<int>, int, int>, MultiPoly> swap_acc;

    for (const PairMultiset& beta : betas) {
        std::vector<MultiPoly> dvals(sels.size(), MultiPoly(n));
        std::vector<std::vector<int>> vals(sels.size());
        std::vector<char> live(sels.size(), 0);
        for (std::size_t si = 0; si < sels.size(); ++si) {
            vals[si] = sels[si].apply(beta);
            if (!has_repeat(vals[si])) {
                dvals[si] = d_det(vals[si], n);
                live[si] = 1;
            }
        }
        for (std::size_t i = 0; i < sels.size(); ++i) {
            for (std::size_t j = 0; j < sels.size(); ++j) {
                if (differing_slots(sels[i], sels[j]) >= 2 && live[i] && live[j]) {
                    MultiPoly term = dvals[i] * dvals[j];
                    slot_acc += (sels[i].sign() * sels[j].sign() < 0) ? -term : term;
                }
                if (beta.has_repeated_pair() || !live[i] || !live[j]) continue;
                int diff = 0;
                for (int t = 0; t < k; ++t)
                    if (vals[i][t] != vals[j][t]) ++diff;
                MultiPoly term = dvals[i] * dvals[j];
                if (diff % 2) term = -term;
                std::vector<int> a = vals[i], b = vals[j];
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a == b) {
                    diag_acc += term;
                    continue;
                }
                std::vector<int> uni;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
                if (static_cast<int>(uni.size()) != k + 1) {
                    residual_acc += term;
                    continue;
                }
                int mi = -1, mj = -1;
                for (int t = 0; t <= k; ++t) {
                    if (!std::binary_search(a.begin(), a.end(), uni[t])) mi = t;
                    if (!std::binary_search(b.begin(), b.end(), uni[t])) mj = t;
                }
                auto it = swap_acc.try_emplace(std::make_tuple(std::move(uni), mi, mj), MultiPoly(n)).first;
                it->second += term;
            }
        }
    }

    out.slot_sum_zero = slot_acc.is_zero();
    std::vector<Rational> sample;
    sample.reserve(n);
    for (int i = 1; i <= n; ++i) sample.emplace_back(i);
    out.slot_sample = slot_acc.eval(sample);
    out.residual_zero = residual_acc.is_zero();

    MultiPoly diag_claim(n);
    const Rational scale = Rational(n).pow(static_cast<unsigned long>(k - 1)) * Rational(n - k);
    for (const auto& b : index_subsets(k, n)) {
        diag_claim += d_det(b, n).squared() * scale;
    }
    out.diagonal_matches = (diag_acc == diag_claim);

    out.classes_match = true;
    const Rational npow = Rational(n).pow(static_cast<unsigned long>(k - 1));
    for (const auto& b : index_subsets(k + 1, n)) {
        for (int i = 0; i <= k && out.classes_match; ++i) {
            for (int j = 0; j <= k; ++j) {
                if (i == j) continue;
                std::vector<int> bi, bj;
                for (int t = 0; t <= k; ++t) {
                    if (t != i) bi.push_back(b[t]);
                    if (t != j) bj.push_back(b[t]);
                }
                MultiPoly claim = d_det(bi, n) * d_det(bj, n) * npow;
                if ((i + j) % 2) claim = -claim;
                auto it = swap_acc.find(std::make_tuple(b, i, j));
                const bool ok = (it == swap_acc.end()) ? claim.is_zero() : (it->second == claim);
                if (!ok) {
                    out.classes_match = false;
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<EdgeList> enumerate_A1(int k, int h) {
    if (k < 1 || h < 0 || h > k - 1)
        throw std::invalid_argument("enumerate_A1: require k >= 1 and 0 <= h <= k-1");
    return enumerate_class(k + 1, h, k, true);
}

std::vector<EdgeList> enumerate_A0(int k, int h) {
    if (k < 1 || h < 0 || h > k - 1)
        throw std::invalid_argument("enumerate_A0: require k >= 1 and 0 <= h <= k-1");
    return enumerate_class(k, h + 1, k, false);
}

BTriangle b_table(int k_max) {
    if (k_max < 1 || k_max > 8) throw std::invalid_argument("b_table: require 1 <= k_max <= 8");
    BTriangle t;
    t.k_max = k_max;
    t.basis.resize(k_max + 1);
    t.recurrence.resize(k_max + 1);
    for (int k = 1; k <= k_max; ++k) {
        // forward solve on evaluation points x = k+1, k+2, ...: the h-th basis
        // polynomial (x-k-1)_h vanishes at the first h of them
        std::vector<Rational>& row = t.basis[k];
        row.assign(k, Rational(0));
        for (int tpt = 0; tpt < k; ++tpt) {
            Rational lhs = Rational(k + 1 + tpt).pow(k - 1);
            for (int h = 0; h < tpt; ++h) lhs -= row[h] * falling_factorial(Rational(tpt), h);
            row[tpt] = lhs / falling_factorial(Rational(tpt), tpt);
        }
    }
    for (int k = 1; k <= k_max; ++k) {
        std::vector<Rational>& row = t.recurrence[k];
        row.assign(k, Rational(0));
        auto prev = [&](int h) -> Rational {
            if (k == 1) return h == 0 ? Rational(1) : Rational(0);  // B(0, h) = delta
            if (h < 0 || h >= k - 1) return Rational(0);
            return t.basis[k - 1][h];
        };
        for (int h = 0; h < k; ++h)
            row[h] = prev(h - 1) + Rational(1 + 2 * h + k) * prev(h) +
                     Rational(1 + h) * Rational(1 + h + k) * prev(h + 1);
    }
    return t;
}

namespace {

Rational direct_total(int k, int n, bool a1_variant) {
    const int num_labeled = a1_variant ? k + 1 : k;
    const int root_lo = num_labeled + 1;  // roots drawn from {num_labeled+1 .. n}
    Rational total(0);
    for (int h = 0; h <= k - 1; ++h) {
        const int num_roots = a1_variant ? h : h + 1;
        for (const auto& roots0 : index_subsets(num_roots, n - root_lo + 1)) {
            std::vector<int> labeled(num_labeled);
            for (int i = 0; i < num_labeled; ++i) labeled[i] = i + 1;
            std::vector<int> roots;
            for (int r : roots0) roots.push_back(root_lo - 1 + r);
            long count = 0;
            for_each_forest(labeled, roots, k, a1_variant, [&](const EdgeList&) { ++count; });
            total += Rational(count);
        }
    }
    return total;
}

}  // namespace

ForestCheck forest_count_check_A1(int k, int n) {
    if (k < 1 || n < k + 1)
        throw std::invalid_argument("forest_count_check_A1: require 1 <= k <= n-1");
    ForestCheck out;
    out.k = k;
    out.n = n;
    for (int h = 0; h <= k - 1; ++h) {
        Rational cls(static_cast<long>(enumerate_A1(k, h).size()));
        out.weighted += cls * falling_factorial(Rational(n - k - 1), h);
    }
    out.direct = direct_total(k, n, true);
    out.expected = Rational(n).pow(k - 1);
    out.holds = out.weighted == out.expected && out.direct == out.expected;
    return out;
}

ForestCheck forest_count_check_A0(int k, int n) {
    if (k < 1 || n < k + 1)
        throw std::invalid_argument("forest_count_check_A0: require 1 <= k <= n-1");
    ForestCheck out;
    out.k = k;
    out.n = n;
    for (int h = 0; h <= k - 1; ++h) {
        Rational cls(static_cast<long>(enumerate_A0(k, h).size()));
        out.weighted += cls * falling_factorial(Rational(n - k), h + 1);
    }
    out.direct = direct_total(k, n, false);
    out.expected = Rational(n).pow(k - 1) * Rational(n - k);
    out.holds = out.weighted == out.expected && out.direct == out.expected;
    return out;
}

}  // namespace polycert
