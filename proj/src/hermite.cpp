#include "polycert/hermite.hpp"

#include <sstream>

#include "polycert/symfunc.hpp"

namespace polycert {

namespace {

void check_lambda(std::span<const int> lambda) {
    if (lambda.empty()) throw std::invalid_argument("hermite: empty lambda");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("hermite: lambda parts must be >= 0");
        if (i + 1 < lambda.size() && lambda[i] >= lambda[i + 1])
            throw std::invalid_argument("hermite: lambda must be strictly increasing");
    }
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw std::invalid_argument("UniPoly: degree must be at least 1");
    if (coeffs_.back().is_zero()) throw std::invalid_argument("UniPoly: leading coefficient is zero");
}

UniPoly UniPoly::parse(const std::string& text) {
    std::vector<Rational> cs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("UniPoly: empty coefficient");
        const auto e = tok.find_last_not_of(" \t");
        cs.push_back(Rational::from_string(tok.substr(b, e - b + 1)));
    }
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
    std::vector<Rational> cs{Rational(1)};
    for (const Rational& r : roots) {
        cs.insert(cs.begin(), Rational(0));  // multiply by x
        for (std::size_t i = 0; i + 1 < cs.size(); ++i) cs[i] -= r * cs[i + 1];
    }
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::monic() const {
    std::vector<Rational> cs = coeffs_;
    const Rational lead = cs.back();
    for (Rational& c : cs) c /= lead;
    return UniPoly(std::move(cs));
}

std::vector<Rational> coeffs_to_elementary(const UniPoly& p) {
    const UniPoly m = p.monic();
    const int n = m.degree();
    std::vector<Rational> e(n + 1);
    for (int k = 0; k <= n; ++k) {
        e[k] = m.coeffs()[n - k];
        if (k % 2 == 1) e[k] = -e[k];
    }
    return e;
}

std::vector<Rational> newton_girard(const UniPoly& p, int upto) {
    const int n = p.degree();
    const std::vector<Rational> e = coeffs_to_elementary(p);
    auto e_at = [&](int i) { return i <= n ? e[i] : Rational(0); };
    std::vector<Rational> ps(upto + 1);
    ps[0] = Rational(n);
    for (int k = 1; k <= upto; ++k) {
        Rational acc(0);
        for (int i = 1; i < k; ++i) {
            Rational term = e_at(i) * ps[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        Rational tail = e_at(k) * Rational(k);
        ps[k] = acc + ((k % 2 == 1) ? tail : -tail);
    }
    return ps;
}

RingMatrix<Rational> hermite_matrix(std::span<const Rational> power_sums,
                                    std::span<const int> lambda) {
    check_lambda(lambda);
    const std::size_t k = lambda.size();
    const int need = lambda[k - 1] + static_cast<int>(k) - 1;
    if (need >= static_cast<int>(power_sums.size()))
        throw std::invalid_argument("hermite_matrix: power-sum table too short");
    RingMatrix<Rational> H(k, k, Rational(0));
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v) H.at(u, v) = power_sums[lambda[u] + v];
    return H;
}

RingMatrix<MultiPoly> hermite_matrix_symbolic(std::span<const int> lambda, int n) {
    check_lambda(lambda);
    const std::size_t k = lambda.size();
    RingMatrix<MultiPoly> H(k, k, MultiPoly(n));
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v)
            H.at(u, v) = power_sum(lambda[u] + static_cast<int>(v), n);
    return H;
}

std::string to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::ALL_REAL_DISTINCT: return "ALL_REAL_DISTINCT";
        case RootVerdict::NOT_ALL_REAL: return "NOT_ALL_REAL";
        case RootVerdict::INCONCLUSIVE_DEGENERATE: return "INCONCLUSIVE_DEGENERATE";
    }
    return "?";
}

RootClassification classify_real_roots(const UniPoly& p) {
    const int n = p.degree();
    const std::vector<Rational> ps = newton_girard(p, 2 * n - 2);
    std::vector<int> lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = i;
    const RingMatrix<Rational> H = hermite_matrix(ps, lambda);
    RootClassification out;
    out.minors = leading_minors(H);
    bool any_negative = false;
    for (int k = 1; k <= n; ++k) {
        if (out.minors[k].sign() <= 0 && !out.witness) out.witness = k;
        if (out.minors[k].sign() < 0) any_negative = true;
    }
    out.verdict = !out.witness          ? RootVerdict::ALL_REAL_DISTINCT
                  : any_negative        ? RootVerdict::NOT_ALL_REAL
                                        : RootVerdict::INCONCLUSIVE_DEGENERATE;
    return out;
}

}  // namespace polycert
