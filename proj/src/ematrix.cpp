#include "polycert/ematrix.hpp"

#include <algorithm>
#include <sstream>

#include "polycert/matrix.hpp"
#include "polycert/symfunc.hpp"

namespace polycert {

namespace {

void check_mspec(const MSpec& s) {
    if (s.m2 < 1 || s.m1 < 0) throw std::invalid_argument("MSpec: require m2 >= 1 and m1 >= 0");
}

Rational fact(int n) { return Rational::factorial(static_cast<unsigned long>(n)); }

std::string coeff_body(const Rational& c0, const Rational& c1, bool has_product) {
    std::ostringstream os;
    if (!c0.is_zero() && !c1.is_zero()) {
        os << "(";
        if (c1 == Rational(1))
            os << "n";
        else if (c1 == Rational(-1))
            os << "-n";
        else
            os << c1.str() << "*n";
        os << (c0.sign() > 0 ? "+" : "-") << c0.abs().str() << ")";
        return os.str();
    }
    const Rational mag = c1.is_zero() ? c0.abs() : c1.abs();
    if (c1.is_zero()) {
        if (mag == Rational(1) && has_product) return "";
        return mag.str();
    }
    if (mag == Rational(1)) return "n";
    return mag.str() + "*n";
}

}  // namespace

void EBasisQuadratic::add(const Rational& c0, const Rational& c1, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("EBasisQuadratic: negative e-index");
    if (c0.is_zero() && c1.is_zero()) return;
    auto key = std::minmax(i, j);
    auto [it, inserted] = terms_.emplace(std::make_pair(key.first, key.second), std::make_pair(c0, c1));
    if (!inserted) {
        it->second.first += c0;
        it->second.second += c1;
        if (it->second.first.is_zero() && it->second.second.is_zero()) terms_.erase(it);
    }
}

EBasisQuadratic& EBasisQuadratic::operator+=(const EBasisQuadratic& o) {
    for (const auto& [k, c] : o.terms_) add(c.first, c.second, k.first, k.second);
    return *this;
}

EBasisQuadratic EBasisQuadratic::scaled(const Rational& s) const {
    EBasisQuadratic out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_)
        out.terms_.emplace(k, std::make_pair(c.first * s, c.second * s));
    return out;
}

EBasisQuadratic EBasisQuadratic::times_linear(const Rational& a, const Rational& b) const {
    EBasisQuadratic out;
    for (const auto& [k, c] : terms_) {
        if (!c.second.is_zero())
            throw ExactnessError("EBasisQuadratic: times_linear would leave the linear-in-n shape");
        Rational c0 = c.first * a;
        Rational c1 = c.first * b;
        if (!c0.is_zero() || !c1.is_zero()) out.terms_.emplace(k, std::make_pair(c0, c1));
    }
    return out;
}

std::vector<EBasisQuadratic::Term> EBasisQuadratic::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.push_back(Term{it->second.first, it->second.second, it->first.first, it->first.second});
    return out;
}

MultiPoly EBasisQuadratic::specialize(long n, std::span<const MultiPoly> e_basis) const {
    if (e_basis.empty()) throw std::invalid_argument("EBasisQuadratic: empty basis");
    const int vars = e_basis[0].vars();
    MultiPoly acc(vars);
    auto e_at = [&](int i) {
        return i < static_cast<int>(e_basis.size()) ? e_basis[i] : MultiPoly(vars);
    };
    for (const auto& [k, c] : terms_) {
        Rational coeff = c.first + c.second * Rational(n);
        if (coeff.is_zero()) continue;
        acc += e_at(k.first) * e_at(k.second) * coeff;
    }
    return acc;
}

MultiPoly EBasisQuadratic::specialize_symmetric(int n) const {
    int top = 0;
    for (const auto& [k, c] : terms_) top = std::max(top, k.second);
    std::vector<MultiPoly> basis;
    basis.reserve(top + 1);
    for (int i = 0; i <= top; ++i) basis.push_back(elementary(i, n));
    return specialize(n, basis);
}

Rational EBasisQuadratic::eval(long n, std::span<const Rational> e_values) const {
    auto e_at = [&](int i) {
        return i < static_cast<int>(e_values.size()) ? e_values[i] : Rational(0);
    };
    Rational acc(0);
    for (const auto& [k, c] : terms_)
        acc += (c.first + c.second * Rational(n)) * e_at(k.first) * e_at(k.second);
    return acc;
}

std::string EBasisQuadratic::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms()) {
        // sign comes from whichever coefficient part is in play; mixed terms
        // render parenthesized and count as positive
        int sign = (!t.c0.is_zero() && !t.c1.is_zero()) ? 1 : (t.c1.is_zero() ? t.c0.sign() : t.c1.sign());
        if (first) {
            if (sign < 0) os << "-";
            first = false;
        } else {
            os << (sign < 0 ? " - " : " + ");
        }
        std::string product;
        if (t.i == 0 && t.j == 0)
            product = "";
        else if (t.i == 0)
            product = "e" + std::to_string(t.j);
        else if (t.i == t.j)
            product = "e" + std::to_string(t.i) + "^2";
        else
            product = "e" + std::to_string(t.i) + "*e" + std::to_string(t.j);
        std::string body = coeff_body(t.c0, t.c1, !product.empty());
        if (body.empty())
            os << product;
        else if (product.empty())
            os << body;
        else
            os << body << "*" << product;
        if (body.empty() && product.empty()) os << "1";
    }
    return os.str();
}

MultiPoly m_symbolic(const MSpec& spec, int n) {
    check_mspec(spec);
    std::vector<int> d1, d2;
    d1.insert(d1.end(), spec.m2, 2);
    d1.insert(d1.end(), spec.m1, 1);
    d1.push_back(0);
    d2.insert(d2.end(), spec.m2 - 1, 2);
    d2.insert(d2.end(), spec.m1 + 2, 1);
    return monomial_fn(d1, n) - monomial_fn(d2, n);
}

MultiPoly m_sum_of_squares(const MSpec& spec, int n) {
    check_mspec(spec);
    if (n < spec.m1 + spec.m2 + 1)
        throw EmptyDomainError("m_sum_of_squares: n too small for the spec");
    std::vector<int> d;
    d.insert(d.end(), spec.m2 - 1, 2);
    d.insert(d.end(), spec.m1, 1);
    MultiPoly acc(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            MultiPoly diff = MultiPoly::variable(n, i - 1) - MultiPoly::variable(n, j - 1);
            acc += monomial_incomplete(d, i, j, n) * diff.squared();
        }
    }
    return acc;
}

MultiPoly ememk_expand(int m, int k, int n) {
    if (m < 0 || k < 0) throw std::invalid_argument("ememk_expand: require m, k >= 0");
    MultiPoly acc(n);
    const int cap = std::min(m, n - m - k);
    for (int i = 0; i <= cap; ++i)
        acc += monomial2(m - i, k + 2 * i, n) * Rational::binomial(k + 2 * i, i);
    return acc;
}

EBasisQuadratic mono2_in_e(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("mono2_in_e: require m, k >= 0");
    EBasisQuadratic q;
    q.add(Rational(1), Rational(0), m, m + k);
    for (int i = 1; i <= m; ++i) {
        Rational c = Rational(k + 2 * i, i) * Rational::binomial(k + i - 1, i - 1);
        if (i % 2 == 1) c = -c;
        q.add(c, Rational(0), m - i, m + k + i);
    }
    return q;
}

EBasisQuadratic m_in_e_basis(const MSpec& spec) {
    check_mspec(spec);
    const Rational s1 = fact(spec.m2) * fact(spec.m1);
    const Rational s2 = fact(spec.m2 - 1) * fact(spec.m1 + 2);
    // monomial((2^m2, 1^m1, 0)) = (n - m1 - m2) * m2! * m1! * monomial2(m2, m1)
    EBasisQuadratic first =
        mono2_in_e(spec.m2, spec.m1).scaled(s1).times_linear(Rational(-(spec.m1 + spec.m2)), Rational(1));
    // monomial((2^(m2-1), 1^(m1+2))) = (m2-1)! * (m1+2)! * monomial2(m2-1, m1+2)
    EBasisQuadratic second = mono2_in_e(spec.m2 - 1, spec.m1 + 2).scaled(-s2);
    return first + second;
}

MultiPoly e_entry_direct(int r, int s, int n) {
    if (r < 1 || s < 1) throw std::invalid_argument("e_entry_direct: indices are 1-based");
    MultiPoly acc(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int pair[2] = {i, j};
            MultiPoly diff = MultiPoly::variable(n, i - 1) - MultiPoly::variable(n, j - 1);
            acc += elementary_incomplete(r - 1, pair, n) * elementary_incomplete(s - 1, pair, n) *
                   diff.squared();
        }
    }
    return acc * (fact(r - 1) * fact(s - 1));
}

EBasisQuadratic e_entry_via_M(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("e_entry_via_M: indices are 1-based");
    if (r > s) std::swap(r, s);
    const int m = r - 1;
    const int k = s - r;
    EBasisQuadratic acc;
    for (int i = 0; i <= m; ++i) {
        Rational c = Rational::binomial(m, i) * fact(m + k) / fact(i + k);
        acc += m_in_e_basis(MSpec{m + 1 - i, k + 2 * i}).scaled(c);
    }
    return acc;
}

EntryStructure e_entry_structure(int m, int k) {
    if (m < 1 || k < 0) throw std::invalid_argument("e_entry_structure: require m >= 1, k >= 0");
    const EBasisQuadratic q = e_entry_via_M(m, m + k);
    EntryStructure out;
    out.m = m;
    out.k = k;
    out.A.assign(m, Rational(0));
    out.tail_nu_multiples = true;
    for (const auto& t : q.terms()) {
        if (t.i + t.j != 2 * m + k)
            throw ExactnessError("e_entry_structure: entry is not homogeneous of weight 2m+k");
        if (t.i == m && t.j == m + k) {
            out.lead_c0 = t.c0;
            out.lead_c1 = t.c1;
            continue;
        }
        if (!t.c0.is_zero() || !t.c1.is_integer()) out.tail_nu_multiples = false;
        out.A.at(t.i) = t.c1;
    }
    out.lead_shape_ok = (out.lead_c0 == -(Rational(m + k) * out.lead_c1)) && !out.lead_c1.is_zero();
    if (out.lead_shape_ok) out.lead_factor = out.lead_c1;
    return out;
}

MultiPoly delta_E_symbolic(int k, int n) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("delta_E: require 1 <= k <= n-1");
    RingMatrix<MultiPoly> E(k, k, MultiPoly(n));
    for (int r = 1; r <= k; ++r)
        for (int s = 1; s <= k; ++s) E.at(r - 1, s - 1) = e_entry_direct(r, s, n);
    return det(E);
}

std::vector<Rational> elementary_values(std::span<const Rational> xs, int upto) {
    std::vector<Rational> e(upto + 1, Rational(0));
    e[0] = Rational(1);
    int depth = 0;
    for (const Rational& x : xs) {
        ++depth;
        for (int k = std::min(depth, upto); k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

Rational delta_E_at_roots(int k, std::span<const Rational> roots) {
    const int n = static_cast<int>(roots.size());
    if (k < 1 || k > n - 1) throw std::invalid_argument("delta_E: require 1 <= k <= n-1");
    // numeric incomplete elementaries per pair, then the definition verbatim
    RingMatrix<Rational> E(k, k, Rational(0));
    std::vector<std::vector<Rational>> einc;  // per pair (i<j): e-values of the rest
    std::vector<Rational> diffsq;
    std::vector<Rational> rest;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rest.clear();
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) rest.push_back(roots[t]);
            einc.push_back(elementary_values(rest, k - 1));
            Rational d = roots[i] - roots[j];
            diffsq.push_back(d * d);
        }
    }
    for (int r = 1; r <= k; ++r) {
        for (int s = r; s <= k; ++s) {
            Rational acc(0);
            for (std::size_t t = 0; t < einc.size(); ++t)
                acc += einc[t][r - 1] * einc[t][s - 1] * diffsq[t];
            acc *= fact(r - 1) * fact(s - 1);
            E.at(r - 1, s - 1) = acc;
            E.at(s - 1, r - 1) = acc;
        }
    }
    return det(E);
}

Rational delta_E_from_poly(int k, const UniPoly& p) {
    const int n = p.degree();
    if (k < 1 || k > n - 1) throw std::invalid_argument("delta_E: require 1 <= k <= n-1");
    const std::vector<Rational> e = coeffs_to_elementary(p);
    RingMatrix<Rational> E(k, k, Rational(0));
    for (int r = 1; r <= k; ++r)
        for (int s = r; s <= k; ++s) {
            Rational v = e_entry_via_M(r, s).eval(n, e);
            E.at(r - 1, s - 1) = v;
            E.at(s - 1, r - 1) = v;
        }
    return det(E);
}

std::vector<MCheckResult> positive_root_checks(const UniPoly& p, std::span<const MSpec> specs) {
    const int n = p.degree();
    const std::vector<Rational> e = coeffs_to_elementary(p);
    std::vector<MCheckResult> out;
    for (const MSpec& s : specs) {
        check_mspec(s);
        if (n < s.m1 + s.m2 + 1)
            throw EmptyDomainError("positive_root_checks: polynomial degree too small for M(" +
                                   std::to_string(s.m2) + "," + std::to_string(s.m1) + ")");
        out.push_back(MCheckResult{s, m_in_e_basis(s).eval(n, e)});
    }
    return out;
}

}  // namespace polycert
