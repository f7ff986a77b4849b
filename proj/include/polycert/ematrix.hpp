#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycert/hermite.hpp"
#include "polycert/multipoly.hpp"

namespace polycert {

// Parameters of one difference M(m2, m1, n): m2 >= 1 copies of exponent 2 and
// m1 >= 0 copies of exponent 1.
struct MSpec {
    int m2;
    int m1;
};

// Quadratic form in elementary symmetric polynomials whose coefficients are
// linear in a formal size parameter nu: sum of (c0 + c1*nu) * e_i * e_j with
// i <= j, each unordered product stored once. This is the closed shape every
// E-matrix entry and every M-difference takes.
class EBasisQuadratic {
public:
    struct Term {
        Rational c0, c1;
        int i, j;
    };

    void add(const Rational& c0, const Rational& c1, int i, int j);

    EBasisQuadratic& operator+=(const EBasisQuadratic& o);
    friend EBasisQuadratic operator+(EBasisQuadratic a, const EBasisQuadratic& b) { return a += b; }
    friend bool operator==(const EBasisQuadratic& a, const EBasisQuadratic& b) {
        return a.terms_ == b.terms_;
    }

    EBasisQuadratic scaled(const Rational& s) const;
    // Multiply by (a + b*nu). Only valid while all coefficients are still
    // nu-free; anything else would leave the linear-in-nu shape.
    EBasisQuadratic times_linear(const Rational& a, const Rational& b) const;

    bool empty() const { return terms_.empty(); }
    // Terms in descending (i, j) order: the display's leading product first.
    std::vector<Term> terms() const;

    // nu := n, e_i := e_basis[i] (zero beyond the end of the list).
    MultiPoly specialize(long n, std::span<const MultiPoly> e_basis) const;
    // nu := n, e_i := elementary(i, n).
    MultiPoly specialize_symmetric(int n) const;
    Rational eval(long n, std::span<const Rational> e_values) const;

    // Canonical rendering, e.g. "(n-1)*e1^2 - 2*n*e2"; e0 factors are omitted.
    std::string str() const;

private:
    // (i, j) -> (c0, c1), i <= j, never both zero
    std::map<std::pair<int, int>, std::pair<Rational, Rational>> terms_;
};

// ---- M-differences ----------------------------------------------------

// Definition form: monomial_fn on (2^m2, 1^m1, 0) minus monomial_fn on
// (2^(m2-1), 1^(m1+2)). Requires n >= m1 + m2 + 1.
MultiPoly m_symbolic(const MSpec& spec, int n);

// Sum-of-squares form: sum over i < j of
// monomial_incomplete((2^(m2-1), 1^m1), i, j, n) * (z_i - z_j)^2.
MultiPoly m_sum_of_squares(const MSpec& spec, int n);

// Conversion lemma, monomial2 side of e_m * e_{m+k}: returns
// sum_i binom(k+2i, i) * monomial2(m-i, k+2i, n) with i capped so every
// summand has a non-empty domain.
MultiPoly ememk_expand(int m, int k, int n);

// monomial2(m, k, .) expanded over products of two elementaries:
// c_0 = 1 and c_i = (-1)^i * (k+2i)/i * binom(k+i-1, i-1) on e_{m-i} e_{m+k+i}.
EBasisQuadratic mono2_in_e(int m, int k);

// M(m2, m1) in the e-basis with the size parameter kept formal, composed
// from mono2_in_e and the ordered-tuple overcount factors.
EBasisQuadratic m_in_e_basis(const MSpec& spec);

// ---- E-matrix entries --------------------------------------------------

// Entry (r, s) of E(n), r, s >= 1, from the definition:
// (r-1)!(s-1)! * sum_{i<j} e_inc(r-1; i,j) * e_inc(s-1; i,j) * (z_i - z_j)^2.
MultiPoly e_entry_direct(int r, int s, int n);

// Same entry as a formal quadratic in elementaries, assembled through the
// M-decomposition sum_i binom(m, i) * (m+k)!/(i+k)! * M(m+1-i, k+2i) with
// m = r-1, k = s-r (entries are symmetric in (r, s)).
EBasisQuadratic e_entry_via_M(int r, int s);

// Shape analysis of entry (m, m+k), the entry whose highest product is
// e_m * e_{m+k}. `lead_*` describe that product's coefficient; A lists the
// integers A_i with the remaining coefficients equal to nu * A_i on
// e_i * e_{2m+k-i}, i = 0..m-1.
struct EntryStructure {
    int m = 0, k = 0;
    Rational lead_c0, lead_c1;
    bool lead_shape_ok = false;      // lead coefficient equals lead_factor * (nu - m - k)
    Rational lead_factor;            // = lead_c1 when lead_shape_ok
    bool tail_nu_multiples = false;  // every non-lead coefficient is an integer times nu
    std::vector<Rational> A;
};

EntryStructure e_entry_structure(int m, int k);

// ---- leading principal minors of E(n) -----------------------------------

// det of the top-left k x k block, entries from the definition; k <= n - 1.
MultiPoly delta_E_symbolic(int k, int n);
// Same block evaluated at explicit root values (numeric incomplete
// elementaries; no symbolic intermediate).
Rational delta_E_at_roots(int k, std::span<const Rational> roots);
// Same block from a polynomial's coefficients through the e-basis forms.
Rational delta_E_from_poly(int k, const UniPoly& p);

// e_0..e_upto of an explicit value list.
std::vector<Rational> elementary_values(std::span<const Rational> xs, int upto);

struct MCheckResult {
    MSpec spec;
    Rational value;
};

// Evaluate the requested M-differences at the polynomial's root data. Any
// negative value certifies that the roots are not all positive real and
// pairwise distinct (the converse direction proves nothing).
std::vector<MCheckResult> positive_root_checks(const UniPoly& p, std::span<const MSpec> specs);

}  // namespace polycert
