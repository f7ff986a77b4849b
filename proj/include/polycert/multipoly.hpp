#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycert/errors.hpp"
#include "polycert/rational.hpp"

namespace polycert {

// Sparse multivariate polynomial with Rational coefficients over a fixed
// number of variables. Terms are keyed by dense exponent vectors under
// lexicographic order, which doubles as the monomial order for division and
// for the canonical text form. The zero polynomial has no terms.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int vars);
    static MultiPoly constant(int vars, const Rational& c);
    static MultiPoly variable(int vars, int index, int power = 1);  // index is 0-based
    static MultiPoly monomial(int vars, Exponents exps, const Rational& c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c);
    MultiPoly& operator*=(const Rational& c) { return *this = *this * c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly squared() const { return *this * *this; }

    Rational eval(std::span<const Rational> point) const;
    MultiPoly substitute_zero(int index) const;        // z_index := 0
    MultiPoly permute_vars(std::span<const int> perm) const;  // new index of old var i is perm[i]

    // Exact division by a nonzero divisor; nullopt when the quotient is not a
    // polynomial. divide_exact throws ExactnessError instead.
    std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    // Canonical text form: terms in descending lexicographic exponent order,
    // e.g. "z1^2*z2 - 3/2*z3 + 1". Stable across runs; used for hashing and
    // golden files.
    std::string str(const std::string& var_prefix = "z") const;

    const std::map<Exponents, Rational>& terms() const { return terms_; }

private:
    void add_term(const Exponents& e, const Rational& c);
    void check_vars(const MultiPoly& o) const;

    int vars_;
    std::map<Exponents, Rational> terms_;
};

inline bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly ring_exact_div(const MultiPoly& a, const MultiPoly& b) { return a.divide_exact(b); }

}  // namespace polycert
