#include "polycert/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace polycert {

MultiPoly::MultiPoly(int vars) : vars_(vars) {
    if (vars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int vars, const Rational& c) {
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int vars, int index, int power) {
    if (index < 0 || index >= vars) throw std::invalid_argument("MultiPoly: variable index out of range");
    if (power < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly p(vars);
    Exponents e(vars, 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(int vars, Exponents exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != vars)
        throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("MultiPoly: constant_value of non-constant");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly p(a.vars_);
    MultiPoly::Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

MultiPoly operator*(MultiPoly a, const Rational& c) {
    if (c.is_zero()) return MultiPoly(a.vars_);
    for (auto& [e, v] : a.terms_) v *= c;
    return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("MultiPoly: eval point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < vars_; ++i)
            if (e[i] > 0) t *= point[i].pow(static_cast<unsigned long>(e[i]));
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_zero(int index) const {
    if (index < 0 || index >= vars_) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_)
        if (e[index] == 0) p.terms_.emplace(e, c);
    return p;
}

MultiPoly MultiPoly::permute_vars(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != vars_)
        throw std::invalid_argument("MultiPoly: permutation arity mismatch");
    MultiPoly p(vars_);
    Exponents e2(vars_);
    for (const auto& [e, c] : terms_) {
        std::fill(e2.begin(), e2.end(), 0);
        for (int i = 0; i < vars_; ++i) e2[perm[i]] = e[i];
        p.add_term(e2, c);
    }
    return p;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const {
    check_vars(divisor);
    if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
    MultiPoly quotient(vars_);
    MultiPoly rem = *this;
    const auto& dlead = *divisor.terms_.rbegin();  // greatest key = lex-leading term
    MultiPoly scaled(vars_);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents q(vars_);
        for (int i = 0; i < vars_; ++i) {
            q[i] = rlead.first[i] - dlead.first[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rational qc = rlead.second / dlead.second;
        quotient.add_term(q, qc);
        // rem -= (qc * z^q) * divisor, inlined to reuse the buffer
        scaled.terms_.clear();
        Exponents e(vars_);
        for (const auto& [de, dc] : divisor.terms_) {
            for (int i = 0; i < vars_; ++i) e[i] = de[i] + q[i];
            scaled.terms_.emplace(e, dc * qc);
        }
        rem -= scaled;
    }
    return quotient;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    auto q = try_divide(divisor);
    if (!q) throw ExactnessError("MultiPoly: division left a remainder");
    return *q;
}

std::string MultiPoly::str(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse iteration puts the lex-leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool unit = (mag == Rational(1));
        if (!unit || all_zero) os << mag.str();
        bool printed_var = false;
        for (int i = 0; i < vars_; ++i) {
            if (e[i] == 0) continue;
            if (printed_var || !unit) os << "*";
            os << var_prefix << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed_var = true;
        }
    }
    return os.str();
}

}  // namespace polycert
