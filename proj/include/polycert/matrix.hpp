#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polycert/errors.hpp"
#include "polycert/rational.hpp"

namespace polycert {

inline bool ring_is_zero(const Rational& r) { return r.is_zero(); }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }

// Dense matrix over an exact coefficient ring (Rational or MultiPoly).
template <class T>
class RingMatrix {
public:
    RingMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    RingMatrix top_left(std::size_t k) const {
        RingMatrix sub(k, k, d_.front());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
        return sub;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> d_;
};

// Cofactor expansion along the first row; exponential, kept as the small-size
// path and as an independent oracle for the fraction-free elimination.
template <class T>
T det_cofactor(const RingMatrix<T>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols() || n == 0) throw std::invalid_argument("det: matrix must be square and nonempty");
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    T acc = m.at(0, 0) - m.at(0, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (ring_is_zero(m.at(0, j))) continue;
        RingMatrix<T> minor(n - 1, n - 1, acc);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        T contrib = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    return acc;
}

// Bareiss fraction-free elimination: every division is exact in the ring, so
// no fractions of ring elements ever appear. Row pivoting handles zeros.
template <class T>
T det_bareiss(const RingMatrix<T>& m) {
    const std::size_t n = m.rows();
    RingMatrix<T> a = m;
    const T zero = a.at(0, 0) - a.at(0, 0);
    bool negate = false;
    T prev = zero;  // only read after the first elimination step
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (ring_is_zero(a.at(r, r))) {
            std::size_t p = r + 1;
            while (p < n && ring_is_zero(a.at(p, r))) ++p;
            if (p == n) return zero;
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(r, c), a.at(p, c));
            negate = !negate;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                T num = a.at(r, r) * a.at(i, j) - a.at(i, r) * a.at(r, j);
                a.at(i, j) = (r == 0) ? std::move(num) : ring_exact_div(num, prev);
            }
            a.at(i, r) = zero;
        }
        prev = a.at(r, r);
    }
    T result = a.at(n - 1, n - 1);
    return negate ? zero - result : result;
}

template <class T>
T det(const RingMatrix<T>& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("det: matrix must be square and nonempty");
    return m.rows() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

// (one, det 1x1, det 2x2, ..., det nxn); index k holds the k-th leading
// principal minor.
template <class T>
std::vector<T> leading_minors(const RingMatrix<T>& m, const T& one) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("leading_minors: matrix must be square and nonempty");
    std::vector<T> out;
    out.push_back(one);
    for (std::size_t k = 1; k <= m.rows(); ++k) out.push_back(det(m.top_left(k)));
    return out;
}

inline std::vector<Rational> leading_minors(const RingMatrix<Rational>& m) {
    return leading_minors(m, Rational(1));
}

// x(x-1)...(x-j+1) over any ring containing x; `one` supplies the ring unit.
template <class T>
T falling_factorial(const T& x, unsigned j, const T& one) {
    T acc = one;
    for (unsigned t = 0; t < j; ++t) acc = acc * (x - one * Rational(static_cast<long>(t)));
    return acc;
}

inline Rational falling_factorial(const Rational& x, unsigned j) {
    return falling_factorial(x, j, Rational(1));
}

}  // namespace polycert
