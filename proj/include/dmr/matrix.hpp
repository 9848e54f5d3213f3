#ifndef DMR_MATRIX_HPP
#define DMR_MATRIX_HPP

#include "dmr/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dmr {

// Dense row-major rational matrix. All arithmetic is exact; there is no
// floating path anywhere in this header.
struct RMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> e;

    RMatrix() = default;
    RMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    bool square() const { return rows == cols; }

    static RMatrix identity(std::size_t n) {
        RMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const RMatrix& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }
};

inline void check_same_shape(const RMatrix& a, const RMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix dimension mismatch");
}

inline RMatrix operator+(const RMatrix& a, const RMatrix& b) {
    check_same_shape(a, b);
    RMatrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

inline RMatrix operator-(const RMatrix& a, const RMatrix& b) {
    check_same_shape(a, b);
    RMatrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

inline RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
    RMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

inline RMatrix operator*(const Rational& s, const RMatrix& a) {
    RMatrix r = a;
    for (auto& x : r.e) x *= s;
    return r;
}

inline RMatrix hadamard(const RMatrix& a, const RMatrix& b) {
    check_same_shape(a, b);
    RMatrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] *= b.e[i];
    return r;
}

inline RMatrix transpose(const RMatrix& a) {
    RMatrix r(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

inline Rational trace(const RMatrix& a) {
    if (!a.square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < a.rows; ++i) t += a.at(i, i);
    return t;
}

inline Rational sum_entries(const RMatrix& a) {
    Rational t = 0;
    for (const auto& x : a.e) t += x;
    return t;
}

inline bool is_symmetric(const RMatrix& a) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = i + 1; j < a.cols; ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

// <M,N> = (1/n) tr(MN).  For symmetric arguments the entrywise route
// (1/n) sum(M o N) gives the same number; both are computed and compared
// so a regression in either path trips immediately.
inline Rational matrix_inner(const RMatrix& a, const RMatrix& b) {
    if (!a.square() || !b.square() || a.rows != b.rows)
        throw std::invalid_argument("matrix_inner needs square matrices of equal size");
    Rational t = 0;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) t += a.at(i, k) * b.at(k, i);
    t /= Rational(static_cast<long long>(a.rows));
    if (is_symmetric(a) && is_symmetric(b)) {
        Rational h = sum_entries(hadamard(a, b)) / Rational(static_cast<long long>(a.rows));
        if (h != t) throw std::logic_error("matrix_inner: trace and hadamard paths disagree");
    }
    return t;
}

// in-place fraction-free-ish row reduction; returns rank
inline std::size_t row_reduce(std::vector<std::vector<Rational>>& m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    std::size_t ncols = m[0].size();
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = 1 / m[rank][col];
        for (std::size_t j = col; j < ncols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<Rational> flatten(const RMatrix& a) { return a.e; }

// is target in the rational span of basis?
inline bool in_span(const std::vector<std::vector<Rational>>& basis,
                    const std::vector<Rational>& target) {
    std::vector<std::vector<Rational>> m = basis;
    std::size_t r0 = row_reduce(m);
    m.push_back(target);
    // rank can only grow by the new row; reuse reduction
    std::size_t r1 = row_reduce(m);
    return r1 == r0;
}

}  // namespace dmr

#endif
