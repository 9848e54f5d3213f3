#ifndef DMR_POLY_HPP
#define DMR_POLY_HPP

#include "dmr/matrix.hpp"
#include "dmr/rational.hpp"

#include <stdexcept>
#include <vector>

namespace dmr {

// Univariate polynomial, coefficients ascending.  Kept normalized: the
// zero polynomial is {0}, otherwise the leading coefficient is nonzero.
struct RPoly {
    std::vector<Rational> c{Rational(0)};

    RPoly() = default;
    explicit RPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        if (c.empty()) c.push_back(0);
    }

    bool is_zero() const { return c.size() == 1 && c[0] == 0; }
    // degree of the zero polynomial reported as -1
    int degree() const { return is_zero() ? -1 : static_cast<int>(c.size()) - 1; }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    }

    double eval(double x) const {
        double v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + rat_to_double(*it);
        return v;
    }

    bool operator==(const RPoly& o) const { return c == o.c; }
};

inline RPoly poly_const(const Rational& r) { return RPoly({r}); }
inline RPoly poly_x() { return RPoly({Rational(0), Rational(1)}); }

inline RPoly operator+(const RPoly& a, const RPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return RPoly(std::move(r));
}

inline RPoly operator-(const RPoly& a, const RPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return RPoly(std::move(r));
}

inline RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return RPoly();
    std::vector<Rational> r(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return RPoly(std::move(r));
}

inline RPoly operator*(const Rational& s, const RPoly& a) {
    std::vector<Rational> r = a.c;
    for (auto& x : r) x *= s;
    return RPoly(std::move(r));
}

// multiply by x
inline RPoly shift_up(const RPoly& a) {
    if (a.is_zero()) return RPoly();
    std::vector<Rational> r(a.c.size() + 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i + 1] = a.c[i];
    return RPoly(std::move(r));
}

// Horner evaluation at a square matrix
inline RMatrix poly_eval_matrix(const RPoly& p, const RMatrix& m) {
    if (!m.square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
    RMatrix r(m.rows, m.cols);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        r = r * m;
        for (std::size_t i = 0; i < m.rows; ++i) r.at(i, i) += *it;
    }
    return r;
}

}  // namespace dmr

#endif
