#ifndef DMR_SPECTRA_HPP
#define DMR_SPECTRA_HPP

#include "dmr/matrix.hpp"
#include "dmr/poly.hpp"
#include "dmr/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dmr {

constexpr double kDefaultEigTol = 1e-12;
constexpr double kDefaultClusterTol = 1e-6;

// Distinct eigenvalues, strictly decreasing after clustering, with the
// multiplicity each cluster absorbed.
struct SpectralData {
    std::vector<double> eigenvalues;
    std::vector<int> multiplicities;
    double cluster_tol = kDefaultClusterTol;

    std::size_t dim() const {
        std::size_t n = 0;
        for (int m : multiplicities) n += static_cast<std::size_t>(m);
        return n;
    }

    // full multiset, descending
    std::vector<double> expanded() const {
        std::vector<double> out;
        for (std::size_t i = 0; i < eigenvalues.size(); ++i)
            out.insert(out.end(), static_cast<std::size_t>(multiplicities[i]), eigenvalues[i]);
        return out;
    }
};

// Exact characteristic polynomial det(xI - M) by Faddeev-LeVerrier.
// Division by the step index is exact in rational arithmetic.
inline RPoly char_poly(const RMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly needs a square matrix");
    std::size_t n = m.rows;
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RMatrix mk = RMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RMatrix am = m * mk;
        Rational ck = -trace(am) / Rational(static_cast<long long>(k));
        c[n - k] = ck;
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return RPoly(std::move(c));
}

namespace detail {

inline std::vector<double> cluster_sorted_desc(std::vector<double> vals, double ctol,
                                               std::vector<double>* reps,
                                               std::vector<int>* mults) {
    reps->clear();
    mults->clear();
    std::size_t i = 0;
    while (i < vals.size()) {
        double sum = vals[i];
        std::size_t j = i + 1;
        while (j < vals.size() && vals[j - 1] - vals[j] <= ctol) {
            sum += vals[j];
            ++j;
        }
        reps->push_back(sum / static_cast<double>(j - i));
        mults->push_back(static_cast<int>(j - i));
        i = j;
    }
    return vals;
}

}  // namespace detail

// Eigenvalues of an exactly-symmetric rational matrix, or of a matrix made
// symmetric by conjugation with diag(witness)^{1/2}.  The witness route is
// validated exactly (w_i m_ij == w_j m_ji) before any floating arithmetic;
// a non-symmetric matrix with no witness is an error rather than a silent
// fall-back to a general solver.  tol bounds the per-eigenpair residual
// ||Sv - lambda v||_inf relative to max(1, ||S||_inf).
inline SpectralData real_eigenvalues(const RMatrix& m,
                                     const std::vector<Rational>* sym_witness = nullptr,
                                     double tol = kDefaultEigTol,
                                     double cluster_tol = kDefaultClusterTol) {
    if (!m.square()) throw std::invalid_argument("real_eigenvalues needs a square matrix");
    const std::size_t n = m.rows;
    Eigen::MatrixXd s(n, n);
    if (is_symmetric(m)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s(i, j) = rat_to_double(m.at(i, j));
    } else if (sym_witness) {
        if (sym_witness->size() != n)
            throw std::invalid_argument("symmetrizing diagonal has wrong size");
        for (const auto& w : *sym_witness)
            if (w <= 0) throw std::invalid_argument("symmetrizing diagonal must be positive");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((*sym_witness)[i] * m.at(i, j) != (*sym_witness)[j] * m.at(j, i))
                    throw std::invalid_argument("matrix is not symmetrizable by the supplied diagonal");
        // sqrt(w_i/w_j) m_ij = sign(m_ij) sqrt(m_ij m_ji), exact under the check above
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational prod = m.at(i, j) * m.at(j, i);
                double v = std::sqrt(rat_to_double(prod));
                s(i, j) = m.at(i, j) < 0 ? -v : v;
            }
    } else {
        throw std::invalid_argument("non-symmetric matrix requires a symmetrizing diagonal");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");

    double scale = std::max(1.0, s.cwiseAbs().maxCoeff() * static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        double lam = solver.eigenvalues()[static_cast<Eigen::Index>(k)];
        double resid = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < n; ++c)
                acc += s(r, c) * solver.eigenvectors()(c, k);
            resid = std::max(resid, std::abs(acc - lam * solver.eigenvectors()(r, k)));
        }
        if (resid > tol * scale)
            throw std::runtime_error("eigensolver residual exceeds tolerance");
    }

    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    SpectralData out;
    out.cluster_tol = cluster_tol;
    detail::cluster_sorted_desc(std::move(vals), cluster_tol, &out.eigenvalues, &out.multiplicities);
    return out;
}

// Number of distinct eigenvalues of a symmetric rational matrix, decided
// exactly: the minimal polynomial degree, found as the first k with
// {I, A, ..., A^k} linearly dependent.  Diagonalizability makes the two
// notions coincide.
inline int distinct_eigenvalue_count(const RMatrix& a) {
    if (!is_symmetric(a)) throw std::invalid_argument("distinct_eigenvalue_count needs a symmetric matrix");
    std::vector<std::vector<Rational>> basis;
    RMatrix p = RMatrix::identity(a.rows);
    for (std::size_t k = 0; k <= a.rows; ++k) {
        if (in_span(basis, p.e)) return static_cast<int>(k);
        basis.push_back(p.e);
        p = p * a;
    }
    throw std::logic_error("minimal polynomial degree exceeded matrix size");
}

}  // namespace dmr

#endif
