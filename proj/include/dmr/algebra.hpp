#ifndef DMR_ALGEBRA_HPP
#define DMR_ALGEBRA_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dmr/analysis.hpp"
#include "dmr/distance.hpp"
#include "dmr/matrix.hpp"
#include "dmr/polynomials.hpp"
#include "dmr/spectra.hpp"

namespace dmr {

// coordinates over the distance-matrix basis A_0..A_D
struct StarElement {
    std::vector<Rational> coeffs;
};

// projection coefficient of m onto A_h under the averaged trace inner
// product; the denominator is the shell size k_h
inline Rational fourier_coefficient(const RMatrix& m, const DistanceData& dd, int h) {
    return matrix_inner(m, dd.A(h)) / matrix_inner(dd.A(h), dd.A(h));
}

// bilinear product with the mean numbers as structure constants; equals
// the projection of the ordinary matrix product onto the distance span
inline StarElement star_product(const StarElement& x, const StarElement& y,
                                const DmrProfile& p) {
    std::size_t m = static_cast<std::size_t>(p.D) + 1;
    if (x.coeffs.size() != m || y.coeffs.size() != m)
        throw std::invalid_argument("star element has the wrong number of coordinates");
    StarElement z;
    z.coeffs.assign(m, Rational(0));
    for (int h = 0; h <= p.D; ++h)
        for (int i = 0; i <= p.D; ++i) {
            if (x.coeffs[i] == Rational(0)) continue;
            for (int j = 0; j <= p.D; ++j)
                z.coeffs[h] += x.coeffs[i] * y.coeffs[j] * p.table.at(h, i, j);
        }
    return z;
}

struct CommutativityReport {
    bool commute = true;
    std::optional<Witness> witness;  // (i,j) pair and the first differing entry
};

inline CommutativityReport commutativity_check(const std::vector<RMatrix>& mats) {
    CommutativityReport r;
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            RMatrix pq = mats[i] * mats[j];
            RMatrix qp = mats[j] * mats[i];
            if (pq == qp) continue;
            r.commute = false;
            for (std::size_t a = 0; a < pq.rows && !r.witness; ++a)
                for (std::size_t b = 0; b < pq.cols && !r.witness; ++b)
                    if (pq.at(a, b) != qp.at(a, b))
                        r.witness = Witness{static_cast<int>(a), static_cast<int>(b), 0,
                                            static_cast<int>(i), static_cast<int>(j),
                                            "matrices " + std::to_string(i) + " and " +
                                                std::to_string(j) + " give products with entry (" +
                                                std::to_string(a) + "," + std::to_string(b) +
                                                ") equal to " + rat_to_string(pq.at(a, b)) +
                                                " and " + rat_to_string(qp.at(a, b))};
            return r;
        }
    return r;
}

struct AssociativityReport {
    bool associative = true;
    int i = -1, j = -1, k = -1;  // first violating triple
    std::vector<Rational> lhs, rhs;
};

// (e_i * e_j) * e_k against e_i * (e_j * e_k) on all basis triples
inline AssociativityReport associativity_check(const DmrProfile& p) {
    AssociativityReport r;
    int m = p.D + 1;
    std::vector<StarElement> basis(m);
    for (int i = 0; i < m; ++i) {
        basis[i].coeffs.assign(m, Rational(0));
        basis[i].coeffs[i] = Rational(1);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                StarElement lhs = star_product(star_product(basis[i], basis[j], p), basis[k], p);
                StarElement rhs = star_product(basis[i], star_product(basis[j], basis[k], p), p);
                if (lhs.coeffs != rhs.coeffs) {
                    r.associative = false;
                    r.i = i;
                    r.j = j;
                    r.k = k;
                    r.lhs = lhs.coeffs;
                    r.rhs = rhs.coeffs;
                    return r;
                }
            }
    return r;
}

struct ExpansionReport {
    bool products_expand = true;  // Bbar_i Bbar_j = sum_h table(h,i,j) Bbar_h
    std::optional<Witness> product_witness;
    std::vector<bool> three_term_holds;  // Bbar*Bbar_i three-term, i = 0..D
    std::vector<RMatrix> three_term_residuals;
    std::vector<bool> poly_matches;  // Bbar_i == polys[i](Bbar)
    double max_fourier_dev = 0.0;    // star-route mean numbers vs the table
    bool fourier_ok = true;
};

// The product identities of the proper mean-matrix family.  They are
// theorems under commutativity and exactly the interesting residuals
// without it, so everything is computed unconditionally and reported.
inline ExpansionReport expansion_check(const DmrProfile& p, const MeanPolySystem& sys, int n) {
    ExpansionReport r;
    int m = p.D + 1;
    for (int i = 0; i < m && r.products_expand; ++i)
        for (int j = 0; j < m && r.products_expand; ++j) {
            RMatrix prod = p.proper_Bi[i] * p.proper_Bi[j];
            RMatrix expanded(m, m);
            for (int h = 0; h < m; ++h)
                expanded = expanded + p.table.at(h, i, j) * p.proper_Bi[h];
            if (prod == expanded) continue;
            r.products_expand = false;
            for (int a = 0; a < m && !r.product_witness; ++a)
                for (int b = 0; b < m && !r.product_witness; ++b)
                    if (prod.at(a, b) != expanded.at(a, b))
                        r.product_witness =
                            Witness{a, b, 0, i, j,
                                    "product of mean-matrices " + std::to_string(i) + "," +
                                        std::to_string(j) + " has entry (" + std::to_string(a) +
                                        "," + std::to_string(b) + ") equal to " +
                                        rat_to_string(prod.at(a, b)) +
                                        " but the expansion gives " +
                                        rat_to_string(expanded.at(a, b))};
        }
    for (int i = 0; i < m; ++i) {
        RMatrix res = p.Bbar * p.proper_Bi[i] - p.abar[i] * p.proper_Bi[i];
        if (i >= 1) res = res - p.bbar[i - 1] * p.proper_Bi[i - 1];
        if (i < p.D) res = res - p.cbar[i + 1] * p.proper_Bi[i + 1];
        r.three_term_holds.push_back(res == RMatrix(res.rows, res.cols));
        r.three_term_residuals.push_back(res);
    }
    for (int i = 0; i < m; ++i) r.poly_matches.push_back(p.proper_Bi[i] == sys.PofB[i]);
    for (int h = 0; h < m; ++h) {
        double norm = star_inner(sys.polys[h], sys.polys[h], sys, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double route = star_inner(sys.polys[i] * sys.polys[j], sys.polys[h], sys, n) / norm;
                double dev = std::abs(route - rat_to_double(p.table.at(h, i, j)));
                r.max_fourier_dev = std::max(r.max_fourier_dev, dev);
            }
    }
    r.fourier_ok = r.max_fourier_dev <= 1e-6;
    return r;
}

struct SchemeReport {
    bool holds = true;
    int r = -1, s = -1, i = -1, j = -1;  // first violating tuple
    Rational lhs, rhs;
};

// sum_h table(r,s,h) table(h,i,j) = sum_h table(r,i,h) table(h,s,j),
// the analogue of the parameter identity of association schemes
inline SchemeReport scheme_identity_check(const DmrProfile& p) {
    SchemeReport rep;
    int m = p.D + 1;
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    Rational lhs(0), rhs(0);
                    for (int h = 0; h < m; ++h) {
                        lhs += p.table.at(r, s, h) * p.table.at(h, i, j);
                        rhs += p.table.at(r, i, h) * p.table.at(h, s, j);
                    }
                    if (lhs != rhs) {
                        rep.holds = false;
                        rep.r = r;
                        rep.s = s;
                        rep.i = i;
                        rep.j = j;
                        rep.lhs = lhs;
                        rep.rhs = rhs;
                        return rep;
                    }
                }
    return rep;
}

struct SubalgebraReport {
    int dim_distance_span = 0;               // rank of {Abar_0..Abar_D}
    int distinct_adjacency_eigenvalues = 0;  // order of the power span of A
    bool closed = true;                      // every Abar_i Abar_j stays in the span
    std::vector<std::vector<bool>> member;   // per-product membership
};

inline SubalgebraReport subalgebra_check(const MeanPolySystem& sys, const DistanceData& dd) {
    SubalgebraReport r;
    int m = static_cast<int>(sys.Abar.size());
    std::vector<std::vector<Rational>> basis;
    for (const RMatrix& mat : sys.Abar) basis.push_back(flatten(mat));
    std::vector<std::vector<Rational>> reduced = basis;
    r.dim_distance_span = static_cast<int>(row_reduce(reduced));
    r.distinct_adjacency_eigenvalues =
        dd.D >= 1 ? distinct_eigenvalue_count(dd.A(1)) : 1;
    r.member.assign(m, std::vector<bool>(m, true));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            // the Abar are polynomials in A, so the products commute and
            // membership is symmetric
            bool in = in_span(basis, flatten(sys.Abar[i] * sys.Abar[j]));
            r.member[i][j] = r.member[j][i] = in;
            if (!in) r.closed = false;
        }
    return r;
}

struct AlgebraReport {
    SubalgebraReport subalgebra;
    CommutativityReport bi_commute;  // proper mean-matrices
    CommutativityReport ai_commute;  // distance matrices
    AssociativityReport star_assoc;
    ExpansionReport expansion;
    SchemeReport scheme;
};

inline AlgebraReport run_algebra(const DmrProfile& p, const MeanPolySystem& sys,
                                 const DistanceData& dd) {
    AlgebraReport r;
    r.subalgebra = subalgebra_check(sys, dd);
    if (r.subalgebra.distinct_adjacency_eigenvalues < p.D + 1)
        throw std::logic_error("diameter exceeds the distinct eigenvalue count");
    r.bi_commute = commutativity_check(p.proper_Bi);
    r.ai_commute = commutativity_check(dd.distance_matrices);
    r.star_assoc = associativity_check(p);
    r.expansion = expansion_check(p, sys, dd.g.n);
    r.scheme = scheme_identity_check(p);
    return r;
}

}  // namespace dmr

#endif
