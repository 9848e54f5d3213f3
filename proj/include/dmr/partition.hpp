#ifndef DMR_PARTITION_HPP
#define DMR_PARTITION_HPP

#include <stdexcept>
#include <vector>

#include "dmr/distance.hpp"
#include "dmr/matrix.hpp"
#include "dmr/spectra.hpp"

namespace dmr {

struct Partition {
    int n = 0;
    std::vector<std::vector<int>> classes;
    std::vector<int> sizes;
};

inline Partition distance_partition(const DistanceData& dd, int u) {
    dd.g.check_vertex(u);
    Partition p;
    p.n = dd.g.n;
    for (int i = 0; i <= dd.ecc[u]; ++i) {
        p.classes.push_back(dd.shells[u][i]);
        p.sizes.push_back(dd.shell_counts[u][i]);
    }
    return p;
}

// T: n x m characteristic matrix, Dg = T^t T (diagonal class sizes),
// S = T Dg^{-1} so that S^t T = I
struct CharMatrices {
    RMatrix T;
    RMatrix S;
    RMatrix Dg;
};

inline CharMatrices characteristic_matrices(const Partition& p) {
    int n = p.n;
    int m = static_cast<int>(p.classes.size());
    CharMatrices cm{RMatrix(n, m), RMatrix(n, m), RMatrix(m, m)};
    for (int c = 0; c < m; ++c) {
        if (p.classes[c].empty()) throw std::invalid_argument("partition has an empty class");
        cm.Dg.at(c, c) = Rational(p.sizes[c]);
        for (int v : p.classes[c]) {
            cm.T.at(v, c) = Rational(1);
            cm.S.at(v, c) = Rational(1, p.sizes[c]);
        }
    }
    return cm;
}

struct Interlacing {
    bool holds = false;
    bool tight = false;
    SpectralData mu;
    SpectralData theta;
};

struct QuotientResult {
    RMatrix B;  // m x m quotient, exact
    CharMatrices cm;
    bool equitable = false;
    Interlacing interlacing;
};

// Quotient of a symmetric rational matrix over a partition:
// B = Dg^{-1} T^t a T, entrywise exact.  Eigenvalue comparisons for the
// interlacing verdict use itol; eigensolves use tol/cluster_tol.
inline QuotientResult quotient_matrix(const RMatrix& a, const Partition& p,
                                      double tol = kDefaultEigTol,
                                      double cluster_tol = kDefaultClusterTol,
                                      double itol = 1e-6) {
    if (!a.square() || static_cast<int>(a.rows) != p.n)
        throw std::invalid_argument("quotient: matrix/partition size mismatch");
    if (!is_symmetric(a)) throw std::invalid_argument("quotient: matrix must be symmetric");
    int m = static_cast<int>(p.classes.size());
    QuotientResult qr;
    qr.cm = characteristic_matrices(p);
    qr.B = RMatrix(m, m);
    qr.equitable = true;
    for (int h = 0; h < m; ++h)
        for (int j = 0; j < m; ++j) {
            Rational total(0);
            bool first = true;
            Rational common(0);
            for (int v : p.classes[h]) {
                Rational rowsum(0);
                for (int w : p.classes[j]) rowsum += a.at(v, w);
                total += rowsum;
                if (first) {
                    common = rowsum;
                    first = false;
                } else if (rowsum != common) {
                    qr.equitable = false;
                }
            }
            qr.B.at(h, j) = total / Rational(p.sizes[h]);
        }

    qr.interlacing.theta = real_eigenvalues(a, nullptr, tol, cluster_tol);
    std::vector<Rational> sizes_rat;
    for (int s : p.sizes) sizes_rat.emplace_back(s);
    const std::vector<Rational>* witness = is_symmetric(qr.B) ? nullptr : &sizes_rat;
    qr.interlacing.mu = real_eigenvalues(qr.B, witness, tol, cluster_tol);

    auto th = qr.interlacing.theta.expanded();
    auto mu = qr.interlacing.mu.expanded();
    int n = static_cast<int>(th.size());
    qr.interlacing.holds = true;
    std::vector<bool> top(m), bot(m);
    for (int i = 0; i < m; ++i) {
        top[i] = std::abs(mu[i] - th[i]) <= itol;
        bot[i] = std::abs(mu[i] - th[n - m + i]) <= itol;
        if (th[i] < mu[i] - itol || mu[i] < th[n - m + i] - itol) qr.interlacing.holds = false;
    }
    qr.interlacing.tight = false;
    if (qr.interlacing.holds)
        for (int k = 0; k <= m && !qr.interlacing.tight; ++k) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = top[i];
            for (int i = k; i < m && ok; ++i) ok = bot[i];
            qr.interlacing.tight = ok;
        }
    return qr;
}

// S^t A_i T over the distance partition of u: entry (h,j) is the average
// over v at distance h from u of the number of w with d(u,w)=j, d(v,w)=i.
// Only defined when every shell 0..D is populated.
inline RMatrix proper_mean_matrix(const DistanceData& dd, int u, int i) {
    dd.g.check_vertex(u);
    if (i < 0 || i > dd.D) throw std::invalid_argument("distance index out of range");
    if (dd.ecc[u] < dd.D) throw std::runtime_error("vertex eccentricity below diameter");
    int m = dd.D + 1;
    RMatrix out(m, m);
    for (int h = 0; h < m; ++h)
        for (int j = 0; j < m; ++j) {
            long long count = 0;
            for (int v : dd.shells[u][h])
                for (int w : dd.shells[u][j])
                    if (dd.dist[v][w] == i) ++count;
            out.at(h, j) = Rational(count) / Rational(dd.shell_counts[u][h]);
        }
    return out;
}

}  // namespace dmr

#endif
