#ifndef DMR_POLYNOMIALS_HPP
#define DMR_POLYNOMIALS_HPP

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dmr/analysis.hpp"
#include "dmr/distance.hpp"
#include "dmr/poly.hpp"
#include "dmr/spectra.hpp"

namespace dmr {

// The orthogonal-polynomial layer on top of a profile: the recurrence
// polynomials, the distinct eigenvalues of the mean-quotient matrix with
// their pseudo-multiplicities, and both matrix evaluation families.
// Polynomials and matrices stay exact; mu, pi, w are floating.
struct MeanPolySystem {
    std::vector<RPoly> polys;      // p_0..p_D
    SpectralData mu;               // spectrum of Bbar, D+1 distinct values
    std::vector<double> pi_prods;  // pi_i = prod_{j != i} |mu_i - mu_j|
    std::vector<double> w;         // pseudo-multiplicities
    std::vector<RMatrix> Abar;     // polys[i] at the adjacency matrix
    std::vector<RMatrix> PofB;     // polys[i] at Bbar
};

// p_0 = 1, p_1 = x, then
// p_{i+1} = (x p_i - a_i p_i - b_{i-1} p_{i-1}) / c_{i+1}
inline std::vector<RPoly> build_polynomials(const DmrProfile& p) {
    std::vector<RPoly> ps(static_cast<std::size_t>(p.D) + 1);
    ps[0] = poly_const(Rational(1));
    if (p.D >= 1) ps[1] = poly_x();
    for (int i = 1; i < p.D; ++i) {
        if (p.cbar[i + 1] == Rational(0))
            throw std::runtime_error("mean recurrence hit a zero c parameter");
        RPoly num = shift_up(ps[i]) - p.abar[i] * ps[i] - p.bbar[i - 1] * ps[i - 1];
        ps[i + 1] = (Rational(1) / p.cbar[i + 1]) * num;
    }
    return ps;
}

// weights from the eigenvalue-gap products; the gap products are kept as
// printed (absolute values), the alternation of the true signed products
// over a descending eigenvalue list enters as the parity factor
inline std::pair<std::vector<double>, std::vector<double>> pseudo_multiplicities(
    const std::vector<double>& mu, const RPoly& pD) {
    std::size_t m = mu.size();
    std::vector<double> pi(m, 1.0), w(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) pi[i] *= std::abs(mu[i] - mu[j]);
    std::vector<double> pd(m);
    for (std::size_t i = 0; i < m; ++i) {
        pd[i] = pD.eval(mu[i]);
        if (std::abs(pd[i]) < 1e-9)
            throw std::runtime_error("degenerate evaluation of the top polynomial at mu_" +
                                     std::to_string(i));
    }
    for (std::size_t i = 0; i < m; ++i) {
        w[i] = (pi[0] * pd[0]) / (pi[i] * pd[i]);
        if (i % 2 == 1) w[i] = -w[i];
    }
    return {pi, w};
}

inline double star_inner(const RPoly& f, const RPoly& g, const MeanPolySystem& sys, int n) {
    double acc = 0;
    for (std::size_t i = 0; i < sys.mu.eigenvalues.size(); ++i) {
        double x = sys.mu.eigenvalues[i];
        acc += sys.w[i] * f.eval(x) * g.eval(x);
    }
    return acc / n;
}

inline MeanPolySystem build_system(const DmrProfile& profile, const DistanceData& dd,
                                   double tol = kDefaultEigTol,
                                   double cluster_tol = kDefaultClusterTol) {
    MeanPolySystem sys;
    sys.polys = build_polynomials(profile);

    // the largest eigenvalue of Bbar is the degree (constant row sums), so
    // the shell sizes are pinned exactly
    Rational lambda0 = profile.bbar.empty() || profile.D == 0 ? Rational(0) : profile.bbar[0];
    for (int i = 0; i <= profile.D; ++i)
        if (sys.polys[i].eval(lambda0) != Rational(profile.k[i]))
            throw std::logic_error("polynomial value at the degree point is not the shell size");

    std::vector<Rational> sizes;
    for (int s : profile.k) sizes.emplace_back(s);
    const std::vector<Rational>* witness = is_symmetric(profile.Bbar) ? nullptr : &sizes;
    sys.mu = real_eigenvalues(profile.Bbar, witness, tol, cluster_tol);
    if (static_cast<int>(sys.mu.eigenvalues.size()) != profile.D + 1)
        throw std::runtime_error("mean-quotient eigenvalues collide at this clustering tolerance");

    auto [pi, w] = pseudo_multiplicities(sys.mu.eigenvalues, sys.polys[profile.D]);
    sys.pi_prods = std::move(pi);
    sys.w = std::move(w);
    if (std::abs(sys.w[0] - 1.0) > 1e-9)
        throw std::logic_error("leading pseudo-multiplicity strayed from 1");

    const RMatrix& a = profile.D >= 1 ? dd.A(1) : dd.A(0);
    for (int i = 0; i <= profile.D; ++i) {
        sys.Abar.push_back(poly_eval_matrix(sys.polys[i], a));
        sys.PofB.push_back(poly_eval_matrix(sys.polys[i], profile.Bbar));
        for (std::size_t r = 0; r < sys.Abar[i].rows; ++r) {
            Rational rowsum(0);
            for (std::size_t c = 0; c < sys.Abar[i].cols; ++c) rowsum += sys.Abar[i].at(r, c);
            if (rowsum != Rational(profile.k[i]))
                throw std::logic_error("mean-matrix row sum is not the shell size");
        }
    }
    return sys;
}

struct RecurrenceReport {
    bool below_diameter_exact = false;  // A*Abar_i three-term for i < D
    bool truncated_zero = false;        // residual at i = D vanishes
    RMatrix residual_at_diameter;
};

// A*Abar_i = b_{i-1}Abar_{i-1} + a_i Abar_i + c_{i+1}Abar_{i+1} holds for
// i < D as a polynomial identity; at i = D the truncated form leaves a
// residual that vanishes exactly when the family closes (distance-regular
// case) and is reported otherwise
inline RecurrenceReport recurrence_check(const MeanPolySystem& sys, const DistanceData& dd,
                                         const DmrProfile& p) {
    RecurrenceReport rr;
    if (p.D == 0) {
        rr.below_diameter_exact = true;
        rr.truncated_zero = true;
        rr.residual_at_diameter = RMatrix(dd.g.n, dd.g.n);
        return rr;
    }
    const RMatrix& a = dd.A(1);
    rr.below_diameter_exact = true;
    for (int i = 0; i < p.D; ++i) {
        RMatrix rhs = p.abar[i] * sys.Abar[i] + p.cbar[i + 1] * sys.Abar[i + 1];
        if (i >= 1) rhs = rhs + p.bbar[i - 1] * sys.Abar[i - 1];
        if (!(a * sys.Abar[i] == rhs)) rr.below_diameter_exact = false;
    }
    RMatrix res = a * sys.Abar[p.D] - p.abar[p.D] * sys.Abar[p.D];
    if (p.D >= 1) res = res - p.bbar[p.D - 1] * sys.Abar[p.D - 1];
    rr.truncated_zero = res == RMatrix(res.rows, res.cols);
    rr.residual_at_diameter = res;
    return rr;
}

}  // namespace dmr

#endif
