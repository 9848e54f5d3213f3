#ifndef DMR_ANALYSIS_HPP
#define DMR_ANALYSIS_HPP

#include <climits>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmr/distance.hpp"
#include "dmr/matrix.hpp"

namespace dmr {

// Mean numbers of one base vertex: at(h,i,j) is the average over v at
// distance h from u of the number of w with d(u,w)=i, d(v,w)=j.
struct MeanTable {
    int m = 0;  // D+1
    std::vector<Rational> v;

    MeanTable() = default;
    explicit MeanTable(int dims) : m(dims), v(static_cast<std::size_t>(dims) * dims * dims) {}
    Rational& at(int h, int i, int j) {
        return v[(static_cast<std::size_t>(h) * m + i) * m + j];
    }
    const Rational& at(int h, int i, int j) const {
        return v[(static_cast<std::size_t>(h) * m + i) * m + j];
    }
    bool operator==(const MeanTable& o) const { return m == o.m && v == o.v; }
};

struct TripleTable {
    int m = 0;
    std::vector<long long> v;

    TripleTable() = default;
    explicit TripleTable(int dims) : m(dims), v(static_cast<std::size_t>(dims) * dims * dims, 0) {}
    long long& at(int h, int i, int j) {
        return v[(static_cast<std::size_t>(h) * m + i) * m + j];
    }
    long long at(int h, int i, int j) const {
        return v[(static_cast<std::size_t>(h) * m + i) * m + j];
    }
    bool operator==(const TripleTable& o) const { return m == o.m && v == o.v; }
};

struct Witness {
    int u = -1;
    int v = -1;  // second vertex for pair-based checks, -1 otherwise
    int h = 0, i = 0, j = 0;
    std::string detail;
};

// raw ordered-pair tallies rooted at u; at(h,i,j) counts pairs (v,w) with
// d(u,v)=h, d(u,w)=i, d(v,w)=j.  The tally is symmetric in its first two
// slots (swap v and w), which doubles as a consistency check on the
// distance data: the two ways of slicing the sum must agree.
inline TripleTable triple_counts(const DistanceData& dd, int u) {
    dd.g.check_vertex(u);
    TripleTable t(dd.D + 1);
    int n = dd.g.n;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            t.at(dd.dist[u][v], dd.dist[u][w], dd.dist[v][w])++;
    for (int h = 0; h <= dd.D; ++h)
        for (int i = 0; i < h; ++i)
            for (int j = 0; j <= dd.D; ++j)
                if (t.at(h, i, j) != t.at(i, h, j))
                    throw std::logic_error("triple count summation orders disagree");
    return t;
}

inline MeanTable mean_numbers_at(const DistanceData& dd, int u) {
    if (dd.ecc[u] < dd.D) throw std::runtime_error("vertex eccentricity below diameter");
    TripleTable t = triple_counts(dd, u);
    MeanTable mt(dd.D + 1);
    for (int h = 0; h <= dd.D; ++h)
        for (int i = 0; i <= dd.D; ++i)
            for (int j = 0; j <= dd.D; ++j)
                mt.at(h, i, j) = Rational(t.at(h, i, j)) / Rational(dd.shell_counts[u][h]);
    return mt;
}

// Everything a mean-regular graph is determined by: shell sizes, the
// tridiagonal mean-quotient matrix, the mean-array read off its bands, the
// full family of proper mean-matrices, and the underlying table.
struct DmrProfile {
    int D = 0;
    std::vector<int> k;              // k[0..D]
    RMatrix Bbar;                    // proper_Bi[1]
    std::vector<Rational> abar;      // abar[0..D], diagonal
    std::vector<Rational> bbar;      // bbar[0..D-1], bbar[D]=0
    std::vector<Rational> cbar;      // cbar[1..D], cbar[0]=0
    std::vector<RMatrix> proper_Bi;  // proper_Bi[i](h,j) = table(h,j,i)
    MeanTable table;
};

inline DmrProfile build_profile(const DistanceData& dd, const MeanTable& table) {
    DmrProfile p;
    p.D = dd.D;
    p.k = dd.shell_counts[0];
    p.table = table;
    int m = dd.D + 1;
    // mean-regularity forces the last two slots to be interchangeable
    // (count the defining triples with the first two vertices swapped)
    for (int h = 0; h < m; ++h)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (table.at(h, i, j) != table.at(h, j, i))
                    throw std::logic_error("mean table lacks pair symmetry");
    p.proper_Bi.assign(m, RMatrix(m, m));
    for (int i = 0; i < m; ++i)
        for (int h = 0; h < m; ++h)
            for (int j = 0; j < m; ++j)
                p.proper_Bi[i].at(h, j) = table.at(h, j, i);
    p.Bbar = p.proper_Bi[1];
    p.abar.assign(m, Rational(0));
    p.bbar.assign(m, Rational(0));
    p.cbar.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        p.abar[i] = p.Bbar.at(i, i);
        if (i < p.D) p.bbar[i] = p.Bbar.at(i, i + 1);
        if (i > 0) p.cbar[i] = p.Bbar.at(i, i - 1);
    }
    return p;
}

struct DmrResult {
    bool holds = false;
    std::string reason;  // "eccentricity" or "mean-table" when it fails
    std::optional<Witness> witness;
    std::optional<DmrProfile> profile;
};

inline DmrResult is_distance_mean_regular(const DistanceData& dd) {
    DmrResult r;
    for (int u = 0; u < dd.g.n; ++u)
        if (dd.ecc[u] < dd.D) {
            r.reason = "eccentricity";
            r.witness = Witness{u, -1, 0, 0, 0,
                                "eccentricity " + std::to_string(dd.ecc[u]) + " of vertex " +
                                    std::to_string(u) + " is below the diameter " +
                                    std::to_string(dd.D)};
            return r;
        }
    MeanTable ref = mean_numbers_at(dd, 0);
    for (int u = 1; u < dd.g.n; ++u) {
        MeanTable t = mean_numbers_at(dd, u);
        if (t == ref) continue;
        r.reason = "mean-table";
        for (int h = 0; h <= dd.D && !r.witness; ++h)
            for (int i = 0; i <= dd.D && !r.witness; ++i)
                for (int j = 0; j <= dd.D && !r.witness; ++j)
                    if (t.at(h, i, j) != ref.at(h, i, j))
                        r.witness = Witness{u, -1, h, i, j,
                                            "mean number (" + std::to_string(h) + "," +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                ") is " + rat_to_string(t.at(h, i, j)) +
                                                " at vertex " + std::to_string(u) + " but " +
                                                rat_to_string(ref.at(h, i, j)) + " at vertex 0"};
        return r;
    }
    r.holds = true;
    r.profile = build_profile(dd, ref);
    return r;
}

struct DrgResult {
    bool holds = false;
    std::optional<Witness> witness;
    // intersection numbers p[h][i][j], filled in when the check passes
    std::vector<std::vector<std::vector<long long>>> p;
};

// brute force straight from the definition: for every ordered pair at
// distance h, the table |Gamma_i(u) cap Gamma_j(v)| must match the first
// pair seen at that distance
inline DrgResult is_distance_regular(const DistanceData& dd) {
    DrgResult r;
    int n = dd.g.n, m = dd.D + 1;
    std::vector<std::vector<std::vector<long long>>> ref(
        m, std::vector<std::vector<long long>>(m, std::vector<long long>(m, -1)));
    std::vector<std::pair<int, int>> ref_pair(m, {-1, -1});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int h = dd.dist[u][v];
            std::vector<std::vector<long long>> cnt(m, std::vector<long long>(m, 0));
            for (int w = 0; w < n; ++w) cnt[dd.dist[u][w]][dd.dist[v][w]]++;
            if (ref_pair[h].first < 0) {
                ref_pair[h] = {u, v};
                ref[h] = cnt;
                continue;
            }
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (cnt[i][j] != ref[h][i][j]) {
                        r.witness = Witness{
                            u, v, h, i, j,
                            "intersection number (" + std::to_string(h) + "," +
                                std::to_string(i) + "," + std::to_string(j) + ") is " +
                                std::to_string(cnt[i][j]) + " for pair (" + std::to_string(u) +
                                "," + std::to_string(v) + ") but " + std::to_string(ref[h][i][j]) +
                                " for pair (" + std::to_string(ref_pair[h].first) + "," +
                                std::to_string(ref_pair[h].second) + ")"};
                        return r;
                    }
        }
    r.holds = true;
    r.p = ref;
    return r;
}

struct SuperResult {
    bool holds = false;
    std::optional<Witness> witness;
};

// distance-degree regularity: every vertex sees the same shell sizes
inline SuperResult is_super_regular(const DistanceData& dd) {
    SuperResult r;
    for (int u = 1; u < dd.g.n; ++u)
        for (int i = 0; i <= dd.D; ++i)
            if (dd.shell_counts[u][i] != dd.shell_counts[0][i]) {
                r.witness = Witness{u, -1, i, 0, 0,
                                    "shell size at distance " + std::to_string(i) + " is " +
                                        std::to_string(dd.shell_counts[u][i]) + " from vertex " +
                                        std::to_string(u) + " but " +
                                        std::to_string(dd.shell_counts[0][i]) +
                                        " from vertex 0"};
                return r;
            }
    r.holds = true;
    return r;
}

struct Classification {
    bool distance_regular = false;
    bool dmr = false;
    bool super_regular = false;
    std::string reason;  // why mean-regularity fails, empty otherwise
};

// edges counted by the pair of shells their endpoints land in; the shell
// indices can differ by at most one, so only a diagonal and an upper band
// exist
struct OmegaCounts {
    std::vector<long long> diag;   // both ends at distance i, i = 0..D
    std::vector<long long> upper;  // ends at distances i, i+1, i = 0..D-1
};

inline OmegaCounts edge_counts(const DistanceData& dd, int u) {
    dd.g.check_vertex(u);
    OmegaCounts oc{std::vector<long long>(dd.D + 1, 0), std::vector<long long>(dd.D, 0)};
    for (auto [v, w] : dd.g.edges()) {
        int i = dd.dist[u][v], j = dd.dist[u][w];
        if (i > j) std::swap(i, j);
        if (j - i > 1) throw std::logic_error("edge joins shells more than one level apart");
        if (i == j)
            oc.diag[i]++;
        else
            oc.upper[i]++;
    }
    return oc;
}

struct OmegaReport {
    bool holds = false;
    std::optional<Witness> witness;
    OmegaCounts omega;  // the common counts when the check passes
};

// constancy of the per-vertex edge counts; with a profile supplied the
// counts must reproduce the mean-array exactly
inline OmegaReport omega_characterization(const DistanceData& dd,
                                          const DmrProfile* profile = nullptr) {
    OmegaReport r;
    OmegaCounts ref = edge_counts(dd, 0);
    for (int u = 1; u < dd.g.n; ++u) {
        OmegaCounts oc = edge_counts(dd, u);
        for (int i = 0; i <= dd.D && !r.witness; ++i)
            if (oc.diag[i] != ref.diag[i])
                r.witness = Witness{u, -1, i, i, 0,
                                    "edge count within shell " + std::to_string(i) + " is " +
                                        std::to_string(oc.diag[i]) + " at vertex " +
                                        std::to_string(u) + " but " + std::to_string(ref.diag[i]) +
                                        " at vertex 0"};
        for (int i = 0; i < dd.D && !r.witness; ++i)
            if (oc.upper[i] != ref.upper[i])
                r.witness = Witness{u, -1, i, i + 1, 0,
                                    "edge count between shells " + std::to_string(i) + "," +
                                        std::to_string(i + 1) + " is " +
                                        std::to_string(oc.upper[i]) + " at vertex " +
                                        std::to_string(u) + " but " +
                                        std::to_string(ref.upper[i]) + " at vertex 0"};
        if (r.witness) return r;
    }
    r.holds = true;
    r.omega = ref;
    if (profile) {
        for (int i = 0; i <= dd.D; ++i)
            if (profile->abar[i] * Rational(profile->k[i]) != Rational(2 * ref.diag[i]))
                throw std::logic_error("omega reconstruction mismatch");
        for (int i = 0; i < dd.D; ++i)
            if (profile->bbar[i] * Rational(profile->k[i]) != Rational(ref.upper[i]) ||
                profile->cbar[i + 1] * Rational(profile->k[i + 1]) != Rational(ref.upper[i]))
                throw std::logic_error("omega reconstruction mismatch");
    }
    return r;
}

struct TripleReport {
    bool holds = false;
    std::optional<Witness> witness;
    TripleTable triples;
};

inline TripleReport triple_characterization(const DistanceData& dd,
                                            const DmrProfile* profile = nullptr) {
    TripleReport r;
    TripleTable ref = triple_counts(dd, 0);
    for (int u = 1; u < dd.g.n; ++u) {
        TripleTable t = triple_counts(dd, u);
        if (t == ref) continue;
        for (int h = 0; h <= dd.D && !r.witness; ++h)
            for (int i = 0; i <= dd.D && !r.witness; ++i)
                for (int j = 0; j <= dd.D && !r.witness; ++j)
                    if (t.at(h, i, j) != ref.at(h, i, j))
                        r.witness = Witness{u, -1, h, i, j,
                                            "triple count (" + std::to_string(h) + "," +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                ") is " + std::to_string(t.at(h, i, j)) +
                                                " at vertex " + std::to_string(u) + " but " +
                                                std::to_string(ref.at(h, i, j)) + " at vertex 0"};
        return r;
    }
    r.holds = true;
    r.triples = ref;
    if (profile)
        for (int h = 0; h <= dd.D; ++h)
            for (int i = 0; i <= dd.D; ++i)
                for (int j = 0; j <= dd.D; ++j)
                    if (Rational(ref.at(h, i, j)) !=
                        profile->table.at(h, i, j) * Rational(profile->k[h]))
                        throw std::logic_error("triple characterization mismatch");
    return r;
}

struct HadamardReport {
    bool holds = false;
    std::optional<Witness> witness;
};

// entrywise filter of the products: (A_i A_j) restricted to the pairs at
// distance h must have constant row and column sums; when it does, the
// common row sum over the shell size is the same mean number the averaged
// trace (Fourier) route produces
inline HadamardReport hadamard_characterization(const DistanceData& dd) {
    HadamardReport r;
    int n = dd.g.n;
    for (int i = 0; i <= dd.D; ++i)
        for (int j = 0; j <= dd.D; ++j) {
            RMatrix prod = dd.A(i) * dd.A(j);
            for (int h = 0; h <= dd.D; ++h) {
                RMatrix filtered = hadamard(prod, dd.A(h));
                Rational rs(0), cs(0);
                for (int u = 0; u < n; ++u) {
                    Rational row(0), col(0);
                    for (int w = 0; w < n; ++w) {
                        row += filtered.at(u, w);
                        col += filtered.at(w, u);
                    }
                    if (u == 0) {
                        rs = row;
                        cs = col;
                    } else if (row != rs || col != cs) {
                        r.witness = Witness{u, -1, h, i, j,
                                            std::string(row != rs ? "row" : "column") +
                                                " sum of the filtered product (" +
                                                std::to_string(h) + "," + std::to_string(i) +
                                                "," + std::to_string(j) + ") is " +
                                                rat_to_string(row != rs ? row : col) +
                                                " at vertex " + std::to_string(u) +
                                                " but " + rat_to_string(row != rs ? rs : cs) +
                                                " at vertex 0"};
                        return r;
                    }
                }
                // cross-route sanity: the common row sum, scaled up, must
                // reproduce the trace of the product against A_h (the same
                // total the averaged-inner-product route divides down)
                Rational total = sum_entries(filtered);
                if (rs * Rational(n) != total || cs * Rational(n) != total)
                    throw std::logic_error("hadamard totals disagree with row sums");
            }
        }
    r.holds = true;
    return r;
}

struct QuotientCheck {
    bool holds = false;
    std::optional<Witness> witness;
};

// the quotient route: the adjacency quotient over the distance partition
// must be the same matrix (same dimensions, same entries) for every base
// vertex
inline QuotientCheck quotient_characterization(const DistanceData& dd) {
    QuotientCheck r;
    for (int u = 1; u < dd.g.n; ++u)
        if (dd.ecc[u] != dd.ecc[0]) {
            r.witness = Witness{u, -1, 0, 0, 0,
                                "distance partition of vertex " + std::to_string(u) + " has " +
                                    std::to_string(dd.ecc[u] + 1) + " classes but vertex 0 has " +
                                    std::to_string(dd.ecc[0] + 1)};
            return r;
        }
    int m = dd.ecc[0] + 1;
    auto quotient_of = [&](int u) {
        RMatrix b(m, m);
        for (int h = 0; h < m; ++h) {
            std::vector<long long> row(m, 0);
            for (int v : dd.shells[u][h])
                for (int w : dd.g.nbrs[v]) row[dd.dist[u][w]]++;
            for (int j = 0; j < m; ++j)
                b.at(h, j) = Rational(row[j]) / Rational(dd.shell_counts[u][h]);
        }
        return b;
    };
    RMatrix ref = quotient_of(0);
    for (int u = 1; u < dd.g.n; ++u) {
        RMatrix b = quotient_of(u);
        if (b == ref) continue;
        for (int h = 0; h < m && !r.witness; ++h)
            for (int j = 0; j < m && !r.witness; ++j)
                if (b.at(h, j) != ref.at(h, j))
                    r.witness = Witness{u, -1, h, j, 1,
                                        "quotient entry (" + std::to_string(h) + "," +
                                            std::to_string(j) + ") is " +
                                            rat_to_string(b.at(h, j)) + " at vertex " +
                                            std::to_string(u) + " but " +
                                            rat_to_string(ref.at(h, j)) + " at vertex 0"};
        return r;
    }
    r.holds = true;
    return r;
}

inline std::optional<int> direct_odd_girth(const DistanceData& dd) {
    int best = INT_MAX;
    auto es = dd.g.edges();
    for (int u = 0; u < dd.g.n; ++u)
        for (auto [v, w] : es)
            if (dd.dist[u][v] == dd.dist[u][w]) best = std::min(best, 2 * dd.dist[u][v] + 1);
    return best < INT_MAX ? std::optional<int>(best) : std::nullopt;
}

// shortest even simple cycle of length <= maxlen, by depth-first search of
// simple paths rooted at each cycle's minimum vertex
inline std::optional<int> direct_even_girth(const DistanceData& dd, int maxlen) {
    int n = dd.g.n;
    int best = INT_MAX;
    std::vector<char> on_path(n, 0);
    for (int s = 0; s < n; ++s) {
        std::function<void(int, int)> dfs = [&](int v, int len) {
            for (int w : dd.g.nbrs[v]) {
                if (w == s && len >= 2 && (len + 1) % 2 == 0) best = std::min(best, len + 1);
                if (w > s && !on_path[w] && len + 1 <= maxlen - 1 && len + 2 < best) {
                    on_path[w] = 1;
                    dfs(w, len + 1);
                    on_path[w] = 0;
                }
            }
        };
        on_path[s] = 1;
        dfs(s, 0);
        on_path[s] = 0;
    }
    return best <= maxlen ? std::optional<int>(best) : std::nullopt;
}

struct GirthInfo {
    std::optional<int> formula_odd;   // from the first nonzero diagonal entry
    std::optional<int> formula_even;  // from the first mean c-parameter above 1
    std::optional<int> direct_odd;
    std::optional<int> direct_even;  // searched up to even_search_bound
    int even_search_bound = 0;
};

// Girths read off the mean-array, cross-checked against direct search.
// The odd formula is exact.  The even formula detects an even girth of
// 2i only through a c-parameter exceeding 1; when every c-parameter is 1
// the graph is only guaranteed to have no even cycle of length <= 2D,
// which is what gets verified (longer even cycles may exist).
inline GirthInfo girth_from_profile(const DmrProfile& profile, const DistanceData& dd) {
    GirthInfo gi;
    for (int i = 1; i <= profile.D; ++i)
        if (profile.abar[i] != Rational(0)) {
            gi.formula_odd = 2 * i + 1;
            break;
        }
    for (int i = 1; i <= profile.D; ++i)
        if (profile.cbar[i] > Rational(1)) {
            gi.formula_even = 2 * i;
            break;
        }
    gi.direct_odd = direct_odd_girth(dd);
    gi.even_search_bound = 2 * dd.D + 2;
    gi.direct_even = direct_even_girth(dd, gi.even_search_bound);
    if (gi.formula_odd != gi.direct_odd)
        throw std::logic_error("odd girth cross-check failed");
    if (gi.formula_even) {
        if (gi.direct_even != gi.formula_even)
            throw std::logic_error("even girth cross-check failed");
    } else {
        if (gi.direct_even && *gi.direct_even <= 2 * dd.D)
            throw std::logic_error("even girth cross-check failed");
    }
    return gi;
}

inline Classification classify(const DistanceData& dd) {
    Classification c;
    DmrResult dmr = is_distance_mean_regular(dd);
    DrgResult drg = is_distance_regular(dd);
    SuperResult sup = is_super_regular(dd);
    c.distance_regular = drg.holds;
    c.dmr = dmr.holds;
    c.super_regular = sup.holds;
    c.reason = dmr.reason;
    if ((drg.holds && !dmr.holds) || (dmr.holds && !sup.holds))
        throw std::logic_error("classification hierarchy violated");
    return c;
}

struct AnalysisResult {
    Classification cls;
    DrgResult drg;
    DmrResult dmr;
    SuperResult super_reg;
    QuotientCheck quotient;
    OmegaReport omega;
    TripleReport triples;
    HadamardReport hadamard;
    GirthInfo girth;
};

// Full decision pass: the three regularity levels, the three alternative
// characterizations, and the girth data, with every internal consistency
// relation between them enforced.
inline AnalysisResult analyze(const DistanceData& dd) {
    AnalysisResult r;
    r.dmr = is_distance_mean_regular(dd);
    r.drg = is_distance_regular(dd);
    r.super_reg = is_super_regular(dd);
    r.cls.distance_regular = r.drg.holds;
    r.cls.dmr = r.dmr.holds;
    r.cls.super_regular = r.super_reg.holds;
    r.cls.reason = r.dmr.reason;
    if ((r.drg.holds && !r.dmr.holds) || (r.dmr.holds && !r.super_reg.holds))
        throw std::logic_error("classification hierarchy violated");
    const DmrProfile* prof = r.dmr.profile ? &*r.dmr.profile : nullptr;
    r.quotient = quotient_characterization(dd);
    r.omega = omega_characterization(dd, prof);
    r.triples = triple_characterization(dd, prof);
    r.hadamard = hadamard_characterization(dd);
    if (r.triples.holds != r.dmr.holds || r.hadamard.holds != r.dmr.holds ||
        r.quotient.holds != r.dmr.holds ||
        (r.super_reg.holds && r.omega.holds != r.dmr.holds))
        throw std::logic_error("characterizations disagree");
    if (prof) {
        r.girth = girth_from_profile(*prof, dd);
    } else {
        r.girth.direct_odd = direct_odd_girth(dd);
        r.girth.even_search_bound = 2 * dd.D + 2;
        r.girth.direct_even = direct_even_girth(dd, r.girth.even_search_bound);
    }
    return r;
}

}  // namespace dmr

#endif
