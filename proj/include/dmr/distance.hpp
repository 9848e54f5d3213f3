#ifndef DMR_DISTANCE_HPP
#define DMR_DISTANCE_HPP

#include <queue>
#include <stdexcept>
#include <vector>

#include "dmr/graph.hpp"
#include "dmr/matrix.hpp"

namespace dmr {

// All-pairs distances plus the derived per-vertex shells and the distance
// matrices A_0..A_D.  Everything downstream works from this.
struct DistanceData {
    Graph g;
    int D = 0;                                        // diameter
    std::vector<std::vector<int>> dist;               // dist[u][v]
    std::vector<std::vector<std::vector<int>>> shells;       // shells[u][i] = vertices at distance i
    std::vector<std::vector<int>> shell_counts;       // shell_counts[u][i], 0 past ecc(u)
    std::vector<int> ecc;
    std::vector<RMatrix> distance_matrices;           // D+1 of them

    const RMatrix& A(int i) const {
        if (i < 0 || i > D) throw std::invalid_argument("distance index out of range");
        return distance_matrices[static_cast<std::size_t>(i)];
    }
};

inline DistanceData compute_distances(const Graph& g) {
    DistanceData dd;
    dd.g = g;
    int n = g.n;
    dd.dist.assign(n, std::vector<int>(n, -1));
    dd.ecc.assign(n, 0);
    for (int s = 0; s < n; ++s) {
        auto& d = dd.dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.nbrs[u])
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (d[v] < 0) throw std::invalid_argument("graph must be connected");
            dd.ecc[s] = std::max(dd.ecc[s], d[v]);
        }
        dd.D = std::max(dd.D, dd.ecc[s]);
    }
    dd.shells.assign(n, {});
    dd.shell_counts.assign(n, std::vector<int>(dd.D + 1, 0));
    for (int u = 0; u < n; ++u) {
        dd.shells[u].assign(dd.D + 1, {});
        for (int v = 0; v < n; ++v) {
            dd.shells[u][dd.dist[u][v]].push_back(v);
            dd.shell_counts[u][dd.dist[u][v]]++;
        }
    }
    dd.distance_matrices.assign(dd.D + 1, RMatrix(n, n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            dd.distance_matrices[dd.dist[u][v]].at(u, v) = Rational(1);
    return dd;
}

}  // namespace dmr

#endif
