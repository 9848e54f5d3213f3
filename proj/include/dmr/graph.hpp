#ifndef DMR_GRAPH_HPP
#define DMR_GRAPH_HPP

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmr {

// Simple undirected graph on dense vertex indices 0..n-1.  Loops and
// multi-edges are rejected at insertion; connectivity is checked later,
// when distance data is built, so generators can assemble freely.
struct Graph {
    int n = 0;
    std::vector<std::vector<bool>> amat;
    std::vector<std::vector<int>> nbrs;
    std::string label;

    Graph() = default;
    explicit Graph(int nverts, std::string name = "")
        : n(nverts), amat(nverts, std::vector<bool>(nverts, false)), nbrs(nverts), label(std::move(name)) {
        if (nverts <= 0) throw std::invalid_argument("graph needs at least one vertex");
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (amat[u][v]) return;  // dedupe
        amat[u][v] = amat[v][u] = true;
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return amat[u][v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(nbrs[v].size());
    }

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n; ++v) m += degree(v);
        return m / 2;
    }

    // sorted (u,v) with u < v
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v : nbrs[u])
                if (u < v) out.emplace_back(u, v);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Text format: '#' starts a comment, blank lines skipped, optional header
// "n=<int>", then one "u v" pair per line.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int declared_n = -1;
    std::vector<std::pair<int, int>> pairs;
    int maxv = -1;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (first_content && tok.rfind("n=", 0) == 0) {
            first_content = false;
            try {
                std::size_t used = 0;
                declared_n = std::stoi(tok.substr(2), &used);
                if (used != tok.size() - 2 || declared_n <= 0) throw std::exception();
            } catch (...) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad header");
            }
            std::string extra;
            if (ls >> extra)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad header");
            continue;
        }
        first_content = false;
        std::string tok2, extra;
        if (!(ls >> tok2) || (ls >> extra))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected two integers");
        int u, v;
        try {
            std::size_t p1 = 0, p2 = 0;
            u = std::stoi(tok, &p1);
            v = std::stoi(tok2, &p2);
            if (p1 != tok.size() || p2 != tok2.size()) throw std::exception();
        } catch (...) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected two integers");
        }
        if (u < 0 || v < 0)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": negative vertex index");
        if (u == v)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": loop edge");
        pairs.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    int n = declared_n >= 0 ? declared_n : maxv + 1;
    if (n <= 0) throw std::invalid_argument("empty edge list");
    if (maxv >= n)
        throw std::invalid_argument("vertex index " + std::to_string(maxv) +
                                    " exceeds declared n-1");
    Graph g(n);
    for (auto [u, v] : pairs) g.add_edge(u, v);
    return g;
}

// graph6: ASCII offset-63 encoding, upper triangle column-major,
// '~' three-byte extension for 63 <= n < 258048.
inline Graph parse_graph6(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    for (char ch : s)
        if (ch < 63 || ch > 126)
            throw std::invalid_argument("graph6: byte out of range");
    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6: order >= 258048 not supported");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated order field");
        n = (static_cast<long long>(s[1] - 63) << 12) |
            (static_cast<long long>(s[2] - 63) << 6) | static_cast<long long>(s[3] - 63);
        pos = 4;
    }
    if (n <= 0) throw std::invalid_argument("graph6: empty graph");
    long long nbits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw std::invalid_argument("graph6: wrong payload length");
    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if (byte & (1 << (5 - bit % 6))) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (long long b = nbits; b < static_cast<long long>(need) * 6; ++b) {
        int byte = s[pos + static_cast<std::size_t>(b / 6)] - 63;
        if (byte & (1 << (5 - b % 6)))
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    std::string s;
    if (g.n < 63) {
        s.push_back(static_cast<char>(g.n + 63));
    } else if (g.n < 258048) {
        s.push_back('~');
        s.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((g.n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order >= 258048 not supported");
    }
    long long nbits = static_cast<long long>(g.n) * (g.n - 1) / 2;
    std::vector<int> bytes(static_cast<std::size_t>((nbits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.amat[i][j]) bytes[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
    for (int b : bytes) s.push_back(static_cast<char>(b + 63));
    return s;
}

// vertex i adjacent to i +- s (mod n); the generator set is closed under
// negation automatically
inline Graph circulant(int n, const std::set<int>& connections) {
    if (n < 3) throw std::invalid_argument("circulant needs n >= 3");
    if (connections.empty()) throw std::invalid_argument("circulant needs a nonempty connection set");
    std::set<int> gens;
    for (int s : connections) {
        int r = ((s % n) + n) % n;
        if (r == 0) throw std::invalid_argument("circulant generator divisible by n creates loops");
        gens.insert(r);
        gens.insert(n - r);
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int s : gens) {
            int j = (i + s) % n;
            if (i < j) g.add_edge(i, j);
        }
    return g;
}

// (a,b) ~ (a',b') iff one coordinate matches and the other is an edge
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    Graph p(g.n * h.n);
    auto id = [&](int a, int b) { return a * h.n + b; };
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < h.n; ++b) {
            for (int b2 : h.nbrs[b])
                if (b < b2) p.add_edge(id(a, b), id(a, b2));
            for (int a2 : g.nbrs[a])
                if (a < a2) p.add_edge(id(a, b), id(a2, b));
        }
    return p;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n, "cycle(" + std::to_string(n) + ")");
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n, "complete(" + std::to_string(n) + ")");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n, "path(" + std::to_string(n) + ")");
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph hypercube_graph(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("hypercube dimension out of range");
    Graph g(1 << k, "hypercube(" + std::to_string(k) + ")");
    for (int v = 0; v < g.n; ++v)
        for (int b = 0; b < k; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

inline Graph petersen_graph() {
    // outer 5-cycle, inner pentagram, spokes
    Graph g(10, "petersen");
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// the cubic 12-vertex graph obtained by expanding each vertex of K4 into a
// triangle; vertex (i,j), i != j in {0..3}, bridges (i,j)-(j,i)
inline Graph truncated_tetrahedron_graph() {
    Graph g(12, "truncated_tetrahedron");
    auto id = [](int i, int j) { return i * 3 + (j > i ? j - 1 : j); };
    for (int i = 0; i < 4; ++i) {
        std::vector<int> tri;
        for (int j = 0; j < 4; ++j)
            if (j != i) tri.push_back(id(i, j));
        g.add_edge(tri[0], tri[1]);
        g.add_edge(tri[0], tri[2]);
        g.add_edge(tri[1], tri[2]);
        for (int j = i + 1; j < 4; ++j) g.add_edge(id(i, j), id(j, i));
    }
    return g;
}

struct CatalogEntry {
    std::string name;
    std::string order;  // vertex count, or the parameter placeholder
    std::string note;
};

inline std::vector<CatalogEntry> catalog_entries() {
    return {
        {"cycle(n)", "n", "cycle on n >= 3 vertices"},
        {"complete(n)", "n", "complete graph"},
        {"path(n)", "n", "path graph (not distance mean-regular for n >= 3)"},
        {"hypercube(k)", "2^k", "k-dimensional hypercube"},
        {"petersen", "10", "Petersen graph, distance-regular control case"},
        {"prism_c5k2", "10", "pentagonal prism C5 x K2"},
        {"truncated_tetrahedron", "12", "K4 with vertices expanded to triangles; its proper mean-matrices do not commute"},
        {"cay_z8", "8", "circulant on Z_8 with generators {+-1, 4}; sources describing it as Cay(Z_8; +-4) are inconsistent with its displayed degree 3"},
        {"cay_z21", "21", "circulant on Z_21 with generators {+-1,...,+-5}; diameter 2 with 11 distinct adjacency eigenvalues"},
    };
}

// "cycle(7)", "petersen", ...
inline Graph catalog(const std::string& name) {
    auto open = name.find('(');
    if (open != std::string::npos) {
        if (name.back() != ')') throw std::invalid_argument("unknown catalog name: " + name);
        std::string base = name.substr(0, open);
        std::string arg = name.substr(open + 1, name.size() - open - 2);
        int k;
        try {
            std::size_t used = 0;
            k = std::stoi(arg, &used);
            if (used != arg.size()) throw std::exception();
        } catch (...) {
            throw std::invalid_argument("bad catalog parameter in: " + name);
        }
        if (base == "cycle") return cycle_graph(k);
        if (base == "complete") return complete_graph(k);
        if (base == "path") return path_graph(k);
        if (base == "hypercube") return hypercube_graph(k);
        throw std::invalid_argument("unknown catalog name: " + name);
    }
    if (name == "petersen") return petersen_graph();
    if (name == "prism_c5k2") {
        Graph g = cartesian_product(cycle_graph(5), complete_graph(2));
        g.label = "prism_c5k2";
        return g;
    }
    if (name == "truncated_tetrahedron") return truncated_tetrahedron_graph();
    if (name == "cay_z8") {
        Graph g = circulant(8, {1, 4});
        g.label = "cay_z8";
        return g;
    }
    if (name == "cay_z21") {
        Graph g = circulant(21, {1, 2, 3, 4, 5});
        g.label = "cay_z21";
        return g;
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace dmr

#endif
