// command line front end: analyze | check | catalog
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dmr/algebra.hpp"
#include "dmr/analysis.hpp"
#include "dmr/distance.hpp"
#include "dmr/graph.hpp"
#include "dmr/partition.hpp"
#include "dmr/polynomials.hpp"
#include "dmr/report.hpp"

namespace {

struct InputOpts {
    std::string edges_file;
    std::string graph6;
    std::string catalog_name;
    std::string circulant_spec;
};

struct CommonOpts {
    InputOpts in;
    bool json = false;
    double tol = dmr::kDefaultEigTol;
    double cluster_tol = dmr::kDefaultClusterTol;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--edges", o.in.edges_file, "edge list file (optional n=<int> header)");
    cmd->add_option("--graph6", o.in.graph6, "graph6 string, or a file containing one");
    cmd->add_option("--catalog", o.in.catalog_name, "named catalog graph");
    cmd->add_option("--circulant", o.in.circulant_spec, "circulant spec n:s1,s2,...");
    cmd->add_flag("--json", o.json, "emit a JSON report");
    cmd->add_option("--tol", o.tol, "eigensolver residual tolerance");
    cmd->add_option("--cluster-tol", o.cluster_tol, "eigenvalue clustering tolerance");
}

dmr::Graph parse_circulant_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("circulant spec must look like n:s1,s2,...");
    int n = std::stoi(spec.substr(0, colon));
    std::set<int> conns;
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) conns.insert(std::stoi(tok));
    dmr::Graph g = dmr::circulant(n, conns);
    g.label = "circulant:" + spec;
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

dmr::Graph load_graph(const InputOpts& in, std::string& source) {
    int sources = !in.edges_file.empty() + !in.graph6.empty() + !in.catalog_name.empty() +
                  !in.circulant_spec.empty();
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one of --edges, --graph6, --catalog, --circulant is required");
    if (!in.edges_file.empty()) {
        source = "edges:" + in.edges_file;
        return dmr::parse_edge_list(read_file(in.edges_file));
    }
    if (!in.graph6.empty()) {
        std::ifstream probe(in.graph6);
        std::string text = probe ? read_file(in.graph6) : in.graph6;
        source = "graph6:" + in.graph6;
        return dmr::parse_graph6(text);
    }
    if (!in.catalog_name.empty()) {
        source = "catalog:" + in.catalog_name;
        return dmr::catalog(in.catalog_name);
    }
    source = "circulant:" + in.circulant_spec;
    return parse_circulant_spec(in.circulant_spec);
}

void print_matrix(const dmr::RMatrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::cout << indent << "[";
        for (std::size_t j = 0; j < m.cols; ++j)
            std::cout << (j ? "  " : "") << dmr::rat_to_string(m.at(i, j));
        std::cout << "]\n";
    }
}

std::string poly_to_string(const dmr::RPoly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == dmr::Rational(0) && p.c.size() > 1) continue;
        std::string term = dmr::rat_to_string(p.c[i]);
        if (i == 1)
            term += "x";
        else if (i > 1)
            term += "x^" + std::to_string(i);
        s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

int run_analyze(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::string source;
    dmr::Graph g = load_graph(o.in, source);
    dmr::DistanceData dd = dmr::compute_distances(g);
    dmr::AnalysisResult ar = dmr::analyze(dd);
    dmr::MeanPolySystem sys;
    dmr::AlgebraReport alg;
    bool have_system = false;
    if (ar.dmr.profile) {
        sys = dmr::build_system(*ar.dmr.profile, dd, o.tol, o.cluster_tol);
        alg = dmr::run_algebra(*ar.dmr.profile, sys, dd);
        have_system = true;
    }
    dmr::QuotientResult quot;
    bool have_quot = false;
    if (dd.D >= 1) {
        quot = dmr::quotient_matrix(dd.A(1), dmr::distance_partition(dd, 0), o.tol,
                                    o.cluster_tol);
        have_quot = true;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();

    if (o.json) {
        nlohmann::json rep =
            dmr::build_report(source, dd, ar, have_system ? &sys : nullptr,
                              have_system ? &alg : nullptr, have_quot ? &quot : nullptr, o.tol,
                              o.cluster_tol, ms);
        std::cout << rep.dump(2) << "\n";
        return ar.cls.dmr ? 0 : 2;
    }

    std::cout << "graph " << source << ": n=" << g.n << ", " << g.edge_count()
              << " edges, diameter " << dd.D << "\n";
    std::cout << "distance-regular:      " << (ar.cls.distance_regular ? "yes" : "no") << "\n";
    std::cout << "distance mean-regular: " << (ar.cls.dmr ? "yes" : "no") << "\n";
    std::cout << "super-regular:         " << (ar.cls.super_regular ? "yes" : "no") << "\n";
    if (!ar.cls.dmr) {
        std::cout << "reason: " << ar.cls.reason << "\n";
        if (ar.dmr.witness) std::cout << "witness: " << ar.dmr.witness->detail << "\n";
    } else {
        const dmr::DmrProfile& p = *ar.dmr.profile;
        std::cout << "shell sizes:";
        for (int k : p.k) std::cout << " " << k;
        std::cout << "\nmean quotient matrix:\n";
        print_matrix(p.Bbar, "  ");
        std::cout << "mean-array: {";
        for (int i = 0; i < p.D; ++i)
            std::cout << (i ? ", " : "") << dmr::rat_to_string(p.bbar[i]);
        std::cout << "; ";
        for (int i = 1; i <= p.D; ++i)
            std::cout << (i > 1 ? ", " : "") << dmr::rat_to_string(p.cbar[i]);
        std::cout << "}\n";
        std::cout << "polynomials:\n";
        for (int i = 0; i <= p.D; ++i)
            std::cout << "  p_" << i << " = " << poly_to_string(sys.polys[i]) << "\n";
        std::cout << "mean-quotient eigenvalues:";
        for (double v : sys.mu.eigenvalues) std::cout << " " << dmr::round12(v);
        std::cout << "\npseudo-multiplicities:";
        double total = 0;
        for (double v : sys.w) {
            std::cout << " " << dmr::round12(v);
            total += v;
        }
        std::cout << "  (sum " << dmr::round12(total) << ")\n";
        std::cout << "algebra: Bi_commute=" << (alg.bi_commute.commute ? "yes" : "no")
                  << " Ai_commute=" << (alg.ai_commute.commute ? "yes" : "no")
                  << " star_associative=" << (alg.star_assoc.associative ? "yes" : "no")
                  << " expansion=" << (alg.expansion.products_expand ? "yes" : "no")
                  << " scheme=" << (alg.scheme.holds ? "yes" : "no") << "\n";
        std::cout << "span dimension " << alg.subalgebra.dim_distance_span << " of "
                  << alg.subalgebra.distinct_adjacency_eigenvalues
                  << " distinct adjacency eigenvalues; closed="
                  << (alg.subalgebra.closed ? "yes" : "no") << "\n";
    }
    auto opt_str = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("none");
    };
    std::cout << "girth: odd " << opt_str(ar.girth.direct_odd) << ", even "
              << opt_str(ar.girth.direct_even) << " (searched to "
              << ar.girth.even_search_bound << ")\n";
    if (have_quot)
        std::cout << "interlacing: " << (quot.interlacing.holds ? "holds" : "violated")
                  << (quot.interlacing.tight ? ", tight" : ", not tight")
                  << (quot.equitable ? ", equitable" : ", not equitable") << "\n";
    return ar.cls.dmr ? 0 : 2;
}

int run_check(const CommonOpts& o, const std::string& property) {
    std::string source;
    dmr::Graph g = load_graph(o.in, source);
    dmr::DistanceData dd = dmr::compute_distances(g);
    bool holds = false;
    std::string reason;
    if (property == "drg") {
        dmr::DrgResult r = dmr::is_distance_regular(dd);
        holds = r.holds;
        if (!holds) {
            int distinct = dd.D >= 1 ? dmr::distinct_eigenvalue_count(dd.A(1)) : 1;
            if (distinct != dd.D + 1)
                reason = "D=" + std::to_string(dd.D) + " but " + std::to_string(distinct) +
                         " distinct eigenvalues";
            else if (r.witness)
                reason = r.witness->detail;
        }
    } else if (property == "dmr") {
        dmr::DmrResult r = dmr::is_distance_mean_regular(dd);
        holds = r.holds;
        if (!holds && r.witness) reason = r.witness->detail;
    } else if (property == "super-regular") {
        dmr::SuperResult r = dmr::is_super_regular(dd);
        holds = r.holds;
        if (!holds && r.witness) reason = r.witness->detail;
    } else if (property == "omega") {
        dmr::OmegaReport r = dmr::omega_characterization(dd);
        holds = r.holds;
        if (!holds && r.witness) reason = r.witness->detail;
    } else if (property == "triples") {
        dmr::TripleReport r = dmr::triple_characterization(dd);
        holds = r.holds;
        if (!holds && r.witness) reason = r.witness->detail;
    } else if (property == "hadamard") {
        dmr::HadamardReport r = dmr::hadamard_characterization(dd);
        holds = r.holds;
        if (!holds && r.witness) reason = r.witness->detail;
    } else {
        throw std::invalid_argument("unknown property: " + property);
    }

    if (o.json) {
        nlohmann::json j;
        j["schema"] = dmr::kReportSchema;
        j["mode"] = "check";
        j["input"] = {{"source", source}, {"n", g.n}, {"edges", g.edge_count()}};
        j["property"] = property;
        j["holds"] = holds;
        if (!reason.empty()) j["reason"] = reason;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << source << ": " << property << (holds ? " holds" : " fails");
        if (!reason.empty()) std::cout << " (" << reason << ")";
        std::cout << "\n";
    }
    return holds ? 0 : 2;
}

int run_catalog(bool json) {
    auto entries = dmr::catalog_entries();
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : entries)
            arr.push_back({{"name", e.name}, {"order", e.order}, {"note", e.note}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& e : entries)
            std::cout << e.name << "  (n=" << e.order << ")  " << e.note << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance mean-regularity analyzer"};
    app.require_subcommand(1);

    CommonOpts analyze_opts;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full classification and report");
    add_common(analyze_cmd, analyze_opts);

    CommonOpts check_opts;
    std::string property;
    CLI::App* check_cmd = app.add_subcommand("check", "run one characterization");
    add_common(check_cmd, check_opts);
    check_cmd->add_option("property", property, "drg|dmr|super-regular|omega|triples|hadamard")
        ->required();

    bool catalog_json = false;
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "list built-in graphs");
    catalog_cmd->add_flag("--json", catalog_json, "emit JSON listing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(analyze_opts);
        if (check_cmd->parsed()) return run_check(check_opts, property);
        return run_catalog(catalog_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
