#ifndef DMR_REPORT_HPP
#define DMR_REPORT_HPP

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

#include "dmr/algebra.hpp"
#include "dmr/analysis.hpp"
#include "dmr/partition.hpp"
#include "dmr/polynomials.hpp"

namespace dmr {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "dmr-report/1";

// floats are normalized to 12 significant digits before they are stored,
// so serialized reports are reproducible and round-trip exactly
inline double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline nlohmann::json json_of(const Rational& r) { return rat_to_string(r); }

inline nlohmann::json json_of(const RMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// ascending coefficient order
inline nlohmann::json json_of(const RPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.c) coeffs.push_back(rat_to_string(c));
    return coeffs;
}

inline nlohmann::json json_of(const SpectralData& s) {
    nlohmann::json j;
    nlohmann::json vals = nlohmann::json::array();
    for (double v : s.eigenvalues) vals.push_back(round12(v));
    j["values"] = vals;
    j["multiplicities"] = s.multiplicities;
    j["cluster_tol"] = round12(s.cluster_tol);
    return j;
}

inline nlohmann::json json_floats(const std::vector<double>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : v) a.push_back(round12(x));
    return a;
}

inline nlohmann::json json_of(const Witness& w) {
    nlohmann::json j;
    j["u"] = w.u;
    if (w.v >= 0) j["v"] = w.v;
    j["indices"] = {w.h, w.i, w.j};
    j["detail"] = w.detail;
    return j;
}

inline nlohmann::json classification_json(const AnalysisResult& ar) {
    nlohmann::json c;
    c["distance_regular"] = ar.cls.distance_regular;
    c["distance_mean_regular"] = ar.cls.dmr;
    c["super_regular"] = ar.cls.super_regular;
    if (!ar.cls.dmr) {
        c["reason"] = ar.cls.reason;
        if (ar.dmr.witness) c["witness"] = json_of(*ar.dmr.witness);
    }
    return c;
}

inline nlohmann::json girth_json(const GirthInfo& gi) {
    nlohmann::json j;
    j["odd"] = gi.direct_odd ? nlohmann::json(*gi.direct_odd) : nlohmann::json(nullptr);
    j["even"] = gi.direct_even ? nlohmann::json(*gi.direct_even) : nlohmann::json(nullptr);
    j["even_search_bound"] = gi.even_search_bound;
    if (gi.formula_odd) j["formula_odd"] = *gi.formula_odd;
    if (gi.formula_even) j["formula_even"] = *gi.formula_even;
    return j;
}

inline nlohmann::json algebra_json(const AlgebraReport& alg) {
    nlohmann::json j;
    j["dim_distance_span"] = alg.subalgebra.dim_distance_span;
    j["distinct_adjacency_eigenvalues"] = alg.subalgebra.distinct_adjacency_eigenvalues;
    j["closed_under_product"] = alg.subalgebra.closed;
    j["membership"] = alg.subalgebra.member;
    j["Bi_commute"] = alg.bi_commute.commute;
    j["Ai_commute"] = alg.ai_commute.commute;
    j["star_associative"] = alg.star_assoc.associative;
    j["BiBj_expansion_holds"] = alg.expansion.products_expand;
    j["scheme_identity_holds"] = alg.scheme.holds;
    j["poly_matches"] = alg.expansion.poly_matches;
    j["three_term_holds"] = alg.expansion.three_term_holds;
    j["fourier_max_dev"] = round12(alg.expansion.max_fourier_dev);
    j["fourier_ok"] = alg.expansion.fourier_ok;
    nlohmann::json wits = nlohmann::json::object();
    if (alg.bi_commute.witness) wits["Bi_commute"] = json_of(*alg.bi_commute.witness);
    if (alg.ai_commute.witness) wits["Ai_commute"] = json_of(*alg.ai_commute.witness);
    if (!alg.star_assoc.associative)
        wits["star_associative"] = {alg.star_assoc.i, alg.star_assoc.j, alg.star_assoc.k};
    if (alg.expansion.product_witness)
        wits["BiBj_expansion"] = json_of(*alg.expansion.product_witness);
    if (!alg.scheme.holds)
        wits["scheme_identity"] = {alg.scheme.r, alg.scheme.s, alg.scheme.i, alg.scheme.j};
    if (!wits.empty()) j["witnesses"] = wits;
    return j;
}

// the full analyze report; sys/alg/quot may be null when the graph is not
// mean-regular
inline nlohmann::json build_report(const std::string& source, const DistanceData& dd,
                                   const AnalysisResult& ar, const MeanPolySystem* sys,
                                   const AlgebraReport* alg, const QuotientResult* quot,
                                   double tol, double cluster_tol, double elapsed_ms) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["version"] = kToolVersion;
    j["input"] = {{"source", source}, {"n", dd.g.n}, {"edges", dd.g.edge_count()}};
    j["tolerances"] = {{"tol", round12(tol)}, {"cluster_tol", round12(cluster_tol)}};
    j["timing_ms"] = round12(elapsed_ms);
    j["diameter"] = dd.D;
    j["classification"] = classification_json(ar);
    j["characterizations"] = {{"quotient", ar.quotient.holds},
                              {"omega", ar.omega.holds},
                              {"triples", ar.triples.holds},
                              {"hadamard", ar.hadamard.holds}};
    j["girth"] = girth_json(ar.girth);
    if (ar.cls.super_regular) j["shell_sizes"] = dd.shell_counts[0];
    RMatrix a = dd.D >= 1 ? dd.A(1) : RMatrix(1, 1);
    j["spectra"]["adjacency"] = json_of(real_eigenvalues(a, nullptr, tol, cluster_tol));
    if (ar.dmr.profile && sys) {
        const DmrProfile& p = *ar.dmr.profile;
        nlohmann::json prof;
        prof["mean_quotient"] = json_of(p.Bbar);
        nlohmann::json pbis = nlohmann::json::array();
        for (const RMatrix& b : p.proper_Bi) pbis.push_back(json_of(b));
        prof["proper_mean_matrices"] = pbis;
        nlohmann::json arr;
        nlohmann::json av = nlohmann::json::array(), bv = nlohmann::json::array(),
                       cv = nlohmann::json::array();
        for (int i = 0; i <= p.D; ++i) av.push_back(rat_to_string(p.abar[i]));
        for (int i = 0; i < p.D; ++i) bv.push_back(rat_to_string(p.bbar[i]));
        for (int i = 1; i <= p.D; ++i) cv.push_back(rat_to_string(p.cbar[i]));
        arr["a"] = av;
        arr["b"] = bv;
        arr["c"] = cv;
        prof["mean_array"] = arr;
        j["profile"] = prof;

        j["spectra"]["mean_quotient"] = json_of(sys->mu);
        j["spectra"]["pi_products"] = json_floats(sys->pi_prods);
        j["spectra"]["pseudo_multiplicities"] = json_floats(sys->w);
        nlohmann::json polys = nlohmann::json::array();
        for (const RPoly& poly : sys->polys) polys.push_back(json_of(poly));
        j["polynomials"] = polys;
    }
    if (alg) j["algebra"] = algebra_json(*alg);
    if (quot)
        j["interlacing"] = {{"holds", quot->interlacing.holds},
                            {"tight", quot->interlacing.tight},
                            {"equitable", quot->equitable}};
    return j;
}

}  // namespace dmr

#endif
