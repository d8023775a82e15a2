// Rendering of analysis results: human-readable text and a stable
// machine-readable document ("schema": "torb/1"). The JSON layer uses
// order-preserving objects so output is byte-deterministic.
#ifndef TORB_REPORT_HPP
#define TORB_REPORT_HPP

#include "torb/cohomology.hpp"
#include "torb/orbifold.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace torb {

using Json = nlohmann::ordered_json;

inline const char* kSchemaVersion = "torb/1";

namespace detail {

// Integers render as JSON numbers while they fit, as decimal strings beyond.
inline Json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return to_string(v);
}

inline Json json_int_list(const std::vector<Int>& vs) {
    Json arr = Json::array();
    for (const Int& v : vs) arr.push_back(json_int(v));
    return arr;
}

inline Json json_group(const FiniteAbelianGroup& g) {
    Json out = Json::object();
    out["name"] = g.name();
    out["order"] = json_int(g.order());
    out["invariant_factors"] = json_int_list(g.factors);
    Json gens = Json::array();
    for (const TorusElement& t : g.generators) gens.push_back(t.to_string());
    out["generators"] = gens;
    if (!g.elements.empty()) {
        Json elems = Json::array();
        for (const TorusElement& t : g.elements) elems.push_back(t.to_string());
        out["elements"] = elems;
    }
    return out;
}

inline Json json_matrix(const IntMatrix& m) {
    // Column-major: entry j is the label of the j-th facet.
    Json cols = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Json col = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(json_int(m(i, j)));
        cols.push_back(col);
    }
    return cols;
}

inline Json json_input(const CharMatrix& c) {
    Json in = Json::object();
    in["n"] = c.n;
    if (c.is_spindle()) {
        in["spindle"] = Json::array({json_int(c.spindle_m), json_int(c.spindle_n)});
    } else {
        in["columns"] = json_matrix(c.lambda);
    }
    return in;
}

inline std::string text_matrix(const IntMatrix& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], to_string(m(i, j)).size());
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = to_string(m(i, j));
            os << " " << std::string(width[j] - s.size(), ' ') << s;
        }
        os << " ]\n";
    }
    return os.str();
}

inline std::string join_ints(const std::vector<Int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(vs[i]);
    }
    return out;
}

inline std::string warning_banner(const ClassificationReport& cls) {
    if (cls.h_odd == HOddStatus::CertifiedZero) return "";
    if (cls.h_odd == HOddStatus::KnownNonzero)
        return "warning: H^3 = " + cls.h3.name() +
               " != 0; the presentation describes the weighted face ring of the graph, "
               "not the equivariant cohomology of the space";
    return "warning: H^odd not certified zero; the presentation describes the weighted "
           "face ring; it agrees with the equivariant cohomology of the space only when "
           "the odd-degree cohomology vanishes";
}

} // namespace detail

// ---- analyze ----

inline Json analyze_json(const CharMatrix& c, const ClassificationReport& r) {
    Json out = Json::object();
    out["schema"] = kSchemaVersion;
    out["command"] = "analyze";
    out["input"] = detail::json_input(c);
    if (r.spindle) {
        out["spindle"] = Json::object({{"m", detail::json_int(r.spindle_m)},
                                       {"n", detail::json_int(r.spindle_n)}});
        out["is_sphere"] = r.is_sphere;
        out["h_odd"] = to_string(r.h_odd);
        return out;
    }
    out["det"] = detail::json_int(r.det);
    out["determinant_divisors"] = detail::json_int_list(r.determinant_divisors);
    out["invariant_factors"] = detail::json_int_list(r.invariant_factors);
    out["G"] = detail::json_group(r.g);
    out["N"] = detail::json_group(r.n_subgroup);
    out["h3"] = detail::json_group(r.h3);
    out["is_diagonal"] = r.is_diagonal;
    out["is_sphere"] = r.is_sphere;
    out["det_is_unit"] = r.det_is_unit;
    out["h_odd"] = to_string(r.h_odd);
    return out;
}

inline std::string analyze_text(const CharMatrix& c, const ClassificationReport& r) {
    std::ostringstream os;
    if (r.spindle) {
        os << "spindle S^2(" << to_string(r.spindle_m) << ", " << to_string(r.spindle_n) << ")\n";
        os << "equivariantly homeomorphic to S^2\n";
        os << "H^odd: " << to_string(r.h_odd) << "\n";
        return os.str();
    }
    os << "characteristic matrix (columns are facet labels):\n" << detail::text_matrix(c.lambda);
    os << "n = " << r.n << "\n";
    os << "det = " << to_string(r.det) << "\n";
    os << "determinant divisors: " << detail::join_ints(r.determinant_divisors) << "\n";
    os << "invariant factors: " << detail::join_ints(r.invariant_factors) << "\n";
    os << "G = " << r.g.name() << " (order " << to_string(r.g.order()) << ")\n";
    if (!r.g.generators.empty()) {
        os << "  generators:";
        for (const TorusElement& t : r.g.generators) os << " " << t.to_string();
        os << "\n";
    }
    if (!r.g.elements.empty() && r.g.elements.size() <= 16) {
        os << "  elements:";
        for (const TorusElement& t : r.g.elements) os << " " << t.to_string();
        os << "\n";
    }
    os << "N (subgroup fixing sphere points) = " << r.n_subgroup.name() << "\n";
    os << "H^3 = " << r.h3.name() << "\n";
    os << "is_diagonal: " << (r.is_diagonal ? "yes" : "no") << "\n";
    os << "is_sphere: " << (r.is_sphere ? "yes" : "no") << "\n";
    os << "det_is_unit: " << (r.det_is_unit ? "yes" : "no") << "\n";
    os << "H^odd: " << to_string(r.h_odd) << "\n";
    return os.str();
}

// ---- graph ----

struct GraphArtifacts {
    OrbifoldTorusGraph graph;
    std::vector<ThomClass> thom;        // in face-poset order
    bool has_constants = false;         // integrality constants exist for n >= 2
    IntegralityConstants constants;
};

inline GraphArtifacts graph_artifacts(const CharMatrix& c) {
    GraphArtifacts out;
    out.graph = orbifold_graph(c);
    for (const Face& f : faces(c.n)) out.thom.push_back(thom_class(c, f));
    if (!c.is_spindle()) {
        out.has_constants = true;
        out.constants = integrality_constants(c);
    }
    return out;
}

inline std::string divisibility_note_text(const IntegralityConstants& ic, const Int& det) {
    if (!ic.divisibility_note) return "";
    std::string out = "note: ";
    Int adet = abs_int(det);
    if (adet % ic.a_p != 0)
        out += "a_p = " + to_string(ic.a_p) + " does not divide |det| = " + to_string(adet);
    if (adet % ic.a_q != 0) {
        if (out != "note: ") out += "; ";
        out += "a_q = " + to_string(ic.a_q) + " does not divide |det| = " + to_string(adet);
    }
    out += " (the computed constants are authoritative)";
    return out;
}

inline Json graph_json(const CharMatrix& c, const GraphArtifacts& art) {
    Json out = Json::object();
    out["schema"] = kSchemaVersion;
    out["command"] = "graph";
    out["input"] = detail::json_input(c);

    Json axial = Json::array();
    for (const OrientedEdge& e : art.graph.graph.oriented_edges()) {
        Json row = Json::object();
        row["edge"] = e.label();
        row["from"] = to_string(e.initial());
        row["to"] = to_string(e.terminal());
        row["alpha"] = to_string(art.graph.axial(e));
        row["r"] = detail::json_int(art.graph.r(e));
        axial.push_back(row);
    }
    out["axial"] = axial;

    Json thom = Json::array();
    for (const ThomClass& t : art.thom) {
        Json row = Json::object();
        row["face"] = t.face.label();
        row["codim"] = t.face.codim();
        row["cohom_degree"] = 2 * t.face.codim();
        row["tau_p"] = to_string(t.value_p);
        row["tau_q"] = to_string(t.value_q);
        row["a"] = detail::json_int(t.a);
        thom.push_back(row);
    }
    out["thom"] = thom;

    if (art.has_constants) {
        const IntegralityConstants& ic = art.constants;
        Json cons = Json::object();
        cons["ell"] = detail::json_int_list(ic.ell);
        cons["a"] = detail::json_int_list(ic.a);
        cons["a_p"] = detail::json_int(ic.a_p);
        cons["a_q"] = detail::json_int(ic.a_q);
        Json adj = Json::array();
        for (std::size_t i = 0; i < ic.row_primitive_adjugate.rows(); ++i)
            adj.push_back(detail::json_int_list(ic.row_primitive_adjugate.row(i)));
        cons["row_primitive_adjugate"] = adj;
        cons["signed_diagonal"] = detail::json_int_list(ic.signed_diagonal);
        cons["divisibility_note"] = ic.divisibility_note;
        std::string note = divisibility_note_text(ic, c.det());
        if (!note.empty()) cons["note"] = note;
        out["integrality"] = cons;
    }
    return out;
}

inline std::string graph_text(const CharMatrix& c, const GraphArtifacts& art) {
    std::ostringstream os;
    os << "axial function:\n";
    for (const OrientedEdge& e : art.graph.graph.oriented_edges()) {
        os << "  " << e.label() << " (" << to_string(e.initial()) << " -> "
           << to_string(e.terminal()) << "): alpha = " << to_string(art.graph.axial(e))
           << ", r = " << to_string(art.graph.r(e)) << "\n";
    }
    os << "Thom classes (a = minimal positive integralizer):\n";
    for (const ThomClass& t : art.thom) {
        os << "  " << t.face.label() << ": tau(p) = " << to_string(t.value_p)
           << ", tau(q) = " << to_string(t.value_q) << ", a = " << to_string(t.a) << "\n";
    }
    if (art.has_constants) {
        const IntegralityConstants& ic = art.constants;
        os << "integrality constants:\n";
        os << "  ell = (" << detail::join_ints(ic.ell) << ")\n";
        os << "  a = (" << detail::join_ints(ic.a) << ")\n";
        os << "  a_p = " << to_string(ic.a_p) << ", a_q = " << to_string(ic.a_q) << "\n";
        os << "  row-primitive adjugate times matrix = diag(" << detail::join_ints(ic.signed_diagonal)
           << ")\n";
        std::string note = divisibility_note_text(ic, c.det());
        if (!note.empty()) os << "  " << note << "\n";
    }
    return os.str();
}

// ---- cohomology ----

struct CohomologyArtifacts {
    RingPresentation pres;
    RingPresentation corollary;
    BruteForceResult oracle;
    HilbertFunction presentation_hilbert;
    VerifyReport verdict;
    ClassificationReport cls;
    int max_cohom_degree = 0;
};

inline CohomologyArtifacts cohomology_artifacts(const CharMatrix& c, int max_cohom_degree,
                                                const Int& cap = kDefaultEnumerationCap) {
    CohomologyArtifacts art;
    art.max_cohom_degree = max_cohom_degree;
    art.pres = c.is_spindle() ? corollary_presentation(c) : presentation(c);
    art.corollary = corollary_presentation(c);
    art.oracle = brute_force_basis(c, max_cohom_degree);
    art.presentation_hilbert = hilbert_of_presentation(art.pres, max_cohom_degree);
    art.verdict = verify_presentation(c, art.pres, max_cohom_degree);
    art.cls = classify(c, cap);
    return art;
}

inline Json presentation_json(const RingPresentation& p) {
    Json out = Json::object();
    out["label"] = p.label;
    Json gens = Json::array();
    for (std::size_t i = 0; i < p.gen_names.size(); ++i) {
        Json g = Json::object();
        g["name"] = p.gen_names[i];
        g["cohom_degree"] = p.gen_cohom_degrees[i];
        gens.push_back(g);
    }
    out["generators"] = gens;
    Json rels = Json::array();
    for (std::size_t i = 0; i < p.relations.size(); ++i) rels.push_back(p.render_relation(i));
    out["relations"] = rels;
    if (p.has_evaluation()) {
        Json ev = Json::array();
        for (std::size_t i = 0; i < p.images.size(); ++i) {
            Json e = Json::object();
            e["generator"] = p.gen_names[i];
            e["at_p"] = to_string(p.images[i].f_p);
            e["at_q"] = to_string(p.images[i].f_q);
            ev.push_back(e);
        }
        out["evaluation"] = ev;
    }
    out["corollary_caveat"] = p.corollary_caveat;
    return out;
}

inline Json hilbert_json(const HilbertFunction& h) {
    Json arr = Json::array();
    for (const auto& [deg, rank] : h.ranks) {
        Json row = Json::object();
        row["cohom_degree"] = deg;
        row["rank"] = rank;
        arr.push_back(row);
    }
    return arr;
}

inline Json verify_json(const VerifyReport& v) {
    Json out = Json::object();
    out["pass"] = v.pass;
    out["relations_zero"] = v.relations_zero;
    out["first_failing_degree"] = v.first_failing_degree == -1 ? Json() : Json(v.first_failing_degree);
    Json degs = Json::array();
    for (const DegreeCheck& d : v.degrees) {
        Json row = Json::object();
        row["cohom_degree"] = d.cohom_degree;
        row["oracle_rank"] = d.oracle_rank;
        row["presentation_rank"] = d.presentation_rank;
        row["rank_match"] = d.rank_match;
        row["membership"] = d.membership;
        degs.push_back(row);
    }
    out["degrees"] = degs;
    return out;
}

inline Json cohomology_json(const CharMatrix& c, const CohomologyArtifacts& art) {
    Json out = Json::object();
    out["schema"] = kSchemaVersion;
    out["command"] = "cohomology";
    out["input"] = detail::json_input(c);
    out["max_cohom_degree"] = art.max_cohom_degree;
    std::string warn = detail::warning_banner(art.cls);
    out["warning"] = warn.empty() ? Json() : Json(warn);
    out["presentation"] = presentation_json(art.pres);
    if (!c.is_spindle()) out["corollary"] = presentation_json(art.corollary);
    out["hilbert"] = hilbert_json(art.oracle.hilbert);
    out["presentation_hilbert"] = hilbert_json(art.presentation_hilbert);
    out["verify"] = verify_json(art.verdict);
    return out;
}

inline std::string cohomology_text(const CharMatrix& c, const CohomologyArtifacts& art) {
    std::ostringstream os;
    std::string warn = detail::warning_banner(art.cls);
    if (!warn.empty()) os << warn << "\n";
    const RingPresentation& p = art.pres;
    os << "presentation (" << p.label << "):\n";
    os << "  generators:";
    for (std::size_t i = 0; i < p.gen_names.size(); ++i) {
        if (i) os << ",";
        os << " " << p.gen_names[i] << " (deg " << p.gen_cohom_degrees[i] << ")";
    }
    os << "\n  relations:\n";
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        os << "    " << p.render_relation(i) << "\n";
    if (p.has_evaluation()) {
        os << "  evaluation:\n";
        for (std::size_t i = 0; i < p.images.size(); ++i)
            os << "    " << p.gen_names[i] << " = (" << to_string(p.images[i].f_p) << ", "
               << to_string(p.images[i].f_q) << ")\n";
    }
    if (!c.is_spindle()) {
        const RingPresentation& q = art.corollary;
        os << "corollary form";
        if (q.corollary_caveat)
            os << " (formal statement; generators differ from the verified form)";
        os << ":\n  generators:";
        for (std::size_t i = 0; i < q.gen_names.size(); ++i) {
            if (i) os << ",";
            os << " " << q.gen_names[i] << " (deg " << q.gen_cohom_degrees[i] << ")";
        }
        os << "\n  relations:\n";
        for (std::size_t i = 0; i < q.relations.size(); ++i)
            os << "    " << q.render_relation(i) << "\n";
    }
    os << "hilbert function (cohomological degree: rank, brute force | presentation):\n";
    for (const auto& [deg, rank] : art.oracle.hilbert.ranks)
        os << "  " << deg << ": " << rank << " | " << art.presentation_hilbert.at(deg) << "\n";
    os << "verify: " << (art.verdict.pass ? "pass" : "FAIL");
    if (!art.verdict.pass && art.verdict.first_failing_degree != -1)
        os << " (first failing cohomological degree " << art.verdict.first_failing_degree << ")";
    os << "\n";
    return os.str();
}

} // namespace torb

#endif
