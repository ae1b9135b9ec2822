#pragma once

// Serialization of the library's value types to the documented JSON shapes.
// Needs nlohmann/json (single header) on the include path.

#include "o4tensor/exact_complex.hpp"
#include "o4tensor/half_int.hpp"
#include "o4tensor/o4_generators.hpp"
#include "o4tensor/radical.hpp"
#include "o4tensor/recurrence.hpp"
#include "o4tensor/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace o4tensor {

using Json = nlohmann::ordered_json;

// Radicands are JSON numbers while they fit the integer-exact double range,
// and decimal strings beyond it, so no consumer ever sees a rounded value.
// Nothing the library tabulates comes near the cutoff; the fallback exists
// for user-built values.
inline Json int_to_json(const Int& n) {
    static const Int cutoff = Int(1) << 53;
    if (-cutoff <= n && n <= cutoff) return (std::int64_t)n.convert_to<long long>();
    return n.str();
}

inline Int int_from_json(const Json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

// ExactSum <-> [{"coef": "p/q", "radicand": s}, ...]
inline Json to_json(const ExactSum& s) {
    Json arr = Json::array();
    for (const auto& t : s.terms()) {
        Json term;
        term["coef"] = to_string(t.coef);
        term["radicand"] = int_to_json(t.radicand);
        arr.push_back(std::move(term));
    }
    return arr;
}

inline ExactSum exact_sum_from_json(const Json& j) {
    ExactSum s;
    for (const auto& term : j)
        s = s + ExactSum::from_term({parse_rational(term.at("coef").get<std::string>()),
                                     int_from_json(term.at("radicand"))});
    return s;
}

// ExactComplex <-> {"re": [...], "im": [...]}
inline Json to_json(const ExactComplex& c) {
    Json j;
    j["re"] = to_json(c.re);
    j["im"] = to_json(c.im);
    return j;
}

inline ExactComplex exact_complex_from_json(const Json& j) {
    return {exact_sum_from_json(j.at("re")), exact_sum_from_json(j.at("im"))};
}

// HalfInt <-> "3/2" (same spelling HalfInt::str produces and parse accepts).
inline Json to_json(HalfInt h) { return h.str(); }

inline HalfInt half_int_from_json(const Json& j) {
    return HalfInt::parse(j.get<std::string>());
}

// Relation <-> {"terms": [{"coef": [...], "factors": [["1","2"], ...]}], "rhs": [...]}
inline Json to_json(const Relation& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        Json jt;
        jt["coef"] = to_json(t.coef);
        Json factors = Json::array();
        for (const auto& f : t.factors) factors.push_back(Json::array({to_json(f.bra_l), to_json(f.ket_l)}));
        jt["factors"] = std::move(factors);
        terms.push_back(std::move(jt));
    }
    Json j;
    j["terms"] = std::move(terms);
    j["rhs"] = to_json(r.rhs);
    return j;
}

inline Relation relation_from_json(const Json& j) {
    Relation r;
    for (const auto& jt : j.at("terms")) {
        RelationTerm t;
        t.coef = exact_sum_from_json(jt.at("coef"));
        for (const auto& jf : jt.at("factors"))
            t.factors.push_back({half_int_from_json(jf.at(0)), half_int_from_json(jf.at(1))});
        r.terms.push_back(std::move(t));
    }
    r.rhs = exact_sum_from_json(j.at("rhs"));
    return r;
}

// Generator-table report.  Residuals are listed sparsely, 1-based indices to
// match the I_ij component naming.
inline Json to_json(const RelationReport& rep) {
    Json relations = Json::array();
    for (const auto& c : rep.checks) {
        Json jc;
        jc["id"] = c.id;
        jc["block"] = c.block;
        jc["passes"] = c.passes;
        Json entries = Json::array();
        for (size_t r = 0; r < c.residual.rows(); ++r)
            for (size_t col = 0; col < c.residual.cols(); ++col) {
                const ExactComplex& v = c.residual.at(r, col);
                if (v.is_zero()) continue;
                Json e;
                e["row"] = r + 1;
                e["col"] = col + 1;
                e["value"] = to_json(v);
                entries.push_back(std::move(e));
            }
        jc["residual_nonzero_entries"] = std::move(entries);
        relations.push_back(std::move(jc));
    }
    Json j;
    j["variant"] = variant_name(rep.variant);
    j["relations"] = std::move(relations);
    return j;
}

inline Json to_json(const TabulatedCgRow& row) {
    Json j;
    j["id"] = row.id;
    j["tabulated"] = to_json(row.tabulated);
    j["computed"] = to_json(row.computed);
    j["status"] = row.status;
    j["closed_form"] = row.closed_form;
    return j;
}

inline Json to_json(const ThreeTermRow& row) {
    Json j;
    j["position"] = row.position;
    j["ordering"] = row.ordering;
    j["l_mid"] = to_json(row.l_mid);
    Json factors = Json::array();
    for (const auto& f : row.factors)
        factors.push_back(Json::array({to_json(f.bra_l), to_json(f.ket_l)}));
    j["factors"] = std::move(factors);
    j["tabulated"] = to_json(row.tabulated);
    j["engine"] = to_json(row.engine);
    j["status"] = row.status;
    return j;
}

inline Json to_json(const VerifyRow& row) {
    Json j;
    j["l"] = row.l;
    j["relation_text"] = row.relation.str();
    j["relation"] = to_json(row.relation);
    j["engine_vs_oracle"] = row.engine_vs_oracle;
    j["tabulated_ratio"] = row.tabulated_ratio;
    j["bra_first_extraction"] = row.bra_first_extraction;
    Json cg_rows = Json::array();
    for (const auto& r : row.cg_rows) cg_rows.push_back(to_json(r));
    j["tabulated_cg"] = std::move(cg_rows);
    Json three = Json::array();
    for (const auto& r : row.three_term) three.push_back(to_json(r));
    j["three_term"] = std::move(three);
    return j;
}

inline Json to_json(const VerifyReport& rep) {
    Json j;
    j["spec"] = Json{{"j1", to_json(rep.spec.j1)}, {"j2", to_json(rep.spec.j2)}};
    j["l_min"] = rep.l_min;
    j["l_max"] = rep.l_max;
    j["convention"] = convention_name(rep.convention);
    j["symmetrized"] = rep.symmetrized;
    j["all_engine_rows_pass"] = rep.all_engine_pass();
    Json rows = Json::array();
    for (const auto& r : rep.rows) rows.push_back(to_json(r));
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace o4tensor
