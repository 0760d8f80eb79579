// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization for every CLI payload.  Deterministic: objects use
// nlohmann's sorted-key representation, integers that fit in 64 bits are
// emitted as JSON numbers, larger ones as decimal strings, rationals as
// "num/den" strings.  DOT export for obstruction graphs lives here too.

#ifndef ISOLAB_JSONIO_HPP
#define ISOLAB_JSONIO_HPP

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "isolab/k3salem.hpp"
#include "isolab/lattice.hpp"
#include "isolab/textio.hpp"

namespace isolab {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars.

inline Json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    fail("BadJson", "expected an integer or a decimal string");
}

inline Json json_rat(const Rat& v) {
    if (denominator(v) == 1) return json_int(numerator(v));
    return numerator(v).str() + "/" + denominator(v).str();
}

// ---------------------------------------------------------------------------
// Polynomials and index maps.

inline Json poly_to_json(const IntPoly& f) {
    Json coeffs = Json::array();
    for (const Int& c : f.c) coeffs.push_back(json_int(c));
    return Json{{"coeffs", coeffs}, {"text", serialize_poly(f)}};
}

inline IntPoly poly_from_json(const Json& j) {
    const Json* coeffs = &j;
    if (j.is_object()) {
        if (!j.contains("coeffs")) fail("BadJson", "polynomial object lacks \"coeffs\"");
        coeffs = &j["coeffs"];
    }
    if (!coeffs->is_array()) fail("BadJson", "polynomial coefficients must be an array");
    std::vector<Int> c;
    for (const Json& e : *coeffs) c.push_back(int_from_json(e));
    return IntPoly(std::move(c));
}

inline Json index_map_to_json(const IndexMap& im) {
    Json j;
    j["at_x_minus_1"] = im.at_x_minus_1 ? Json(*im.at_x_minus_1) : Json(nullptr);
    j["at_x_plus_1"] = im.at_x_plus_1 ? Json(*im.at_x_plus_1) : Json(nullptr);
    j["at"] = im.at;
    return j;
}

inline IndexMap index_map_from_json(const Json& j) {
    if (!j.is_object()) fail("BadJson", "index map must be a JSON object");
    IndexMap im;
    if (j.contains("at_x_minus_1") && !j["at_x_minus_1"].is_null())
        im.at_x_minus_1 = j["at_x_minus_1"].get<long>();
    if (j.contains("at_x_plus_1") && !j["at_x_plus_1"].is_null())
        im.at_x_plus_1 = j["at_x_plus_1"].get<long>();
    if (j.contains("at")) {
        if (!j["at"].is_array()) fail("BadJson", "\"at\" must be an array");
        for (const Json& e : j["at"]) im.at.push_back(e.get<long>());
    }
    return im;
}

// ---------------------------------------------------------------------------
// Matrices.

inline IntMat matrix_from_json(const Json& j) {
    const Json* rows = &j;
    if (j.is_object()) {
        if (j.contains("matrix"))
            rows = &j["matrix"];
        else if (j.contains("gram"))
            rows = &j["gram"];
        else
            fail("BadJson", "matrix object lacks \"matrix\" or \"gram\"");
    }
    if (!rows->is_array()) fail("BadJson", "matrix must be an array of rows");
    IntMat m;
    for (const Json& row : *rows) {
        if (!row.is_array()) fail("BadJson", "matrix row must be an array");
        std::vector<Int> r;
        for (const Json& e : row) r.push_back(int_from_json(e));
        m.push_back(std::move(r));
    }
    return m;
}

inline Json matrix_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Int& e : row) r.push_back(json_int(e));
        rows.push_back(r);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Reports.

inline Json interval_to_json(const RationalInterval& iv) {
    return Json{{"lo", json_rat(iv.lo)}, {"hi", json_rat(iv.hi)}};
}

inline std::string vertex_label(const GraphVertex& v) {
    switch (v.kind) {
        case VertexKind::XMinus1: return "x - 1";
        case VertexKind::XPlus1: return "x + 1";
        default: return serialize_poly(v.poly);
    }
}

inline Json vertex_to_json(const GraphVertex& v) {
    return Json{{"label", vertex_label(v)}, {"multiplicity", v.multiplicity}};
}

inline Json graph_to_json(const ObstructionGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices) vertices.push_back(vertex_to_json(v));
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json primes = Json::array();
        for (const Int& p : e.witness_primes) primes.push_back(json_int(p));
        edges.push_back(Json{{"a", vertex_label(g.vertices[e.a])},
                             {"b", vertex_label(g.vertices[e.b])},
                             {"witness_primes", primes}});
    }
    Json unknown = Json::array();
    for (const auto& [a, b] : g.unknown_pairs)
        unknown.push_back(
            Json{{"a", vertex_label(g.vertices[a])}, {"b", vertex_label(g.vertices[b])}});
    return Json{{"vertices", vertices}, {"edges", edges}, {"unknown_pairs", unknown}};
}

inline Json group_to_json(const ObstructionGraph& g, const ObstructionGroupInfo& info) {
    Json comps = Json::array();
    for (const auto& comp : info.components) {
        Json labels = Json::array();
        for (size_t v : comp) labels.push_back(vertex_label(g.vertices[v]));
        comps.push_back(labels);
    }
    Json forced = Json::array();
    for (size_t v : info.forced_zero) forced.push_back(vertex_label(g.vertices[v]));
    return Json{{"components", comps}, {"omega_rank", info.omega_rank}, {"forced_zero", forced}};
}

inline Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["reasons"] = v.reasons;
    if (v.graph) j["graph"] = graph_to_json(*v.graph);
    if (v.graph && v.group) j["group"] = group_to_json(*v.graph, *v.group);
    return j;
}

inline Json salem_to_json(const SalemCertificate& cert) {
    return Json{{"polynomial", poly_to_json(cert.S)},
                {"degree", cert.degree},
                {"unit_pairs", cert.unit_pairs},
                {"lambda_interval", interval_to_json(cert.lambda_interval)}};
}

inline Json local_report_to_json(const LocalReport& rep) {
    Json j;
    j["prime"] = json_int(rep.p);
    j["condition_a"] = rep.condition_a;
    j["condition_b"] = rep.condition_b ? Json(*rep.condition_b) : Json(nullptr);
    j["verdict"] = rep.verdict;
    return j;
}

inline Json witness_to_json(const WitnessReport& rep) {
    return Json{{"characteristic", poly_to_json(rep.characteristic)},
                {"is_semisimple", rep.is_semisimple},
                {"det_t", json_int(rep.det_t)},
                {"index_map", index_map_to_json(rep.index_map)},
                {"spinor_parity_ok", rep.spinor_parity_ok}};
}

// ---------------------------------------------------------------------------
// DOT export.

inline std::string graph_to_dot(const ObstructionGraph& g) {
    std::string out = "graph obstruction {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        out += "  v" + std::to_string(i) + " [label=\"" + vertex_label(g.vertices[i]) +
               " (n=" + std::to_string(g.vertices[i].multiplicity) + ")\"];\n";
    }
    for (const auto& e : g.edges) {
        std::string primes;
        for (const Int& p : e.witness_primes) {
            if (!primes.empty()) primes += ",";
            primes += p.str();
        }
        out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) +
               " [label=\"p=" + primes + "\"];\n";
    }
    for (const auto& [a, b] : g.unknown_pairs) {
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) +
               " [style=dashed, label=\"?\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace isolab

#endif  // ISOLAB_JSONIO_HPP
