#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "lieco/korbits.hpp"

namespace lieco {

using json = nlohmann::ordered_json;

// Malformed input document; `where` points at the offending field.
struct DocumentError : std::runtime_error {
    std::string where;
    DocumentError(std::string w, const std::string& what) : std::runtime_error(w + ": " + what), where(std::move(w)) {}
};

struct MembershipError : std::runtime_error {
    std::size_t row, col;
    MembershipError(const std::string& what, std::size_t r, std::size_t c) : std::runtime_error(what), row(r), col(c) {}
};

inline json scalar_list(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

inline json matrix_entries(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json matrix_json(const AlgebraContext& c, const ExactMatrix& m) {
    return json{{"algebra", kind_name(c.kind)}, {"n", c.n}, {"entries", matrix_entries(m)}};
}

inline Scalar parse_scalar_field(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Scalar(v.get<long>());
        if (v.is_string()) return Scalar::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw DocumentError(where, e.what());
    } catch (const DivisionByZero&) {
        throw DocumentError(where, "zero denominator");
    }
    throw DocumentError(where, "expected a scalar string such as \"1/2-3*i\"");
}

inline ExactMatrix parse_entries(const json& e, std::size_t n, const std::string& where) {
    if (!e.is_array() || e.size() != n) throw DocumentError(where, "expected " + std::to_string(n) + " rows");
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string wi = where + "[" + std::to_string(i) + "]";
        if (!e[i].is_array() || e[i].size() != n) throw DocumentError(wi, "expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_scalar_field(e[i][j], wi + "[" + std::to_string(j) + "]");
    }
    return m;
}

inline Kind parse_kind(const std::string& s, const std::string& where = "algebra") {
    if (s == "so") return Kind::SO;
    if (s == "gl") return Kind::GL;
    throw DocumentError(where, "unknown algebra '" + s + "' (expected \"so\" or \"gl\")");
}

struct MatrixDocument {
    Ctx ctx;
    ExactMatrix mat;
};

// First entry of MᵀS + SM that fails to vanish.
inline void require_membership(const AlgebraContext& c, const ExactMatrix& m) {
    if (membership_check(c, m)) return;
    ExactMatrix r = m.transpose() * c.form + c.form * m;
    for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t j = 0; j < c.n; ++j)
            if (!r(i, j).is_zero())
                throw MembershipError("matrix is not in " + c.name() + ": (MᵀS + SM)[" + std::to_string(i) + "][" + std::to_string(j) +
                                          "] = " + r(i, j).str(),
                                      i, j);
}

inline MatrixDocument parse_matrix_document(const json& doc) {
    if (!doc.is_object()) throw DocumentError("$", "expected an object");
    for (const char* k : {"algebra", "n", "entries"})
        if (!doc.contains(k)) throw DocumentError(k, "missing field");
    if (!doc["algebra"].is_string()) throw DocumentError("algebra", "expected a string");
    if (!doc["n"].is_number_unsigned()) throw DocumentError("n", "expected a positive integer");
    Kind kind = parse_kind(doc["algebra"].get<std::string>());
    std::size_t n = doc["n"].get<std::size_t>();
    Ctx ctx;
    try {
        ctx = make_algebra(kind, n);
    } catch (const UsageError& e) {
        throw DocumentError("n", e.what());
    }
    ExactMatrix m = parse_entries(doc["entries"], n, "entries");
    require_membership(*ctx, m);
    return {ctx, m};
}

inline MatrixDocument parse_matrix_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("byte " + std::to_string(e.byte), "invalid JSON");
    }
    return parse_matrix_document(doc);
}

inline json invariant_json(const InvariantVector& v) {
    return json{{"algebra", kind_name(v.kind)}, {"n", v.n}, {v.partial ? "partial" : "full", scalar_list(v.values)}};
}

inline InvariantVector parse_invariant(const json& doc) {
    InvariantVector v;
    if (!doc.contains("algebra") || !doc["algebra"].is_string()) throw DocumentError("algebra", "missing or not a string");
    v.kind = parse_kind(doc["algebra"].get<std::string>());
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) throw DocumentError("n", "missing or not a positive integer");
    v.n = doc["n"].get<std::size_t>();
    const char* key = doc.contains("partial") ? "partial" : doc.contains("full") ? "full" : nullptr;
    if (!key) throw DocumentError("values", "expected a \"partial\" or \"full\" array");
    v.partial = std::string(key) == "partial";
    if (!doc[key].is_array()) throw DocumentError(key, "expected an array");
    for (std::size_t i = 0; i < doc[key].size(); ++i)
        v.values.push_back(parse_scalar_field(doc[key][i], std::string(key) + "[" + std::to_string(i) + "]"));
    return v;
}

// ---- orbit graphs -------------------------------------------------------------

inline json orbit_graph_json(const AlgebraContext& c, const OrbitGraph& g) {
    json nodes = json::array();
    for (const auto& o : g.orbits) {
        json compact = json::object();
        for (std::size_t k = 0; k < c.roots.size(); ++k)
            if (c.roots[k].positive && o.theta_Q.compact[k] != 0) {
                std::ostringstream key;
                for (std::size_t i = 0; i < c.l; ++i) key << (i ? "," : "") << c.roots[k].coords[i];
                compact[key.str()] = o.theta_Q.compact[k] > 0 ? "compact" : "noncompact";
            }
        json types = json::array();
        for (auto s : c.simple) types.push_back(root_type_name(classify_root_type(c, o.theta_Q, c.roots[s].coords)));
        nodes.push_back({{"id", o.id},
                         {"base", o.base},
                         {"word", o.word},
                         {"codim", o.codim},
                         {"closed", o.closed},
                         {"theta_action", o.theta_Q.action},
                         {"imaginary", compact},
                         {"simple_root_types", types},
                         {"conjugator", matrix_entries(o.conj)}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"from", g.orbits[e.from].id}, {"to", g.orbits[e.to].id}, {"simple", e.simple}});
    return json{{"algebra", kind_name(c.kind)}, {"n", c.n}, {"nodes", nodes}, {"edges", edges}};
}

inline std::string orbit_graph_text(const AlgebraContext& c, const OrbitGraph& g) {
    std::ostringstream out;
    out << "graph " << c.name() << "\n";
    for (const auto& o : g.orbits) {
        out << "node " << o.id << " codim=" << o.codim << " closed=" << (o.closed ? "yes" : "no") << " word=";
        if (o.word.empty()) out << "-";
        for (std::size_t i = 0; i < o.word.size(); ++i) out << (i ? "." : "") << "s" << o.word[i];
        out << "\n";
    }
    for (const auto& e : g.edges) out << "edge " << g.orbits[e.from].id << " -> " << g.orbits[e.to].id << " s" << e.simple << "\n";
    return out.str();
}

}  // namespace lieco
