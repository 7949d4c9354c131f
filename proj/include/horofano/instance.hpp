#pragma once

// JSON instance files: (G, S\I, M, α̌_M, Q). Schema in docs/format.md.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "horofano/error.hpp"
#include "horofano/exactal.hpp"
#include "horofano/horo.hpp"
#include "horofano/polytope.hpp"
#include "horofano/rootsys.hpp"

namespace horofano::io {

using Json = nlohmann::ordered_json;

struct Instance {
    std::vector<DynkinComponent> components;
    std::vector<std::string> marked_roots;
    std::size_t rank = 0;
    LatticeMode mode = LatticeMode::Direct;
    std::map<std::string, LatticeVector> coroot_restrictions;
    std::vector<LatticeVector> weight_basis;
    std::vector<RationalVector> vertices;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Malformed input. Carries the JSON path (or line/column) of the problem.
struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

inline Json to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

/// Integers as JSON numbers, everything else as "p/q".
inline Json to_json(const Rational& q) { return is_integral(q) ? to_json(numerator(q)) : Json(to_string(q)); }

inline Json to_json(const LatticeVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

inline void only_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) known = known || it.key() == k;
        if (!known) fail(path, "unknown field \"" + it.key() + "\"");
    }
}

inline const Json& require(const Json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

inline Integer parse_integer(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            const Rational q = parse_rational(j.get<std::string>());
            if (is_integral(q)) return numerator(q);
        } catch (const ValidationError&) {
        }
    }
    fail(path, "expected an integer");
}

inline Rational parse_rational_field(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(parse_integer(j, path));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ValidationError& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a \"p/q\" string");
}

inline LatticeVector parse_lattice_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    LatticeVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

}  // namespace detail

inline Instance parse_instance(const Json& root) {
    using namespace detail;
    Instance inst;
    only_keys(root, "$", {"group", "marked_roots", "rank", "lattice", "polytope"});

    const auto& group = require(root, "group", "$");
    only_keys(group, "$.group", {"components"});
    const auto& comps = require(group, "components", "$.group");
    if (!comps.is_array()) fail("$.group.components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string p = "$.group.components[" + std::to_string(i) + "]";
        only_keys(comps[i], p, {"type", "rank"});
        const auto& t = require(comps[i], "type", p);
        const auto& r = require(comps[i], "rank", p);
        if (!t.is_string()) fail(p + ".type", "expected one of \"A\"..\"G\"");
        auto type = parse_dynkin_type(t.get<std::string>());
        if (!type) fail(p + ".type", "unknown Dynkin type \"" + t.get<std::string>() + "\"");
        if (!r.is_number_integer()) fail(p + ".rank", "expected an integer");
        DynkinComponent c{*type, r.get<int>()};
        if (!is_valid(c)) fail(p, "invalid type/rank combination " + to_string(c));
        inst.components.push_back(c);
    }

    const auto& marked = require(root, "marked_roots", "$");
    if (!marked.is_array()) fail("$.marked_roots", "expected an array of node ids");
    for (std::size_t i = 0; i < marked.size(); ++i) {
        if (!marked[i].is_string()) fail("$.marked_roots[" + std::to_string(i) + "]", "expected a node id \"c<i>.n<j>\"");
        inst.marked_roots.push_back(marked[i].get<std::string>());
    }

    const auto& rank = require(root, "rank", "$");
    if (!rank.is_number_unsigned()) fail("$.rank", "expected a nonnegative integer");
    inst.rank = rank.get<std::size_t>();

    const auto& lattice = require(root, "lattice", "$");
    only_keys(lattice, "$.lattice", {"mode", "coroot_restrictions", "weight_basis"});
    const auto& mode = require(lattice, "mode", "$.lattice");
    if (mode == "direct") {
        inst.mode = LatticeMode::Direct;
        if (lattice.contains("weight_basis")) fail("$.lattice.weight_basis", "not allowed in direct mode");
    } else if (mode == "weights") {
        inst.mode = LatticeMode::Weights;
        const auto& wb = require(lattice, "weight_basis", "$.lattice");
        if (!wb.is_array()) fail("$.lattice.weight_basis", "expected an array of integer vectors");
        for (std::size_t i = 0; i < wb.size(); ++i)
            inst.weight_basis.push_back(parse_lattice_vector(wb[i], "$.lattice.weight_basis[" + std::to_string(i) + "]"));
    } else {
        fail("$.lattice.mode", "expected \"direct\" or \"weights\"");
    }
    if (lattice.contains("coroot_restrictions")) {
        const auto& cr = lattice.at("coroot_restrictions");
        if (!cr.is_object()) fail("$.lattice.coroot_restrictions", "expected an object keyed by node id");
        for (auto it = cr.begin(); it != cr.end(); ++it)
            inst.coroot_restrictions[it.key()] =
                parse_lattice_vector(it.value(), "$.lattice.coroot_restrictions." + it.key());
    }

    const auto& poly = require(root, "polytope", "$");
    only_keys(poly, "$.polytope", {"vertices"});
    const auto& verts = require(poly, "vertices", "$.polytope");
    if (!verts.is_array()) fail("$.polytope.vertices", "expected an array of vectors");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const std::string p = "$.polytope.vertices[" + std::to_string(i) + "]";
        if (!verts[i].is_array()) fail(p, "expected an array");
        RationalVector v;
        for (std::size_t k = 0; k < verts[i].size(); ++k)
            v.push_back(parse_rational_field(verts[i][k], p + "[" + std::to_string(k) + "]"));
        if (v.size() != inst.rank)
            fail(p, "has length " + std::to_string(v.size()) + ", expected rank " + std::to_string(inst.rank));
        inst.vertices.push_back(std::move(v));
    }
    return inst;
}

/// Parses JSON text; syntax errors are reported with line and column.
inline Instance parse_instance_text(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
    }
    return parse_instance(root);
}

inline Json emit_instance(const Instance& inst) {
    Json root;
    Json comps = Json::array();
    for (const auto& c : inst.components)
        comps.push_back(Json{{"type", std::string(1, static_cast<char>(c.type))}, {"rank", c.rank}});
    root["group"] = Json{{"components", comps}};
    root["marked_roots"] = inst.marked_roots;
    root["rank"] = inst.rank;
    Json lattice;
    lattice["mode"] = to_string(inst.mode);
    if (inst.mode == LatticeMode::Weights) {
        Json wb = Json::array();
        for (const auto& m : inst.weight_basis) wb.push_back(to_json(m));
        lattice["weight_basis"] = wb;
    }
    if (inst.mode == LatticeMode::Direct || !inst.coroot_restrictions.empty()) {
        Json cr = Json::object();
        for (const auto& [id, v] : inst.coroot_restrictions) cr[id] = to_json(v);
        lattice["coroot_restrictions"] = cr;
    }
    root["lattice"] = lattice;
    Json verts = Json::array();
    for (const auto& v : inst.vertices) verts.push_back(to_json(v));
    root["polytope"] = Json{{"vertices", verts}};
    return root;
}

inline HoroSpace to_space(const Instance& inst) {
    auto rs = build_root_system(inst.components);
    NodeSet marked;
    for (const auto& id : inst.marked_roots) {
        auto node = rs.find_node(id);
        if (!node) throw ValidationError("$.marked_roots: unknown node id \"" + id + "\"");
        if (!marked.insert(*node).second) throw ValidationError("$.marked_roots: \"" + id + "\" listed twice");
    }
    std::map<std::size_t, LatticeVector> restrictions;
    for (const auto& [id, v] : inst.coroot_restrictions) {
        auto node = rs.find_node(id);
        if (!node) throw ValidationError("$.lattice.coroot_restrictions: unknown node id \"" + id + "\"");
        restrictions[*node] = v;
    }
    if (inst.mode == LatticeMode::Direct) return make_direct_space(std::move(rs), std::move(marked), inst.rank, restrictions);
    return make_weights_space(std::move(rs), std::move(marked), inst.rank, inst.weight_basis, restrictions);
}

inline RationalPolytope to_polytope(const Instance& inst) { return RationalPolytope(inst.rank, inst.vertices); }

/// Toric instance (no group data) with the given integral vertices.
inline Instance toric_instance(std::size_t dim, const std::vector<LatticeVector>& vertices) {
    Instance inst;
    inst.rank = dim;
    for (const auto& v : vertices) inst.vertices.push_back(to_rational(v));
    return inst;
}

}  // namespace horofano::io
