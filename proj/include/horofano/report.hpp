#pragma once

// The full pipeline on one instance (validate → embed → curves → theorem)
// and its rendering as a JSON report or a human-readable summary.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "horofano/curves.hpp"
#include "horofano/error.hpp"
#include "horofano/horo.hpp"
#include "horofano/instance.hpp"
#include "horofano/theorem.hpp"

namespace horofano::io {

enum class Status { Valid, Invalid, Inconsistent };

struct Analysis {
    Status status = Status::Invalid;
    std::string message;
    std::optional<HoroSpace> space;
    std::optional<ReflexivityReport> validation;
    bool q_factorial = false;
    std::optional<FanoEmbedding> embedding;
    std::vector<Ridge> ridge_list;
    std::vector<CurveClass> curves;
    EpsilonWitness epsilon;
    std::optional<PseudoIndexEstimate> iota;
    AdjacencyCheck adjacency;
    std::optional<TheoremReport> theorem;

    int exit_code() const {
        switch (status) {
            case Status::Valid: return 0;
            case Status::Invalid: return 2;
            case Status::Inconsistent: return 3;
        }
        return 3;
    }
};

namespace detail {

inline void check_consistency(Analysis& a) {
    const auto& t = *a.theorem;
    std::vector<std::string> broken;
    if (!t.inequality_holds) broken.push_back("(iota-1)rho <= d");
    if (!t.iota_le_epsilon) broken.push_back("iota <= eps_Q");
    if (!t.epsilon_r_le_sum_a_u) broken.push_back("eps_Q r <= sum a_u");
    if (!t.iota_le_a_noncolor) broken.push_back("iota <= a_alpha for non-colors");
    if (!t.chain_bound_le_d) broken.push_back("sum(a_alpha-1)+n <= d");
    if (!t.rho_le_2d) broken.push_back("rho <= 2d");
    if (t.rho < 1) broken.push_back("rho >= 1");
    if (t.equality != t.conditions.all_numeric()) broken.push_back("equality <=> c1' c2 c3 c4");
    if (t.conditions.c1prime && t.conditions.c2 && !t.conditions.locally_factorial)
        broken.push_back("c1' and c2 => locally factorial");
    if (!a.adjacency.holds) broken.push_back("adjacency of eps_Q minimizers");
    if (t.classification && !t.classification->ok) broken.push_back("classification: " + t.classification->diagnostic);
    if (broken.empty()) return;
    a.status = Status::Inconsistent;
    a.message = "identities violated:";
    for (const auto& b : broken) a.message += " [" + b + "]";
}

}  // namespace detail

inline Analysis analyze_instance(const Instance& inst) {
    Analysis a;
    try {
        a.space = to_space(inst);
        const auto q = to_polytope(inst);
        a.validation = validate_reflexive(*a.space, q);
        if (!a.validation->passed()) {
            a.message = "Q is not G/H-reflexive";
            for (const auto& d : a.validation->diagnostics) a.message += "; " + d;
            return a;
        }
        const auto colors = compute_colors(*a.space, q);
        a.q_factorial = is_q_factorial(*a.space, q, colors);
        a.embedding = build_embedding(*a.space, q);
        const auto& e = *a.embedding;
        a.ridge_list = ridges(e.q);
        a.curves = curve_table(e);
        a.epsilon = epsilon_Q(e);
        a.iota = pseudo_index_estimate(e);
        a.adjacency = check_adjacency(e, a.epsilon);
        a.theorem = analyze(e);
        a.status = Status::Valid;
        detail::check_consistency(a);
    } catch (const InconsistencyError& err) {
        a.status = Status::Inconsistent;
        a.message = err.what();
    } catch (const ValidationError& err) {
        a.status = Status::Invalid;
        a.message = err.what();
    }
    return a;
}

inline std::string superscript(std::size_t k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    const std::string s = std::to_string(k);
    std::string out;
    for (char c : s) out += digits[c - '0'];
    return out;
}

/// "X ≅ P² × P¹"
inline std::string product_text(const std::vector<ProductFactor>& factors) {
    std::string out = "X ≅ ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " × ";
        out += "P" + superscript(factors[i].dim);
    }
    return out;
}

/// Names the first failing equality condition, for non-equality cases.
inline std::string violated_conditions(const EqualityConditions& c) {
    std::vector<std::string> names;
    if (!c.c1prime) names.push_back("c1'");
    if (!c.c2) names.push_back("c2");
    if (!c.c3) names.push_back("c3");
    if (!c.c4) names.push_back("c4");
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out;
}

namespace detail {

inline Json node_list(const HoroSpace& s, const NodeSet& nodes) {
    Json a = Json::array();
    for (auto n : nodes) a.push_back(s.id(n));
    return a;
}

inline Json index_list(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

}  // namespace detail

inline Json report_json(const Analysis& a) {
    using detail::index_list;
    using detail::node_list;
    Json root;
    root["status"] = a.status == Status::Valid ? "valid" : a.status == Status::Invalid ? "invalid" : "inconsistent";
    root["message"] = a.message;
    Json prov;
    prov["lattice_mode"] = a.space ? to_string(a.space->mode) : "unknown";
    prov["direct_mode_unverified_provenance"] = a.space && a.space->mode == LatticeMode::Direct;
    prov["pseudo_index_convention"] = "B-stable: iota_hat = min degree over B-stable curves, iota_X <= iota_hat";
    prov["projective_factor_oracle"] = "trusted: a Picard-number-one factor is labeled P^(iota-1) without re-derivation";
    root["provenance"] = prov;

    if (a.validation) {
        Json v;
        v["origin_interior"] = a.validation->origin_interior;
        v["condition_1"] = a.validation->c1;
        v["condition_2"] = a.validation->c2;
        v["condition_3"] = a.validation->c3;
        v["q_factorial"] = a.q_factorial;
        v["diagnostics"] = a.validation->diagnostics;
        root["validation"] = v;
    }
    if (!a.embedding) return root;
    const auto& e = *a.embedding;
    const auto& s = e.space;

    Json emb;
    emb["n"] = e.n();
    emb["r"] = e.r;
    emb["rho"] = e.rho;
    emb["d"] = e.d;
    emb["marked_roots"] = node_list(s, s.marked);
    emb["colors"] = node_list(s, e.colors);
    Json aa = Json::object();
    for (auto alpha : s.marked) aa[s.id(alpha)] = s.a.at(alpha);
    emb["a_alpha"] = aa;
    Json cr = Json::object();
    for (auto alpha : s.marked) cr[s.id(alpha)] = to_json(s.coroot_restriction.at(alpha));
    emb["coroot_restrictions"] = cr;
    Json verts = Json::array();
    for (std::size_t u = 0; u < e.q.size(); ++u) {
        Json vu;
        vu["u"] = to_json(e.q.vertex(u));
        vu["a_u"] = e.a_u[u];
        vu["root"] = e.vertex_root[u] ? Json(s.id(*e.vertex_root[u])) : Json(nullptr);
        verts.push_back(vu);
    }
    emb["vertices"] = verts;
    Json duals = Json::array();
    for (const auto& f : e.facets) duals.push_back(Json{{"v", to_json(f.normal)}, {"facet", index_list(f.incident)}});
    emb["dual_vertices"] = duals;
    Json orbits = Json::array();
    for (const auto& o : closed_orbits(e))
        orbits.push_back(Json{{"dual_vertex", o.dual_vertex}, {"J_v", node_list(s, o.j)}, {"dim", o.dim}});
    emb["closed_orbits"] = orbits;
    Json fan = Json::array();
    for (const auto& c : colored_fan(e)) fan.push_back(Json{{"facet", c.facet}, {"colors", node_list(s, c.colors)}});
    emb["colored_fan"] = fan;
    emb["locally_factorial"] = is_locally_factorial(e);
    root["embedding"] = emb;

    auto curve_json = [&](const CurveClass& c) {
        Json j;
        if (c.kind == CurveKind::Ridge) {
            j["kind"] = "ridge";
            j["ridge"] = index_list(a.ridge_list.at(c.ridge).incident);
        } else {
            j["kind"] = "schubert";
            j["root"] = s.id(c.alpha);
            j["dual_vertex"] = c.dual_vertex;
        }
        j["degree"] = to_json(c.degree);
        return j;
    };
    Json curves = Json::array();
    for (const auto& c : a.curves) curves.push_back(curve_json(c));
    root["curves"] = curves;

    Json eps;
    eps["value"] = to_json(a.epsilon.value);
    Json mins = Json::array();
    for (const auto& [u, v] : a.epsilon.minimizers) mins.push_back(Json{{"u", u}, {"v", v}});
    eps["minimizers"] = mins;
    eps["adjacency_holds"] = a.adjacency.holds;
    root["epsilon_Q"] = eps;

    if (a.iota) root["pseudo_index"] = Json{{"value", to_json(a.iota->value)}, {"witness", curve_json(a.iota->witness)}};

    if (a.theorem) {
        const auto& t = *a.theorem;
        Json th;
        th["epsilon_Q"] = to_json(t.epsilon);
        th["iota_hat"] = to_json(t.iota_hat);
        th["rho"] = t.rho;
        th["d"] = t.d;
        th["n"] = t.n;
        th["r"] = t.r;
        th["sum_a_u"] = to_json(t.sum_a_u);
        th["sum_a_alpha_minus_1_plus_n"] = to_json(t.chain_bound);
        th["lhs"] = to_json(t.lhs);
        th["inequality_holds"] = t.inequality_holds;
        th["equality"] = t.equality;
        th["chain"] = Json{{"iota_le_epsilon", t.iota_le_epsilon},
                           {"epsilon_r_le_sum_a_u", t.epsilon_r_le_sum_a_u},
                           {"iota_le_a_alpha_noncolor", t.iota_le_a_noncolor},
                           {"sum_a_minus_1_plus_n_le_d", t.chain_bound_le_d},
                           {"rho_le_2d", t.rho_le_2d}};
        const auto& c = t.conditions;
        th["conditions"] = Json{{"c1prime", c.c1prime},       {"c2", c.c2},
                                {"c3", c.c3},                 {"c4", c.c4},
                                {"c4prime", c.c4prime},       {"c4prime_pattern_skipped", c.c4prime_pattern_skipped},
                                {"locally_factorial", c.locally_factorial}};
        th["smooth_by_criterion"] = t.smooth_by_criterion;
        root["theorem"] = th;

        Json cl;
        if (t.classification) {
            const auto& k = *t.classification;
            cl["ok"] = k.ok;
            cl["diagnostic"] = k.diagnostic;
            Json factors = Json::array();
            for (const auto& f : k.factors) {
                Json fj;
                fj["projective_space_dim"] = f.dim;
                if (f.origin == FactorOrigin::FlagFactor) {
                    fj["origin"] = "flag";
                    fj["root"] = s.id(*f.root);
                } else {
                    fj["origin"] = "polytope";
                    fj["vertices"] = index_list(f.vertices);
                    Json gens = Json::array();
                    for (const auto& g : f.sublattice) gens.push_back(to_json(g));
                    fj["sublattice"] = gens;
                }
                factors.push_back(fj);
            }
            cl["factors"] = factors;
            if (k.ok) cl["text"] = product_text(k.factors);
        } else {
            cl["ok"] = false;
            cl["diagnostic"] = "strict inequality: " + t.lhs.str() + " < " + std::to_string(t.d) +
                               "; failing conditions: " + violated_conditions(t.conditions);
        }
        root["classification"] = cl;
    }
    return root;
}

inline std::string report_text(const Analysis& a) {
    std::ostringstream out;
    if (a.status == Status::Invalid) {
        out << "invalid instance: " << a.message << "\n";
        return out.str();
    }
    if (a.status == Status::Inconsistent && !a.theorem) {
        out << "INCONSISTENT: " << a.message << "\n";
        return out.str();
    }
    const auto& e = *a.embedding;
    const auto& t = *a.theorem;
    out << "embedding: n=" << e.n() << " r=" << e.r << " rho=" << e.rho << " d=" << e.d << " colors={";
    bool first = true;
    for (auto c : e.colors) {
        out << (first ? "" : ",") << e.space.id(c);
        first = false;
    }
    out << "}" << (e.space.mode == LatticeMode::Direct ? " [direct mode: provenance unverified]" : "") << "\n";
    out << "curves: " << a.curves.size() << " B-stable classes, degrees";
    for (const auto& c : a.curves) out << " " << c.degree;
    out << "\n";
    out << "eps_Q = " << to_string(t.epsilon) << ", iota_hat = " << t.iota_hat << " (B-stable pseudo-index)\n";
    out << "(iota_hat - 1) * rho = " << t.lhs << (t.equality ? " = " : t.inequality_holds ? " < " : " > ") << "d = "
        << t.d << "\n";
    const auto& c = t.conditions;
    out << "conditions: c1'=" << c.c1prime << " c2=" << c.c2 << " c3=" << c.c3 << " c4=" << c.c4
        << " c4'=" << c.c4prime << (c.c4prime_pattern_skipped ? "(numeric)" : "") << " locally_factorial="
        << c.locally_factorial << "\n";
    if (t.classification) {
        if (t.classification->ok) {
            out << product_text(t.classification->factors) << "\n";
            if (t.smooth_by_criterion) out << "smooth (locally factorial and Dynkin pattern hold)\n";
        } else {
            out << "classification failed: " << t.classification->diagnostic << "\n";
        }
    }
    if (a.status == Status::Inconsistent) out << "INCONSISTENT: " << a.message << "\n";
    return out.str();
}

}  // namespace horofano::io
