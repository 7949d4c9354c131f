#pragma once

// B-stable curves and their anticanonical degrees.
//
// Two families: C_μ for each ridge μ of Q, and C_{α,v} for each marked root α
// that is not a color and each dual vertex v with α̌_M in the cone over F_v.
// Their minimum degree ι̂ bounds the pseudo-index from above.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horofano/error.hpp"
#include "horofano/exactal.hpp"
#include "horofano/horo.hpp"
#include "horofano/polytope.hpp"

namespace horofano {

enum class CurveKind { Ridge, Schubert };

struct CurveClass {
    CurveKind kind;
    std::size_t ridge = 0;       // index into ridges(e.q), for CurveKind::Ridge
    std::size_t alpha = 0;       // marked root, for CurveKind::Schubert
    std::size_t dual_vertex = 0; // v, for CurveKind::Schubert
    Integer degree;
};

struct EpsilonWitness {
    Rational value;
    std::vector<std::pair<std::size_t, std::size_t>> minimizers;  // (u, v), lexicographic
};

/// a_u (1 + ⟨v, u⟩)
inline Rational pair_value(const FanoEmbedding& e, std::size_t u, std::size_t v) {
    return Rational(e.a_u[u]) * (1 + dot(e.facets[v].normal, e.q.vertex(u)));
}

inline EpsilonWitness epsilon_Q(const FanoEmbedding& e) {
    std::optional<Rational> best;
    EpsilonWitness w;
    for (std::size_t u = 0; u < e.q.size(); ++u) {
        for (std::size_t v = 0; v < e.facets.size(); ++v) {
            if (e.on_facet(u, v)) continue;
            const Rational val = pair_value(e, u, v);
            if (!best || val < *best) {
                best = val;
                w.minimizers.clear();
            }
            if (val == *best) w.minimizers.emplace_back(u, v);
        }
    }
    if (!best) throw ValidationError("epsilon_Q: no vertex lies off any facet");
    w.value = *best;
    return w;
}

namespace detail {

inline std::size_t opposite_vertex(const FanoEmbedding& e, const Ridge& mu, std::size_t facet) {
    for (auto u : e.facets[facet].incident)
        if (!std::binary_search(mu.incident.begin(), mu.incident.end(), u)) return u;
    throw InconsistencyError("ridge has no opposite vertex in its facet");
}

// F_v = facets[v_facet]; u is the vertex of the other facet off μ.
inline Rational degree_mu_oriented(const FanoEmbedding& e, const Ridge& mu, std::size_t v_facet, std::size_t other) {
    const std::size_t u = opposite_vertex(e, mu, other);
    const auto chi = ridge_normal(e.q, mu, u);
    const Integer denom = dot(chi, e.weighted_vertex(u));
    return pair_value(e, u, v_facet) / Rational(denom);
}

}  // namespace detail

/// −K_X · C_μ = a_u(1 + ⟨v,u⟩) / ⟨χ_μ, a_u u⟩. Both choices of F_v among the
/// two facets through μ are evaluated and must agree.
inline Integer degree_mu(const FanoEmbedding& e, const Ridge& mu) {
    const Rational one = detail::degree_mu_oriented(e, mu, mu.facet_a, mu.facet_b);
    const Rational two = detail::degree_mu_oriented(e, mu, mu.facet_b, mu.facet_a);
    if (one != two)
        throw InconsistencyError("degree of C_mu depends on the facet chosen: " + to_string(one) + " vs " +
                                 to_string(two));
    if (!is_integral(one) || one <= 0)
        throw ValidationError("degree of C_mu is " + to_string(one) + ", not a positive integer (not a Fano embedding)");
    return numerator(one);
}

/// Dual vertices v whose facet cone contains α̌_M.
inline std::vector<std::size_t> admissible_dual_vertices(const FanoEmbedding& e, std::size_t alpha) {
    std::vector<std::size_t> out;
    const auto target = to_rational(e.space.coroot_restriction.at(alpha));
    for (std::size_t v = 0; v < e.facets.size(); ++v)
        if (cone_membership(e.q, e.facets[v].incident, target)) out.push_back(v);
    return out;
}

/// −K_X · C_{α,v} = a_α + ⟨v, α̌_M⟩
inline Integer degree_alpha_v(const FanoEmbedding& e, std::size_t alpha, std::size_t v) {
    if (!e.space.marked.contains(alpha)) throw ValidationError("degree_alpha_v: root is not marked");
    if (e.colors.contains(alpha))
        throw ValidationError("degree_alpha_v: " + e.space.id(alpha) + " is a color, C_{alpha,v} is not defined");
    const auto target = to_rational(e.space.coroot_restriction.at(alpha));
    if (!cone_membership(e.q, e.facets.at(v).incident, target))
        throw ValidationError("degree_alpha_v: α̌_M of " + e.space.id(alpha) + " is not in the cone over F_v");
    const Rational deg = e.space.a.at(alpha) + dot(e.facets[v].normal, target);
    if (!is_integral(deg) || deg <= 0)
        throw ValidationError("degree of C_{alpha,v} is " + to_string(deg) + ", not a positive integer");
    return numerator(deg);
}

/// Every B-stable curve class with its degree: ridge curves in ridge order,
/// then Schubert curves ordered by (α, v).
inline std::vector<CurveClass> curve_table(const FanoEmbedding& e) {
    std::vector<CurveClass> out;
    const auto rs = ridges(e.q);
    for (std::size_t i = 0; i < rs.size(); ++i) out.push_back({CurveKind::Ridge, i, 0, 0, degree_mu(e, rs[i])});
    for (auto alpha : e.space.marked) {
        if (e.colors.contains(alpha)) continue;
        for (auto v : admissible_dual_vertices(e, alpha))
            out.push_back({CurveKind::Schubert, 0, alpha, v, degree_alpha_v(e, alpha, v)});
    }
    return out;
}

struct PseudoIndexEstimate {
    Integer value;         // ι̂
    CurveClass witness;    // first curve class attaining it
};

inline PseudoIndexEstimate pseudo_index_estimate(const FanoEmbedding& e) {
    const auto table = curve_table(e);
    if (table.empty()) throw ValidationError("pseudo_index_estimate: no B-stable curves");
    auto best = std::min_element(table.begin(), table.end(),
                                 [](const CurveClass& a, const CurveClass& b) { return a.degree < b.degree; });
    return {best->degree, *best};
}

struct AdjacencyCheck {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// For each ε_Q minimizer (u, v): some facet through u meets F_v in a ridge.
inline AdjacencyCheck check_adjacency(const FanoEmbedding& e, const EpsilonWitness& eps) {
    AdjacencyCheck out;
    const std::size_t n = e.n();
    for (const auto& [u, v] : eps.minimizers) {
        bool adjacent = false;
        for (std::size_t f = 0; f < e.facets.size() && !adjacent; ++f) {
            if (f == v || !e.on_facet(u, f)) continue;
            std::size_t shared = 0;
            for (auto x : e.facets[f].incident) shared += e.on_facet(x, v) ? 1 : 0;
            adjacent = shared == n - 1;
        }
        if (!adjacent) {
            out.holds = false;
            out.counterexample = std::make_pair(u, v);
            return out;
        }
    }
    return out;
}

inline AdjacencyCheck check_adjacency(const FanoEmbedding& e) { return check_adjacency(e, epsilon_Q(e)); }

}  // namespace horofano
