#pragma once

// The bound (ι − 1)ρ ≤ d on a concrete embedding, the conditions that are
// equivalent to equality, and the decomposition of an equality case into a
// product of projective spaces.
//
// ι is replaced throughout by ι̂, the minimum degree over B-stable curve
// classes. ι ≤ ι̂ always, so (ι̂ − 1)ρ ≤ d implies the bound for ι.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "horofano/curves.hpp"
#include "horofano/error.hpp"
#include "horofano/exactal.hpp"
#include "horofano/horo.hpp"
#include "horofano/rootsys.hpp"

namespace horofano {

struct EqualityConditions {
    bool c1prime = false;  // every a_u(1 + ⟨v,u⟩) is 0 or ε_Q
    bool c2 = false;       // ι̂ = ε_Q
    bool c3 = false;       // ι̂ = a_α for every non-color marked α
    bool c4 = false;       // Σ(a_α − 1) + n = d
    bool c4prime = false;  // Dynkin pattern
    bool c4prime_pattern_skipped = false;
    bool locally_factorial = false;

    bool all_numeric() const { return c1prime && c2 && c3 && c4; }
};

enum class FactorOrigin { FlagFactor, PolytopeFactor };

struct ProductFactor {
    std::size_t dim;  // the factor is P^dim
    FactorOrigin origin;
    std::optional<std::size_t> root;       // FlagFactor: α with α̌_M = 0
    std::vector<std::size_t> vertices;     // PolytopeFactor: f_j and the e_k with φ(k) = j
    std::vector<LatticeVector> sublattice; // PolytopeFactor: generators of M_j
};

struct Classification {
    bool ok = false;
    std::string diagnostic;
    std::vector<ProductFactor> factors;
};

struct TheoremReport {
    Rational epsilon;
    Integer iota_hat;
    long rho = 0;
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t r = 0;
    Integer sum_a_u;
    Integer chain_bound;  // Σ_{α∈S\I}(a_α − 1) + n
    Integer lhs;          // (ι̂ − 1)ρ
    bool inequality_holds = false;
    bool equality = false;

    // intermediate steps of the chain
    bool iota_le_epsilon = false;       // ι̂ ≤ ε_Q
    bool epsilon_r_le_sum_a_u = false;  // ε_Q·r ≤ Σ a_u
    bool iota_le_a_noncolor = false;    // ι̂ ≤ a_α for non-colors
    bool chain_bound_le_d = false;      // Σ(a_α − 1) + n ≤ d
    bool rho_le_2d = false;

    EqualityConditions conditions;
    bool smooth_by_criterion = false;  // locally factorial and 4′, equality case only
    std::optional<Classification> classification;

    bool consistent() const {
        return inequality_holds && iota_le_epsilon && epsilon_r_le_sum_a_u && iota_le_a_noncolor &&
               chain_bound_le_d && rho_le_2d && rho >= 1 && equality == conditions.all_numeric();
    }
};

inline TheoremReport verify_inequality(const FanoEmbedding& e) {
    TheoremReport rep;
    const auto eps = epsilon_Q(e);
    const auto iota = pseudo_index_estimate(e);
    rep.epsilon = eps.value;
    rep.iota_hat = iota.value;
    rep.rho = e.rho;
    rep.d = e.d;
    rep.n = e.n();
    rep.r = e.r;
    rep.sum_a_u = 0;
    for (int a : e.a_u) rep.sum_a_u += a;
    rep.chain_bound = static_cast<long>(e.n());
    for (auto alpha : e.space.marked) rep.chain_bound += e.space.a.at(alpha) - 1;
    rep.lhs = (rep.iota_hat - 1) * rep.rho;
    rep.inequality_holds = rep.lhs <= static_cast<long>(rep.d);
    rep.equality = rep.lhs == static_cast<long>(rep.d);

    rep.iota_le_epsilon = Rational(rep.iota_hat) <= rep.epsilon;
    rep.epsilon_r_le_sum_a_u = rep.epsilon * static_cast<long>(rep.r) <= Rational(rep.sum_a_u);
    rep.iota_le_a_noncolor = true;
    for (auto alpha : e.space.marked)
        if (!e.colors.contains(alpha) && rep.iota_hat > e.space.a.at(alpha)) rep.iota_le_a_noncolor = false;
    rep.chain_bound_le_d = rep.chain_bound <= static_cast<long>(rep.d);
    rep.rho_le_2d = rep.rho <= 2 * static_cast<long>(rep.d);
    return rep;
}

inline EqualityConditions check_equality_conditions(const FanoEmbedding& e, const TheoremReport& rep) {
    EqualityConditions c;
    c.c1prime = true;
    for (std::size_t u = 0; u < e.q.size() && c.c1prime; ++u)
        for (std::size_t v = 0; v < e.facets.size(); ++v) {
            const Rational val = pair_value(e, u, v);
            if (val != 0 && val != rep.epsilon) {
                c.c1prime = false;
                break;
            }
        }
    c.c2 = Rational(rep.iota_hat) == rep.epsilon;
    c.c3 = true;
    for (auto alpha : e.space.marked)
        if (!e.colors.contains(alpha) && rep.iota_hat != e.space.a.at(alpha)) c.c3 = false;
    c.c4 = rep.chain_bound == static_cast<long>(rep.d);
    const auto diagram = check_condition4_prime(e.space.rs, e.space.marked);
    c.c4prime = diagram.holds;
    c.c4prime_pattern_skipped = diagram.pattern_skipped;
    c.locally_factorial = is_locally_factorial(e);
    return c;
}

namespace detail {

// dim G_c/P_{I∩c} for one Dynkin component c.
inline std::size_t component_flag_dim(const RootSystem& rs, std::size_t component, const NodeSet& levi) {
    std::size_t count = 0;
    for (const auto& beta : rs.positive_roots) {
        bool inside = true, off_levi = false;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == 0) continue;
            inside = inside && rs.component_of[j] == component;
            off_levi = off_levi || !levi.contains(j);
        }
        if (inside && off_levi) ++count;
    }
    return count;
}

struct StepTwo {
    std::string failure;
    std::vector<ProductFactor> factors;
};

// The product decomposition read off from the facet F_v.
inline StepTwo decompose_at(const FanoEmbedding& e, const TheoremReport& rep, std::size_t v) {
    StepTwo out;
    const std::size_t n = e.n();
    const auto& ev = e.facets[v].incident;  // e_1..e_n
    std::vector<std::size_t> fv;            // f_1..f_r
    for (std::size_t u = 0; u < e.q.size(); ++u)
        if (!e.on_facet(u, v)) fv.push_back(u);
    const std::string at = " (at dual vertex " + to_string(e.facets[v].normal) + ")";

    // φ(k): the vertex f_j completing e_1..ê_k..e_n to another facet F_k
    std::vector<std::size_t> phi(n), facet_k(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<std::size_t> other;
        for (std::size_t g = 0; g < e.facets.size(); ++g) {
            if (g == v) continue;
            bool contains_ridge = true;
            for (std::size_t i = 0; i < n; ++i)
                if (i != k && !e.on_facet(ev[i], g)) contains_ridge = false;
            if (contains_ridge) {
                if (other) {
                    out.failure = "phi is not well defined: the ridge opposite e_k lies on three facets" + at;
                    return out;
                }
                other = g;
            }
        }
        if (!other) {
            out.failure = "phi is not well defined: no second facet through the ridge opposite e_k" + at;
            return out;
        }
        facet_k[k] = *other;
        const auto& inc = e.facets[*other].incident;
        for (auto u : inc)
            if (!e.on_facet(u, v)) phi[k] = static_cast<std::size_t>(std::find(fv.begin(), fv.end(), u) - fv.begin());
    }

    // dual basis e_k^*: rows of the inverse of the matrix with columns e_k
    RationalMatrix basis(n, RationalVector(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) basis[r][c] = e.q.vertex(ev[c])[r];
    const auto dual_basis = inverse(basis);
    if (!dual_basis) {
        out.failure = "facet vertices are linearly dependent" + at;
        return out;
    }
    RationalVector minus_sum(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) minus_sum = minus_sum - (*dual_basis)[k];
    if (minus_sum != e.facets[v].normal) {
        out.failure = "v differs from -(e_1^* + ... + e_n^*)" + at;
        return out;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto predicted = e.facets[v].normal + scaled((*dual_basis)[k], rep.epsilon / e.a_u[ev[k]]);
        if (predicted != e.facets[facet_k[k]].normal) {
            out.failure = "dual vertex v_k = " + to_string(e.facets[facet_k[k]].normal) +
                          " differs from v + (eps/a_{e_k}) e_k^* = " + to_string(predicted) + at;
            return out;
        }
    }

    std::vector<std::vector<std::size_t>> preimage(fv.size());
    for (std::size_t k = 0; k < n; ++k) preimage[phi[k]].push_back(k);
    for (std::size_t j = 0; j < fv.size(); ++j) {
        RationalVector rel = scaled(e.q.vertex(fv[j]), Rational(e.a_u[fv[j]]));
        for (auto k : preimage[j]) rel = rel + scaled(e.q.vertex(ev[k]), Rational(e.a_u[ev[k]]));
        if (!is_zero(rel)) {
            out.failure = "vertex relation a_f f + sum a_e e = 0 fails for f = " + to_string(e.q.vertex(fv[j])) + at;
            return out;
        }
    }

    std::vector<std::vector<LatticeVector>> summands;
    for (std::size_t j = 0; j < fv.size(); ++j) {
        IntegerMatrix rows;
        for (std::size_t k = 0; k < n; ++k)
            if (phi[k] != j) rows.push_back(e.weighted_vertex(ev[k]));
        auto gens = integer_kernel(rows, n);
        if (gens.size() != preimage[j].size()) {
            out.failure = "rank of M_j differs from the size of phi^{-1}(j)" + at;
            return out;
        }
        summands.push_back(std::move(gens));
    }
    if (!sublattice_direct_sum(summands, n)) {
        out.failure = "M is not the direct sum of the sublattices M_j" + at;
        return out;
    }

    const auto levi = e.space.levi();
    for (std::size_t j = 0; j < fv.size(); ++j) {
        ProductFactor pf{0, FactorOrigin::PolytopeFactor, std::nullopt, {fv[j]}, summands[j]};
        for (auto k : preimage[j]) pf.vertices.push_back(ev[k]);
        std::sort(pf.vertices.begin(), pf.vertices.end());
        std::set<std::size_t> comps;
        for (auto u : pf.vertices)
            if (e.vertex_root[u]) comps.insert(e.space.rs.component_of[*e.vertex_root[u]]);
        pf.dim = summands[j].size();
        for (auto c : comps) pf.dim += component_flag_dim(e.space.rs, c, levi);
        if (Integer(pf.dim) != rep.iota_hat - 1) {
            out.failure = "factor through f = " + to_string(e.q.vertex(fv[j])) + " has dimension " +
                          std::to_string(pf.dim) + ", expected iota - 1" + at;
            return out;
        }
        out.factors.push_back(std::move(pf));
    }
    return out;
}

}  // namespace detail

/// Splits an equality case into ρ factors P^{ι̂−1}. Flag factors come from
/// marked roots with α̌_M = 0; polytope factors from the map φ at a facet F_v.
/// The decomposition is computed at every dual vertex and must not depend on
/// the choice. That each polytope factor (Picard number 1) is a projective
/// space is a known classification result and is not re-derived here.
inline Classification classify_equality(const FanoEmbedding& e, const TheoremReport& rep) {
    Classification out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.diagnostic = std::move(msg);
        out.factors.clear();
        return out;
    };
    if (!rep.equality) return fail("not an equality case");
    const auto& c = rep.conditions;
    if (!c.all_numeric()) return fail("equality holds but a numeric equality condition fails");

    const auto levi = e.space.levi();
    for (auto alpha : e.space.marked) {
        if (!is_zero(e.space.coroot_restriction.at(alpha))) {
            if (!e.colors.contains(alpha))
                return fail("marked root " + e.space.id(alpha) + " has nonzero restriction but is not a color");
            continue;
        }
        if (rep.iota_hat != e.space.a.at(alpha))
            return fail("a_alpha differs from iota for " + e.space.id(alpha) + " with zero restriction");
        const std::size_t dim = detail::component_flag_dim(e.space.rs, e.space.rs.component_of[alpha], levi);
        if (Integer(dim) != rep.iota_hat - 1)
            return fail("G/P(omega) for " + e.space.id(alpha) + " has dimension " + std::to_string(dim) +
                        ", expected a_alpha - 1");
        out.factors.push_back({dim, FactorOrigin::FlagFactor, alpha, {}, {}});
    }

    std::optional<std::set<std::vector<std::size_t>>> partition;
    std::vector<ProductFactor> polytope_factors;
    for (std::size_t v = 0; v < e.facets.size(); ++v) {
        auto step = detail::decompose_at(e, rep, v);
        if (!step.failure.empty()) return fail(step.failure);
        std::set<std::vector<std::size_t>> parts;
        for (const auto& f : step.factors) parts.insert(f.vertices);
        if (!partition) {
            partition = parts;
            polytope_factors = std::move(step.factors);
        } else if (*partition != parts) {
            return fail("the decomposition depends on the chosen dual vertex");
        }
    }
    std::sort(polytope_factors.begin(), polytope_factors.end(),
              [](const ProductFactor& a, const ProductFactor& b) { return a.vertices < b.vertices; });
    out.factors.insert(out.factors.end(), polytope_factors.begin(), polytope_factors.end());

    std::size_t total = 0;
    for (const auto& f : out.factors) total += f.dim;
    if (static_cast<long>(out.factors.size()) != rep.rho) return fail("number of factors differs from rho");
    if (total != rep.d) return fail("factor dimensions do not add up to d");
    out.ok = true;
    return out;
}

/// verify_inequality + conditions + (for equality cases) classification.
inline TheoremReport analyze(const FanoEmbedding& e) {
    auto rep = verify_inequality(e);
    rep.conditions = check_equality_conditions(e, rep);
    if (rep.equality) {
        rep.smooth_by_criterion = rep.conditions.locally_factorial && rep.conditions.c4prime;
        rep.classification = classify_equality(e, rep);
    }
    return rep;
}

}  // namespace horofano
