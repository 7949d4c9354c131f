#pragma once

// Fano embeddings of a horospherical homogeneous space G/H: the root datum
// with its marked simple roots S\I, the lattice N with the coroot
// restrictions α̌_M, and a G/H-reflexive polytope Q ⊂ N_R.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horofano/error.hpp"
#include "horofano/exactal.hpp"
#include "horofano/polytope.hpp"
#include "horofano/rootsys.hpp"

namespace horofano {

enum class LatticeMode { Direct, Weights };

inline const char* to_string(LatticeMode m) { return m == LatticeMode::Direct ? "direct" : "weights"; }

struct HoroSpace {
    RootSystem rs;
    NodeSet marked;  // S\I
    std::size_t n = 0;
    std::map<std::size_t, LatticeVector> coroot_restriction;  // α -> α̌_M
    LatticeMode mode = LatticeMode::Direct;
    // Basis of M. Entry i < rank(G) is the coefficient of the i-th fundamental
    // weight; trailing entries are characters of the central torus.
    std::optional<std::vector<LatticeVector>> weight_basis;
    std::map<std::size_t, int> a;  // a_α per marked root

    NodeSet levi() const { return complement(rs, marked); }

    /// α̌_M / a_α
    RationalVector color_point(std::size_t alpha) const {
        const auto& r = coroot_restriction.at(alpha);
        RationalVector p(r.begin(), r.end());
        for (auto& x : p) x /= a.at(alpha);
        return p;
    }

    const std::string& id(std::size_t node) const { return rs.simple_root_ids.at(node); }
};

namespace detail {

inline void finish_space(HoroSpace& s) {
    if (s.n == 0)
        throw ValidationError(
            "rank 0 (n = 0) is a flag variety G/P; the polytope formalism does not apply there and the "
            "pseudo-index bound is already known in that case");
    for (auto m : s.marked)
        if (m >= s.rs.rank()) throw ValidationError("marked root index out of range");
    for (auto m : s.marked) {
        auto it = s.coroot_restriction.find(m);
        if (it == s.coroot_restriction.end())
            throw ValidationError("no coroot restriction given for marked root " + s.id(m));
        if (it->second.size() != s.n)
            throw ValidationError("coroot restriction of " + s.id(m) + " has length " +
                                  std::to_string(it->second.size()) + ", expected n = " + std::to_string(s.n));
    }
    for (const auto& [node, vec] : s.coroot_restriction)
        if (!s.marked.contains(node))
            throw ValidationError("coroot restriction given for unmarked root " + s.id(node));
    const auto levi = s.levi();
    for (auto m : s.marked) s.a[m] = a_alpha(s.rs, levi, m);
}

}  // namespace detail

/// Direct mode: α̌_M supplied by the caller. Nothing certifies that the data
/// comes from an actual horospherical subgroup H.
inline HoroSpace make_direct_space(RootSystem rs, NodeSet marked, std::size_t n,
                                   std::map<std::size_t, LatticeVector> restrictions) {
    HoroSpace s;
    s.rs = std::move(rs);
    s.marked = std::move(marked);
    s.n = n;
    s.coroot_restriction = std::move(restrictions);
    s.mode = LatticeMode::Direct;
    detail::finish_space(s);
    return s;
}

/// Weights mode: a basis of M in fundamental-weight coordinates. Checks that
/// M is trivial on the coroots of I, derives α̌_M = (⟨m_1,α̌⟩, …, ⟨m_n,α̌⟩),
/// and compares with any restrictions the caller also supplied.
inline HoroSpace make_weights_space(RootSystem rs, NodeSet marked, std::size_t n, std::vector<LatticeVector> basis,
                                    const std::map<std::size_t, LatticeVector>& supplied = {}) {
    HoroSpace s;
    s.rs = std::move(rs);
    s.marked = std::move(marked);
    s.n = n;
    s.mode = LatticeMode::Weights;
    if (basis.size() != n)
        throw ValidationError("weight basis has " + std::to_string(basis.size()) + " vectors, expected n = " +
                              std::to_string(n));
    const std::size_t rank_g = s.rs.rank();
    for (const auto& m : basis)
        if (m.size() < rank_g || m.size() != basis.front().size())
            throw ValidationError("weight basis vectors must share a length of at least rank(G) = " +
                                  std::to_string(rank_g));
    RationalMatrix rows;
    for (const auto& m : basis) rows.push_back(to_rational(m));
    if (rank(rows) != n) throw ValidationError("weight basis is not linearly independent");
    for (std::size_t i = 0; i < rank_g; ++i) {
        if (s.marked.contains(i)) continue;
        for (std::size_t k = 0; k < n; ++k)
            if (basis[k][i] != 0)
                throw ValidationError("weight basis vector " + std::to_string(k + 1) + " pairs nontrivially with " +
                                      s.rs.simple_root_ids[i] + ", which lies in I");
    }
    for (auto alpha : s.marked) {
        LatticeVector r(n);
        for (std::size_t k = 0; k < n; ++k) r[k] = basis[k][alpha];
        s.coroot_restriction[alpha] = r;
    }
    for (const auto& [node, vec] : supplied) {
        auto it = s.coroot_restriction.find(node);
        if (it == s.coroot_restriction.end())
            throw ValidationError("coroot restriction given for unmarked root " + s.rs.simple_root_ids.at(node));
        if (it->second != vec)
            throw ValidationError("supplied coroot restriction " + to_string(vec) + " of " + s.rs.simple_root_ids[node] +
                                  " disagrees with the weight basis, which gives " + to_string(it->second));
    }
    s.weight_basis = std::move(basis);
    detail::finish_space(s);
    return s;
}

// ---------------------------------------------------------------------------

struct ReflexivityReport {
    bool origin_interior = false;
    bool c1 = false;  // vertices in N ∪ {α̌_M/a_α}, 0 interior
    bool c2 = false;  // Q* is a lattice polytope
    bool c3 = false;  // every α̌_M/a_α lies in Q
    std::vector<std::string> diagnostics;

    bool passed() const { return c1 && c2 && c3; }
};

namespace detail {
inline void check_space_matches(const HoroSpace& space, const RationalPolytope& q) {
    if (q.dim() != space.n)
        throw ValidationError("polytope dimension " + std::to_string(q.dim()) + " differs from lattice rank n = " +
                              std::to_string(space.n));
    for (const auto& [alpha, r] : space.coroot_restriction)
        if (r.size() != space.n) throw ValidationError("coroot restriction of " + space.id(alpha) + " has wrong length");
}
}  // namespace detail

inline ReflexivityReport validate_reflexive(const HoroSpace& space, const RationalPolytope& q) {
    detail::check_space_matches(space, q);
    ReflexivityReport rep;
    rep.origin_interior = q.origin_interior();
    rep.c1 = rep.origin_interior;
    if (!rep.origin_interior) rep.diagnostics.push_back("(1) the origin is not in the interior of Q");
    for (const auto& u : q.vertices()) {
        if (is_integral(u)) continue;
        const bool is_color_point = std::any_of(space.marked.begin(), space.marked.end(),
                                                [&](std::size_t a) { return space.color_point(a) == u; });
        if (!is_color_point) {
            rep.c1 = false;
            rep.diagnostics.push_back("(1) vertex " + to_string(u) + " is neither in N nor of the form α̌_M/a_α");
        }
    }
    if (rep.origin_interior) {
        rep.c2 = true;
        for (const auto& f : facets(q)) {
            if (!is_integral(f.normal)) {
                rep.c2 = false;
                rep.diagnostics.push_back("(2) dual vertex " + to_string(f.normal) + " is not in M");
            }
        }
    } else {
        rep.diagnostics.push_back("(2) Q* is unbounded since the origin is not interior");
    }
    rep.c3 = true;
    for (auto alpha : space.marked) {
        if (contains(q, space.color_point(alpha)) == Location::Outside) {
            rep.c3 = false;
            rep.diagnostics.push_back("(3) " + to_string(space.color_point(alpha)) + " = α̌_M/a_α for " +
                                      space.id(alpha) + " lies outside Q");
        }
    }
    return rep;
}

/// D_X: marked roots whose point α̌_M/a_α lies on the boundary of Q.
inline NodeSet compute_colors(const HoroSpace& space, const RationalPolytope& q) {
    detail::check_space_matches(space, q);
    NodeSet colors;
    for (auto alpha : space.marked) {
        switch (contains(q, space.color_point(alpha))) {
            case Location::Boundary: colors.insert(alpha); break;
            case Location::Interior: break;
            case Location::Outside:
                throw ValidationError("α̌_M/a_α for " + space.id(alpha) + " lies outside Q (Q is not G/H-reflexive)");
        }
    }
    return colors;
}

/// Q simplicial, and the color points are pairwise distinct vertices of Q.
inline bool is_q_factorial(const HoroSpace& space, const RationalPolytope& q, const NodeSet& colors) {
    if (!is_simplicial(q)) return false;
    std::vector<RationalVector> seen;
    for (auto alpha : colors) {
        const auto p = space.color_point(alpha);
        if (!q.index_of(p)) return false;
        if (std::find(seen.begin(), seen.end(), p) != seen.end()) return false;
        seen.push_back(p);
    }
    return true;
}

struct FanoEmbedding {
    HoroSpace space;
    RationalPolytope q;
    RationalPolytope dual;      // vertex j is the normal of facets[j]
    std::vector<Facet> facets;  // F_v for v = dual.vertex(j)
    NodeSet colors;
    std::vector<int> a_u;
    std::vector<std::optional<std::size_t>> vertex_root;  // u = α̌_M/a_α
    std::size_t r = 0;  // #V(Q) = n + r
    long rho = 0;
    std::size_t d = 0;

    std::size_t n() const { return space.n; }

    bool on_facet(std::size_t u, std::size_t v) const {
        const auto& inc = facets[v].incident;
        return std::binary_search(inc.begin(), inc.end(), u);
    }

    /// a_u·u, always a lattice vector.
    LatticeVector weighted_vertex(std::size_t u) const {
        auto w = scaled(q.vertex(u), Rational(a_u[u]));
        if (!is_integral(w)) throw InconsistencyError("a_u·u is not a lattice vector");
        LatticeVector out;
        for (const auto& x : w) out.push_back(numerator(x));
        return out;
    }
};

inline FanoEmbedding build_embedding(const HoroSpace& space, const RationalPolytope& q) {
    const auto rep = validate_reflexive(space, q);
    if (!rep.passed()) {
        std::string msg = "Q is not G/H-reflexive:";
        for (const auto& d : rep.diagnostics) msg += "\n  " + d;
        throw ValidationError(msg);
    }
    auto colors = compute_colors(space, q);
    if (!is_q_factorial(space, q, colors))
        throw ValidationError(is_simplicial(q) ? "X is not Q-factorial: the color points are not distinct vertices of Q"
                                               : "X is not Q-factorial: Q is not simplicial");
    FanoEmbedding e{space, q, dual_polytope(q), facets(q), std::move(colors), {}, {}, 0, 0, 0};
    e.a_u.assign(q.size(), 1);
    e.vertex_root.assign(q.size(), std::nullopt);
    for (auto alpha : space.marked) {
        if (auto idx = q.index_of(space.color_point(alpha))) {
            e.a_u[*idx] = space.a.at(alpha);
            e.vertex_root[*idx] = alpha;
        }
    }
    e.r = q.size() - space.n;
    e.rho = static_cast<long>(e.r) + static_cast<long>(space.marked.size()) - static_cast<long>(e.colors.size());
    e.d = dim_flag(space.rs, space.levi()) + space.n;
    return e;
}

struct ClosedOrbit {
    std::size_t dual_vertex;
    NodeSet j;          // J_v
    std::size_t dim;    // dim G/P_{I ∪ J_v}
};

inline std::vector<ClosedOrbit> closed_orbits(const FanoEmbedding& e) {
    std::vector<ClosedOrbit> out;
    const auto levi = e.space.levi();
    for (std::size_t v = 0; v < e.facets.size(); ++v) {
        ClosedOrbit o{v, {}, 0};
        for (auto alpha : e.space.marked)
            if (dot(e.facets[v].normal, e.space.color_point(alpha)) == -1) o.j.insert(alpha);
        NodeSet parabolic = levi;
        parabolic.insert(o.j.begin(), o.j.end());
        o.dim = dim_flag(e.space.rs, parabolic);
        out.push_back(std::move(o));
    }
    return out;
}

/// Every facet's weighted vertices a_{u_i}u_i form a basis of N.
inline bool is_locally_factorial(const FanoEmbedding& e) {
    for (const auto& f : e.facets) {
        std::vector<LatticeVector> basis;
        for (auto u : f.incident) basis.push_back(e.weighted_vertex(u));
        if (abs(det_lattice(basis)) != 1) return false;
    }
    return true;
}

struct ColoredCone {
    std::size_t facet;
    NodeSet colors;  // D_F
};

inline std::vector<ColoredCone> colored_fan(const FanoEmbedding& e) {
    std::vector<ColoredCone> out;
    for (std::size_t f = 0; f < e.facets.size(); ++f) {
        ColoredCone cone{f, {}};
        for (auto alpha : e.colors)
            if (cone_membership(e.q, e.facets[f].incident, to_rational(e.space.coroot_restriction.at(alpha))))
                cone.colors.insert(alpha);
        out.push_back(std::move(cone));
    }
    return out;
}

}  // namespace horofano
