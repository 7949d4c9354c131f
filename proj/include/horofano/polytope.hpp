#pragma once

// Exact convex geometry for full-dimensional rational polytopes.
//
// Facets are found by brute force over n-subsets of the vertex list, which is
// fine at the sizes Q-factorial Fano instances reach (at most 3n vertices).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horofano/error.hpp"
#include "horofano/exactal.hpp"

namespace horofano {

/// {x : ⟨normal, x⟩ >= offset}, scaled so that offset ∈ {-1, 0, 1}.
struct Halfspace {
    RationalVector normal;
    Rational offset;
    std::vector<std::size_t> incident;  // vertex indices on the boundary hyperplane
};

/// A facet of a polytope with 0 in its interior: ⟨normal, u⟩ = -1 on the
/// incident vertices and > -1 on all others.
struct Facet {
    RationalVector normal;
    std::vector<std::size_t> incident;
};

/// An (n-2)-face of a simplicial polytope, shared by exactly two facets.
struct Ridge {
    std::vector<std::size_t> incident;  // n-1 vertex indices
    std::size_t facet_a;
    std::size_t facet_b;
};

enum class Location { Interior, Boundary, Outside };

inline const char* to_string(Location l) {
    switch (l) {
        case Location::Interior: return "interior";
        case Location::Boundary: return "boundary";
        case Location::Outside: return "outside";
    }
    return "?";
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Visits every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
        f(idx);
    } while (k > 0 && next_combination(idx, n));
}

}  // namespace detail

/// Full-dimensional polytope given by its vertices, kept in input order after
/// removing repeats. Construction rejects sets that do not span, and points
/// that are not vertices of their convex hull.
class RationalPolytope {
public:
    RationalPolytope(std::size_t dim, const std::vector<RationalVector>& points) : dim_(dim) {
        if (dim == 0) throw ValidationError("polytope: dimension must be positive");
        for (const auto& p : points) {
            if (p.size() != dim)
                throw ValidationError("polytope: point " + to_string(p) + " has wrong dimension");
            if (std::find(vertices_.begin(), vertices_.end(), p) == vertices_.end()) vertices_.push_back(p);
        }
        if (vertices_.size() < dim + 1) throw ValidationError("polytope: vertices do not span an n-dimensional polytope");
        RationalMatrix diffs;
        for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(vertices_[i] - vertices_[0]);
        if (rank(diffs) != dim) throw ValidationError("polytope: vertices do not span an n-dimensional polytope");
        compute_halfspaces();
        check_vertices();
    }

    std::size_t dim() const { return dim_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const RationalVector& vertex(std::size_t i) const { return vertices_.at(i); }

    /// Facet-defining halfspaces, sorted by normal.
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

    std::optional<std::size_t> index_of(const RationalVector& p) const {
        auto it = std::find(vertices_.begin(), vertices_.end(), p);
        if (it == vertices_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    bool origin_interior() const {
        return std::all_of(halfspaces_.begin(), halfspaces_.end(), [](const Halfspace& h) { return h.offset < 0; });
    }

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }

private:
    void compute_halfspaces() {
        std::map<std::pair<RationalVector, Rational>, Halfspace> found;
        detail::for_each_subset(vertices_.size(), dim_, [&](const std::vector<std::size_t>& idx) {
            // hyperplane c·x = b through the chosen points: null space of [u_i | -1]
            RationalMatrix m;
            for (auto i : idx) {
                RationalVector row = vertices_[i];
                row.push_back(Rational(-1));
                m.push_back(std::move(row));
            }
            const auto ns = null_space(m, dim_ + 1);
            if (ns.size() != 1) return;
            RationalVector c(ns[0].begin(), ns[0].end() - 1);
            Rational b = ns[0].back();
            if (is_zero(c)) return;
            bool above = false, below = false;
            for (const auto& u : vertices_) {
                const Rational s = dot(c, u) - b;
                above = above || s > 0;
                below = below || s < 0;
            }
            if (above && below) return;
            if (below) {
                for (auto& x : c) x = -x;
                b = -b;
            }
            // canonical scaling: offset in {-1, 0, 1}, or primitive normal when 0
            if (b != 0) {
                const Rational k = b < 0 ? Rational(-b) : b;
                for (auto& x : c) x /= k;
                b /= k;
            } else {
                const auto prim = primitive(c);
                c = to_rational(prim);
            }
            auto key = std::make_pair(c, b);
            if (found.contains(key)) return;
            Halfspace h{c, b, {}};
            for (std::size_t i = 0; i < vertices_.size(); ++i)
                if (dot(c, vertices_[i]) == b) h.incident.push_back(i);
            found.emplace(std::move(key), std::move(h));
        });
        for (auto& [key, h] : found) halfspaces_.push_back(std::move(h));
    }

    void check_vertices() const {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            RationalMatrix normals;
            for (const auto& h : halfspaces_)
                if (std::binary_search(h.incident.begin(), h.incident.end(), i)) normals.push_back(h.normal);
            if (rank(normals) != dim_)
                throw ValidationError("polytope: point " + to_string(vertices_[i]) +
                                      " is not a vertex of the convex hull of the others");
        }
    }

    std::size_t dim_;
    std::vector<RationalVector> vertices_;
    std::vector<Halfspace> halfspaces_;
};

/// Facets at level -1, sorted lexicographically by normal.
inline std::vector<Facet> facets(const RationalPolytope& p) {
    if (!p.origin_interior()) throw ValidationError("polytope: the origin is not an interior point");
    std::vector<Facet> out;
    for (const auto& h : p.halfspaces()) out.push_back({h.normal, h.incident});
    return out;
}

/// The polar dual {v : ⟨v,u⟩ >= -1 for all u ∈ P}; its vertices are the facet normals.
inline RationalPolytope dual_polytope(const RationalPolytope& p) {
    std::vector<RationalVector> normals;
    for (const auto& f : facets(p)) normals.push_back(f.normal);
    return RationalPolytope(p.dim(), normals);
}

inline Location contains(const RationalPolytope& p, const RationalVector& point) {
    Location loc = Location::Interior;
    for (const auto& h : p.halfspaces()) {
        const Rational s = dot(h.normal, point) - h.offset;
        if (s < 0) return Location::Outside;
        if (s == 0) loc = Location::Boundary;
    }
    return loc;
}

inline bool is_simplicial(const RationalPolytope& p) {
    return std::all_of(p.halfspaces().begin(), p.halfspaces().end(),
                       [&](const Halfspace& h) { return h.incident.size() == p.dim(); });
}

/// Ridges of a simplicial polytope, in lexicographic order of their vertex
/// sets. For n = 1 the empty face is the single ridge joining the two facets.
inline std::vector<Ridge> ridges(const RationalPolytope& p) {
    if (!is_simplicial(p)) throw ValidationError("ridges: polytope is not simplicial");
    const auto& hs = p.halfspaces();
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> owners;
    for (std::size_t f = 0; f < hs.size(); ++f) {
        const auto& inc = hs[f].incident;
        for (std::size_t skip = 0; skip < inc.size(); ++skip) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < inc.size(); ++i)
                if (i != skip) face.push_back(inc[i]);
            owners[face].push_back(f);
        }
    }
    std::vector<Ridge> out;
    for (const auto& [face, fs] : owners) {
        if (fs.size() != 2) throw InconsistencyError("ridges: a ridge does not lie on exactly two facets");
        out.push_back({face, fs[0], fs[1]});
    }
    return out;
}

/// χ_μ: the primitive lattice vector vanishing on the ridge's vertices and
/// positive on vertex u.
inline LatticeVector ridge_normal(const RationalPolytope& p, const Ridge& mu, std::size_t u) {
    RationalMatrix m;
    for (auto i : mu.incident) m.push_back(p.vertex(i));
    const auto ns = null_space(m, p.dim());
    if (ns.size() != 1) throw ValidationError("ridge_normal: ridge vertices have degenerate span");
    auto chi = ns[0];
    const Rational s = dot(chi, p.vertex(u));
    if (s == 0) throw ValidationError("ridge_normal: vertex lies in the span of the ridge");
    if (s < 0)
        for (auto& x : chi) x = -x;
    return primitive(chi);
}

/// Coefficients λ >= 0 with point = Σ λ_i u_i over the facet's vertices, or
/// nullopt when the point is outside the cone they generate.
inline std::optional<RationalVector> cone_membership(const RationalPolytope& p, const std::vector<std::size_t>& facet,
                                                     const RationalVector& point) {
    const std::size_t n = p.dim();
    if (facet.size() != n) throw ValidationError("cone_membership: facet is not simplicial");
    RationalMatrix a(n, RationalVector(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) a[r][c] = p.vertex(facet[c])[r];
    auto lambda = solve_linear(a, point);
    if (!lambda) return std::nullopt;
    for (const auto& x : *lambda)
        if (x < 0) return std::nullopt;
    return lambda;
}

}  // namespace horofano
