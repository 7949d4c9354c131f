#pragma once

// Brute-force enumeration of reflexive lattice polytopes with vertices in a
// box [-B, B]^dim (dim 2 or 3), up to GL(dim, Z).
//
// The search walks vertex subsets in index order and prunes any subset that is
// not in convex position or whose hull has a nonzero interior lattice point;
// both properties pass to subsets, so no reflexive polytope is missed. The
// pruning geometry runs on 64-bit integers: with |coordinates| <= 4 and
// dim <= 3 every quantity stays below 10^4. Each survivor is re-verified
// exactly by the library pipeline.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "horofano/error.hpp"
#include "horofano/exactal.hpp"
#include "horofano/polytope.hpp"

namespace horofano::toric {

using Point = std::array<std::int64_t, 3>;  // unused coordinates are 0

struct EnumOptions {
    int dim = 2;
    int box = 1;
    bool simplicial_only = true;
    unsigned threads = 1;
};

struct EnumeratedClass {
    std::vector<LatticeVector> canonical;  // canonical vertex list
    std::size_t raw_count = 0;             // vertex sets found in this class (after symmetry breaking)
};

/// GL(dim, Z) normal form of a full-dimensional lattice polytope. For every
/// facet and every ordering of dim linearly independent vertices on it, the
/// unique unimodular U putting those columns in Hermite normal form is applied
/// to all vertices; the remaining vertices are sorted. The lexicographically
/// smallest result is the normal form.
inline std::vector<LatticeVector> canonical_form(std::size_t dim, const std::vector<LatticeVector>& vertices,
                                                 const std::vector<std::vector<std::size_t>>& facet_incidences) {
    std::vector<LatticeVector> best;
    for (const auto& facet : facet_incidences) {
        // ordered dim-tuples of distinct facet vertices
        std::vector<std::size_t> pick(dim, 0);
        const std::size_t k = facet.size();
        std::function<void(std::size_t, std::vector<bool>&)> rec = [&](std::size_t depth, std::vector<bool>& used) {
            if (depth == dim) {
                IntegerMatrix b(dim, LatticeVector(dim));
                for (std::size_t c = 0; c < dim; ++c)
                    for (std::size_t r = 0; r < dim; ++r) b[r][c] = vertices[facet[pick[c]]][r];
                if (det_lattice(b) == 0) return;
                const auto h = hermite_normal_form(b, dim);
                std::vector<LatticeVector> head(dim, LatticeVector(dim)), rest;
                for (std::size_t c = 0; c < dim; ++c)
                    for (std::size_t r = 0; r < dim; ++r) head[c][r] = h.form[r][c];
                std::vector<bool> in_head(vertices.size(), false);
                for (std::size_t c = 0; c < dim; ++c) in_head[facet[pick[c]]] = true;
                for (std::size_t i = 0; i < vertices.size(); ++i) {
                    if (in_head[i]) continue;
                    LatticeVector w(dim, Integer(0));
                    for (std::size_t r = 0; r < dim; ++r)
                        for (std::size_t c = 0; c < dim; ++c) w[r] += h.transform[r][c] * vertices[i][c];
                    rest.push_back(std::move(w));
                }
                std::sort(rest.begin(), rest.end());
                head.insert(head.end(), rest.begin(), rest.end());
                if (best.empty() || head < best) best = std::move(head);
                return;
            }
            for (std::size_t i = 0; i < k; ++i) {
                if (used[i]) continue;
                used[i] = true;
                pick[depth] = i;
                rec(depth + 1, used);
                used[i] = false;
            }
        };
        std::vector<bool> used(k, false);
        rec(0, used);
    }
    return best;
}

inline std::vector<LatticeVector> canonical_form(const RationalPolytope& p) {
    std::vector<LatticeVector> verts;
    for (const auto& v : p.vertices()) {
        if (!is_integral(v)) throw Error("canonical_form: polytope is not a lattice polytope");
        LatticeVector lv;
        for (const auto& x : v) lv.push_back(numerator(x));
        verts.push_back(std::move(lv));
    }
    std::vector<std::vector<std::size_t>> incidences;
    for (const auto& h : p.halfspaces()) incidences.push_back(h.incident);
    return canonical_form(p.dim(), verts, incidences);
}

namespace detail {

struct Plane {
    Point normal;
    std::int64_t offset;                // normal·x >= offset on the hull
    std::vector<std::size_t> incident;  // positions within the subset
};

inline std::int64_t dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Point minus(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Point cross(const Point& u, const Point& w) {
    return {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
}

inline std::int64_t det3(const Point& a, const Point& b, const Point& c) { return dot(a, cross(b, c)); }

// Orbit label of a point under the signed coordinate permutations.
inline Point orbit_label(const Point& p) {
    Point a{std::abs(p[0]), std::abs(p[1]), std::abs(p[2])};
    std::sort(a.begin(), a.end());
    return a;
}

class Search {
public:
    explicit Search(const EnumOptions& opt) : opt_(opt) {
        const int b = opt.box;
        const int zmax = opt.dim == 3 ? b : 0;
        for (int x = -b; x <= b; ++x)
            for (int y = -b; y <= b; ++y)
                for (int z = -zmax; z <= zmax; ++z) {
                    const Point p{x, y, z};
                    if (x == 0 && y == 0 && z == 0) continue;
                    box_points_.push_back(p);
                    if (std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z)) == 1) candidates_.push_back(p);
                }
        // Orbits of the box symmetry group form contiguous blocks, so every
        // subset can be moved to one whose first element opens its block.
        std::stable_sort(candidates_.begin(), candidates_.end(), [](const Point& a, const Point& b) {
            return std::make_pair(orbit_label(a), a) < std::make_pair(orbit_label(b), b);
        });
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (i == 0 || orbit_label(candidates_[i]) != orbit_label(candidates_[i - 1])) roots_.push_back(i);
    }

    /// Indices that start a search branch.
    const std::vector<std::size_t>& roots() const { return roots_; }
    const std::vector<Point>& candidates() const { return candidates_; }

    /// Reflexive subsets whose smallest candidate index is `first`.
    std::vector<std::vector<std::size_t>> run_branch(std::size_t first) {
        found_.clear();
        std::vector<std::size_t> subset{first};
        std::vector<Point> pts{candidates_[first]};
        dfs(subset, pts, {});
        return std::move(found_);
    }

    /// Facet planes of conv(pts); empty when pts is not full-dimensional.
    std::vector<Plane> hull(const std::vector<Point>& pts) const {
        std::vector<Plane> planes;
        const std::size_t m = pts.size();
        if (opt_.dim == 2) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) add_plane(planes, pts, i, j, j);
        } else {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    for (std::size_t k = j + 1; k < m; ++k) add_plane(planes, pts, i, j, k);
        }
        return planes;
    }

private:
    // Adds the plane through pts[i], pts[j] (and pts[k] in 3D) if it supports pts.
    void add_plane(std::vector<Plane>& planes, const std::vector<Point>& pts, std::size_t i, std::size_t j,
                   std::size_t k) const {
        Point normal;
        if (opt_.dim == 2) {
            normal = {pts[i][1] - pts[j][1], pts[j][0] - pts[i][0], 0};
        } else {
            normal = cross(minus(pts[j], pts[i]), minus(pts[k], pts[i]));
        }
        const std::int64_t g = std::gcd(std::gcd(std::abs(normal[0]), std::abs(normal[1])), std::abs(normal[2]));
        if (g == 0) return;
        for (auto& x : normal) x /= g;
        std::int64_t off = dot(normal, pts[i]);
        bool above = false, below = false;
        for (const auto& p : pts) {
            const std::int64_t s = dot(normal, p) - off;
            above = above || s > 0;
            below = below || s < 0;
        }
        if ((above && below) || (!above && !below)) return;
        if (below) {
            for (auto& x : normal) x = -x;
            off = -off;
        }
        for (const auto& pl : planes)
            if (pl.normal == normal && pl.offset == off) return;
        Plane pl{normal, off, {}};
        for (std::size_t q = 0; q < pts.size(); ++q)
            if (dot(normal, pts[q]) == off) pl.incident.push_back(q);
        planes.push_back(std::move(pl));
    }

    // Hull of pts given the hull of all but the last point: surviving parent
    // facets plus supporting planes through the new point.
    std::vector<Plane> extend_hull(const std::vector<Plane>& parent, const std::vector<Point>& pts) const {
        const std::size_t last = pts.size() - 1;
        const Point& p = pts[last];
        std::vector<Plane> planes;
        for (const auto& pl : parent) {
            const std::int64_t s = dot(pl.normal, p) - pl.offset;
            if (s < 0) continue;
            planes.push_back(pl);
            if (s == 0) planes.back().incident.push_back(last);
        }
        if (opt_.dim == 2) {
            for (std::size_t i = 0; i < last; ++i) add_plane(planes, pts, i, last, last);
        } else {
            for (std::size_t i = 0; i < last; ++i)
                for (std::size_t j = i + 1; j < last; ++j) add_plane(planes, pts, i, j, last);
        }
        return planes;
    }

    bool spans(const std::vector<Point>& normals) const {
        for (std::size_t i = 0; i < normals.size(); ++i)
            for (std::size_t j = i + 1; j < normals.size(); ++j) {
                if (opt_.dim == 2) {
                    if (normals[i][0] * normals[j][1] - normals[i][1] * normals[j][0] != 0) return true;
                    continue;
                }
                for (std::size_t k = j + 1; k < normals.size(); ++k)
                    if (det3(normals[i], normals[j], normals[k]) != 0) return true;
            }
        return false;
    }

    // Returns true when the subset (and so every superset) is ruled out.
    bool prune(const std::vector<std::size_t>& subset, const std::vector<Plane>& planes) {
        const std::size_t m = subset.size();
        std::vector<std::vector<Point>> normals(m);
        for (const auto& pl : planes)
            for (auto i : pl.incident) normals[i].push_back(pl.normal);
        for (std::size_t i = 0; i < m; ++i)
            if (!spans(normals[i])) return true;  // not in convex position
        for (const auto& x : box_points_) {
            bool interior = true;
            for (const auto& pl : planes)
                if (dot(pl.normal, x) <= pl.offset) {
                    interior = false;
                    break;
                }
            if (interior) return true;  // nonzero interior lattice point
        }
        bool reflexive = true;
        for (const auto& pl : planes) {
            if (pl.offset != -1) reflexive = false;
            if (opt_.simplicial_only && pl.incident.size() != static_cast<std::size_t>(opt_.dim)) reflexive = false;
        }
        if (reflexive) found_.push_back(subset);
        return false;
    }

    void dfs(std::vector<std::size_t>& subset, std::vector<Point>& pts, const std::vector<Plane>& parent) {
        std::vector<Plane> planes = parent.empty() ? hull(pts) : extend_hull(parent, pts);
        if (!planes.empty() && prune(subset, planes)) return;
        for (std::size_t i = subset.back() + 1; i < candidates_.size(); ++i) {
            subset.push_back(i);
            pts.push_back(candidates_[i]);
            dfs(subset, pts, planes);
            subset.pop_back();
            pts.pop_back();
        }
    }

    EnumOptions opt_;
    std::vector<Point> box_points_;
    std::vector<Point> candidates_;  // primitive points: vertices of reflexive polytopes are primitive
    std::vector<std::size_t> roots_;
    std::vector<std::vector<std::size_t>> found_;
};

}  // namespace detail

/// Reflexive polytopes with vertices in [-box, box]^dim, one entry per
/// GL(dim, Z) class, sorted by canonical form. Output does not depend on the
/// thread count.
inline std::vector<EnumeratedClass> enumerate_reflexive(const EnumOptions& opt) {
    if (opt.dim != 2 && opt.dim != 3) throw ValidationError("enumerate-toric: dim must be 2 or 3");
    if (opt.box < 1 || opt.box > 4) throw ValidationError("enumerate-toric: box must be between 1 and 4");
    const std::size_t dim = static_cast<std::size_t>(opt.dim);

    using Key = std::vector<LatticeVector>;
    auto work = [&](std::size_t begin, std::size_t stride) {
        detail::Search search(opt);
        std::map<Key, std::size_t> local;
        const auto& roots = search.roots();
        for (std::size_t r = begin; r < roots.size(); r += stride) {
            for (const auto& subset : search.run_branch(roots[r])) {
                std::vector<Point> pts;
                std::vector<LatticeVector> verts;
                for (auto i : subset) {
                    const auto& p = search.candidates()[i];
                    pts.push_back(p);
                    LatticeVector v;
                    for (std::size_t c = 0; c < dim; ++c) v.push_back(p[c]);
                    verts.push_back(std::move(v));
                }
                std::vector<std::vector<std::size_t>> incidences;
                for (const auto& pl : search.hull(pts)) incidences.push_back(pl.incident);
                ++local[canonical_form(dim, verts, incidences)];
            }
        }
        return local;
    };

    const unsigned threads = std::max(1u, opt.threads);
    std::vector<std::future<std::map<Key, std::size_t>>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work, t, threads));
    std::map<Key, std::size_t> merged;
    for (auto& j : jobs)
        for (const auto& [k, count] : j.get()) merged[k] += count;

    std::vector<EnumeratedClass> out;
    for (auto& [k, count] : merged) out.push_back({k, count});
    return out;
}

}  // namespace horofano::toric
