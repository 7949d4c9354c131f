#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "horofano/polytope.hpp"

using namespace horofano;

namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

RationalPolytope lattice_polytope(std::size_t dim, const std::vector<std::vector<long>>& pts) {
    std::vector<RationalVector> out;
    for (const auto& p : pts) {
        RationalVector v;
        for (auto x : p) v.push_back(Rational(x));
        out.push_back(v);
    }
    return RationalPolytope(dim, out);
}

using P2 = std::pair<long, long>;

long cross(P2 o, P2 a, P2 b) { return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first); }

// Andrew's monotone chain, strict hull (collinear points dropped).
std::vector<P2> monotone_hull(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

TEST(Polytope, SimplexFacetsAndDual) {
    const auto p = lattice_polytope(2, {{1, 0}, {0, 1}, {-1, -1}});
    EXPECT_TRUE(p.origin_interior());
    const auto f = facets(p);
    ASSERT_EQ(f.size(), 3u);
    std::vector<RationalVector> normals;
    for (const auto& x : f) normals.push_back(x.normal);
    std::sort(normals.begin(), normals.end());
    EXPECT_EQ(normals, (std::vector<RationalVector>{rv({-1, -1}), rv({-1, 2}), rv({2, -1})}));
    const auto dual = dual_polytope(p);
    for (std::size_t j = 0; j < f.size(); ++j) EXPECT_EQ(dual.vertex(j), f[j].normal);
    EXPECT_TRUE(is_simplicial(p));
}

TEST(Polytope, DualOfDualIsOriginal) {
    for (const auto& pts : std::vector<std::vector<std::vector<long>>>{
             {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
             {{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
             {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}}) {
        const auto p = lattice_polytope(pts[0].size(), pts);
        const auto dd = dual_polytope(dual_polytope(p));
        auto a = p.vertices(), b = dd.vertices();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
    }
}

TEST(Polytope, RationalVerticesAndOneDimensionalCase) {
    const RationalPolytope q(1, {rv({-1}), rv({Rational(1, 2)})});
    const auto f = facets(q);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].normal, rv({-2}));
    EXPECT_EQ(f[1].normal, rv({1}));
    const auto rs = ridges(q);
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_TRUE(rs[0].incident.empty());
}

TEST(Polytope, RejectsDegenerateInput) {
    EXPECT_THROW(lattice_polytope(2, {{1, 0}, {2, 0}, {3, 0}}), ValidationError);
    EXPECT_THROW(lattice_polytope(2, {{1, 0}, {0, 1}}), ValidationError);
    EXPECT_THROW(lattice_polytope(2, {{1, 0}, {0, 1}, {-1, -1}, {0, 0}}), ValidationError);  // interior point
    EXPECT_THROW(lattice_polytope(2, {{1, 0}, {0, 1}, {-1}}), ValidationError);
    const auto off = lattice_polytope(2, {{1, 0}, {0, 1}, {1, 1}});
    EXPECT_FALSE(off.origin_interior());
    EXPECT_THROW(facets(off), ValidationError);
}

TEST(Polytope, DuplicatesCollapseInOrder) {
    const auto p = lattice_polytope(2, {{0, 1}, {1, 0}, {0, 1}, {-1, -1}});
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.vertex(0), rv({0, 1}));
    EXPECT_EQ(p.index_of(rv({-1, -1})), 2u);
}

TEST(Polytope, ContainsAndCones) {
    const auto p = lattice_polytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    EXPECT_EQ(contains(p, rv({0, 0})), Location::Interior);
    EXPECT_EQ(contains(p, rv({Rational(1, 2), Rational(1, 2)})), Location::Boundary);
    EXPECT_EQ(contains(p, rv({1, 1})), Location::Outside);
    const auto lambda = cone_membership(p, {0, 1}, rv({2, 3}));
    ASSERT_TRUE(lambda);
    EXPECT_EQ(*lambda, rv({2, 3}));
    EXPECT_FALSE(cone_membership(p, {0, 1}, rv({-1, 3})));
}

TEST(Polytope, RidgesOfOctahedron) {
    const auto p = lattice_polytope(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    EXPECT_EQ(facets(p).size(), 8u);
    const auto rs = ridges(p);
    EXPECT_EQ(rs.size(), 12u);
    for (const auto& r : rs) {
        EXPECT_EQ(r.incident.size(), 2u);
        EXPECT_NE(r.facet_a, r.facet_b);
    }
    const auto cube = lattice_polytope(3, {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                                           {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    EXPECT_FALSE(is_simplicial(cube));
    EXPECT_THROW(ridges(cube), ValidationError);
}

TEST(Polytope, RidgeNormalIsPrimitiveAndOriented) {
    const auto p = lattice_polytope(2, {{1, 0}, {0, 1}, {-2, -1}});
    for (const auto& r : ridges(p)) {
        for (auto f : {r.facet_a, r.facet_b}) {
            for (auto u : p.halfspaces()[f].incident) {
                if (std::find(r.incident.begin(), r.incident.end(), u) != r.incident.end()) continue;
                const auto chi = ridge_normal(p, r, u);
                EXPECT_GT(dot(chi, primitive(p.vertex(u))), 0);
                for (auto i : r.incident) EXPECT_EQ(dot(to_rational(chi), p.vertex(i)), 0);
                EXPECT_EQ(abs(boost::multiprecision::gcd(chi[0], chi[1])), 1);
            }
        }
    }
}

TEST(Polytope, PropertyPolygonHullMatchesMonotoneChain) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> coord(-5, 5);
    std::uniform_int_distribution<int> count(3, 9);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<P2> pts(static_cast<std::size_t>(count(rng)));
        for (auto& q : pts) q = {coord(rng), coord(rng)};
        const auto hull = monotone_hull(pts);
        if (hull.size() < 3) continue;
        std::vector<std::vector<long>> verts;
        for (auto [x, y] : hull) verts.push_back({x, y});
        const auto p = lattice_polytope(2, verts);
        EXPECT_EQ(p.halfspaces().size(), hull.size());
        for (const auto& h : p.halfspaces()) EXPECT_EQ(h.incident.size(), 2u);
        // membership against orientation tests on the counter-clockwise hull
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y) {
                bool inside = true, boundary = false;
                for (std::size_t i = 0; i < hull.size(); ++i) {
                    const long c = cross(hull[i], hull[(i + 1) % hull.size()], {x, y});
                    inside = inside && c >= 0;
                    boundary = boundary || c == 0;
                }
                const auto loc = contains(p, rv({x, y}));
                const auto expected = !inside ? Location::Outside : boundary ? Location::Boundary : Location::Interior;
                EXPECT_EQ(loc, expected) << x << "," << y;
            }
        // adding an interior or boundary non-vertex point is rejected
        if (contains(p, rv({0, 0})) != Location::Outside && std::find(hull.begin(), hull.end(), P2{0, 0}) == hull.end()) {
            verts.push_back({0, 0});
            EXPECT_THROW(lattice_polytope(2, verts), ValidationError);
        }
        ++checked;
    }
    EXPECT_GT(checked, 300);
}
