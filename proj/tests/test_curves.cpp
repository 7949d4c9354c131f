#include <algorithm>

#include <gtest/gtest.h>

#include "horofano/curves.hpp"
#include "horofano/enumerate.hpp"

using namespace horofano;

namespace {

RationalVector q1(Rational x) { return RationalVector{x}; }

FanoEmbedding a1_embedding(long restriction, const std::vector<Rational>& vertices) {
    const auto s =
        make_direct_space(build_root_system({{DynkinType::A, 1}}), {0}, 1, {{0, LatticeVector{restriction}}});
    std::vector<RationalVector> pts;
    for (const auto& x : vertices) pts.push_back(q1(x));
    return build_embedding(s, RationalPolytope(1, pts));
}

FanoEmbedding toric_embedding(std::size_t dim, const std::vector<LatticeVector>& vertices) {
    std::vector<RationalVector> pts;
    for (const auto& v : vertices) pts.push_back(to_rational(v));
    return build_embedding(make_direct_space(build_root_system({}), {}, dim, {}), RationalPolytope(dim, pts));
}

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counter-clockwise order around the origin, exact.
std::vector<LatticeVector> angular(std::vector<LatticeVector> v) {
    auto half = [](const LatticeVector& p) { return p[1] > 0 || (p[1] == 0 && p[0] > 0) ? 0 : 1; };
    std::sort(v.begin(), v.end(), [&](const LatticeVector& a, const LatticeVector& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return det2(a, b) > 0;
    });
    return v;
}

// −K·D_i on a complete toric surface, from the intersection numbers
// D_{i-1}·D_i = 1/det(u_{i-1},u_i) and
// D_i² = -det(u_{i-1},u_{i+1}) / (det(u_{i-1},u_i)·det(u_i,u_{i+1})).
Rational toric_surface_degree(const std::vector<LatticeVector>& ccw, std::size_t i) {
    const std::size_t k = ccw.size();
    const auto& prev = ccw[(i + k - 1) % k];
    const auto& cur = ccw[i];
    const auto& next = ccw[(i + 1) % k];
    const Rational dp(det2(prev, cur)), dn(det2(cur, next));
    return 1 / dp + 1 / dn - Rational(det2(prev, next)) / (dp * dn);
}

}  // namespace

TEST(Curves, AOneProjectivePlane) {
    const auto e = a1_embedding(1, {-1, Rational(1, 2)});
    const auto eps = epsilon_Q(e);
    EXPECT_EQ(eps.value, 3);
    const auto table = curve_table(e);
    ASSERT_EQ(table.size(), 1u);  // the color leaves only the ridge curve
    EXPECT_EQ(table[0].kind, CurveKind::Ridge);
    EXPECT_EQ(table[0].degree, 3);
    EXPECT_EQ(pseudo_index_estimate(e).value, 3);
    EXPECT_THROW(degree_alpha_v(e, 0, 0), ValidationError);
}

TEST(Curves, AOneStrictCase) {
    const auto e = a1_embedding(1, {-1, 1});
    EXPECT_EQ(epsilon_Q(e).value, 2);
    // α̌_M = 1 lies only in the cone over the vertex 1, whose dual vertex is -1
    const auto adm = admissible_dual_vertices(e, 0);
    ASSERT_EQ(adm.size(), 1u);
    EXPECT_EQ(e.dual.vertex(adm[0]), q1(-1));
    EXPECT_EQ(degree_alpha_v(e, 0, adm[0]), 1);  // 2 + ⟨-1, 1⟩
    const auto other = adm[0] == 0 ? 1u : 0u;
    EXPECT_THROW(degree_alpha_v(e, 0, other), ValidationError);
    const auto est = pseudo_index_estimate(e);
    EXPECT_EQ(est.value, 1);
    EXPECT_EQ(est.witness.kind, CurveKind::Schubert);
}

TEST(Curves, ZeroRestrictionGivesTwoSchubertCurves) {
    const auto e = a1_embedding(0, {-1, 1});
    const auto table = curve_table(e);
    ASSERT_EQ(table.size(), 3u);
    for (const auto& c : table) EXPECT_EQ(c.degree, 2);
}

TEST(Curves, RidgeDegreeIsOrientationIndependent) {
    const auto e = toric_embedding(2, {{1, 0}, {0, 1}, {-2, -1}});
    for (const auto& mu : ridges(e.q)) {
        const auto deg = degree_mu(e, mu);
        EXPECT_GT(deg, 0);
    }
    EXPECT_EQ(epsilon_Q(e).value, 2);
    EXPECT_EQ(pseudo_index_estimate(e).value, 2);
}

TEST(Curves, PropertyToricSurfaceDegreesMatchIntersectionTheory) {
    const auto classes = toric::enumerate_reflexive({2, 3, true, 1});
    ASSERT_EQ(classes.size(), 16u);
    for (const auto& cls : classes) {
        const auto e = toric_embedding(2, cls.canonical);
        const auto ccw = angular(cls.canonical);
        const auto rs = ridges(e.q);
        ASSERT_EQ(rs.size(), ccw.size());
        for (const auto& mu : rs) {
            ASSERT_EQ(mu.incident.size(), 1u);
            LatticeVector u;
            for (const auto& x : e.q.vertex(mu.incident[0])) u.push_back(numerator(x));
            const auto pos = static_cast<std::size_t>(std::find(ccw.begin(), ccw.end(), u) - ccw.begin());
            EXPECT_EQ(Rational(degree_mu(e, mu)), toric_surface_degree(ccw, pos)) << to_string(u);
        }
    }
}

TEST(Curves, PropertyIotaBoundedByEpsilonAndAdjacency) {
    for (const auto& cls : toric::enumerate_reflexive({2, 3, true, 1})) {
        const auto e = toric_embedding(2, cls.canonical);
        const auto eps = epsilon_Q(e);
        EXPECT_LE(Rational(pseudo_index_estimate(e).value), eps.value);
        EXPECT_TRUE(check_adjacency(e, eps).holds);
        for (const auto& [u, v] : eps.minimizers) {
            EXPECT_FALSE(e.on_facet(u, v));
            EXPECT_EQ(pair_value(e, u, v), eps.value);
        }
    }
}

TEST(Curves, ThreeDimensionalSimplexAndOctahedron) {
    const auto p3 = toric_embedding(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    for (const auto& c : curve_table(p3)) EXPECT_EQ(c.degree, 4);
    const auto oct = toric_embedding(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    const auto table = curve_table(oct);
    EXPECT_EQ(table.size(), 12u);
    for (const auto& c : table) EXPECT_EQ(c.degree, 2);
    EXPECT_EQ(epsilon_Q(oct).value, 2);
}
