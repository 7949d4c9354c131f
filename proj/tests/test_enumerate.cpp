#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "horofano/enumerate.hpp"
#include "oracles.hpp"

using namespace horofano;

namespace {

using namespace horofano::oracle;

std::vector<V2> to_v2(const std::vector<LatticeVector>& vs) {
    std::vector<V2> out;
    for (const auto& v : vs) out.push_back({static_cast<long>(v[0]), static_cast<long>(v[1])});
    std::sort(out.begin(), out.end(), angle_less);
    return out;
}

IntegerMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntegerMatrix m(n, LatticeVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int step = 0; step < 6; ++step) {
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j) {
            for (auto& row : m) row[i] = -row[i];
            continue;
        }
        const int c = coef(rng);
        for (auto& row : m) row[i] += c * row[j];
    }
    return m;
}

std::vector<LatticeVector> map_vertices(const IntegerMatrix& m, const std::vector<LatticeVector>& vs) {
    std::vector<LatticeVector> out;
    for (const auto& v : vs) {
        LatticeVector w(v.size(), Integer(0));
        for (std::size_t r = 0; r < v.size(); ++r)
            for (std::size_t c = 0; c < v.size(); ++c) w[r] += m[r][c] * v[c];
        out.push_back(w);
    }
    return out;
}

RationalPolytope polytope(std::size_t dim, const std::vector<LatticeVector>& vs) {
    std::vector<RationalVector> pts;
    for (const auto& v : vs) pts.push_back(to_rational(v));
    return RationalPolytope(dim, pts);
}

}  // namespace

TEST(NaiveEnumerator, SixteenReflexivePolygons) {
    const auto reps = representatives(naive_reflexive_polygons(3));
    EXPECT_EQ(reps.size(), 16u);
}

TEST(Enumerate, SixteenClassesMatchNaiveOracle) {
    const auto classes = toric::enumerate_reflexive({2, 3, true, 1});
    ASSERT_EQ(classes.size(), 16u);
    const auto naive = representatives(naive_reflexive_polygons(3));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto p = to_v2(classes[i].canonical);
        EXPECT_EQ(std::count_if(naive.begin(), naive.end(), [&](const auto& r) { return equivalent(p, r); }), 1);
        for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(equivalent(p, to_v2(classes[j].canonical)));
        EXPECT_GT(classes[i].raw_count, 0u);
    }
}

TEST(Enumerate, BoxOneIsASubsetOfBoxThree) {
    const auto small = toric::enumerate_reflexive({2, 1, true, 1});
    const auto big = toric::enumerate_reflexive({2, 3, true, 1});
    EXPECT_EQ(small.size(), representatives(naive_reflexive_polygons(1)).size());
    for (const auto& c : small)
        EXPECT_TRUE(std::any_of(big.begin(), big.end(), [&](const auto& b) { return b.canonical == c.canonical; }));
    EXPECT_LT(small.size(), big.size());
}

TEST(Enumerate, IndependentOfThreadCount) {
    const auto one = toric::enumerate_reflexive({2, 3, true, 1});
    const auto three = toric::enumerate_reflexive({2, 3, true, 3});
    ASSERT_EQ(one.size(), three.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].canonical, three[i].canonical);
        EXPECT_EQ(one[i].raw_count, three[i].raw_count);
    }
}

TEST(Enumerate, ThreeDimensionalUnitBox) {
    const auto classes = toric::enumerate_reflexive({3, 1, true, 1});
    EXPECT_EQ(classes.size(), 91u);
    const auto simplex = toric::canonical_form(polytope(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
    const auto octahedron =
        toric::canonical_form(polytope(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
    auto has = [&](const std::vector<LatticeVector>& form) {
        return std::any_of(classes.begin(), classes.end(), [&](const auto& c) { return c.canonical == form; });
    };
    EXPECT_TRUE(has(simplex));
    EXPECT_TRUE(has(octahedron));
    for (const auto& c : classes) {
        const auto p = polytope(3, c.canonical);
        EXPECT_TRUE(is_simplicial(p));
        for (const auto& h : p.halfspaces()) EXPECT_EQ(h.offset, -1);
    }
}

TEST(Enumerate, RejectsOutOfRangeOptions) {
    EXPECT_THROW(toric::enumerate_reflexive({4, 1, true, 1}), ValidationError);
    EXPECT_THROW(toric::enumerate_reflexive({2, 5, true, 1}), ValidationError);
    EXPECT_THROW(toric::enumerate_reflexive({2, 0, true, 1}), ValidationError);
}

TEST(CanonicalForm, PropertyInvariantUnderUnimodularMaps) {
    std::mt19937 rng(99);
    const std::vector<std::pair<std::size_t, std::vector<LatticeVector>>> shapes{
        {2, {{1, 0}, {0, 1}, {-1, -1}}},
        {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}},
        {2, {{1, 0}, {1, 2}, {-1, -2}, {-1, 0}}},
        {2, {{1, 0}, {0, 1}, {-3, -2}}},
        {3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}},
        {3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}},
        {3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}, {0, 0, -1}}},
    };
    std::vector<std::vector<LatticeVector>> forms;
    for (const auto& [dim, verts] : shapes) {
        const auto base = toric::canonical_form(polytope(dim, verts));
        for (int trial = 0; trial < 25; ++trial) {
            auto moved = map_vertices(random_unimodular(rng, dim), verts);
            std::shuffle(moved.begin(), moved.end(), rng);
            EXPECT_EQ(toric::canonical_form(polytope(dim, moved)), base);
        }
        forms.push_back(base);
    }
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) EXPECT_NE(forms[i], forms[j]);
}
