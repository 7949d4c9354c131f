#pragma once

// Independent oracles shared by the unit tests and the acceptance run. They
// avoid the library's own algorithms on purpose.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <vector>

#include "horofano/exactal.hpp"
#include "horofano/rootsys.hpp"

namespace horofano::oracle {

using V2 = std::array<long, 2>;

inline long det(V2 a, V2 b) { return a[0] * b[1] - a[1] * b[0]; }

inline int half(V2 p) { return p[1] > 0 || (p[1] == 0 && p[0] > 0) ? 0 : 1; }

inline bool angle_less(V2 a, V2 b) { return half(a) != half(b) ? half(a) < half(b) : det(a, b) > 0; }

// Reflexive polygons as counter-clockwise cycles of primitive points where
// every edge a->b sits at lattice distance one from the origin
// (det(a, b) = lattice length of b - a) and every turn is strictly convex.
inline std::vector<std::vector<V2>> naive_reflexive_polygons(long box) {
    std::vector<V2> pts;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y)
            if (std::gcd(x, y) == 1) pts.push_back({x, y});
    std::sort(pts.begin(), pts.end(), angle_less);
    auto edge_ok = [](V2 a, V2 b) {
        const long d = det(a, b);
        return d > 0 && d == std::gcd(b[0] - a[0], b[1] - a[1]);
    };
    auto turn_ok = [](V2 a, V2 b, V2 c) { return det({b[0] - a[0], b[1] - a[1]}, {c[0] - b[0], c[1] - b[1]}) > 0; };
    std::vector<std::vector<V2>> out;
    std::vector<V2> path;
    std::function<void(std::size_t)> extend = [&](std::size_t last) {
        const V2 first = path.front(), cur = path.back();
        if (path.size() >= 3 && edge_ok(cur, first) && turn_ok(path[path.size() - 2], cur, first) &&
            turn_ok(cur, first, path[1]))
            out.push_back(path);
        for (std::size_t i = last + 1; i < pts.size(); ++i) {
            if (!edge_ok(cur, pts[i])) continue;
            if (path.size() >= 2 && !turn_ok(path[path.size() - 2], cur, pts[i])) continue;
            path.push_back(pts[i]);
            extend(i);
            path.pop_back();
        }
    };
    for (std::size_t s = 0; s < pts.size(); ++s) {
        path = {pts[s]};
        extend(s);
    }
    return out;
}

// Is there g in GL(2, Z) with g(P) = Q? Tries every image of the edge (p0, p1).
inline bool equivalent(const std::vector<V2>& p, const std::vector<V2>& q) {
    if (p.size() != q.size()) return false;
    const std::size_t k = q.size();
    const long d = det(p[0], p[1]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j : {(i + 1) % k, (i + k - 1) % k}) {
            // g = [q_i q_j]·[p_0 p_1]^{-1}; adj([p0 p1]) = [[p1y, -p1x], [-p0y, p0x]]
            const V2 a = q[i], b = q[j];
            const long g00 = a[0] * p[1][1] - b[0] * p[0][1], g01 = -a[0] * p[1][0] + b[0] * p[0][0];
            const long g10 = a[1] * p[1][1] - b[1] * p[0][1], g11 = -a[1] * p[1][0] + b[1] * p[0][0];
            if (g00 % d || g01 % d || g10 % d || g11 % d) continue;
            const long m00 = g00 / d, m01 = g01 / d, m10 = g10 / d, m11 = g11 / d;
            if (std::abs(m00 * m11 - m01 * m10) != 1) continue;
            std::vector<V2> image, target(q);
            for (const auto& x : p) image.push_back({m00 * x[0] + m01 * x[1], m10 * x[0] + m11 * x[1]});
            std::sort(image.begin(), image.end());
            std::sort(target.begin(), target.end());
            if (image == target) return true;
        }
    return false;
}

inline std::vector<std::vector<V2>> representatives(const std::vector<std::vector<V2>>& polys) {
    std::vector<std::vector<V2>> reps;
    for (const auto& p : polys)
        if (std::none_of(reps.begin(), reps.end(), [&](const auto& r) { return equivalent(p, r); })) reps.push_back(p);
    return reps;
}

using Euclid = std::vector<Rational>;

inline Rational inner(const Euclid& a, const Euclid& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Euclid unit(std::size_t dim, std::size_t i, int sign = 1) {
    Euclid v(dim, 0);
    v[i] = sign;
    return v;
}

inline Euclid add(Euclid a, const Euclid& b, int k = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
}

// Classical types in coordinates e_1..e_m (A_m uses e_1..e_{m+1}).
struct Classical {
    std::vector<Euclid> simple;
    std::vector<Euclid> positive;
};

inline Classical classical(DynkinType type, std::size_t m) {
    Classical c;
    const std::size_t dim = type == DynkinType::A ? m + 1 : m;
    auto e = [&](std::size_t i) { return unit(dim, i); };
    for (std::size_t i = 0; i + 1 < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            c.positive.push_back(add(e(i), e(j), -1));
            if (type != DynkinType::A) c.positive.push_back(add(e(i), e(j)));
        }
    if (type == DynkinType::B)
        for (std::size_t i = 0; i < dim; ++i) c.positive.push_back(e(i));
    if (type == DynkinType::C)
        for (std::size_t i = 0; i < dim; ++i) c.positive.push_back(add(e(i), e(i)));
    const std::size_t chain = type == DynkinType::A ? m : m - 1;
    for (std::size_t i = 0; i < chain; ++i) c.simple.push_back(add(e(i), e(i + 1), -1));
    if (type == DynkinType::B) c.simple.push_back(e(m - 1));
    if (type == DynkinType::C) c.simple.push_back(add(e(m - 1), e(m - 1)));
    if (type == DynkinType::D) c.simple.push_back(add(e(m - 2), e(m - 1)));
    return c;
}

// Coefficients of β in the simple roots, from the Gram system.
inline std::vector<Rational> coefficients(const Classical& c, const Euclid& beta) {
    const std::size_t m = c.simple.size();
    RationalMatrix gram(m, RationalVector(m));
    RationalVector rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) gram[i][j] = inner(c.simple[i], c.simple[j]);
        rhs[i] = inner(c.simple[i], beta);
    }
    return *solve_linear(gram, rhs);
}

// a_α by summing the classical positive roots outside the span of I.
inline int brute_a_alpha(DynkinType type, std::size_t m, std::size_t alpha) {
    const auto c = classical(type, m);
    Euclid two_rho(c.simple[0].size(), 0);
    for (const auto& beta : c.positive) {
        const auto coeff = coefficients(c, beta);
        if (coeff[alpha] != 0) two_rho = add(two_rho, beta);
    }
    const auto& a = c.simple[alpha];
    const Rational val = 2 * inner(two_rho, a) / inner(a, a);
    if (!is_integral(val)) throw Error("brute_a_alpha: non-integral pairing");
    return static_cast<int>(numerator(val));
}

}  // namespace horofano::oracle
