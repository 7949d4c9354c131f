#pragma once

// Exact rational arithmetic and lattice linear algebra.
//
// Integers are arbitrary precision (boost::multiprecision::cpp_int), rationals
// are kept in lowest terms with a positive denominator. Nothing in the library
// touches floating point.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "horofano/error.hpp"

namespace horofano {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
using IntegerMatrix = std::vector<LatticeVector>;    // row-major
using RationalMatrix = std::vector<RationalVector>;  // row-major

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline bool is_integral(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

inline bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

inline bool is_zero(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& q) { return q == 0; });
}

/// "p/q" for non-integers, "p" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline std::string to_string(const LatticeVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

/// Parses "p", "-p" or "p/q" (q != 0). Throws ValidationError on anything else.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw ValidationError("malformed rational \"" + std::string(text) + "\"");
    const Integer d{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
    std::string n{num};
    if (n.front() == '+') n.erase(0, 1);
    return Rational(Integer{n}, d);
}

inline RationalVector to_rational(const LatticeVector& v) {
    return RationalVector(v.begin(), v.end());
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RationalVector scaled(const RationalVector& v, const Rational& k) {
    RationalVector out(v);
    for (auto& x : out) x *= k;
    return out;
}

inline RationalVector operator+(RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline RationalVector operator-(RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

namespace detail {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Solves A·x = b for square A. Returns nullopt when A is singular.
inline std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t n = a.size();
    RationalMatrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error("solve_linear: matrix is not square");
        aug[i] = a[i];
        aug[i].push_back(b.at(i));
    }
    const auto pivots = detail::rref(aug, n);
    if (pivots.size() < n) return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

inline std::size_t rank(RationalMatrix m) {
    if (m.empty()) return 0;
    return detail::rref(m, m.front().size()).size();
}

/// Basis of the right null space {x : m·x = 0} of a matrix with `cols` columns.
inline std::vector<RationalVector> null_space(RationalMatrix m, std::size_t cols) {
    const auto pivots = detail::rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(cols, Rational(0));
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Inverse of a square matrix, nullopt when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    if (detail::rref(aug, n).size() < n) return std::nullopt;
    RationalMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + n, aug[i].end());
    return inv;
}

/// The primitive lattice vector on the open ray through v.
inline LatticeVector primitive(const RationalVector& v) {
    if (is_zero(v)) throw Error("primitive: zero vector has no primitive multiple");
    Integer l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
    LatticeVector out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    g = abs(g);
    for (auto& x : out) x /= g;
    return out;
}

/// Determinant of n integer vectors in Z^n (fraction-free Bareiss elimination).
inline Integer det_lattice(const std::vector<LatticeVector>& vectors) {
    const std::size_t n = vectors.size();
    if (n == 0) return 1;
    IntegerMatrix m = vectors;
    for (const auto& row : m)
        if (row.size() != n) throw Error("det_lattice: expected n vectors in Z^n");
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Row-style Hermite normal form: `transform`·A = `form`, with `transform`
/// unimodular, `form` in row echelon form, positive pivots and the entries
/// above each pivot reduced into [0, pivot).
struct HermiteForm {
    IntegerMatrix form;
    IntegerMatrix transform;
    std::vector<std::size_t> pivot_columns;
};

inline HermiteForm hermite_normal_form(const IntegerMatrix& a, std::size_t cols) {
    const std::size_t rows = a.size();
    HermiteForm h;
    h.form = a;
    h.transform.assign(rows, LatticeVector(rows, Integer(0)));
    for (std::size_t i = 0; i < rows; ++i) h.transform[i][i] = 1;
    auto& m = h.form;
    auto& u = h.transform;
    // row_i <- x*row_i + y*row_j, row_j <- z*row_i + w*row_j with xw - yz = 1
    auto combine = [](IntegerMatrix& mat, std::size_t i, std::size_t j, const Integer& x, const Integer& y,
                      const Integer& z, const Integer& w) {
        for (std::size_t c = 0; c < mat[i].size(); ++c) {
            const Integer ri = mat[i][c];
            const Integer rj = mat[j][c];
            mat[i][c] = x * ri + y * rj;
            mat[j][c] = z * ri + w * rj;
        }
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            if (m[row][col] == 0) {
                std::swap(m[row], m[r]);
                std::swap(u[row], u[r]);
                continue;
            }
            // extended gcd of the two pivot candidates
            Integer a0 = m[row][col], b0 = m[r][col];
            Integer old_r = a0, rr = b0, old_s = 1, s = 0, old_t = 0, t = 1;
            while (rr != 0) {
                const Integer q = old_r / rr;
                Integer tmp = old_r - q * rr;
                old_r = rr;
                rr = tmp;
                tmp = old_s - q * s;
                old_s = s;
                s = tmp;
                tmp = old_t - q * t;
                old_t = t;
                t = tmp;
            }
            const Integer& g = old_r;
            const Integer x = old_s, y = old_t, z = -b0 / g, w = a0 / g;
            combine(m, row, r, x, y, z, w);
            combine(u, row, r, x, y, z, w);
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0) {
            for (auto& e : m[row]) e = -e;
            for (auto& e : u[row]) e = -e;
        }
        const Integer& pivot = m[row][col];
        for (std::size_t r = 0; r < row; ++r) {
            Integer q = m[r][col] / pivot;
            if (m[r][col] - q * pivot < 0) q -= 1;  // floor division
            if (q == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= q * m[row][c];
            for (std::size_t c = 0; c < rows; ++c) u[r][c] -= q * u[row][c];
        }
        h.pivot_columns.push_back(col);
        ++row;
    }
    return h;
}

/// Basis of the integer kernel {x ∈ Z^cols : A·x = 0}.
inline std::vector<LatticeVector> integer_kernel(const IntegerMatrix& a, std::size_t cols) {
    IntegerMatrix at(cols, LatticeVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) at[j][i] = a[i][j];
    const auto h = hermite_normal_form(at, a.size());
    std::vector<LatticeVector> basis;
    for (std::size_t r = h.pivot_columns.size(); r < cols; ++r) basis.push_back(h.transform[r]);
    return basis;
}

/// Rank and index of the sublattice of Z^n generated by `generators`. The index
/// is only meaningful (nonzero) when the rank is n.
struct SublatticeInfo {
    std::size_t rank = 0;
    Integer index = 0;
};

inline SublatticeInfo sublattice_info(const std::vector<LatticeVector>& generators, std::size_t n) {
    SublatticeInfo info;
    if (generators.empty()) {
        info.index = n == 0 ? 1 : 0;
        return info;
    }
    const auto h = hermite_normal_form(generators, n);
    info.rank = h.pivot_columns.size();
    if (info.rank == n) {
        info.index = 1;
        for (std::size_t r = 0; r < n; ++r) info.index *= h.form[r][h.pivot_columns[r]];
    }
    return info;
}

/// True iff Z^n is the internal direct sum of the sublattices spanned by each
/// generator set: the ranks add up to n and together they generate Z^n.
inline bool sublattice_direct_sum(const std::vector<std::vector<LatticeVector>>& summands, std::size_t n) {
    std::size_t rank_sum = 0;
    std::vector<LatticeVector> all;
    for (const auto& gens : summands) {
        for (const auto& g : gens)
            if (g.size() != n) throw Error("sublattice_direct_sum: generator of wrong length");
        rank_sum += sublattice_info(gens, n).rank;
        all.insert(all.end(), gens.begin(), gens.end());
    }
    const auto total = sublattice_info(all, n);
    return rank_sum == n && total.rank == n && total.index == 1;
}

}  // namespace horofano
