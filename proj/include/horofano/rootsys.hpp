#pragma once

// Dynkin diagrams, Cartan matrices and positive-root enumeration.
//
// Node numbering follows Bourbaki (see docs/format.md):
//   A_m  1 - 2 - ... - m
//   B_m  1 - ... - (m-1) => m        (α_m short)
//   C_m  1 - ... - (m-1) <= m        (α_m long)
//   D_m  1 - ... - (m-2) < (m-1), m
//   E_m  1 - 3 - 4 - 5 - ... - m, with 2 attached to 4
//   F_4  1 - 2 => 3 - 4              (α_1, α_2 long)
//   G_2  1 <= 2                      (α_1 short)
//
// Cartan entries are cartan[i][j] = <α_j, α_i^∨>, so the pairing of a root
// β = Σ b_j α_j with the coroot α_i^∨ is Σ_j b_j cartan[i][j].

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "horofano/error.hpp"

namespace horofano {

enum class DynkinType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinComponent {
    DynkinType type;
    int rank;

    friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

inline std::string to_string(const DynkinComponent& c) {
    return std::string(1, static_cast<char>(c.type)) + std::to_string(c.rank);
}

inline std::optional<DynkinType> parse_dynkin_type(const std::string& s) {
    if (s.size() != 1) return std::nullopt;
    switch (s[0]) {
        case 'A': return DynkinType::A;
        case 'B': return DynkinType::B;
        case 'C': return DynkinType::C;
        case 'D': return DynkinType::D;
        case 'E': return DynkinType::E;
        case 'F': return DynkinType::F;
        case 'G': return DynkinType::G;
        default: return std::nullopt;
    }
}

inline bool is_valid(const DynkinComponent& c) {
    switch (c.type) {
        case DynkinType::A: return c.rank >= 1;
        case DynkinType::B:
        case DynkinType::C: return c.rank >= 2;
        case DynkinType::D: return c.rank >= 4;
        case DynkinType::E: return c.rank >= 6 && c.rank <= 8;
        case DynkinType::F: return c.rank == 4;
        case DynkinType::G: return c.rank == 2;
    }
    return false;
}

/// Cartan matrix of a single component, Bourbaki numbering (0-based indices).
inline std::vector<std::vector<int>> cartan_matrix(const DynkinComponent& c) {
    if (!is_valid(c)) throw ValidationError("invalid Dynkin component " + to_string(c));
    const int m = c.rank;
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    for (int i = 0; i < m; ++i) a[i][i] = 2;
    switch (c.type) {
        case DynkinType::A:
            for (int i = 0; i + 1 < m; ++i) link(i, i + 1);
            break;
        case DynkinType::B:
            for (int i = 0; i + 1 < m; ++i) link(i, i + 1);
            a[m - 1][m - 2] = -2;
            break;
        case DynkinType::C:
            for (int i = 0; i + 1 < m; ++i) link(i, i + 1);
            a[m - 2][m - 1] = -2;
            break;
        case DynkinType::D:
            for (int i = 0; i + 2 < m; ++i) link(i, i + 1);
            link(m - 3, m - 1);
            break;
        case DynkinType::E:
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < m; ++i) link(i, i + 1);
            break;
        case DynkinType::F:
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;
            break;
        case DynkinType::G:
            link(0, 1);
            a[0][1] = -3;
            break;
    }
    return a;
}

/// Classical number of positive roots per type.
inline std::size_t classical_positive_root_count(const DynkinComponent& c) {
    const std::size_t m = static_cast<std::size_t>(c.rank);
    switch (c.type) {
        case DynkinType::A: return m * (m + 1) / 2;
        case DynkinType::B:
        case DynkinType::C: return m * m;
        case DynkinType::D: return m * (m - 1);
        case DynkinType::E: return m == 6 ? 36 : m == 7 ? 63 : 120;
        case DynkinType::F: return 24;
        case DynkinType::G: return 6;
    }
    return 0;
}

using RootVector = std::vector<int>;  // coefficients in the simple roots
using NodeSet = std::set<std::size_t>;  // global simple-root indices

/// A reductive group's root datum, as far as the combinatorics here need it.
/// Simple roots are indexed globally across components; ids are "c<i>.n<j>"
/// (both 1-based, j in Bourbaki numbering).
struct RootSystem {
    std::vector<DynkinComponent> components;
    std::vector<std::vector<int>> cartan;  // block diagonal
    std::vector<RootVector> positive_roots;
    std::vector<std::string> simple_root_ids;
    std::vector<std::size_t> component_of;  // node -> component index
    std::vector<std::size_t> offset;        // component -> first node

    std::size_t rank() const { return cartan.size(); }

    std::optional<std::size_t> find_node(const std::string& id) const {
        auto it = std::find(simple_root_ids.begin(), simple_root_ids.end(), id);
        if (it == simple_root_ids.end()) return std::nullopt;
        return static_cast<std::size_t>(it - simple_root_ids.begin());
    }

    /// ⟨β, α_i^∨⟩
    int pair_with_coroot(const RootVector& beta, std::size_t i) const {
        int s = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * cartan[i][j];
        return s;
    }

    NodeSet all_nodes() const {
        NodeSet s;
        for (std::size_t i = 0; i < rank(); ++i) s.insert(i);
        return s;
    }
};

inline RootSystem build_root_system(const std::vector<DynkinComponent>& components) {
    RootSystem rs;
    rs.components = components;
    std::size_t total = 0;
    for (const auto& c : components) {
        if (!is_valid(c)) throw ValidationError("invalid Dynkin component " + to_string(c));
        rs.offset.push_back(total);
        total += static_cast<std::size_t>(c.rank);
    }
    rs.cartan.assign(total, std::vector<int>(total, 0));
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        const auto block = cartan_matrix(components[ci]);
        for (std::size_t i = 0; i < block.size(); ++i) {
            rs.simple_root_ids.push_back("c" + std::to_string(ci + 1) + ".n" + std::to_string(i + 1));
            rs.component_of.push_back(ci);
            for (std::size_t j = 0; j < block.size(); ++j) rs.cartan[rs.offset[ci] + i][rs.offset[ci] + j] = block[i][j];
        }
    }

    // Reflection closure: s_i(β) = β - ⟨β, α_i^∨⟩ α_i maps positive roots other
    // than α_i to positive roots, and every positive root is reached from a
    // simple one this way.
    std::set<RootVector> seen;
    std::vector<RootVector> frontier;
    for (std::size_t i = 0; i < total; ++i) {
        RootVector e(total, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVector> next;
        for (const auto& beta : frontier) {
            for (std::size_t i = 0; i < total; ++i) {
                const int p = rs.pair_with_coroot(beta, i);
                if (p == 0) continue;
                RootVector image = beta;
                image[i] -= p;
                if (std::any_of(image.begin(), image.end(), [](int x) { return x < 0; })) continue;
                if (seen.insert(image).second) next.push_back(std::move(image));
            }
        }
        frontier = std::move(next);
    }
    // ordered by height, then lexicographically
    rs.positive_roots.assign(seen.begin(), seen.end());
    std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const RootVector& a, const RootVector& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        return ha < hb;
    });
    return rs;
}

namespace detail {
inline bool supported_on(const RootVector& beta, const NodeSet& nodes) {
    for (std::size_t j = 0; j < beta.size(); ++j)
        if (beta[j] != 0 && !nodes.contains(j)) return false;
    return true;
}
}  // namespace detail

/// 2ρ^P for P = P_I: the sum of positive roots not in the span of I.
inline RootVector two_rho_P(const RootSystem& rs, const NodeSet& levi) {
    RootVector sum(rs.rank(), 0);
    for (const auto& beta : rs.positive_roots) {
        if (detail::supported_on(beta, levi)) continue;
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += beta[j];
    }
    return sum;
}

/// a_α = ⟨2ρ^P, α^∨⟩ for a simple root α outside the Levi set I.
inline int a_alpha(const RootSystem& rs, const NodeSet& levi, std::size_t alpha) {
    if (alpha >= rs.rank()) throw Error("a_alpha: no such simple root");
    if (levi.contains(alpha))
        throw Error("a_alpha: " + rs.simple_root_ids[alpha] + " lies in I, not in S\\I");
    return rs.pair_with_coroot(two_rho_P(rs, levi), alpha);
}

/// dim G/P_J: number of positive roots with support outside J.
inline std::size_t dim_flag(const RootSystem& rs, const NodeSet& levi) {
    return static_cast<std::size_t>(std::count_if(rs.positive_roots.begin(), rs.positive_roots.end(),
                                                   [&](const RootVector& b) { return !detail::supported_on(b, levi); }));
}

inline NodeSet complement(const RootSystem& rs, const NodeSet& nodes) {
    NodeSet out;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (!nodes.contains(i)) out.insert(i);
    return out;
}

// ---------------------------------------------------------------------------
// Diagram pattern for the equality case: each component carries at most one
// marked node, and that node is a simple end of an A_m or C_m diagram.

enum class ComponentVerdict {
    Unmarked,
    SimpleEnd,
    TooManyMarked,
    WrongType,
    NotSimpleEnd,
    /// Rank-2 B/C: both nodes touch the double edge, so the pattern is
    /// undecidable; the numeric identity a_α - 1 = dim G_c/P_α decides.
    NumericOnly,
};

inline const char* to_string(ComponentVerdict v) {
    switch (v) {
        case ComponentVerdict::Unmarked: return "unmarked";
        case ComponentVerdict::SimpleEnd: return "simple-end";
        case ComponentVerdict::TooManyMarked: return "too-many-marked";
        case ComponentVerdict::WrongType: return "wrong-type";
        case ComponentVerdict::NotSimpleEnd: return "not-simple-end";
        case ComponentVerdict::NumericOnly: return "numeric-only";
    }
    return "?";
}

struct ComponentDiagnosis {
    std::size_t component;
    ComponentVerdict verdict;
    bool ok;
};

struct DiagramCheck {
    bool holds = true;
    bool pattern_skipped = false;  // some component was decided numerically
    std::vector<ComponentDiagnosis> components;
};

/// Per-component form of the numeric identity: with α the only marked node of
/// component c, a_α - 1 equals the dimension of G_c/P_{c∖α}.
inline bool component_numeric_identity(const RootSystem& rs, std::size_t component, std::size_t alpha) {
    const auto& comp = rs.components[component];
    const auto local = build_root_system({comp});
    NodeSet levi;
    for (int i = 0; i < comp.rank; ++i)
        if (rs.offset[component] + static_cast<std::size_t>(i) != alpha) levi.insert(static_cast<std::size_t>(i));
    const std::size_t local_alpha = alpha - rs.offset[component];
    return static_cast<std::size_t>(a_alpha(local, levi, local_alpha) - 1) == dim_flag(local, levi);
}

inline DiagramCheck check_condition4_prime(const RootSystem& rs, const NodeSet& marked) {
    DiagramCheck out;
    for (std::size_t ci = 0; ci < rs.components.size(); ++ci) {
        const auto& comp = rs.components[ci];
        std::vector<std::size_t> local;
        for (auto m : marked)
            if (rs.component_of.at(m) == ci) local.push_back(m - rs.offset[ci]);
        ComponentDiagnosis diag{ci, ComponentVerdict::Unmarked, true};
        if (local.size() > 1) {
            diag = {ci, ComponentVerdict::TooManyMarked, false};
        } else if (local.size() == 1) {
            const std::size_t node = local.front() + 1;  // Bourbaki label
            const auto m = static_cast<std::size_t>(comp.rank);
            if ((comp.type == DynkinType::B || comp.type == DynkinType::C) && m == 2) {
                const bool ok = component_numeric_identity(rs, ci, local.front() + rs.offset[ci]);
                diag = {ci, ComponentVerdict::NumericOnly, ok};
                out.pattern_skipped = true;
            } else if (comp.type == DynkinType::A) {
                const bool end = node == 1 || node == m;
                diag = {ci, end ? ComponentVerdict::SimpleEnd : ComponentVerdict::NotSimpleEnd, end};
            } else if (comp.type == DynkinType::C) {
                // node m is the end attached to the double edge
                const bool end = node == 1;
                diag = {ci, end ? ComponentVerdict::SimpleEnd : ComponentVerdict::NotSimpleEnd, end};
            } else {
                diag = {ci, ComponentVerdict::WrongType, false};
            }
        }
        out.holds = out.holds && diag.ok;
        out.components.push_back(diag);
    }
    return out;
}

}  // namespace horofano
