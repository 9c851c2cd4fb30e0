#pragma once

// Simple-polytope combinatorics. A polytope is stored purely by its
// vertex-facet incidence: every vertex of a simple n-polytope lies on
// exactly n facets, and every face of codimension k is cut out by the
// k-subsets of those vertex sets. That is all the downstream cohomology
// needs, so no geometric coordinates appear anywhere.

#include "qtoric/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

struct SimplePolytope {
    int dim_n = 0;                          // dimension n
    int num_facets = 0;                     // m
    std::vector<std::vector<int>> vertices; // each vertex = sorted set of n facet indices
};

struct HVector {
    std::vector<long long> entries;  // h_0 .. h_n

    long long at(std::size_t i) const {
        return i < entries.size() ? entries[i] : 0;
    }
    long long sum() const {
        long long s = 0;
        for (auto e : entries) s += e;
        return s;
    }
    bool operator==(const HVector&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    // Combinatorial checks only; polytopality of the incidence structure is
    // assumed, not tested.
    bool polytopality_assumed = true;

    bool valid() const { return violations.empty(); }
};

// Supported dimension range; the face enumeration walks all 2^n subsets of
// each vertex set.
inline constexpr int kMaxDimension = 16;

namespace detail {

inline void check_dimension(int n) {
    if (n < 1) throw std::invalid_argument("polytope dimension must be >= 1");
    if (n > kMaxDimension) throw std::invalid_argument("polytope dimension exceeds supported cap");
}

// Structural checks that do not need the h-vector. Returns messages.
inline std::vector<std::string> structural_violations(const SimplePolytope& p) {
    std::vector<std::string> out;
    if (p.dim_n < 1) out.push_back("dimension must be positive");
    if (p.num_facets < 1) out.push_back("facet count must be positive");
    if (p.dim_n > kMaxDimension) out.push_back("dimension exceeds supported cap");
    if (!out.empty()) return out;

    std::vector<bool> facet_used(p.num_facets, false);
    std::set<std::vector<int>> seen;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        std::vector<int> sorted = p.vertices[v];
        std::sort(sorted.begin(), sorted.end());
        const std::string tag = "vertex " + std::to_string(v);
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            out.push_back(tag + ": repeated facet in vertex");
            continue;
        }
        if (static_cast<int>(sorted.size()) != p.dim_n) {
            out.push_back(tag + ": expected exactly " + std::to_string(p.dim_n) + " facets");
            continue;
        }
        if (sorted.front() < 0 || sorted.back() >= p.num_facets) {
            out.push_back(tag + ": facet index out of range");
            continue;
        }
        if (!seen.insert(sorted).second) {
            out.push_back(tag + ": duplicate vertex");
            continue;
        }
        for (int f : sorted) facet_used[f] = true;
    }
    if (p.vertices.empty()) out.push_back("polytope has no vertices");
    for (int f = 0; f < p.num_facets; ++f)
        if (!facet_used[f]) out.push_back("facet " + std::to_string(f) + " unused by every vertex");
    return out;
}

}  // namespace detail

// Number of codimension-k faces for k = 0..n, i.e. the face counts of the
// dual simplicial sphere shifted by one: entry k counts the k-subsets of
// facets that lie in some common vertex. Entry 0 is always 1.
inline std::vector<long long> face_subset_counts(const SimplePolytope& p) {
    detail::check_dimension(p.dim_n);
    const int n = p.dim_n;
    std::set<std::vector<int>> faces;
    for (const auto& vertex : p.vertices) {
        std::vector<int> sorted = vertex;
        std::sort(sorted.begin(), sorted.end());
        const std::uint32_t subsets = 1u << n;
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            std::vector<int> subset;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) subset.push_back(sorted[b]);
            faces.insert(std::move(subset));
        }
    }
    std::vector<long long> counts(n + 1, 0);
    counts[0] = 1;
    for (const auto& f : faces) ++counts[f.size()];
    return counts;
}

// h-vector by the standard transform of the dual face counts:
//   h_j = sum_i (-1)^{j-i} C(n-i, j-i) counts[i].
inline HVector h_vector(const SimplePolytope& p) {
    auto structural = detail::structural_violations(p);
    if (!structural.empty()) throw std::invalid_argument("invalid polytope: " + structural.front());
    const int n = p.dim_n;
    std::vector<long long> counts = face_subset_counts(p);
    HVector h;
    h.entries.assign(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        Integer sum = 0;
        for (int i = 0; i <= j; ++i) {
            Integer term = binomial(n - i, j - i) * counts[i];
            sum += ((j - i) % 2 == 0) ? term : -term;
        }
        h.entries[j] = sum.convert_to<long long>();
    }
    return h;
}

inline long long euler_characteristic(const SimplePolytope& p) {
    auto structural = detail::structural_violations(p);
    if (!structural.empty()) throw std::invalid_argument("invalid polytope: " + structural.front());
    return static_cast<long long>(p.vertices.size());
}

inline ValidationReport validate(const SimplePolytope& p) {
    ValidationReport report;
    report.violations = detail::structural_violations(p);
    if (!report.violations.empty()) return report;
    HVector h = h_vector(p);
    if (h.entries[0] != 1)
        report.violations.push_back("h-vector does not start at 1");
    if (h.sum() != static_cast<long long>(p.vertices.size()))
        report.violations.push_back("h-vector sum differs from vertex count");
    const int n = p.dim_n;
    for (int i = 0; i <= n / 2; ++i)
        if (h.entries[i] != h.entries[n - i]) {
            report.violations.push_back("Dehn-Sommerville symmetry fails: h_" + std::to_string(i) +
                                        " != h_" + std::to_string(n - i));
            break;
        }
    return report;
}

// n-cube: facets i and i+n are opposite; vertex sets pick one facet from
// each opposite pair.
inline SimplePolytope cube(int n) {
    detail::check_dimension(n);
    SimplePolytope p;
    p.dim_n = n;
    p.num_facets = 2 * n;
    const std::uint32_t count = 1u << n;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        std::vector<int> vertex;
        for (int i = 0; i < n; ++i) vertex.push_back((mask & (1u << i)) ? i + n : i);
        std::sort(vertex.begin(), vertex.end());
        p.vertices.push_back(std::move(vertex));
    }
    return p;
}

// n-simplex: m = n+1 facets, each vertex omits exactly one facet.
inline SimplePolytope simplex(int n) {
    detail::check_dimension(n);
    SimplePolytope p;
    p.dim_n = n;
    p.num_facets = n + 1;
    for (int omit = n; omit >= 0; --omit) {
        std::vector<int> vertex;
        for (int f = 0; f <= n; ++f)
            if (f != omit) vertex.push_back(f);
        p.vertices.push_back(std::move(vertex));
    }
    return p;
}

// Cartesian product: facets of b are shifted past those of a, vertices are
// unions of one vertex from each factor.
inline SimplePolytope product(const SimplePolytope& a, const SimplePolytope& b) {
    detail::check_dimension(a.dim_n);
    detail::check_dimension(b.dim_n);
    if (a.dim_n + b.dim_n > kMaxDimension)
        throw std::invalid_argument("product dimension exceeds supported cap");
    SimplePolytope p;
    p.dim_n = a.dim_n + b.dim_n;
    p.num_facets = a.num_facets + b.num_facets;
    for (const auto& va : a.vertices)
        for (const auto& vb : b.vertices) {
            std::vector<int> vertex = va;
            for (int f : vb) vertex.push_back(f + a.num_facets);
            p.vertices.push_back(std::move(vertex));
        }
    return p;
}

// True when the facet set {a, b} spans a face, i.e. lies in some vertex set.
inline bool facets_share_face(const SimplePolytope& p, int a, int b) {
    for (const auto& vertex : p.vertices) {
        bool has_a = false, has_b = false;
        for (int f : vertex) {
            has_a |= (f == a);
            has_b |= (f == b);
        }
        if (has_a && has_b) return true;
    }
    return false;
}

}  // namespace qtoric
