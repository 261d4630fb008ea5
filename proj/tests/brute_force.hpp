#ifndef TDIST_TESTS_BRUTE_FORCE_HPP
#define TDIST_TESTS_BRUTE_FORCE_HPP

// Test-only oracles that stay independent of the pruned search: everything
// here walks all n! permutations (or all subsets) and applies the raw
// definitions, so it is usable up to n = 9 or so.

#include <algorithm>
#include <numeric>
#include <vector>

#include "tdist/automorphism.hpp"
#include "tdist/labeling.hpp"
#include "tdist/permutation.hpp"
#include "tdist/tournament.hpp"

namespace tdist::testing {

inline std::vector<Permutation> brute_automorphisms(const Tournament& t) {
    std::vector<int> image(static_cast<std::size_t>(t.order()));
    std::iota(image.begin(), image.end(), 0);
    std::vector<Permutation> group;
    do {
        Permutation p{image};
        if (is_automorphism(t, p)) group.push_back(p);
    } while (std::next_permutation(image.begin(), image.end()));
    return group;  // lexicographic by construction
}

inline bool preserves_vertex_labeling(const Permutation& p, const VertexLabeling& l) {
    for (int v = 0; v < p.degree(); ++v)
        if (l.at(p(v)) != l.at(v)) return false;
    return true;
}

inline bool preserves_arc_labeling(const Tournament& t, const Permutation& p,
                                   const ArcLabeling& l) {
    for (int u = 0; u < t.order(); ++u)
        for (int v = 0; v < t.order(); ++v)
            if (u != v && t.arc_unchecked(u, v) && l.is_black(u, v) != l.is_black(p(u), p(v)))
                return false;
    return true;
}

inline bool brute_is_distinguishing_vertex(const Tournament& t, const VertexLabeling& l) {
    for (const Permutation& p : brute_automorphisms(t))
        if (!p.is_identity() && preserves_vertex_labeling(p, l)) return false;
    return true;
}

inline bool brute_is_distinguishing_arc(const Tournament& t, const ArcLabeling& l) {
    for (const Permutation& p : brute_automorphisms(t))
        if (!p.is_identity() && preserves_arc_labeling(t, p, l)) return false;
    return true;
}

inline bool brute_is_determining(const Tournament& t, const std::vector<int>& s) {
    for (const Permutation& p : brute_automorphisms(t)) {
        if (p.is_identity()) continue;
        bool fixes = true;
        for (int v : s) fixes &= p(v) == v;
        if (fixes) return false;
    }
    return true;
}

// Every subset of 0..n-1 in (size, lex) order until fn returns true; gives
// back the first accepted subset.
template <typename Fn>
std::vector<int> first_subset_by_size(int n, Fn&& fn) {
    for (int size = 0; size <= n; ++size) {
        std::vector<int> subset(static_cast<std::size_t>(size));
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            if (fn(static_cast<const std::vector<int>&>(subset))) return subset;
            int i = size - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return {};  // unreachable for the quantities we brute-force
}

inline int brute_rho(const Tournament& t) {
    auto group = brute_automorphisms(t);
    auto subset = first_subset_by_size(t.order(), [&](const std::vector<int>& s) {
        VertexLabeling l = class_to_labeling(t, s);
        for (const Permutation& p : group)
            if (!p.is_identity() && preserves_vertex_labeling(p, l)) return false;
        return true;
    });
    return static_cast<int>(subset.size());
}

inline int brute_det(const Tournament& t) {
    auto subset = first_subset_by_size(
        t.order(), [&](const std::vector<int>& s) { return brute_is_determining(t, s); });
    return static_cast<int>(subset.size());
}

}  // namespace tdist::testing

#endif
