#ifndef TDIST_AUTOMORPHISM_HPP
#define TDIST_AUTOMORPHISM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "tdist/labeling.hpp"
#include "tdist/permutation.hpp"
#include "tdist/tournament.hpp"

namespace tdist {

/// What a sought automorphism must satisfy. Labelings are preserved in the
/// usual sense: phi(sigma(v)) = phi(v) for vertices, phi(uv) = phi(sigma(u)
/// sigma(v)) for arcs. Vertices in `fixed_pointwise` must map to themselves.
struct SearchConstraints {
    std::optional<VertexLabeling> vertex_labels;
    std::optional<ArcLabeling> arc_labels;
    std::vector<int> fixed_pointwise;
    bool exclude_identity = false;
};

/// Direct definition check: orient[u][v] = orient[p(u)][p(v)] for all u,v.
bool is_automorphism(const Tournament& t, const Permutation& p);

/// Complete backtracking search for an automorphism satisfying every
/// constraint. Branches on the lowest-id unassigned vertex with candidate
/// images tried in ascending order (after forced assignments propagate), so
/// the first solution found — and the one returned — has the
/// lexicographically least image sequence. Returns nullopt when none exists.
std::optional<Permutation> find_automorphism(const Tournament& t,
                                             const SearchConstraints& constraints = {});

/// Streams every automorphism of t (identity included) in lexicographic
/// image order. Return false from the callback to stop early. No order
/// guard: the caller owns the cost, which is |Aut(t)| and can be huge.
void for_each_automorphism(const Tournament& t, const std::function<bool(const Permutation&)>& fn);

/// Complete, lexicographically sorted list of Aut(t). Guarded by default at
/// n <= 12; use for_each_automorphism to stream beyond the guard.
std::vector<Permutation> enumerate_automorphisms(const Tournament& t, int guard = 12);

/// Vertex orbits of Aut(t), each sorted, ordered by smallest member.
/// Within the guard the group is enumerated; beyond it orbits are joined by
/// one constrained existence search per candidate vertex pair.
std::vector<std::vector<int>> orbits(const Tournament& t, int guard = 12);

}  // namespace tdist

#endif
