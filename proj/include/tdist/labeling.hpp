#ifndef TDIST_LABELING_HPP
#define TDIST_LABELING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdist/permutation.hpp"
#include "tdist/tournament.hpp"

namespace tdist {

enum class Color : std::uint8_t { white, black };

/// Total 2-labeling of the vertices of a tournament.
struct VertexLabeling {
    std::vector<Color> colors;

    int size() const noexcept { return static_cast<int>(colors.size()); }
    Color at(int v) const { return colors[static_cast<std::size_t>(v)]; }
    int black_count() const;

    bool operator==(const VertexLabeling&) const = default;
};

/// Total 2-labeling of the arcs, stored sparsely as the black class;
/// every other arc is white. Pairs are kept sorted and unique.
struct ArcLabeling {
    std::vector<std::pair<int, int>> black_arcs;

    static ArcLabeling from_black_arcs(std::vector<std::pair<int, int>> arcs);

    bool is_black(int u, int v) const;
    int black_count() const noexcept { return static_cast<int>(black_arcs.size()); }

    /// Throws unless every black pair is an arc of t.
    void validate_against(const Tournament& t) const;

    bool operator==(const ArcLabeling&) const = default;
};

/// The recursive labelings of the H_k family: a white labeling puts white
/// labelings on tertians 1 and 2 and a black labeling on tertian 3, and
/// dually; the single vertex of H_0 takes the labeling's own colour.
/// A white labeling has exactly (3^k-1)/2 black vertices.
VertexLabeling white_labeling(int k);
VertexLabeling black_labeling(int k);

/// Members of S become the black class, the rest white.
VertexLabeling class_to_labeling(const Tournament& t, const std::vector<int>& s);

/// Outcome of a distinguishing check: when the labeling fails, `witness` is a
/// nontrivial automorphism preserving it (the lexicographically least one).
struct DistinguishingVerdict {
    bool distinguishing;
    std::optional<Permutation> witness;

    explicit operator bool() const noexcept { return distinguishing; }
};

DistinguishingVerdict is_distinguishing_vertex(const Tournament& t, const VertexLabeling& l);
DistinguishingVerdict is_distinguishing_arc(const Tournament& t, const ArcLabeling& l);

/// ".vlab": one line of n characters 'W'/'B', trailing newline required.
std::string render_vlab(const VertexLabeling& l);
VertexLabeling parse_vlab(std::string_view text, int n);

/// ".alab": one "u v" black arc per line, sorted ascending on output;
/// input accepts any order but rejects duplicates.
std::string render_alab(const ArcLabeling& l);
ArcLabeling parse_alab(std::string_view text);

}  // namespace tdist

#endif
