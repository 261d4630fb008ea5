#ifndef TDIST_TOURNAMENT_HPP
#define TDIST_TOURNAMENT_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdist {

/// Error raised by the text-format parsers. Positions are 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
    int line;
    int col;
};

/// Complete oriented graph on vertices 0..n-1, one arc per unordered pair.
/// Immutable after construction; the orientation matrix is bit-packed row-wise.
class Tournament {
public:
    Tournament() = default;

    /// Builds a tournament from an explicit arc list. Every unordered pair
    /// {i,j}, i != j, must appear exactly once; violations are rejected with
    /// a diagnostic naming the offending pair.
    static Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    /// The recursive family H_k: H_0 is a single vertex; H_k substitutes each
    /// vertex of the directed triangle by a copy of H_{k-1} (a tertian), with
    /// block orientation T_1 -> T_2 -> T_3 -> T_1 at every level.
    /// Guarded at k <= 10 (n = 59049).
    static Tournament hk(int k);

    /// Seeded random tournament: each unordered pair (i,j), i < j, taken in
    /// lexicographic order, is oriented i->j iff the low bit of the next draw
    /// of a std::mt19937_64 seeded with `seed` is zero. Identical (n, seed)
    /// gives bit-identical output on every platform.
    static Tournament random(int n, std::uint64_t seed);

    /// Transitive tournament: arc i->j iff i < j.
    static Tournament transitive(int n);

    int order() const noexcept { return n_; }

    bool arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return arc_unchecked(u, v);
    }

    bool arc_unchecked(int u, int v) const noexcept {
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (static_cast<unsigned>(v) % 64)) & 1u;
    }

    int out_degree(int v) const;

    /// Bit row of out-neighbours of v; row_words() words, high bits zero.
    std::span<const std::uint64_t> out_row(int v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::size_t row_words() const noexcept { return words_; }

    bool operator==(const Tournament&) const = default;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id " + std::to_string(v) +
                                    " out of range 0.." + std::to_string(n_ - 1));
    }

private:
    explicit Tournament(int n);
    void set_arc(int u, int v);  // orients u->v; builder use only

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Base-3 positional addressing of H_k: digit d of a vertex id (most
/// significant first) is its tertian index at recursion level d+1, so tertian
/// and basic-module membership are arithmetic, never stored.
struct HkIndex {
    int k;

    explicit HkIndex(int k_);

    int order() const noexcept { return order_; }

    /// Top-level tertian of v: 0, 1 or 2.
    int tertian_of(int v) const { return v / (order_ / 3); }

    /// Half-open id range [first, last) of top-level tertian i.
    std::pair<int, int> tertian_range(int i) const {
        int w = order_ / 3;
        return {i * w, (i + 1) * w};
    }

    /// Index of the basic module containing v (k >= 1).
    int basic_module_of(int v) const { return v / 3; }

    /// Members of basic module m: {3m, 3m+1, 3m+2}.
    std::array<int, 3> basic_module(int m) const {
        return {3 * m, 3 * m + 1, 3 * m + 2};
    }

private:
    int order_;
};

/// D_T(x,y): number of vertices z related differently to x and y, i.e. with
/// (z->x and y->z) or (x->z and z->y). Separates same-module pairs
/// (< 3^{k-1} in H_k) from cross-tertian pairs (>= 3^{k-1}).
int relationship_difference(const Tournament& t, int x, int y);

/// True iff every vertex outside X relates uniformly to all of X.
bool is_module(const Tournament& t, const std::vector<int>& x);

/// The 3^{k-1} disjoint triples {3m, 3m+1, 3m+2} decomposing H_k (k >= 1).
std::vector<std::array<int, 3>> basic_modules(int k);

/// Hamiltonian path by insertion: each vertex is inserted before the first
/// current-path vertex it beats, else appended. Always succeeds.
std::vector<int> hamiltonian_path(const Tournament& t);

struct InducedSubtournament {
    Tournament sub;
    std::vector<int> vertices;  // new id -> old id, ascending

    int old_to_new(int old_id) const;
};

/// Subtournament induced by a nonempty vertex set, ids renumbered in
/// ascending order of the originals.
InducedSubtournament induced_subtournament(const Tournament& t, const std::vector<int>& s);

/// ".trn" text format: line 1 is n in decimal, then n rows of n characters
/// '0'/'1' with row i column j = orient[i][j]. Trailing newline required.
std::string render_trn(const Tournament& t);
Tournament parse_trn(std::string_view text);

}  // namespace tdist

#endif
