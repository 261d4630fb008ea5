#ifndef TDIST_PERMUTATION_HPP
#define TDIST_PERMUTATION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace tdist {

/// Bijection on vertex ids 0..n-1, stored as the image sequence.
struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n);

    int degree() const noexcept { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[static_cast<std::size_t>(v)]; }
    bool is_identity() const;

    /// Throws if the image sequence is not a bijection on 0..n-1.
    void validate() const;

    auto operator<=>(const Permutation&) const = default;
};

/// One line of space-separated images, or cycle notation with `cycles=true`
/// (fixed points omitted, identity rendered as "()").
std::string render_permutation(const Permutation& p, bool cycles = false);

/// Accepts both the one-line image form and cycle notation "(0 1 2)(4 5)".
Permutation parse_permutation(std::string_view text, int n);

}  // namespace tdist

#endif
