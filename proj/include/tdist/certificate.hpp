#ifndef TDIST_CERTIFICATE_HPP
#define TDIST_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tdist/exact_search.hpp"
#include "tdist/tournament.hpp"

namespace tdist {

std::uint64_t fnv1a64(std::string_view data);

/// Self-contained record of an exact-search result: enough to re-check the
/// claim without re-running the search. Rendered as line-oriented key/value
/// text; the hash is FNV-1a 64 over the canonical ".trn" rendering.
struct Certificate {
    std::string quantity;  // "rho", "rho-prime" or "det"
    std::string input_hash;
    std::optional<int> value;
    std::string witness;  // vertex ids "0 1 2", arcs "0>1 3>6", "" when empty
    bool verified = false;
    bool complete = true;
    int lower_bound = 0;
    SearchStats stats;
};

std::string input_hash_of(const Tournament& t);

Certificate make_certificate(const std::string& quantity, const Tournament& t,
                             const VertexSetResult& r, bool verified);
Certificate make_certificate(const std::string& quantity, const Tournament& t,
                             const ArcSetResult& r, bool verified);

std::string render_certificate(const Certificate& c);

}  // namespace tdist

#endif
