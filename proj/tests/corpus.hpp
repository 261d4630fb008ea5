#ifndef TDIST_TESTS_CORPUS_HPP
#define TDIST_TESTS_CORPUS_HPP

// Shared seeded corpora. The n <= 7 corpus is the reference set used by the
// group-order, determining-number and bound-conformance suites: 200
// tournaments, orders 3..7, seeds 1..40 each.

#include <cstdint>
#include <vector>

#include "tdist/tournament.hpp"

namespace tdist::testing {

struct CorpusEntry {
    int n;
    std::uint64_t seed;
    Tournament tournament;
};

inline std::vector<CorpusEntry> corpus_n7() {
    std::vector<CorpusEntry> out;
    out.reserve(200);
    for (int n = 3; n <= 7; ++n)
        for (std::uint64_t seed = 1; seed <= 40; ++seed)
            out.push_back({n, seed, Tournament::random(n, seed)});
    return out;
}

}  // namespace tdist::testing

#endif
