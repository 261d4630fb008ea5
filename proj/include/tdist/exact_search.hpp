#ifndef TDIST_EXACT_SEARCH_HPP
#define TDIST_EXACT_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdist/tournament.hpp"

namespace tdist {

/// Caps for the exhaustive subset searches. Exceeding a cap either throws
/// BudgetExhausted or returns an incomplete result, per `on_exhaustion`.
struct SearchBudget {
    std::optional<int> max_subset_size;
    std::optional<std::uint64_t> max_candidates;
    enum class OnExhaustion { fail, return_best_found };
    OnExhaustion on_exhaustion = OnExhaustion::fail;
};

/// Replayable account of an increasing-size search: every size below the
/// returned minimum was exhausted, candidate by candidate.
struct SearchStats {
    std::vector<std::uint64_t> examined_per_size;
    std::vector<std::uint64_t> skipped_equivalent_per_size;  // orbit-pruned, covered by a tested representative
    std::uint64_t examined_total = 0;
};

struct VertexSetResult {
    std::optional<int> value;  // certified minimum; unset iff the budget stopped the search
    std::vector<int> witness;  // lexicographically least witness of that size
    int lower_bound = 0;       // smallest size not fully ruled out
    SearchStats stats;
    bool complete = true;
};

struct ArcSetResult {
    std::optional<int> value;
    std::vector<std::pair<int, int>> witness;
    int lower_bound = 0;
    SearchStats stats;
    bool complete = true;
};

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted(std::string what_, int lower_bound_, SearchStats stats_)
        : std::runtime_error(std::move(what_)),
          lower_bound(lower_bound_),
          stats(std::move(stats_)) {}
    int lower_bound;  // the certified bound gathered before exhaustion
    SearchStats stats;
};

/// Pointwise-stabilizer formulation: S is determining iff no nontrivial
/// automorphism fixes every member of S.
bool is_determining_set(const Tournament& t, const std::vector<int>& s);

/// Setwise formulation via labelings: S is a distinguishing class iff the
/// labeling with S black and the rest white is distinguishing.
bool is_distinguishing_class(const Tournament& t, const std::vector<int>& s);

/// Minimum determining-set size, by increasing-size subset enumeration.
VertexSetResult det_exact(const Tournament& t, const SearchBudget& budget = {});

/// Minimum distinguishing vertex class size. When the automorphism group is
/// enumerable (order guard `orbit_prune_guard`), subsets equivalent under
/// Aut(t) are tested once, via their lexicographically least representative;
/// correctness never depends on the pruning.
VertexSetResult rho_exact(const Tournament& t, const SearchBudget& budget = {},
                          int orbit_prune_guard = 12);

struct RhoPrimeOptions {
    SearchBudget budget;
    /// Discards arc sets that leave some basic module of H_k with no black
    /// endpoint (the pigeonhole argument). Requires the input to be H_k
    /// bit-exactly; off by default so the unpruned oracle stays available.
    bool module_filter = false;
};

/// Minimum distinguishing arc class size over black-arc subsets.
ArcSetResult rho_prime_exact(const Tournament& t, const RhoPrimeOptions& options = {});

/// Smallest distinguishing vertex class of T[S] with size <= bound, mapped
/// back to T's vertex ids. A bound of floor(|S|/2) always suffices; failure
/// to find one within the bound throws (it would contradict that bound).
std::vector<int> min_distinguishing_class_within(const Tournament& t, const std::vector<int>& s,
                                                 int bound);

}  // namespace tdist

#endif
