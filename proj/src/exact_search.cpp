#include "tdist/exact_search.hpp"

#include <algorithm>
#include <limits>

#include "tdist/automorphism.hpp"
#include "tdist/labeling.hpp"

namespace tdist {

namespace {

// Enumerates size-s index subsets of 0..m-1 in lexicographic order.
// Returns false from fn to stop.
template <typename Fn>
bool for_each_combination(int m, int s, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (s > m) return true;
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
        int i = s - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - s + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Shared skeleton of the increasing-size minimum searches.
//
// test(element_indices) decides a candidate; skip(element_indices), when
// provided, prunes candidates that some tested representative covers.
template <typename Test, typename Skip>
void run_minimum_search(int universe_size, const SearchBudget& budget, SearchStats& stats,
                        std::optional<int>& value, std::vector<int>& witness, int& lower_bound,
                        bool& complete, Test&& test, Skip&& skip) {
    int max_size = budget.max_subset_size ? std::min(*budget.max_subset_size, universe_size)
                                          : universe_size;
    std::uint64_t remaining = budget.max_candidates ? *budget.max_candidates
                                                    : std::numeric_limits<std::uint64_t>::max();
    for (int s = 0; s <= max_size; ++s) {
        stats.examined_per_size.push_back(0);
        stats.skipped_equivalent_per_size.push_back(0);
        bool out_of_budget = false;
        for_each_combination(universe_size, s, [&](const std::vector<int>& idx) {
            if (skip(idx)) {
                ++stats.skipped_equivalent_per_size.back();
                return true;
            }
            if (remaining == 0) {
                out_of_budget = true;
                return false;
            }
            --remaining;
            ++stats.examined_per_size.back();
            ++stats.examined_total;
            if (test(idx)) {
                value = s;
                witness = idx;
                return false;
            }
            return true;
        });
        if (value) {
            lower_bound = s;
            return;
        }
        if (out_of_budget) {
            lower_bound = s;
            complete = false;
            if (budget.on_exhaustion == SearchBudget::OnExhaustion::fail)
                throw BudgetExhausted("candidate budget exhausted at subset size " +
                                          std::to_string(s) + "; minimum is at least " +
                                          std::to_string(s),
                                      s, stats);
            return;
        }
        lower_bound = s + 1;
    }
    // every size up to the cap failed
    complete = false;
    if (budget.on_exhaustion == SearchBudget::OnExhaustion::fail)
        throw BudgetExhausted("no solution up to subset size " + std::to_string(max_size) +
                                  "; minimum is at least " + std::to_string(max_size + 1),
                              max_size + 1, stats);
}

constexpr auto no_skip = [](const std::vector<int>&) { return false; };

// True when `sorted_set` is the lexicographically least member of its orbit
// under the given automorphisms.
bool lex_min_in_orbit(const std::vector<int>& sorted_set, const std::vector<Permutation>& group) {
    std::vector<int> image;
    for (const Permutation& p : group) {
        if (p.is_identity()) continue;
        image.clear();
        for (int v : sorted_set) image.push_back(p(v));
        std::sort(image.begin(), image.end());
        if (std::lexicographical_compare(image.begin(), image.end(), sorted_set.begin(),
                                         sorted_set.end()))
            return false;
    }
    return true;
}

}  // namespace

bool is_determining_set(const Tournament& t, const std::vector<int>& s) {
    SearchConstraints c;
    c.fixed_pointwise = s;
    c.exclude_identity = true;
    return !find_automorphism(t, c).has_value();
}

bool is_distinguishing_class(const Tournament& t, const std::vector<int>& s) {
    return is_distinguishing_vertex(t, class_to_labeling(t, s)).distinguishing;
}

VertexSetResult det_exact(const Tournament& t, const SearchBudget& budget) {
    VertexSetResult r;
    run_minimum_search(
        t.order(), budget, r.stats, r.value, r.witness, r.lower_bound, r.complete,
        [&](const std::vector<int>& s) { return is_determining_set(t, s); }, no_skip);
    return r;
}

VertexSetResult rho_exact(const Tournament& t, const SearchBudget& budget, int orbit_prune_guard) {
    std::vector<Permutation> group;
    if (t.order() <= orbit_prune_guard) group = enumerate_automorphisms(t, orbit_prune_guard);

    VertexSetResult r;
    auto skip = [&](const std::vector<int>& s) {
        return group.size() > 1 && !lex_min_in_orbit(s, group);
    };
    run_minimum_search(
        t.order(), budget, r.stats, r.value, r.witness, r.lower_bound, r.complete,
        [&](const std::vector<int>& s) { return is_distinguishing_class(t, s); }, skip);
    return r;
}

ArcSetResult rho_prime_exact(const Tournament& t, const RhoPrimeOptions& options) {
    int n = t.order();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && t.arc_unchecked(u, v)) arcs.emplace_back(u, v);
    std::sort(arcs.begin(), arcs.end());

    std::vector<int> module_of;  // only for the Prop. 4 filter
    int module_count = 0;
    if (options.module_filter) {
        int k = 0;
        long long p = 1;
        while (p < n) {
            p *= 3;
            ++k;
        }
        if (p != n || k < 1 || !(t == Tournament::hk(k)))
            throw std::invalid_argument(
                "the basic-module filter applies only to H_k inputs (k >= 1)");
        module_of.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) module_of[static_cast<std::size_t>(v)] = v / 3;
        module_count = n / 3;
    }

    auto skip = [&](const std::vector<int>& idx) {
        if (!options.module_filter) return false;
        // a distinguishing arc set must give every basic module an endpoint
        std::vector<char> covered(static_cast<std::size_t>(module_count), 0);
        int hit = 0;
        for (int i : idx) {
            auto [u, v] = arcs[static_cast<std::size_t>(i)];
            for (int w : {u, v}) {
                char& c = covered[static_cast<std::size_t>(module_of[static_cast<std::size_t>(w)])];
                if (!c) {
                    c = 1;
                    ++hit;
                }
            }
        }
        return hit < module_count;
    };

    ArcSetResult r;
    std::optional<int> value;
    std::vector<int> witness_idx;
    run_minimum_search(
        static_cast<int>(arcs.size()), options.budget, r.stats, value, witness_idx, r.lower_bound,
        r.complete,
        [&](const std::vector<int>& idx) {
            std::vector<std::pair<int, int>> black;
            black.reserve(idx.size());
            for (int i : idx) black.push_back(arcs[static_cast<std::size_t>(i)]);
            return is_distinguishing_arc(t, ArcLabeling::from_black_arcs(std::move(black)))
                .distinguishing;
        },
        skip);
    r.value = value;
    for (int i : witness_idx) r.witness.push_back(arcs[static_cast<std::size_t>(i)]);
    return r;
}

std::vector<int> min_distinguishing_class_within(const Tournament& t, const std::vector<int>& s,
                                                 int bound) {
    InducedSubtournament induced = induced_subtournament(t, s);
    int m = induced.sub.order();
    for (int size = 0; size <= std::min(bound, m); ++size) {
        std::optional<std::vector<int>> found;
        for_each_combination(m, size, [&](const std::vector<int>& idx) {
            if (is_distinguishing_class(induced.sub, idx)) {
                found = idx;
                return false;
            }
            return true;
        });
        if (found) {
            std::vector<int> mapped;
            mapped.reserve(found->size());
            for (int i : *found) mapped.push_back(induced.vertices[static_cast<std::size_t>(i)]);
            return mapped;
        }
    }
    throw std::runtime_error("no distinguishing class of the induced subtournament within bound " +
                             std::to_string(bound) + "; this contradicts the floor(|S|/2) bound");
}

}  // namespace tdist
