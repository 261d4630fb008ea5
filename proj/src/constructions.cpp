#include "tdist/constructions.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

#include "tdist/automorphism.hpp"

namespace tdist {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// The oriented arc of t on the unordered pair {a, b}.
std::pair<int, int> arc_between(const Tournament& t, int a, int b) {
    return t.arc(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Detects whether t is bit-exactly H_k for some k >= 1.
int hk_depth_of(const Tournament& t) {
    int n = t.order();
    int k = 0;
    long long p = 1;
    while (p < n) {
        p *= 3;
        ++k;
    }
    if (p != n || k < 1) return -1;
    return t == Tournament::hk(k) ? k : -1;
}

}  // namespace

std::vector<int> complement_reduce(const Tournament& t, const std::vector<int>& s) {
    std::vector<int> klass = sorted_unique(s);
    if (!is_distinguishing_class(t, klass))
        throw std::invalid_argument("complement_reduce needs a distinguishing class");
    std::vector<int> complement;
    complement.reserve(static_cast<std::size_t>(t.order()) - klass.size());
    std::size_t i = 0;
    for (int v = 0; v < t.order(); ++v) {
        if (i < klass.size() && klass[i] == v)
            ++i;
        else
            complement.push_back(v);
    }
    return complement.size() < klass.size() ? complement : klass;
}

std::vector<int> find_determining_set_bounded(const Tournament& t, const SearchBudget& budget) {
    int bound = t.order() / 3;

    int k = hk_depth_of(t);
    if (k >= 1) {
        // one vertex per basic module pins every rotation level
        std::vector<int> reps;
        reps.reserve(static_cast<std::size_t>(t.order() / 3));
        for (int v = 0; v < t.order(); v += 3) reps.push_back(v);
        if (is_determining_set(t, reps)) return reps;
        // fall through to the search if the shortcut ever failed to verify
    }

    SearchBudget capped = budget;
    capped.max_subset_size = budget.max_subset_size ? std::min(*budget.max_subset_size, bound)
                                                    : bound;
    capped.on_exhaustion = SearchBudget::OnExhaustion::fail;
    try {
        VertexSetResult r = det_exact(t, capped);
        return r.witness;
    } catch (const BudgetExhausted& e) {
        if (e.lower_bound > bound)
            throw std::runtime_error(
                "no determining set of size at most floor(n/3) = " + std::to_string(bound) +
                " exists; this contradicts the floor(n/3) bound");
        throw;
    }
}

Thm4Trace plan_thm4_arcs(const Tournament& t, const std::vector<int>& s,
                         const std::vector<int>& r) {
    Thm4Trace trace;
    trace.determining_set = sorted_unique(s);
    trace.distinguishing_subset = sorted_unique(r);
    const std::vector<int>& rr = trace.distinguishing_subset;
    if (!std::includes(trace.determining_set.begin(), trace.determining_set.end(), rr.begin(),
                       rr.end()))
        throw std::invalid_argument("distinguishing subset must lie inside the determining set");

    std::vector<int> sr;  // S \ R, ascending
    std::set_difference(trace.determining_set.begin(), trace.determining_set.end(), rr.begin(),
                        rr.end(), std::back_inserter(sr));

    // pair S \ R and triple R greedily in ascending id order
    std::size_t i = 0;
    for (; i + 1 < sr.size(); i += 2) trace.pairs.push_back({sr[i], sr[i + 1]});
    std::vector<int> leftover_sr(sr.begin() + static_cast<std::ptrdiff_t>(i), sr.end());

    std::size_t j = 0;
    for (; j + 2 < rr.size(); j += 3) trace.triples.push_back({rr[j], rr[j + 1], rr[j + 2]});
    std::vector<int> leftover_r(rr.begin() + static_cast<std::ptrdiff_t>(j), rr.end());

    // u_1 is the S \ R leftover when there is one, then R leftovers ascending
    trace.leftover = leftover_sr;
    trace.leftover.insert(trace.leftover.end(), leftover_r.begin(), leftover_r.end());

    auto covered_pair_vertex = [&]() -> int {
        return trace.pairs.empty() ? -1 : trace.pairs.front()[0];
    };
    auto covered_triple_vertex = [&]() -> int {
        return trace.triples.empty() ? -1 : trace.triples.front()[0];
    };

    switch (trace.leftover.size()) {
        case 0:
            trace.case_id = "U0";
            break;
        case 1: {
            int u1 = trace.leftover[0];
            if (rr.empty()) {
                trace.case_id = "U1a";
                int w = covered_pair_vertex();
                if (w < 0) {
                    // |S| = 1: T[S] has no arcs at all, so attach u_1 to the
                    // least vertex outside S; u_1 stays pinned as the only
                    // vertex on a black arc inside the determining set
                    for (int v = 0; v < t.order() && w < 0; ++v)
                        if (v != u1) w = v;
                    if (w < 0)
                        throw std::invalid_argument(
                            "cannot place a black arc in a single-vertex tournament");
                }
                trace.extra_arcs.push_back(arc_between(t, w, u1));
            } else {
                trace.case_id = "U1b";
                int w = covered_triple_vertex();
                if (w < 0) w = covered_pair_vertex();  // R = {u_1}: join the unique pair path
                if (w < 0)
                    throw std::runtime_error("leftover handling found no covered vertex to join");
                trace.extra_arcs.push_back(arc_between(t, w, u1));
            }
            break;
        }
        case 2: {
            int u1 = trace.leftover[0];
            int u2 = trace.leftover[1];
            int w = covered_pair_vertex();
            if (sr.empty() || w < 0) {
                trace.case_id = "U2a";
            } else {
                trace.case_id = "U2b";
                trace.extra_arcs.push_back(arc_between(t, w, u1));
            }
            trace.extra_arcs.push_back(arc_between(t, u1, u2));
            break;
        }
        case 3: {
            int u1 = trace.leftover[0];
            int u2 = trace.leftover[1];
            int u3 = trace.leftover[2];
            trace.extra_arcs.push_back(arc_between(t, u1, u2));
            trace.extra_arcs.push_back(arc_between(t, u2, u3));
            int w = covered_triple_vertex();
            if (w >= 0) {
                trace.case_id = "U3b";
                trace.extra_arcs.push_back(arc_between(t, w, u1));
            } else {
                trace.case_id = "U3a";
            }
            break;
        }
        default:
            throw std::logic_error("grouping left more than three vertices uncovered");
    }
    return trace;
}

ArcLabeling thm4_labeling_from_trace(const Tournament& t, const Thm4Trace& trace) {
    std::vector<std::pair<int, int>> black;
    for (const auto& p : trace.pairs) black.push_back(arc_between(t, p[0], p[1]));
    for (const auto& triple : trace.triples) {
        // prefer two arcs forming a directed path; x -> y -> z always exists
        // in a 3-vertex tournament, pick the lexicographically least ordering
        std::array<int, 3> best{-1, -1, -1};
        std::array<int, 3> perm = triple;
        std::sort(perm.begin(), perm.end());
        do {
            if (t.arc(perm[0], perm[1]) && t.arc(perm[1], perm[2])) {
                best = perm;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (best[0] < 0)
            throw std::logic_error("no directed path through a triple; not a tournament?");
        black.emplace_back(best[0], best[1]);
        black.emplace_back(best[1], best[2]);
    }
    black.insert(black.end(), trace.extra_arcs.begin(), trace.extra_arcs.end());
    return ArcLabeling::from_black_arcs(std::move(black));
}

Thm4Result construct_thm4_labeling(const Tournament& t, const SearchBudget& budget) {
    if (t.order() < 1) throw std::invalid_argument("tournament is empty");

    std::vector<int> s = find_determining_set_bounded(t, budget);
    std::vector<int> r;
    if (!s.empty())
        r = min_distinguishing_class_within(t, s, static_cast<int>(s.size()) / 2);

    Thm4Trace trace = plan_thm4_arcs(t, s, r);
    ArcLabeling labeling = thm4_labeling_from_trace(t, trace);

    DistinguishingVerdict verdict = is_distinguishing_arc(t, labeling);
    if (!verdict.distinguishing) throw Thm4VerificationError(*verdict.witness, trace);
    return {std::move(labeling), std::move(trace)};
}

ArcLabeling construct_hk_arc_labeling(int k, bool verify) {
    if (k < 1)
        throw std::invalid_argument("H_0 has no arcs to label; need k >= 1");

    // black arc sets plus the one primitive arc each level keeps track of
    struct Level {
        std::vector<std::pair<int, int>> black;
        std::pair<int, int> primitive;  // a black arc inside a basic module
    };
    // builds the labeling of H_depth shifted by `offset`
    std::function<Level(int, int)> build = [&](int depth, int offset) -> Level {
        if (depth == 1) {
            std::pair<int, int> arc{offset, offset + 1};
            return {{arc}, arc};
        }
        if (depth == 2) {
            // primitive arc in tertian 1, crossing arc from tertian 2 to 3
            std::pair<int, int> prim{offset, offset + 1};
            std::pair<int, int> cross{offset + 3, offset + 6};
            return {{prim, cross}, prim};
        }
        int third = 1;
        for (int i = 1; i < depth; ++i) third *= 3;
        Level t1 = build(depth - 1, offset);
        Level t2 = build(depth - 1, offset + third);
        Level t3 = build(depth - 1, offset + 2 * third);
        // drop the primitive arcs of tertians 2 and 3, join them instead
        auto erase_arc = [](Level& l) {
            l.black.erase(std::find(l.black.begin(), l.black.end(), l.primitive));
        };
        erase_arc(t2);
        erase_arc(t3);
        Level merged;
        merged.black = std::move(t1.black);
        merged.black.insert(merged.black.end(), t2.black.begin(), t2.black.end());
        merged.black.insert(merged.black.end(), t3.black.begin(), t3.black.end());
        merged.black.emplace_back(offset + third, offset + 2 * third);
        merged.primitive = t1.primitive;
        return merged;
    };

    ArcLabeling labeling = ArcLabeling::from_black_arcs(build(k, 0).black);
    if (verify) {
        Tournament t = Tournament::hk(k);
        DistinguishingVerdict verdict = is_distinguishing_arc(t, labeling);
        if (!verdict.distinguishing)
            throw std::runtime_error("H_" + std::to_string(k) +
                                     " arc labeling failed verification; witness " +
                                     render_permutation(*verdict.witness, true));
    }
    return labeling;
}

std::string render_thm4_trace(const Thm4Trace& trace) {
    auto join_ints = [](const std::vector<int>& v) {
        std::string out;
        for (int x : v) {
            if (!out.empty()) out += ' ';
            out += std::to_string(x);
        }
        return out;
    };
    std::string out;
    out += "case: " + trace.case_id + "\n";
    out += "determining-set: " + join_ints(trace.determining_set) + "\n";
    out += "distinguishing-subset: " + join_ints(trace.distinguishing_subset) + "\n";
    out += "pairs:";
    for (const auto& p : trace.pairs) out += " " + std::to_string(p[0]) + "," + std::to_string(p[1]);
    out += "\n";
    out += "triples:";
    for (const auto& tr : trace.triples)
        out += " " + std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," +
               std::to_string(tr[2]);
    out += "\n";
    out += "leftover: " + join_ints(trace.leftover) + "\n";
    out += "extra-arcs:";
    for (auto [u, v] : trace.extra_arcs) out += " " + std::to_string(u) + ">" + std::to_string(v);
    out += "\n";
    return out;
}

}  // namespace tdist
