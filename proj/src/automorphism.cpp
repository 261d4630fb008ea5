#include "tdist/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace tdist {

namespace {

// Backtracking automorphism search with bitset forward checking.
//
// Every vertex keeps a candidate-image mask. Assigning u -> c intersects
// each unassigned vertex w's mask with the images compatible with the pair
// (w,u): orientation must be preserved (one mask suffices because a
// tournament has exactly one arc per pair), and when an arc labeling is in
// play the pair's black/white status must match as well. Vertices whose mask
// becomes a singleton are assigned immediately; branching happens only on
// the lowest-id unassigned vertex, candidates in ascending order, which
// makes the search emit solutions in lexicographic image order.
class SearchEngine {
public:
    SearchEngine(const Tournament& t, const SearchConstraints& c)
        : t_(t), n_(t.order()), words_(static_cast<std::size_t>((n_ + 63) / 64)) {
        exclude_identity_ = c.exclude_identity;
        build_rows(c);
        build_initial_candidates(c);
    }

    // Extra unary constraint used by orbit computation: u must map to v.
    void restrict_to(int u, int v) {
        auto* mask = cand(u);
        bool allowed = (mask[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
        std::fill(mask, mask + words_, 0);
        if (allowed) mask[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    }

    // Runs the search; fn gets each solution in lexicographic order and
    // returns false to stop. Returns true if the search was stopped early.
    bool run(const std::function<bool(const Permutation&)>& fn) {
        image_.assign(static_cast<std::size_t>(n_), -1);
        assigned_.assign(static_cast<std::size_t>(n_), 0);
        order_.clear();
        trail_.clear();
        stopped_ = false;
        fn_ = &fn;
        dfs(0);
        fn_ = nullptr;
        return stopped_;
    }

private:
    std::uint64_t* cand(int v) { return cands_.data() + static_cast<std::size_t>(v) * words_; }

    void build_rows(const SearchConstraints& c) {
        out_.assign(static_cast<std::size_t>(n_) * words_, 0);
        in_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int v = 0; v < n_; ++v) {
            auto row = t_.out_row(v);
            std::copy(row.begin(), row.end(), out_.begin() + static_cast<std::size_t>(v) * words_);
        }
        // in-rows are the complement of out-rows minus the diagonal
        for (int v = 0; v < n_; ++v) {
            std::uint64_t* in_row = in_.data() + static_cast<std::size_t>(v) * words_;
            const std::uint64_t* out_row = out_.data() + static_cast<std::size_t>(v) * words_;
            for (std::size_t w = 0; w < words_; ++w) in_row[w] = ~out_row[w];
            in_row[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
            trim_tail(in_row);
        }
        if (c.arc_labels) {
            has_black_ = true;
            black_.assign(static_cast<std::size_t>(n_) * words_, 0);
            black_out_deg_.assign(static_cast<std::size_t>(n_), 0);
            black_in_deg_.assign(static_cast<std::size_t>(n_), 0);
            for (auto [u, v] : c.arc_labels->black_arcs) {
                set_bit(black_.data() + static_cast<std::size_t>(u) * words_, v);
                set_bit(black_.data() + static_cast<std::size_t>(v) * words_, u);
                ++black_out_deg_[static_cast<std::size_t>(u)];
                ++black_in_deg_[static_cast<std::size_t>(v)];
            }
        }
    }

    void build_initial_candidates(const SearchConstraints& c) {
        cands_.assign(static_cast<std::size_t>(n_) * words_, 0);
        std::vector<int> out_deg(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) out_deg[static_cast<std::size_t>(v)] = t_.out_degree(v);

        std::vector<char> fixed(static_cast<std::size_t>(n_), 0);
        for (int v : c.fixed_pointwise) {
            t_.check_vertex(v);
            fixed[static_cast<std::size_t>(v)] = 1;
        }
        if (c.vertex_labels && c.vertex_labels->size() != n_)
            throw std::invalid_argument("vertex labeling size does not match the tournament order");
        if (c.arc_labels) c.arc_labels->validate_against(t_);

        for (int v = 0; v < n_; ++v) {
            std::uint64_t* mask = cand(v);
            if (fixed[static_cast<std::size_t>(v)]) {
                set_bit(mask, v);
                continue;
            }
            for (int d = 0; d < n_; ++d) {
                if (fixed[static_cast<std::size_t>(d)] && d != v) continue;
                if (out_deg[static_cast<std::size_t>(d)] != out_deg[static_cast<std::size_t>(v)])
                    continue;
                if (c.vertex_labels && c.vertex_labels->at(d) != c.vertex_labels->at(v)) continue;
                if (has_black_ &&
                    (black_out_deg_[static_cast<std::size_t>(d)] !=
                         black_out_deg_[static_cast<std::size_t>(v)] ||
                     black_in_deg_[static_cast<std::size_t>(d)] !=
                         black_in_deg_[static_cast<std::size_t>(v)]))
                    continue;
                set_bit(mask, d);
            }
        }
    }

    static void set_bit(std::uint64_t* row, int b) {
        row[static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
    }

    void trim_tail(std::uint64_t* row) {
        unsigned rem = static_cast<unsigned>(n_) % 64;
        if (rem) row[words_ - 1] &= (std::uint64_t{1} << rem) - 1;
    }

    bool mask_empty(const std::uint64_t* row) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (row[w]) return false;
        return true;
    }

    int mask_popcount(const std::uint64_t* row) const {
        int p = 0;
        for (std::size_t w = 0; w < words_; ++w) p += std::popcount(row[w]);
        return p;
    }

    int mask_first(const std::uint64_t* row) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (row[w]) return static_cast<int>(w * 64) + std::countr_zero(row[w]);
        return -1;
    }

    // Assigns u -> c and filters every unassigned mask. Returns false (and
    // rolls nothing back itself) when some mask empties; the caller unwinds
    // via the trail. Singleton masks produced by the filter are queued and
    // assigned in turn.
    bool assign_and_propagate(int u, int c, std::size_t trail_mark) {
        pending_.clear();
        pending_.emplace_back(u, c);
        while (!pending_.empty()) {
            auto [pu, pc] = pending_.back();
            pending_.pop_back();
            if (assigned_[static_cast<std::size_t>(pu)]) {
                if (image_[static_cast<std::size_t>(pu)] != pc) return false;
                continue;
            }
            if (!((cand(pu)[static_cast<std::size_t>(pc) / 64] >> (pc % 64)) & 1u)) return false;
            image_[static_cast<std::size_t>(pu)] = pc;
            assigned_[static_cast<std::size_t>(pu)] = 1;
            order_.push_back(pu);

            const std::uint64_t* out_c = out_.data() + static_cast<std::size_t>(pc) * words_;
            const std::uint64_t* in_c = in_.data() + static_cast<std::size_t>(pc) * words_;
            const std::uint64_t* out_u = out_.data() + static_cast<std::size_t>(pu) * words_;
            const std::uint64_t* black_c =
                has_black_ ? black_.data() + static_cast<std::size_t>(pc) * words_ : nullptr;
            const std::uint64_t* black_u =
                has_black_ ? black_.data() + static_cast<std::size_t>(pu) * words_ : nullptr;

            for (int w = 0; w < n_; ++w) {
                if (assigned_[static_cast<std::size_t>(w)]) continue;
                std::uint64_t* mask = cand(w);
                bool changed = false;
                bool u_beats_w = (out_u[static_cast<std::size_t>(w) / 64] >> (w % 64)) & 1u;
                const std::uint64_t* orient_allow = u_beats_w ? out_c : in_c;
                std::uint64_t black_w_bit = 0;
                if (has_black_)
                    black_w_bit = (black_u[static_cast<std::size_t>(w) / 64] >> (w % 64)) & 1u;
                for (std::size_t i = 0; i < words_; ++i) {
                    std::uint64_t allow = orient_allow[i];
                    if (has_black_) allow &= black_w_bit ? black_c[i] : ~black_c[i];
                    // pc is taken now
                    if (i == static_cast<std::size_t>(pc) / 64)
                        allow &= ~(std::uint64_t{1} << (pc % 64));
                    std::uint64_t next = mask[i] & allow;
                    if (next != mask[i]) {
                        if (!changed) {
                            save_mask(w, trail_mark);
                            changed = true;
                        }
                        mask[i] = next;
                    }
                }
                if (changed) {
                    int pop = mask_popcount(mask);
                    if (pop == 0) return false;
                    if (pop == 1) pending_.emplace_back(w, mask_first(mask));
                }
            }
        }
        return true;
    }

    void save_mask(int w, std::size_t trail_mark) {
        // one snapshot per vertex per decision level is enough
        for (std::size_t i = trail_.size(); i > trail_mark; --i)
            if (trail_[i - 1].vertex == w) return;
        TrailEntry e;
        e.vertex = w;
        e.saved.assign(cand(w), cand(w) + words_);
        trail_.push_back(std::move(e));
    }

    void rewind(std::size_t trail_mark, std::size_t order_mark) {
        for (std::size_t i = trail_.size(); i > trail_mark; --i) {
            const TrailEntry& e = trail_[i - 1];
            std::copy(e.saved.begin(), e.saved.end(), cand(e.vertex));
        }
        trail_.resize(trail_mark);
        for (std::size_t i = order_.size(); i > order_mark; --i) {
            int v = order_[i - 1];
            assigned_[static_cast<std::size_t>(v)] = 0;
            image_[static_cast<std::size_t>(v)] = -1;
        }
        order_.resize(order_mark);
    }

    void dfs(int hint) {
        if (stopped_) return;
        int v = hint;
        while (v < n_ && assigned_[static_cast<std::size_t>(v)]) ++v;
        if (v == n_) {
            emit();
            return;
        }
        // iterate candidates of v in ascending order over a private copy;
        // the live mask mutates during propagation
        scratch_.assign(cand(v), cand(v) + words_);
        for (std::size_t w = 0; w < words_ && !stopped_; ++w) {
            std::uint64_t bits = scratch_[w];
            while (bits) {
                int c = static_cast<int>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                std::size_t trail_mark = trail_.size();
                std::size_t order_mark = order_.size();
                if (assign_and_propagate(v, c, trail_mark)) dfs(v + 1);
                rewind(trail_mark, order_mark);
                if (stopped_) return;
            }
        }
    }

    void emit() {
        Permutation p{image_};
        if (exclude_identity_ && p.is_identity()) return;
        if (!(*fn_)(p)) stopped_ = true;
    }

    const Tournament& t_;
    int n_;
    std::size_t words_;
    bool exclude_identity_ = false;
    bool has_black_ = false;

    std::vector<std::uint64_t> out_, in_, black_, cands_;
    std::vector<int> black_out_deg_, black_in_deg_;

    std::vector<int> image_;
    std::vector<char> assigned_;
    std::vector<int> order_;  // assignment order, for rewinding

    struct TrailEntry {
        int vertex;
        std::vector<std::uint64_t> saved;
    };
    std::vector<TrailEntry> trail_;
    std::vector<std::pair<int, int>> pending_;
    std::vector<std::uint64_t> scratch_;

    const std::function<bool(const Permutation&)>* fn_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

bool is_automorphism(const Tournament& t, const Permutation& p) {
    if (p.degree() != t.order())
        throw std::invalid_argument("permutation degree " + std::to_string(p.degree()) +
                                    " does not match tournament order " +
                                    std::to_string(t.order()));
    p.validate();
    int n = t.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && t.arc_unchecked(u, v) != t.arc_unchecked(p(u), p(v))) return false;
    return true;
}

std::optional<Permutation> find_automorphism(const Tournament& t,
                                             const SearchConstraints& constraints) {
    std::optional<Permutation> found;
    SearchEngine engine(t, constraints);
    engine.run([&](const Permutation& p) {
        found = p;
        return false;
    });
    return found;
}

void for_each_automorphism(const Tournament& t,
                           const std::function<bool(const Permutation&)>& fn) {
    SearchEngine engine(t, SearchConstraints{});
    engine.run(fn);
}

std::vector<Permutation> enumerate_automorphisms(const Tournament& t, int guard) {
    if (t.order() > guard)
        throw std::invalid_argument("order " + std::to_string(t.order()) +
                                    " exceeds the enumeration guard " + std::to_string(guard));
    std::vector<Permutation> group;
    for_each_automorphism(t, [&](const Permutation& p) {
        group.push_back(p);
        return true;
    });
    return group;
}

std::vector<std::vector<int>> orbits(const Tournament& t, int guard) {
    int n = t.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    std::function<int(int)> find_root = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find_root(a))] = find_root(b); };

    if (n <= guard) {
        for (const Permutation& p : enumerate_automorphisms(t, guard))
            for (int v = 0; v < n; ++v)
                if (p(v) != v) unite(v, p(v));
    } else {
        // join v into u's orbit iff some automorphism maps u to v
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (find_root(u) == find_root(v)) continue;
                SearchEngine engine(t, SearchConstraints{});
                engine.restrict_to(u, v);
                bool found = engine.run([](const Permutation&) { return false; });
                if (found) unite(u, v);
            }
        }
    }

    std::vector<std::vector<int>> out;
    std::vector<int> root_slot(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = find_root(v);
        if (root_slot[static_cast<std::size_t>(r)] < 0) {
            root_slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(root_slot[static_cast<std::size_t>(r)])].push_back(v);
    }
    return out;
}

}  // namespace tdist
