#include "tdist/tournament.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace tdist {

namespace {

long long pow3(int k) {
    long long p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return p;
}

std::string pair_name(int u, int v) {
    return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

}  // namespace

Tournament::Tournament(int n)
    : n_(n),
      words_(static_cast<std::size_t>((n + 63) / 64)),
      bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0) {}

void Tournament::set_arc(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
        std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
}

Tournament Tournament::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Tournament t(n);
    // seen[u][v] marks ordered pair u->v already supplied
    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto seen_at = [&](int u, int v) -> char& {
        return seen[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + v];
    };
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc " + pair_name(u, v) + " has an index out of range 0.." +
                                        std::to_string(n - 1));
        if (u == v)
            throw std::invalid_argument("self-loop " + pair_name(u, v) + " is not a tournament arc");
        if (seen_at(u, v) || seen_at(v, u))
            throw std::invalid_argument("duplicate pair " + pair_name(std::min(u, v), std::max(u, v)));
        seen_at(u, v) = 1;
        t.set_arc(u, v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!seen_at(i, j) && !seen_at(j, i))
                throw std::invalid_argument("missing pair " + pair_name(i, j));
    return t;
}

Tournament Tournament::hk(int k) {
    if (k < 0) throw std::invalid_argument("H_k depth must be nonnegative");
    if (k > 10)
        throw std::invalid_argument("H_k depth " + std::to_string(k) +
                                    " exceeds the resource guard (k <= 10)");
    int n = static_cast<int>(pow3(k));
    Tournament t(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            // compare base-3 digits from the most significant; the first
            // difference decides via the C3 orientation at that level
            for (long long p = pow3(k - 1); p >= 1; p /= 3) {
                int du = static_cast<int>(u / p % 3);
                int dv = static_cast<int>(v / p % 3);
                if (du != dv) {
                    if (dv == (du + 1) % 3) t.set_arc(u, v);
                    break;
                }
            }
        }
    }
    return t;
}

Tournament Tournament::random(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random tournament needs at least one vertex");
    Tournament t(n);
    std::mt19937_64 gen(seed);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((gen() & 1u) == 0)
                t.set_arc(i, j);
            else
                t.set_arc(j, i);
        }
    }
    return t;
}

Tournament Tournament::transitive(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Tournament t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.set_arc(i, j);
    return t;
}

int Tournament::out_degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

HkIndex::HkIndex(int k_) : k(k_), order_(static_cast<int>(pow3(k_))) {
    if (k_ < 0) throw std::invalid_argument("H_k depth must be nonnegative");
}

int relationship_difference(const Tournament& t, int x, int y) {
    t.check_vertex(x);
    t.check_vertex(y);
    int count = 0;
    for (int z = 0; z < t.order(); ++z) {
        // diagonal bits are never set, so z in {x,y} contributes nothing
        bool differs = (t.arc_unchecked(z, x) && t.arc_unchecked(y, z)) ||
                       (t.arc_unchecked(x, z) && t.arc_unchecked(z, y));
        if (differs) ++count;
    }
    return count;
}

bool is_module(const Tournament& t, const std::vector<int>& x) {
    std::vector<char> in_x(static_cast<std::size_t>(t.order()), 0);
    for (int u : x) {
        t.check_vertex(u);
        in_x[static_cast<std::size_t>(u)] = 1;
    }
    if (x.empty()) return true;
    for (int v = 0; v < t.order(); ++v) {
        if (in_x[static_cast<std::size_t>(v)]) continue;
        bool first = t.arc_unchecked(v, x[0]);
        for (std::size_t i = 1; i < x.size(); ++i)
            if (t.arc_unchecked(v, x[i]) != first) return false;
    }
    return true;
}

std::vector<std::array<int, 3>> basic_modules(int k) {
    if (k < 1)
        throw std::invalid_argument("H_" + std::to_string(k) + " has no basic modules (need k >= 1)");
    long long count = pow3(k - 1);
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) out.push_back({3 * m, 3 * m + 1, 3 * m + 2});
    return out;
}

std::vector<int> hamiltonian_path(const Tournament& t) {
    if (t.order() < 1) throw std::invalid_argument("tournament is empty");
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(t.order()));
    for (int v = 0; v < t.order(); ++v) {
        auto it = std::find_if(path.begin(), path.end(),
                               [&](int u) { return t.arc_unchecked(v, u); });
        path.insert(it, v);
    }
    return path;
}

int InducedSubtournament::old_to_new(int old_id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), old_id);
    if (it == vertices.end() || *it != old_id)
        throw std::out_of_range("vertex " + std::to_string(old_id) +
                                " is not in the induced set");
    return static_cast<int>(it - vertices.begin());
}

InducedSubtournament induced_subtournament(const Tournament& t, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("induced subtournament needs a nonempty vertex set");
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != s.size())
        throw std::invalid_argument("induced vertex set contains duplicates");
    for (int v : verts) t.check_vertex(v);

    int m = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (t.arc_unchecked(verts[i], verts[j]))
                arcs.emplace_back(i, j);
            else
                arcs.emplace_back(j, i);
        }
    return {Tournament::from_arcs(m, arcs), std::move(verts)};
}

std::string render_trn(const Tournament& t) {
    std::string out = std::to_string(t.order());
    out += '\n';
    for (int i = 0; i < t.order(); ++i) {
        for (int j = 0; j < t.order(); ++j)
            out += (i != j && t.arc_unchecked(i, j)) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Tournament parse_trn(std::string_view text) {
    std::size_t pos = 0;
    int line = 1;

    auto read_line = [&](int expect_len) -> std::string_view {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '\n') ++pos;
        if (pos == text.size())
            throw ParseError(line, static_cast<int>(pos - start + 1),
                             "missing trailing newline");
        std::string_view content = text.substr(start, pos - start);
        if (expect_len >= 0 && static_cast<int>(content.size()) != expect_len)
            throw ParseError(line, static_cast<int>(content.size()) + 1,
                             "expected a row of exactly " + std::to_string(expect_len) +
                                 " characters, got " + std::to_string(content.size()));
        ++pos;  // consume '\n'
        return content;
    };

    std::string_view header = read_line(-1);
    if (header.empty()) throw ParseError(1, 1, "expected vertex count");
    long long n = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        char c = header[i];
        if (c < '0' || c > '9')
            throw ParseError(1, static_cast<int>(i) + 1,
                             std::string("invalid character '") + c + "' in vertex count");
        n = n * 10 + (c - '0');
        if (n > 1'000'000) throw ParseError(1, static_cast<int>(i) + 1, "vertex count too large");
    }
    if (n < 1) throw ParseError(1, 1, "vertex count must be at least 1");

    int order = static_cast<int>(n);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(order) * (order - 1) / 2);
    std::vector<std::string_view> rows(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        ++line;
        rows[static_cast<std::size_t>(i)] = read_line(order);
        for (int j = 0; j < order; ++j) {
            char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != '0' && c != '1')
                throw ParseError(line, j + 1,
                                 std::string("invalid character '") + c + "' (want '0' or '1')");
        }
    }
    if (pos != text.size())
        throw ParseError(line + 1, 1, "unexpected content after the last row");

    for (int i = 0; i < order; ++i) {
        if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == '1')
            throw ParseError(i + 2, i + 1, "self-loop at vertex " + std::to_string(i));
        for (int j = i + 1; j < order; ++j) {
            bool ij = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == '1';
            bool ji = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == '1';
            if (ij == ji)
                throw ParseError(j + 2, i + 1,
                                 std::string(ij ? "both" : "neither") + " of the arcs between " +
                                     std::to_string(i) + " and " + std::to_string(j) +
                                     " are present");
            if (ij)
                arcs.emplace_back(i, j);
            else
                arcs.emplace_back(j, i);
        }
    }
    return Tournament::from_arcs(order, arcs);
}

}  // namespace tdist
