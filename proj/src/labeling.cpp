#include "tdist/labeling.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tdist/automorphism.hpp"

namespace tdist {

int VertexLabeling::black_count() const {
    return static_cast<int>(std::count(colors.begin(), colors.end(), Color::black));
}

ArcLabeling ArcLabeling::from_black_arcs(std::vector<std::pair<int, int>> arcs) {
    std::sort(arcs.begin(), arcs.end());
    auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end())
        throw std::invalid_argument("duplicate black arc (" + std::to_string(dup->first) + ", " +
                                    std::to_string(dup->second) + ")");
    return ArcLabeling{std::move(arcs)};
}

bool ArcLabeling::is_black(int u, int v) const {
    return std::binary_search(black_arcs.begin(), black_arcs.end(), std::make_pair(u, v));
}

void ArcLabeling::validate_against(const Tournament& t) const {
    for (auto [u, v] : black_arcs) {
        t.check_vertex(u);
        t.check_vertex(v);
        if (u == v || !t.arc_unchecked(u, v))
            throw std::invalid_argument("black pair (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") is not an arc of the tournament");
    }
}

namespace {

void fill_hk_labeling(std::vector<Color>& colors, int offset, int size, Color kind) {
    if (size == 1) {
        colors[static_cast<std::size_t>(offset)] = kind;
        return;
    }
    Color other = kind == Color::white ? Color::black : Color::white;
    int third = size / 3;
    // tertians 1 and 2 repeat the labeling's own kind, tertian 3 flips
    fill_hk_labeling(colors, offset, third, kind);
    fill_hk_labeling(colors, offset + third, third, kind);
    fill_hk_labeling(colors, offset + 2 * third, third, other);
}

VertexLabeling hk_labeling(int k, Color kind) {
    HkIndex idx(k);
    std::vector<Color> colors(static_cast<std::size_t>(idx.order()));
    fill_hk_labeling(colors, 0, idx.order(), kind);
    return VertexLabeling{std::move(colors)};
}

}  // namespace

VertexLabeling white_labeling(int k) { return hk_labeling(k, Color::white); }

VertexLabeling black_labeling(int k) { return hk_labeling(k, Color::black); }

VertexLabeling class_to_labeling(const Tournament& t, const std::vector<int>& s) {
    std::vector<Color> colors(static_cast<std::size_t>(t.order()), Color::white);
    for (int v : s) {
        t.check_vertex(v);
        colors[static_cast<std::size_t>(v)] = Color::black;
    }
    return VertexLabeling{std::move(colors)};
}

DistinguishingVerdict is_distinguishing_vertex(const Tournament& t, const VertexLabeling& l) {
    if (l.size() != t.order())
        throw std::invalid_argument("labeling size " + std::to_string(l.size()) +
                                    " does not match tournament order " +
                                    std::to_string(t.order()));
    SearchConstraints c;
    c.vertex_labels = l;
    c.exclude_identity = true;
    auto witness = find_automorphism(t, c);
    if (witness) return {false, std::move(witness)};
    return {true, std::nullopt};
}

DistinguishingVerdict is_distinguishing_arc(const Tournament& t, const ArcLabeling& l) {
    l.validate_against(t);
    SearchConstraints c;
    c.arc_labels = l;
    c.exclude_identity = true;
    auto witness = find_automorphism(t, c);
    if (witness) return {false, std::move(witness)};
    return {true, std::nullopt};
}

std::string render_vlab(const VertexLabeling& l) {
    std::string out;
    out.reserve(l.colors.size() + 1);
    for (Color c : l.colors) out += c == Color::white ? 'W' : 'B';
    out += '\n';
    return out;
}

VertexLabeling parse_vlab(std::string_view text, int n) {
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(n));
    std::size_t i = 0;
    for (; i < text.size() && text[i] != '\n'; ++i) {
        char c = text[i];
        if (c == 'W')
            colors.push_back(Color::white);
        else if (c == 'B')
            colors.push_back(Color::black);
        else
            throw ParseError(1, static_cast<int>(i) + 1,
                             std::string("invalid character '") + c + "' (want 'W' or 'B')");
    }
    if (i == text.size()) throw ParseError(1, static_cast<int>(i) + 1, "missing trailing newline");
    if (i + 1 != text.size())
        throw ParseError(2, 1, "unexpected content after the labeling line");
    if (static_cast<int>(colors.size()) != n)
        throw ParseError(1, static_cast<int>(colors.size()) + 1,
                         "expected " + std::to_string(n) + " labels, got " +
                             std::to_string(colors.size()));
    return VertexLabeling{std::move(colors)};
}

std::string render_alab(const ArcLabeling& l) {
    std::string out;
    for (auto [u, v] : l.black_arcs) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

ArcLabeling parse_alab(std::string_view text) {
    std::vector<std::pair<int, int>> arcs;
    int line = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            throw ParseError(line, static_cast<int>(text.size() - pos) + 1,
                             "missing trailing newline");
        std::string_view row = text.substr(pos, eol - pos);
        int vals[2];
        std::size_t p = 0;
        for (int slot = 0; slot < 2; ++slot) {
            while (p < row.size() && row[p] == ' ') ++p;
            if (p == row.size() || !std::isdigit(static_cast<unsigned char>(row[p])))
                throw ParseError(line, static_cast<int>(p) + 1,
                                 "expected \"u v\" with two vertex ids");
            int v = 0;
            while (p < row.size() && std::isdigit(static_cast<unsigned char>(row[p]))) {
                v = v * 10 + (row[p] - '0');
                ++p;
            }
            vals[slot] = v;
        }
        while (p < row.size() && row[p] == ' ') ++p;
        if (p != row.size())
            throw ParseError(line, static_cast<int>(p) + 1, "unexpected content after the arc");
        arcs.emplace_back(vals[0], vals[1]);
        pos = eol + 1;
        ++line;
    }
    return ArcLabeling::from_black_arcs(std::move(arcs));
}

}  // namespace tdist
