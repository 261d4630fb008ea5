#include "tdist/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tdist {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(static_cast<std::size_t>(n));
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

bool Permutation::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (image[static_cast<std::size_t>(v)] != v) return false;
    return true;
}

void Permutation::validate() const {
    std::vector<char> hit(image.size(), 0);
    for (int x : image) {
        if (x < 0 || x >= degree())
            throw std::invalid_argument("permutation image " + std::to_string(x) +
                                        " out of range 0.." + std::to_string(degree() - 1));
        if (hit[static_cast<std::size_t>(x)])
            throw std::invalid_argument("permutation image " + std::to_string(x) +
                                        " appears twice; not a bijection");
        hit[static_cast<std::size_t>(x)] = 1;
    }
}

std::string render_permutation(const Permutation& p, bool cycles) {
    if (!cycles) {
        std::string out;
        for (int v = 0; v < p.degree(); ++v) {
            if (v) out += ' ';
            out += std::to_string(p(v));
        }
        out += '\n';
        return out;
    }
    std::string out;
    std::vector<char> done(p.image.size(), 0);
    for (int v = 0; v < p.degree(); ++v) {
        if (done[static_cast<std::size_t>(v)] || p(v) == v) continue;
        out += '(';
        int x = v;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(x);
            done[static_cast<std::size_t>(x)] = 1;
            x = p(x);
            first = false;
        } while (x != v);
        out += ')';
    }
    if (out.empty()) out = "()";
    out += '\n';
    return out;
}

namespace {

std::vector<int> read_ints(std::string_view text, std::size_t& pos, char stop) {
    std::vector<int> vals;
    while (pos < text.size() && text[pos] != stop) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument(std::string("unexpected character '") + text[pos] +
                                        "' in permutation");
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        vals.push_back(v);
    }
    return vals;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw std::invalid_argument("empty permutation text");

    Permutation p;
    if (text[first] == '(') {
        p = Permutation::identity(n);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::size_t pos = first;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
                continue;
            }
            if (c != '(')
                throw std::invalid_argument(std::string("expected '(' but found '") + c + "'");
            ++pos;
            std::vector<int> cyc = read_ints(text, pos, ')');
            if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
            ++pos;  // consume ')'
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i];
                int to = cyc[(i + 1) % cyc.size()];
                if (from < 0 || from >= n)
                    throw std::invalid_argument("cycle entry " + std::to_string(from) +
                                                " out of range 0.." + std::to_string(n - 1));
                if (seen[static_cast<std::size_t>(from)])
                    throw std::invalid_argument("vertex " + std::to_string(from) +
                                                " appears in two cycles");
                seen[static_cast<std::size_t>(from)] = 1;
                p.image[static_cast<std::size_t>(from)] = to;
            }
        }
    } else {
        std::size_t pos = 0;
        p.image = read_ints(text, pos, '\0');
        if (static_cast<int>(p.image.size()) != n)
            throw std::invalid_argument("expected " + std::to_string(n) + " images, got " +
                                        std::to_string(p.image.size()));
    }
    p.validate();
    return p;
}

}  // namespace tdist
