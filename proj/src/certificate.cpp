#include "tdist/certificate.hpp"

namespace tdist {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string input_hash_of(const Tournament& t) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(render_trn(t));
    std::string out = "fnv1a64:";
    for (int i = 15; i >= 0; --i) out += digits[(h >> (4 * i)) & 0xf];
    return out;
}

Certificate make_certificate(const std::string& quantity, const Tournament& t,
                             const VertexSetResult& r, bool verified) {
    Certificate c;
    c.quantity = quantity;
    c.input_hash = input_hash_of(t);
    c.value = r.value;
    for (int v : r.witness) {
        if (!c.witness.empty()) c.witness += ' ';
        c.witness += std::to_string(v);
    }
    c.verified = verified;
    c.complete = r.complete;
    c.lower_bound = r.lower_bound;
    c.stats = r.stats;
    return c;
}

Certificate make_certificate(const std::string& quantity, const Tournament& t,
                             const ArcSetResult& r, bool verified) {
    Certificate c;
    c.quantity = quantity;
    c.input_hash = input_hash_of(t);
    c.value = r.value;
    for (auto [u, v] : r.witness) {
        if (!c.witness.empty()) c.witness += ' ';
        c.witness += std::to_string(u) + ">" + std::to_string(v);
    }
    c.verified = verified;
    c.complete = r.complete;
    c.lower_bound = r.lower_bound;
    c.stats = r.stats;
    return c;
}

std::string render_certificate(const Certificate& c) {
    std::string out;
    out += "quantity: " + c.quantity + "\n";
    out += "input-hash: " + c.input_hash + "\n";
    out += "value: " + (c.value ? std::to_string(*c.value) : std::string("unknown")) + "\n";
    out += "witness: " + c.witness + "\n";
    out += std::string("verified: ") + (c.verified ? "yes" : "no") + "\n";
    out += std::string("complete: ") + (c.complete ? "yes" : "no") + "\n";
    if (!c.complete) out += "lower-bound: " + std::to_string(c.lower_bound) + "\n";
    out += "examined: " + std::to_string(c.stats.examined_total) + "\n";
    out += "examined-per-size:";
    for (std::size_t s = 0; s < c.stats.examined_per_size.size(); ++s)
        out += " " + std::to_string(s) + "=" + std::to_string(c.stats.examined_per_size[s]);
    out += "\n";
    bool any_skipped = false;
    for (std::uint64_t v : c.stats.skipped_equivalent_per_size) any_skipped |= v > 0;
    if (any_skipped) {
        out += "skipped-equivalent-per-size:";
        for (std::size_t s = 0; s < c.stats.skipped_equivalent_per_size.size(); ++s)
            out += " " + std::to_string(s) + "=" +
                   std::to_string(c.stats.skipped_equivalent_per_size[s]);
        out += "\n";
    }
    return out;
}

}  // namespace tdist
