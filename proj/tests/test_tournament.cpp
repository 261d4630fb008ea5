#include "doctest.h"

#include <set>

#include "corpus.hpp"
#include "tdist/tournament.hpp"

using namespace tdist;

namespace {

Tournament c3() { return Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }

bool invariants_hold(const Tournament& t) {
    for (int i = 0; i < t.order(); ++i) {
        if (t.arc_unchecked(i, i)) return false;
        for (int j = i + 1; j < t.order(); ++j)
            if (t.arc_unchecked(i, j) == t.arc_unchecked(j, i)) return false;
    }
    return true;
}

long long pow3(int k) {
    long long p = 1;
    while (k--) p *= 3;
    return p;
}

}  // namespace

TEST_CASE("from_arcs builds the directed triangle") {
    Tournament t = c3();
    CHECK(t.order() == 3);
    CHECK(t.arc(0, 1));
    CHECK(t.arc(1, 2));
    CHECK(t.arc(2, 0));
    CHECK_FALSE(t.arc(1, 0));
    CHECK(invariants_hold(t));
}

TEST_CASE("from_arcs accepts the single-vertex tournament") {
    Tournament t = Tournament::from_arcs(1, {});
    CHECK(t.order() == 1);
}

TEST_CASE("from_arcs rejects bad arc lists with a named pair") {
    CHECK_THROWS_WITH_AS(Tournament::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}),
                         doctest::Contains("duplicate pair {0, 1}"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Tournament::from_arcs(3, {{0, 1}, {1, 2}}),
                         doctest::Contains("missing pair {0, 2}"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Tournament::from_arcs(2, {{0, 0}, {0, 1}}),
                         doctest::Contains("self-loop"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Tournament::from_arcs(2, {{0, 5}}), doctest::Contains("out of range"),
                         std::invalid_argument);
}

TEST_CASE("hk generates the recursive family") {
    Tournament h0 = Tournament::hk(0);
    CHECK(h0.order() == 1);

    CHECK(Tournament::hk(1) == c3());

    Tournament h2 = Tournament::hk(2);
    CHECK(h2.order() == 9);
    // tertian blocks follow the C3 orientation
    CHECK(h2.arc(0, 3));
    CHECK(h2.arc(3, 6));
    CHECK(h2.arc(6, 0));
    // inside a tertian the previous level repeats
    CHECK(h2.arc(0, 1));
    CHECK(h2.arc(2, 0));

    for (int k = 0; k <= 4; ++k) CHECK(invariants_hold(Tournament::hk(k)));

    CHECK_THROWS_AS(Tournament::hk(11), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::hk(-1), std::invalid_argument);
}

TEST_CASE("random tournaments are deterministic and valid") {
    CHECK(Tournament::random(1, 99).order() == 1);
    CHECK(Tournament::random(5, 42) == Tournament::random(5, 42));
    CHECK_FALSE(Tournament::random(5, 42) == Tournament::random(5, 43));
    CHECK(invariants_hold(Tournament::random(9, 7)));
    CHECK_THROWS_AS(Tournament::random(0, 1), std::invalid_argument);
}

TEST_CASE("relationship_difference follows the hand oracle on C3") {
    Tournament t = c3();
    // z = 2 is the only vertex relating differently to 0 and 1:
    // 2 beats 0 (arc 2->0) but loses to 1 (arc 1->2)
    CHECK(relationship_difference(t, 0, 1) == 1);
    CHECK(relationship_difference(t, 1, 2) == 1);
    for (int v = 0; v < 3; ++v) CHECK(relationship_difference(t, v, v) == 0);
    CHECK(relationship_difference(Tournament::random(8, 3), 4, 4) == 0);
}

TEST_CASE("relationship_difference separates modules from tertians in H_k") {
    for (int k = 1; k <= 4; ++k) {
        Tournament t = Tournament::hk(k);
        HkIndex idx(k);
        long long threshold = pow3(k - 1);
        for (int u = 0; u < t.order(); ++u) {
            for (int v = u + 1; v < t.order(); ++v) {
                int d = relationship_difference(t, u, v);
                if (k >= 1 && idx.basic_module_of(u) == idx.basic_module_of(v))
                    CHECK(d < threshold);
                if (idx.tertian_of(u) != idx.tertian_of(v)) CHECK(d >= threshold);
            }
        }
    }
}

TEST_CASE("is_module identifies modules") {
    Tournament h2 = Tournament::hk(2);
    CHECK(is_module(h2, {0, 1, 2, 3, 4, 5, 6, 7, 8}));  // V(T)
    CHECK(is_module(h2, {4}));                           // singleton
    CHECK(is_module(h2, {0, 1, 2}));                     // first tertian
    CHECK(is_module(h2, {3, 4, 5}));
    CHECK_FALSE(is_module(h2, {0, 3}));  // crosses tertians
    CHECK_FALSE(is_module(c3(), {0, 1}));
}

TEST_CASE("basic_modules decompose H_k") {
    CHECK(basic_modules(1) == std::vector<std::array<int, 3>>{{0, 1, 2}});
    CHECK(basic_modules(2).size() == 3);

    for (int k = 1; k <= 3; ++k) {
        Tournament t = Tournament::hk(k);
        auto modules = basic_modules(k);
        CHECK(static_cast<long long>(modules.size()) == pow3(k - 1));
        std::set<int> all;
        for (const auto& m : modules) {
            all.insert(m.begin(), m.end());
            CHECK(is_module(t, {m[0], m[1], m[2]}));
            // each triple induces a directed triangle
            InducedSubtournament ind = induced_subtournament(t, {m[0], m[1], m[2]});
            CHECK(ind.sub == c3());
        }
        CHECK(static_cast<int>(all.size()) == t.order());
    }

    CHECK_THROWS_AS(basic_modules(0), std::invalid_argument);
}

TEST_CASE("hamiltonian_path on known tournaments") {
    CHECK(hamiltonian_path(Tournament::transitive(4)) == std::vector<int>{0, 1, 2, 3});

    Tournament t = c3();
    std::vector<int> path = hamiltonian_path(t);
    REQUIRE(path.size() == 3);
    CHECK(t.arc(path[0], path[1]));
    CHECK(t.arc(path[1], path[2]));
}

TEST_CASE("hamiltonian_path is valid on 1000 seeded random tournaments") {
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + i % 50;
        Tournament t = Tournament::random(n, static_cast<std::uint64_t>(i));
        std::vector<int> path = hamiltonian_path(t);
        REQUIRE(static_cast<int>(path.size()) == n);
        std::set<int> visited(path.begin(), path.end());
        CHECK(static_cast<int>(visited.size()) == n);
        for (std::size_t j = 0; j + 1 < path.size(); ++j) CHECK(t.arc(path[j], path[j + 1]));
    }
}

TEST_CASE("induced_subtournament preserves orientations") {
    Tournament h2 = Tournament::hk(2);

    InducedSubtournament whole = induced_subtournament(h2, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(whole.sub == h2);
    CHECK(whole.old_to_new(5) == 5);

    InducedSubtournament tertian = induced_subtournament(h2, {3, 4, 5});
    CHECK(tertian.sub == c3());
    CHECK(tertian.vertices == std::vector<int>{3, 4, 5});
    CHECK(tertian.old_to_new(4) == 1);

    InducedSubtournament odd = induced_subtournament(Tournament::transitive(5), {0, 2, 4});
    CHECK(odd.sub == Tournament::transitive(3));

    CHECK_THROWS_AS(induced_subtournament(h2, {}), std::invalid_argument);
}

TEST_CASE("trn serialization round-trips bit-exactly") {
    Tournament t = c3();
    CHECK(render_trn(t) == "3\n011\n001\n100\n");
    CHECK(parse_trn(render_trn(t)) == t);

    for (const auto& entry : tdist::testing::corpus_n7())
        CHECK(parse_trn(render_trn(entry.tournament)) == entry.tournament);
    for (int k = 0; k <= 3; ++k) {
        Tournament h = Tournament::hk(k);
        CHECK(parse_trn(render_trn(h)) == h);
    }
}

TEST_CASE("trn parser reports position diagnostics") {
    auto line_col = [](const char* text) {
        try {
            parse_trn(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line, e.col);
        }
        return std::make_pair(-1, -1);
    };

    CHECK(line_col("3\n011\n0x1\n100\n") == std::make_pair(3, 2));   // bad character
    CHECK(line_col("3\n011\n001\n100") == std::make_pair(4, 4));     // missing trailing newline
    CHECK(line_col("3\n0110\n001\n100\n") == std::make_pair(2, 5));  // row too long
    CHECK(line_col("x\n") == std::make_pair(1, 1));                  // bad count
    CHECK(line_col("0\n") == std::make_pair(1, 1));                  // n < 1
    CHECK(line_col("3\n011\n001\n100\nextra\n").first == 5);         // trailing content

    // invariant violations name the offending pair or vertex
    CHECK_THROWS_WITH_AS(parse_trn("2\n10\n00\n"), doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_trn("2\n01\n10\n"), doctest::Contains("both"), ParseError);
    CHECK_THROWS_WITH_AS(parse_trn("2\n00\n00\n"), doctest::Contains("neither"), ParseError);
}
