#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "raag/graph.hpp"
#include "raag/words.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using raag::DefiningGraph;
using raag::GroupWord;
using raag::Letter;

namespace {

GroupWord w(std::initializer_list<std::pair<const char*, int>> letters) {
    GroupWord out;
    for (const auto& [v, s] : letters) out.push_back({v, s});
    return out;
}

} // namespace

TEST_CASE("normal_form spec examples") {
    DefiningGraph p3 = corpus::path(3);
    DefiningGraph e2 = corpus::edgeless(2);

    CHECK(raag::normal_form(p3, w({{"a", 1}, {"b", 1}, {"a", -1}})).letters == w({{"b", 1}}));
    CHECK(raag::normal_form(e2, w({{"a", 1}, {"b", 1}, {"a", -1}})).letters ==
          w({{"a", 1}, {"b", 1}, {"a", -1}}));
    CHECK(raag::normal_form(p3, w({{"c", 1}, {"a", 1}})).letters == w({{"c", 1}, {"a", 1}}));
    CHECK(raag::normal_form(p3, w({{"c", 1}, {"c", -1}})).letters.empty());
}

TEST_CASE("normal_form orders commuting letters by declaration order") {
    DefiningGraph p3 = corpus::path(3); // edges a-b, b-c
    CHECK(raag::normal_form(p3, w({{"b", 1}, {"a", 1}})).letters == w({{"a", 1}, {"b", 1}}));
    CHECK(raag::normal_form(p3, w({{"c", 1}, {"b", 1}})).letters == w({{"b", 1}, {"c", 1}}));
    // a and c do not commute; b commutes with both.
    CHECK(raag::normal_form(p3, w({{"c", 1}, {"b", 1}, {"a", 1}})).letters ==
          w({{"b", 1}, {"c", 1}, {"a", 1}}));

    DefiningGraph k3 = corpus::complete(3);
    CHECK(raag::normal_form(k3, w({{"c", 1}, {"b", 1}, {"a", 1}, {"b", 1}})).letters ==
          w({{"a", 1}, {"b", 1}, {"b", 1}, {"c", 1}}));
}

TEST_CASE("normal_form cancels across commuting separators") {
    // a-c edge: a commutes past c, so a c a^-1 collapses to c.
    DefiningGraph g = raag::parse_graph("vertices a c\nedge a c\n");
    CHECK(raag::normal_form(g, w({{"a", 1}, {"c", 1}, {"a", -1}})).letters == w({{"c", 1}}));

    // x y x^-1 with x,y non-adjacent stays put.
    DefiningGraph e2 = corpus::edgeless(2);
    CHECK(raag::normal_form(e2, w({{"a", 1}, {"b", 1}, {"a", -1}})).letters.size() == 3);
}

TEST_CASE("normal_form rejects invalid letters") {
    DefiningGraph p3 = corpus::path(3);
    CHECK_THROWS_AS(raag::normal_form(p3, w({{"z", 1}})), raag::error);
    CHECK_THROWS_AS(raag::normal_form(p3, w({{"a", 2}})), raag::error);
}

TEST_CASE("words_equal spec examples") {
    DefiningGraph p3 = corpus::path(3);
    DefiningGraph e2 = corpus::edgeless(2);
    CHECK(raag::words_equal(p3, w({{"a", 1}, {"b", 1}}), w({{"b", 1}, {"a", 1}})));
    CHECK_FALSE(raag::words_equal(e2, w({{"a", 1}, {"b", 1}}), w({{"b", 1}, {"a", 1}})));
    GroupWord comm_ac = raag::commutator(w({{"a", 1}}), w({{"c", 1}}));
    CHECK_FALSE(raag::words_equal(p3, comm_ac, {}));
    CHECK(raag::normal_form(p3, comm_ac).letters.size() == 4);
}

TEST_CASE("commutator is the formal bracket") {
    CHECK(raag::commutator(w({{"a", 1}}), w({{"b", 1}})) ==
          w({{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}}));
    CHECK(raag::commutator({}, w({{"b", 1}})) == w({{"b", 1}, {"b", -1}}));
    CHECK(raag::commutator(w({{"a", 1}, {"b", 1}}), w({{"c", 1}})) ==
          w({{"a", 1}, {"b", 1}, {"c", 1}, {"b", -1}, {"a", -1}, {"c", -1}}));
}

TEST_CASE("abelianize spec examples and homomorphism law") {
    DefiningGraph p3 = corpus::path(3);
    CHECK(raag::abelianize(p3, w({{"a", 1}, {"b", 1}, {"a", -1}})) ==
          std::vector<long long>{0, 1, 0});
    CHECK(raag::abelianize(p3, {}) == std::vector<long long>{0, 0, 0});
    CHECK(raag::abelianize(p3, w({{"c", 1}, {"c", 1}, {"a", -1}})) ==
          std::vector<long long>{-1, 0, 2});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        GroupWord w1 = oracles::random_word(p3, rng, 8);
        GroupWord w2 = oracles::random_word(p3, rng, 8);
        std::vector<long long> sum = raag::abelianize(p3, raag::concat(w1, w2));
        std::vector<long long> a1 = raag::abelianize(p3, w1);
        std::vector<long long> a2 = raag::abelianize(p3, w2);
        for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == a1[i] + a2[i]);
    }
}

TEST_CASE("character_image spec examples") {
    DefiningGraph p3 = corpus::path(3);
    CHECK(raag::character_image({p3, "a", 2}, w({{"a", 1}, {"b", 1}, {"a", 1}})) == 0);
    CHECK(raag::character_image({p3, "a", 3},
                                w({{"a", 1}, {"c", 1}, {"a", -1}, {"a", -1}})) == 2);
    CHECK(raag::character_image({p3, "a", 5}, w({{"b", 1}, {"c", 1}})) == 0);
    CHECK_THROWS_AS(raag::CyclicCharacter(p3, "a", 0), raag::error);
    CHECK_THROWS_AS(raag::CyclicCharacter(p3, "z", 2), raag::error);
}

TEST_CASE("normal_form is idempotent and respects relators on the corpus") {
    std::mt19937_64 rng(11);
    for (const DefiningGraph& g : corpus::graphs_up_to(5, false)) {
        for (const auto& [u, v] : g.edges())
            CHECK(raag::words_equal(g, w({{u.c_str(), 1}, {v.c_str(), 1}}),
                                    w({{v.c_str(), 1}, {u.c_str(), 1}})));
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
                if (!g.adjacent(i, j))
                    CHECK_FALSE(raag::words_equal(
                        g, w({{g.label(i).c_str(), 1}, {g.label(j).c_str(), 1}}),
                        w({{g.label(j).c_str(), 1}, {g.label(i).c_str(), 1}})));

        for (int trial = 0; trial < 20; ++trial) {
            GroupWord rw = oracles::random_word(g, rng, 10);
            raag::NormalWord nf = raag::normal_form(g, rw);
            CHECK(raag::normal_form(g, nf.letters) == nf);
            CHECK(raag::is_trivial(g, raag::concat(rw, raag::inverse(rw))));
        }
    }
}

TEST_CASE("normal_form is invariant under legal swaps") {
    std::mt19937_64 rng(13);
    for (const DefiningGraph& g : corpus::graphs_up_to(4, false)) {
        for (int trial = 0; trial < 25; ++trial) {
            GroupWord rw = oracles::random_word(g, rng, 10);
            raag::NormalWord nf = raag::normal_form(g, rw);
            GroupWord shuffled = rw;
            for (int swaps = 0; swaps < 30 && shuffled.size() > 1; ++swaps) {
                std::size_t i = static_cast<std::size_t>(rng() % (shuffled.size() - 1));
                if (shuffled[i].vertex != shuffled[i + 1].vertex &&
                    g.adjacent(shuffled[i].vertex, shuffled[i + 1].vertex))
                    std::swap(shuffled[i], shuffled[i + 1]);
            }
            CHECK(raag::normal_form(g, shuffled) == nf);
        }
    }
}

TEST_CASE("normal_form agrees with the closure oracle on short words") {
    for (const DefiningGraph& g : corpus::graphs_up_to(3, false)) {
        oracles::WordOracle oracle(g);
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            GroupWord w1 = oracles::random_word(g, rng, 6);
            GroupWord w2 = oracles::random_word(g, rng, 6);
            CHECK(raag::words_equal(g, w1, w2) == oracle.equal(w1, w2));
        }
    }
}

TEST_CASE("parse_word and format_word") {
    GroupWord parsed = raag::parse_word("a b^-1 c^3 a^0");
    CHECK(parsed == w({{"a", 1}, {"b", -1}, {"c", 1}, {"c", 1}, {"c", 1}}));
    CHECK(raag::format_word(parsed) == "a b^-1 c^3");
    CHECK(raag::format_word({}) == "1");
    CHECK(raag::format_word(w({{"a", 1}, {"a", 1}, {"a", -1}})) == "a^2 a^-1");
    CHECK(raag::parse_word("").empty());
    CHECK(raag::parse_word("  \t \n ").empty());

    CHECK_THROWS_AS(raag::parse_word("a^"), raag::parse_error);
    CHECK_THROWS_AS(raag::parse_word("^2"), raag::parse_error);
    CHECK_THROWS_AS(raag::parse_word("a^x"), raag::parse_error);
    CHECK_THROWS_AS(raag::parse_word("a^2x"), raag::parse_error);

    std::mt19937_64 rng(19);
    DefiningGraph g = corpus::cycle(4);
    for (int trial = 0; trial < 50; ++trial) {
        GroupWord rw = oracles::random_word(g, rng, 12);
        if (rw.empty()) continue;
        CHECK(raag::parse_word(raag::format_word(rw)) == rw);
    }
}
