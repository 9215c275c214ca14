#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ordex/dfa.hpp"
#include "ordex/regex.hpp"

using namespace ordex;

namespace {

const Alphabet& binary() {
    static const Alphabet a("01");
    return a;
}

Dfa minimal(const std::string& pattern) {
    return minimize(compile_regex(parse_regex(pattern, binary())));
}

}  // namespace

TEST_CASE("constructor validates shape") {
    CHECK_THROWS_AS(Dfa(binary(), 0, 0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa(binary(), 1, 1, {true}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa(binary(), 1, 0, {true}, {0}), std::invalid_argument);   // short table
    CHECK_THROWS_AS(Dfa(binary(), 1, 0, {true}, {0, 1}), std::invalid_argument);  // bad target
    Dfa ok(binary(), 1, 0, {true}, {0, 0});
    CHECK(ok.state_count() == 1);
}

TEST_CASE("minimization reaches the canonical state counts") {
    CHECK(minimal("0*1*").state_count() == 3);
    CHECK(minimal("(0|1)*11").state_count() == 3);
    CHECK(minimal("_").state_count() == 2);
    CHECK(minimal("#").state_count() == 1);
    CHECK(minimal("(00)*").state_count() == 3);
    CHECK(minimal("0*1*0*").state_count() == 4);
}

TEST_CASE("minimization is idempotent and canonical") {
    Dfa once = minimal("(0|1)*11");
    Dfa twice = minimize(once);
    CHECK(once.state_count() == twice.state_count());
    CHECK(once.start() == twice.start());
    for (std::uint32_t q = 0; q < once.state_count(); ++q) {
        CHECK(once.is_accepting(q) == twice.is_accepting(q));
        for (std::uint8_t a = 0; a < 2; ++a) {
            CHECK(once.next_state(q, a) == twice.next_state(q, a));
        }
    }
}

TEST_CASE("minimized automaton accepts the same language") {
    Dfa raw = compile_regex(parse_regex("(01|10)*", binary()));
    Dfa min = minimize(raw);
    std::vector<std::uint8_t> indices;
    Word w(binary());
    do {
        w.indices = indices;
        CHECK(raw.accepts(w) == min.accepts(w));
    } while (advance_lenlex(indices, 2, 9));
}

TEST_CASE("run and residual_state agree") {
    Dfa dfa = minimal("0*1*");
    const Word w = word_from_string(binary(), "0011");
    CHECK(residual_state(dfa, w) == dfa.run(w.indices));
    CHECK(dfa.accepts(w));
    CHECK_FALSE(dfa.accepts(word_from_string(binary(), "10")));
}

TEST_CASE("least prefixes reach states in BFS order") {
    Dfa dfa = minimal("0*1*");
    const auto prefixes = least_prefixes(dfa);
    REQUIRE(prefixes.size() == 3);
    REQUIRE(prefixes[0].has_value());
    REQUIRE(prefixes[1].has_value());
    REQUIRE(prefixes[2].has_value());
    CHECK(prefixes[dfa.start()]->str() == "");
    CHECK(prefixes[residual_state(dfa, word_from_string(binary(), "1"))]->str() == "1");
    CHECK(prefixes[residual_state(dfa, word_from_string(binary(), "10"))]->str() == "10");
}

TEST_CASE("residual counting matches hand counts for 0*1*") {
    Dfa dfa = minimal("0*1*");
    // Words of length L in 0*1* from the start state: L+1 of them.
    for (std::uint64_t len = 0; len <= 6; ++len) {
        CHECK(residual_count(dfa, dfa.start(), len, 100) == len + 1);
    }
    SaturatingCounts counts(dfa, 5);
    CHECK(counts.cap() == 5);
    CHECK(counts.count(dfa.start(), 0) == 1);
    CHECK(counts.count(dfa.start(), 3) == 4);
    CHECK(counts.count(dfa.start(), 4) == 5);
    CHECK(counts.count(dfa.start(), 9) == 5);  // saturated at the cap
}

TEST_CASE("infinite residual detection") {
    Dfa star = minimal("0*1*");
    const auto infinite = infinite_residual_states(star);
    CHECK(infinite[star.start()]);
    CHECK(residual_is_infinite(star, star.start()));
    const std::uint32_t dead = residual_state(star, word_from_string(binary(), "10"));
    CHECK_FALSE(infinite[dead]);

    Dfa eps = minimal("_");  // language {λ}: every residual is finite
    const auto fin = infinite_residual_states(eps);
    for (std::uint32_t q = 0; q < eps.state_count(); ++q) {
        CHECK_FALSE(fin[q]);
    }
}

TEST_CASE("reachable_states covers exactly the reachable part") {
    Dfa dfa = minimal("0*1*");
    const auto reach = reachable_states(dfa);
    CHECK(reach.size() == 3);  // minimal automata have no unreachable states
}
