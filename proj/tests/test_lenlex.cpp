#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ordex/alphabet.hpp"

using namespace ordex;

TEST_CASE("alphabet construction and validation") {
    Alphabet binary("01");
    CHECK(binary.size() == 2);
    CHECK(binary.symbol(0) == '0');
    CHECK(binary.symbol(1) == '1');
    CHECK(binary.index_of('1') == 1);
    CHECK(Alphabet("0").size() == 1);
    CHECK(Alphabet("abc").size() == 3);
    CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("00"), std::invalid_argument);
}

TEST_CASE("word round trip through strings") {
    Alphabet binary("01");
    Word w = word_from_string(binary, "0110");
    CHECK(w.size() == 4);
    CHECK(w.str() == "0110");
    CHECK(word_from_string(binary, "").empty());
    CHECK_THROWS_AS(word_from_string(binary, "012"), std::invalid_argument);
}

TEST_CASE("length-lex comparison orders by length first") {
    Alphabet binary("01");
    const Word lambda = word_from_string(binary, "");
    const Word zero = word_from_string(binary, "0");
    const Word one = word_from_string(binary, "1");
    const Word zz = word_from_string(binary, "00");
    CHECK(compare_lenlex(lambda, zero) < 0);
    CHECK(compare_lenlex(zero, one) < 0);
    CHECK(compare_lenlex(one, zz) < 0);
    CHECK(compare_lenlex(zz, zz) == 0);
    CHECK(compare_lenlex(zz, one) > 0);
    LenLexLess less;
    CHECK(less(one, zz));
    CHECK_FALSE(less(zz, one));
}

TEST_CASE("unrank produces the canonical enumeration") {
    Alphabet binary("01");
    const char* expected[] = {"", "0", "1", "00", "01", "10", "11", "000"};
    for (std::uint64_t i = 0; i < 8; ++i) {
        CHECK(unrank(binary, i + 1).str() == expected[i]);
    }
    CHECK(unrank(binary, 5).str() == "01");
    Alphabet unary("0");
    CHECK(unrank(unary, 4).str() == "000");
    CHECK(unrank(unary, 1).str() == "");
    CHECK_THROWS_AS(unrank(binary, 0), std::invalid_argument);
}

TEST_CASE("rank is the inverse of unrank") {
    Alphabet binary("01");
    for (std::uint64_t r = 1; r <= 300; ++r) {
        CHECK(rank(unrank(binary, r)) == r);
    }
    Alphabet ternary("abc");
    for (std::uint64_t r = 1; r <= 200; ++r) {
        CHECK(rank(unrank(ternary, r)) == r);
    }
}

TEST_CASE("advance_lenlex walks the enumeration in place") {
    Alphabet binary("01");
    std::vector<std::uint8_t> indices;
    std::vector<std::string> seen;
    seen.push_back(Word(binary, indices).str());
    while (advance_lenlex(indices, binary.size(), 2)) {
        seen.push_back(Word(binary, indices).str());
    }
    const std::vector<std::string> expected = {"", "0", "1", "00", "01", "10", "11"};
    CHECK(seen == expected);
}

TEST_CASE("advance_lenlex on a unary alphabet") {
    std::vector<std::uint8_t> indices;
    int count = 1;
    while (advance_lenlex(indices, 1, 5)) {
        ++count;
    }
    CHECK(count == 6);  // lengths 0..5
}

TEST_CASE("concat joins words over the same alphabet") {
    Alphabet binary("01");
    Word a = word_from_string(binary, "01");
    Word b = word_from_string(binary, "10");
    CHECK(concat(a, b).str() == "0110");
    CHECK(concat(a, word_from_string(binary, "")).str() == "01");
}
