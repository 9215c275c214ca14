#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ordex/engine.hpp"
#include "ordex/families.hpp"

using namespace ordex;

namespace {

const Alphabet& binary() {
    static const Alphabet a("01");
    return a;
}

const Alphabet& unary() {
    static const Alphabet a("0");
    return a;
}

Word bword(const std::string& text) { return word_from_string(binary(), text); }

bool member(FamilyTag tag, const std::string& text) {
    return family_membership({tag, std::nullopt}, bword(text));
}

}  // namespace

TEST_CASE("block-count membership") {
    CHECK(member(FamilyTag::EqCount, ""));
    CHECK(member(FamilyTag::EqCount, "01"));
    CHECK(member(FamilyTag::EqCount, "0011"));
    CHECK_FALSE(member(FamilyTag::EqCount, "10"));
    CHECK_FALSE(member(FamilyTag::EqCount, "001"));
    CHECK_FALSE(member(FamilyTag::EqCount, "0101"));
}

TEST_CASE("palindrome membership") {
    CHECK(member(FamilyTag::Palindrome, ""));
    CHECK(member(FamilyTag::Palindrome, "0"));
    CHECK(member(FamilyTag::Palindrome, "010"));
    CHECK(member(FamilyTag::Palindrome, "0110"));
    CHECK_FALSE(member(FamilyTag::Palindrome, "01"));
    CHECK_FALSE(member(FamilyTag::Palindrome, "011"));
}

TEST_CASE("mirrored-prefix membership") {
    CHECK(member(FamilyTag::Xxry, "000"));   // x=0, x^R=0, y=0
    CHECK(member(FamilyTag::Xxry, "001"));   // x=0, x^R=0, y=1
    CHECK(member(FamilyTag::Xxry, "01100")); // x=01, x^R=10, y=0
    CHECK_FALSE(member(FamilyTag::Xxry, ""));
    CHECK_FALSE(member(FamilyTag::Xxry, "01"));
    CHECK_FALSE(member(FamilyTag::Xxry, "0110"));  // mirror but empty y
}

TEST_CASE("coprime-counts membership") {
    CHECK(member(FamilyTag::Coprime, "01"));
    CHECK(member(FamilyTag::Coprime, "001"));
    CHECK(member(FamilyTag::Coprime, "011"));
    CHECK_FALSE(member(FamilyTag::Coprime, ""));
    CHECK_FALSE(member(FamilyTag::Coprime, "0011"));  // gcd(2,2)=2
    CHECK_FALSE(member(FamilyTag::Coprime, "10"));
    CHECK_FALSE(member(FamilyTag::Coprime, "010"));   // 1s not contiguous at the end
}

TEST_CASE("index sets") {
    IndexSet evens = IndexSet::evens();
    CHECK(evens.contains(0));
    CHECK(evens.contains(4));
    CHECK_FALSE(evens.contains(7));

    IndexSet odds = IndexSet::odds();
    CHECK(odds.contains(1));
    CHECK_FALSE(odds.contains(2));

    IndexSet primes = IndexSet::primes();
    CHECK(primes.contains(2));
    CHECK(primes.contains(13));
    CHECK_FALSE(primes.contains(1));
    CHECK_FALSE(primes.contains(9));

    IndexSet list = IndexSet::explicit_list({5, 1, 4, 4});
    CHECK(list.contains(1));
    CHECK(list.contains(4));
    CHECK(list.contains(5));
    CHECK_FALSE(list.contains(3));
    CHECK_FALSE(list.contains(6));  // nothing beyond the last element
    CHECK(list.spec_fragment() == "I=list&values=1,4,5");

    IndexSet pseudo = IndexSet::pseudorandom(7);
    CHECK(pseudo.contains(0));
    CHECK(pseudo.contains(1));
    CHECK(pseudo.contains(2));
    CHECK(pseudo.contains(3));
    CHECK_FALSE(pseudo.contains(4));
    CHECK(pseudo.spec_fragment() == "I=pseudo&seed=7");
    CHECK(IndexSet::pseudorandom(7) == IndexSet::pseudorandom(7));
    CHECK_FALSE(IndexSet::pseudorandom(7) == IndexSet::pseudorandom(8));
}

TEST_CASE("unary membership over an index set") {
    FamilyId zeros_evens{FamilyTag::Zeros, IndexSet::evens()};
    CHECK(family_membership(zeros_evens, word_from_string(unary(), "")));
    CHECK(family_membership(zeros_evens, word_from_string(unary(), "00")));
    CHECK_FALSE(family_membership(zeros_evens, word_from_string(unary(), "0")));
}

TEST_CASE("derived index set splits residues mod 3") {
    IndexSet primes = IndexSet::primes();
    for (std::uint64_t i = 0; i <= 100; ++i) {
        CHECK(iprime_membership(primes, 3 * i));
        CHECK(iprime_membership(primes, 3 * i + 1) == primes.contains(i));
        CHECK(iprime_membership(primes, 3 * i + 2) == !primes.contains(i));
        // Exactly one of 3i+1, 3i+2 belongs.
        CHECK(iprime_membership(primes, 3 * i + 1) != iprime_membership(primes, 3 * i + 2));
    }
}

TEST_CASE("window census") {
    DeltaInfo info = delta_info(IndexSet::explicit_list({}), 4);
    CHECK(info.delta == 2);
    REQUIRE(info.window.size() == 2);
    CHECK(info.window[0] == 2);
    CHECK(info.window[1] == 3);
    // Any aligned triple {3i, 3i+1, 3i+2} has exactly two members of I', so
    // delta is forced to 2 unless the window straddles blocks, i.e. unless
    // n ≡ 2 (mod 3). Only there can delta swing through {1, 2, 3}.
    std::set<std::uint64_t> at_straddle;
    for (const IndexSet& set :
         {IndexSet::evens(), IndexSet::primes(), IndexSet::pseudorandom(7)}) {
        for (std::uint64_t n = 3; n <= 200; ++n) {
            const std::uint64_t d = delta_info(set, n).delta;
            CHECK(d >= 1);
            CHECK(d <= 3);
            if (n % 3 != 2) {
                CHECK(d == 2);
            } else if (set == IndexSet::primes()) {
                at_straddle.insert(d);
            }
        }
    }
    CHECK(at_straddle == std::set<std::uint64_t>{1, 2, 3});
}

TEST_CASE("length-set algebra") {
    LengthSet a = {1, 3};
    LengthSet b = {0, 2};
    CHECK(ls_shift(a, 2) == LengthSet{3, 5});
    CHECK(ls_union(a, b) == LengthSet{0, 1, 2, 3});
    CHECK(ls_sum(a, b) == LengthSet{1, 3, 5});
    CHECK(ls_subset(LengthSet{1}, a));
    CHECK_FALSE(ls_subset(LengthSet{2}, a));
    CHECK(ls_quotient0(LengthSet{0, 1, 3}) == LengthSet{0, 2});
}

TEST_CASE("staged length sets match the hand-computed table") {
    CHECK(bset(0, 1) == LengthSet{0});
    CHECK(bset(0, 2) == LengthSet{1, 2});
    CHECK(bset(0, 3) == LengthSet{3});
    CHECK(bset(0, 4) == LengthSet{4, 5});
    CHECK(bset(1, 1) == LengthSet{0, 1});
    CHECK(bset(1, 2) == LengthSet{2});
    CHECK(bset(1, 3) == LengthSet{3, 4});
    CHECK(bset(1, 4) == LengthSet{5});
    CHECK(bset(1, 5) == LengthSet{6, 7});
    CHECK(bset(2, 1) == LengthSet{0, 1});
    CHECK(bset(2, 2) == LengthSet{1, 2, 3});
    CHECK(bset(2, 3) == LengthSet{2, 3, 4});
    CHECK(bset(2, 4) == LengthSet{4, 5, 6});
    CHECK(bset(2, 5) == LengthSet{5, 6, 7});
    CHECK(bset(2, 6) == LengthSet{7, 8, 9});
    CHECK(bcal(3) == bset(2, 3));
}

TEST_CASE("unary extension lengths agree with the bounded engine") {
    IndexSet primes = IndexSet::primes();
    LanguageOracle oracle = family_oracle({FamilyTag::C41, primes});
    for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::uint64_t j = 1; j <= 6; ++j) {
            const std::uint64_t len = a_ext_len(primes, n, j);
            CHECK(a_ext(primes, n, j) ==
                  Word(unary(), std::vector<std::uint8_t>(static_cast<std::size_t>(len), 0)));
            auto via_engine = jth_extension_bounded(
                oracle, word_from_string(unary(), std::string(n, '0')), j, n + 3 * j + 5);
            REQUIRE(via_engine.is_confirmed());
            CHECK(via_engine.confirmed->size() == len);
        }
    }
}

TEST_CASE("prime gaps") {
    CHECK(gaps(IndexSet::primes(), 12) == LengthSet{1, 2, 4});
    CHECK(gaps(IndexSet::primes(), 200) == LengthSet{1, 2, 4, 6, 8, 10, 14});
    CHECK(gaps(IndexSet::explicit_list({1, 4, 5}), 10) == LengthSet{1, 3});
}

TEST_CASE("triangular numbers and their inverse") {
    CHECK(triangular(0) == 0);
    CHECK(triangular(1) == 1);
    CHECK(triangular(8) == 36);
    CHECK(triangular_inverse(1) == 1);
    CHECK(triangular_inverse(2) == 2);
    CHECK(triangular_inverse(3) == 2);
    CHECK(triangular_inverse(4) == 3);
    CHECK(triangular_inverse(36) == 8);
    CHECK(triangular_inverse(37) == 9);
    for (std::uint64_t n = 1; n <= 500; ++n) {
        const std::uint64_t j = triangular_inverse(n);
        CHECK(triangular(j - 1) < n);
        CHECK(n <= triangular(j));
    }
}

TEST_CASE("staged three-block words") {
    CHECK(c51_x(1).str() == "01");
    CHECK(c51_x(3).str() == "0001");
    CHECK(c51_y(1, 1).str() == "0101");
    CHECK(c51_y(2, 1).str() == "00101");
    CHECK(c51_y(2, 2).str() == "001001");
    CHECK(member(FamilyTag::C51, "010101"));      // n=1: m=t_inv(1)=1, k=1-t(0)=1
    CHECK(member(FamilyTag::C51, "0010101"));     // n=2: m=2, k=... via formula
    CHECK_FALSE(member(FamilyTag::C51, "0101"));  // two blocks only
    CHECK_FALSE(member(FamilyTag::C51, ""));
    CHECK_FALSE(member(FamilyTag::C51, "10101"));
}

TEST_CASE("membership formula equals the generated construction") {
    // Independent route: generate B (each x_n followed by its own stage word)
    // and C (x_n · x_m · x_1 for m < t_inv(n)) up to a length budget, then
    // compare against the closed-form membership for every word.
    const std::size_t L = 22;
    std::set<std::string> generated;
    for (std::uint64_t n = 1; n + 4 <= L; ++n) {
        const std::uint64_t j = triangular_inverse(n);
        const Word own = c51_y(j, n - triangular(j - 1));
        if (n + 1 + own.size() <= L) {
            generated.insert(concat(c51_x(n), own).str());
        }
        for (std::uint64_t m = 1; m < j; ++m) {
            const Word tail = c51_y(m, 1);
            if (n + 1 + tail.size() <= L) {
                generated.insert(concat(c51_x(n), tail).str());
            }
        }
    }
    std::vector<std::uint8_t> indices;
    Word w(binary());
    std::uint64_t members = 0;
    do {
        w.indices = indices;
        const bool formula = member(FamilyTag::C51, w.str());
        CHECK(formula == (generated.count(w.str()) > 0));
        members += formula ? 1 : 0;
    } while (advance_lenlex(indices, 2, L));
    CHECK(members == generated.size());
    CHECK(members > 10);
}

TEST_CASE("first members of the staged language in length-lex order") {
    std::vector<std::string> first;
    std::vector<std::uint8_t> indices;
    Word w(binary());
    do {
        w.indices = indices;
        if (member(FamilyTag::C51, w.str())) {
            first.push_back(w.str());
        }
    } while (advance_lenlex(indices, 2, 9) && first.size() < 5);
    CHECK(first == std::vector<std::string>{"010101", "0010101", "00010101", "00100101",
                                            "000010101"});
}

TEST_CASE("predicted extension lists") {
    auto p1 = c51_predicted_extensions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].str() == "0101");
    auto p5 = c51_predicted_extensions(5);
    REQUIRE(p5.size() == 3);
    CHECK(p5[0].str() == "0101");
    CHECK(p5[1].str() == "00101");
    CHECK(p5[2].str() == "0001001");  // y(3, 5-t(2)) = y(3,2)
}

TEST_CASE("proper-prefix pool") {
    auto d1 = c51_D(1);
    std::set<std::string> got;
    for (const Word& u : d1) {
        got.insert(u.str());
    }
    CHECK(got == std::set<std::string>{"0", "01", "010"});
    // Every element of D(j) is a nonempty proper prefix of some y(r,s), r,s <= j.
    for (const Word& u : c51_D(2)) {
        CHECK(!u.empty());
        bool is_prefix = false;
        for (std::uint64_t rr = 1; rr <= 2 && !is_prefix; ++rr) {
            for (std::uint64_t ss = 1; ss <= 2 && !is_prefix; ++ss) {
                const Word y = c51_y(rr, ss);
                if (u.size() < y.size() &&
                    std::equal(u.indices.begin(), u.indices.end(), y.indices.begin())) {
                    is_prefix = true;
                }
            }
        }
        CHECK(is_prefix);
    }
}

TEST_CASE("word classification agrees with membership") {
    CHECK(c51_classify(bword("000")) == C51Class::ZeroStar);
    CHECK(c51_classify(bword("")) == C51Class::ZeroStar);
    CHECK(c51_classify(bword("01")) == C51Class::InX);
    CHECK(c51_classify(bword("0101")) == C51Class::InY);
    CHECK(c51_classify(bword("01010")) == C51Class::InY);
    CHECK(c51_classify(bword("010101")) == C51Class::InA);
    CHECK(c51_classify(bword("1")) == C51Class::InZ);
    CHECK(c51_classify(bword("011")) == C51Class::InZ);
    std::vector<std::uint8_t> indices;
    Word w(binary());
    do {
        w.indices = indices;
        const bool formula = member(FamilyTag::C51, w.str());
        CHECK((c51_classify(w) == C51Class::InA) == formula);
    } while (advance_lenlex(indices, 2, 14));
}

TEST_CASE("suffix-pattern membership") {
    CHECK(member(FamilyTag::KamaeWeiss, "11010"));        // u=λ, n=1
    CHECK(member(FamilyTag::KamaeWeiss, "011010"));       // u=0, n=1
    CHECK(member(FamilyTag::KamaeWeiss, "1100100"));      // u=λ, n=2
    CHECK_FALSE(member(FamilyTag::KamaeWeiss, "11011"));
    CHECK_FALSE(member(FamilyTag::KamaeWeiss, "110100"));
    CHECK_FALSE(member(FamilyTag::KamaeWeiss, ""));

    // Independent route: generate u·1·1·0^n·1·0^n up to length 18.
    const std::size_t L = 18;
    std::set<std::string> generated;
    for (std::uint64_t n = 1; 2 * n + 3 <= L; ++n) {
        std::string suffix = "11" + std::string(n, '0') + "1" + std::string(n, '0');
        std::vector<std::uint8_t> u;
        Word uw(binary());
        do {
            uw.indices = u;
            if (uw.size() + suffix.size() <= L) {
                generated.insert(uw.str() + suffix);
            }
        } while (advance_lenlex(u, 2, L - suffix.size()));
    }
    std::vector<std::uint8_t> indices;
    Word w(binary());
    do {
        w.indices = indices;
        CHECK(member(FamilyTag::KamaeWeiss, w.str()) == (generated.count(w.str()) > 0));
    } while (advance_lenlex(indices, 2, L));
}

TEST_CASE("known universal extensions") {
    CHECK(kw_universal(1).str() == "11010");
    CHECK(kw_universal(2).str() == "1101011010");
    CHECK(kw_universal(3).size() == 15);
}

TEST_CASE("family plumbing") {
    CHECK(family_alphabet(FamilyTag::Zeros) == unary());
    CHECK(family_alphabet(FamilyTag::C41) == unary());
    CHECK(family_alphabet(FamilyTag::EqCount) == binary());
    CHECK(family_spec_string({FamilyTag::EqCount, std::nullopt}) == "family:eq-count");
    CHECK(family_spec_string({FamilyTag::Zeros, IndexSet::evens()}) == "family:zeros?I=evens");
    CHECK(family_spec_string({FamilyTag::C41, IndexSet::pseudorandom(7)}) ==
          "family:c41?I=pseudo&seed=7");
    CHECK_THROWS_AS(family_spec_string({FamilyTag::Zeros, std::nullopt}),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_spec_string({FamilyTag::EqCount, IndexSet::evens()}),
                    std::invalid_argument);
    LanguageOracle oracle = family_oracle({FamilyTag::EqCount, std::nullopt});
    CHECK(oracle.name == "family:eq-count");
    CHECK(oracle.contains(bword("0011")));
    CHECK_FALSE(oracle.contains(bword("10")));
}

TEST_CASE("primality helper") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));  // 7 * 13
}
