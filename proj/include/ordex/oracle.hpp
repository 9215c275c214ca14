#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ordex/alphabet.hpp"
#include "ordex/dfa.hpp"

namespace ordex {

/// Pure membership predicate for a decidable language. `member` must be a
/// pure function of the word: the engine's soundness and determinism rely
/// on repeated queries giving identical answers.
struct LanguageOracle {
    Alphabet alphabet;
    std::string name;
    std::function<bool(const Word&)> member;

    bool contains(const Word& word) const {
        if (word.alphabet != alphabet) {
            throw std::invalid_argument("word alphabet does not match the language");
        }
        return member(word);
    }
};

inline LanguageOracle oracle_from_dfa(Dfa dfa, std::string name) {
    Alphabet alphabet = dfa.alphabet();
    return LanguageOracle{
        std::move(alphabet), std::move(name),
        [d = std::move(dfa)](const Word& word) { return d.accepts(word); }};
}

}  // namespace ordex
