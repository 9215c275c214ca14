#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ordex/alphabet.hpp"

namespace ordex {

struct RegexNode;
using RegexNodePtr = std::shared_ptr<const RegexNode>;

/// Regular-expression syntax tree. Star keeps its operand in `left`.
struct RegexNode {
    enum class Kind { EmptyLang, Epsilon, Symbol, Union, Concat, Star };

    Kind kind;
    std::uint8_t symbol = 0;
    RegexNodePtr left;
    RegexNodePtr right;
};

struct Regex {
    Alphabet alphabet;
    RegexNodePtr root;
};

class RegexParseError : public std::runtime_error {
public:
    RegexParseError(const std::string& message, std::size_t offset);
    /// 0-based offset into the pattern text.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Parses the pattern grammar
///   expr   := term ('|' term)*
///   term   := factor+
///   factor := atom '*'*
///   atom   := symbol | '_' | '#' | '(' expr ')'
/// where '_' is the empty word, '#' the empty language, and a symbol is any
/// character outside "|*()_#" that belongs to `alphabet`.
Regex parse_regex(std::string_view pattern, const Alphabet& alphabet);

/// Tree-interpreting matcher; deliberately independent of the automaton
/// pipeline so the two can cross-check each other.
bool regex_matches(const Regex& regex, const Word& word);

std::string regex_to_string(const Regex& regex);

}  // namespace ordex
