#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordex/dfa.hpp"
#include "ordex/families.hpp"
#include "ordex/oracle.hpp"

namespace ordex {

/// Unusable language spec text: unknown scheme, unknown family, bad
/// parameters. Regex syntax errors and DFA file problems keep their own
/// error types.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ResolvedLanguage {
    LanguageOracle oracle;
    std::optional<Dfa> dfa;          // minimal automaton; present iff regex/dfa scheme
    std::optional<FamilyId> family;  // present iff family scheme
    std::vector<std::string> notes;  // e.g. the DFA auto-completion record
};

/// Parses `regex:<pattern>`, `dfa:<path>`, or `family:<name>[?k=v&...]`.
/// `default_alphabet` applies to the regex scheme only; families fix their
/// own alphabets and DFA files declare theirs.
ResolvedLanguage resolve_spec(const std::string& text, const std::string& default_alphabet,
                              bool auto_complete);

/// Expands every run `<symbol>^<digits>` to that many copies of the symbol
/// ("0^12" -> 12 zeros). Throws std::invalid_argument on a dangling caret,
/// a caret without a count, or a count beyond 1,000,000.
std::string expand_caret(const std::string& text);

}  // namespace ordex
