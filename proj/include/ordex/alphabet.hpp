#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordex {

/// Finite ordered alphabet of single-character symbols. Declaration order
/// fixes the lexicographic order: index 0 is the least symbol.
class Alphabet {
public:
    /// Throws std::invalid_argument if `symbols` is empty or has duplicates.
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(std::size_t index) const;
    std::optional<std::uint8_t> index_of(char symbol) const noexcept;
    const std::string& symbols() const noexcept { return symbols_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

/// A word over a fixed alphabet, stored as symbol indices. The empty word
/// is the least element of the length-lexicographic order.
struct Word {
    Alphabet alphabet;
    std::vector<std::uint8_t> indices;

    explicit Word(Alphabet a) : alphabet(std::move(a)) {}
    Word(Alphabet a, std::vector<std::uint8_t> idx);

    std::size_t size() const noexcept { return indices.size(); }
    bool empty() const noexcept { return indices.empty(); }

    /// Rendering as a plain symbol string.
    std::string str() const;

    friend bool operator==(const Word& u, const Word& v) {
        return u.alphabet == v.alphabet && u.indices == v.indices;
    }
};

/// Parses a symbol string; throws std::invalid_argument on foreign symbols.
Word word_from_string(const Alphabet& alphabet, std::string_view text);

/// Length-lexicographic comparison. Words must share an alphabet
/// (std::invalid_argument otherwise).
std::strong_ordering compare_lenlex(const Word& u, const Word& v);

/// Strict-weak-order functor for canonical containers of same-alphabet words.
struct LenLexLess {
    bool operator()(const Word& u, const Word& v) const;
};

/// 1-based rank in the length-lexicographic enumeration of all words:
/// unrank(A, 1) is the empty word. Throws std::invalid_argument on ordinal 0.
Word unrank(const Alphabet& alphabet, std::uint64_t ordinal);

/// Inverse of unrank. Throws std::overflow_error if the rank does not fit
/// in 64 bits.
std::uint64_t rank(const Word& word);

/// Advances `indices` to the length-lexicographic successor over an alphabet
/// of `alphabet_size` symbols, never growing past `max_len`. Returns false
/// (leaving `indices` unspecified) once the last word of length `max_len`
/// has been passed.
bool advance_lenlex(std::vector<std::uint8_t>& indices, std::size_t alphabet_size,
                    std::size_t max_len);

Word concat(const Word& u, const Word& v);

}  // namespace ordex
