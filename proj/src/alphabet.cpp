#include "ordex/alphabet.hpp"

#include <algorithm>
#include <limits>

namespace ordex {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
        throw std::invalid_argument("alphabet must contain at least one symbol");
    }
    if (symbols_.size() > 255) {
        throw std::invalid_argument("alphabet too large (at most 255 symbols)");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
            if (symbols_[i] == symbols_[j]) {
                throw std::invalid_argument(std::string("duplicate alphabet symbol '") +
                                            symbols_[i] + "'");
            }
        }
    }
}

char Alphabet::symbol(std::size_t index) const {
    if (index >= symbols_.size()) {
        throw std::out_of_range("symbol index out of range");
    }
    return symbols_[index];
}

std::optional<std::uint8_t> Alphabet::index_of(char symbol) const noexcept {
    auto pos = symbols_.find(symbol);
    if (pos == std::string::npos) {
        return std::nullopt;
    }
    return static_cast<std::uint8_t>(pos);
}

Word::Word(Alphabet a, std::vector<std::uint8_t> idx)
    : alphabet(std::move(a)), indices(std::move(idx)) {
    for (std::uint8_t i : indices) {
        if (i >= alphabet.size()) {
            throw std::invalid_argument("symbol index out of range for alphabet");
        }
    }
}

std::string Word::str() const {
    std::string out;
    out.reserve(indices.size());
    for (std::uint8_t i : indices) {
        out.push_back(alphabet.symbol(i));
    }
    return out;
}

Word word_from_string(const Alphabet& alphabet, std::string_view text) {
    Word w(alphabet);
    w.indices.reserve(text.size());
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        auto idx = alphabet.index_of(text[pos]);
        if (!idx) {
            throw std::invalid_argument(std::string("symbol '") + text[pos] +
                                        "' not in alphabet \"" + alphabet.symbols() + "\"");
        }
        w.indices.push_back(*idx);
    }
    return w;
}

std::strong_ordering compare_lenlex(const Word& u, const Word& v) {
    if (u.alphabet != v.alphabet) {
        throw std::invalid_argument("length-lex comparison requires a common alphabet");
    }
    if (u.size() != v.size()) {
        return u.size() < v.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.indices[i] != v.indices[i]) {
            return u.indices[i] < v.indices[i] ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

bool LenLexLess::operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) {
        return u.size() < v.size();
    }
    return u.indices < v.indices;
}

Word unrank(const Alphabet& alphabet, std::uint64_t ordinal) {
    if (ordinal == 0) {
        throw std::invalid_argument("ranks are 1-based; ordinal 0 has no word");
    }
    const std::uint64_t k = alphabet.size();
    Word w(alphabet);
    if (k == 1) {
        w.indices.assign(ordinal - 1, 0);
        return w;
    }
    std::uint64_t remaining = ordinal - 1;
    std::uint64_t len = 0;
    std::uint64_t count = 1;  // k^len
    bool saturated = false;
    while (!saturated && remaining >= count) {
        remaining -= count;
        ++len;
        if (count > std::numeric_limits<std::uint64_t>::max() / k) {
            saturated = true;  // k^len exceeds any representable remainder
        } else {
            count *= k;
        }
    }
    w.indices.resize(len);
    for (std::uint64_t slot = len; slot-- > 0;) {
        w.indices[slot] = static_cast<std::uint8_t>(remaining % k);
        remaining /= k;
    }
    return w;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("word rank does not fit in 64 bits");
    }
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("word rank does not fit in 64 bits");
    }
    return r;
}

}  // namespace

std::uint64_t rank(const Word& word) {
    const std::uint64_t k = word.alphabet.size();
    if (k == 1) {
        return checked_add(word.size(), 1);
    }
    // Rank = (number of strictly shorter words) + (index within own length) + 1.
    std::uint64_t shorter = 0;
    std::uint64_t count = 1;
    for (std::size_t len = 0; len < word.size(); ++len) {
        shorter = checked_add(shorter, count);
        count = checked_mul(count, k);
    }
    std::uint64_t value = 0;
    for (std::uint8_t digit : word.indices) {
        value = checked_add(checked_mul(value, k), digit);
    }
    return checked_add(checked_add(shorter, value), 1);
}

bool advance_lenlex(std::vector<std::uint8_t>& indices, std::size_t alphabet_size,
                    std::size_t max_len) {
    const std::uint8_t top = static_cast<std::uint8_t>(alphabet_size - 1);
    for (std::size_t pos = indices.size(); pos-- > 0;) {
        if (indices[pos] < top) {
            ++indices[pos];
            std::fill(indices.begin() + static_cast<std::ptrdiff_t>(pos) + 1, indices.end(), 0);
            return true;
        }
    }
    if (indices.size() >= max_len) {
        return false;
    }
    indices.assign(indices.size() + 1, 0);
    return true;
}

Word concat(const Word& u, const Word& v) {
    if (u.alphabet != v.alphabet) {
        throw std::invalid_argument("concatenation requires a common alphabet");
    }
    Word w(u.alphabet, u.indices);
    w.indices.insert(w.indices.end(), v.indices.begin(), v.indices.end());
    return w;
}

}  // namespace ordex
