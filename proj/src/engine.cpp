#include "ordex/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace ordex {

namespace {

void require_positive_j(std::uint64_t j) {
    if (j == 0) {
        throw std::invalid_argument("ordinals are 1-based: j must be at least 1");
    }
}

}  // namespace

// -------------------------------------------------------------- exact route

std::optional<Word> jth_word_from_state(const Dfa& dfa, std::uint32_t q, std::uint64_t j,
                                        SaturatingCounts& counts,
                                        const std::vector<bool>& infinite) {
    require_positive_j(j);
    if (q >= dfa.state_count()) {
        throw std::invalid_argument("state out of range");
    }
    if (counts.cap() < j) {
        throw std::invalid_argument("count table cap is below the requested ordinal");
    }

    if (!infinite[q]) {
        // A finite residual is contained in lengths < state_count.
        std::uint64_t total = 0;
        for (std::uint64_t len = 0; len < dfa.state_count() && total < j; ++len) {
            total += counts.count(q, len);
        }
        if (total < j) {
            return std::nullopt;
        }
    }

    const std::uint64_t guard = static_cast<std::uint64_t>(dfa.state_count()) * (j + 1);
    std::uint64_t remainder = j;
    std::uint64_t length = 0;
    while (true) {
        std::uint64_t here = counts.count(q, length);
        if (here >= remainder) {
            break;
        }
        remainder -= here;
        ++length;
        if (length > guard) {
            throw std::logic_error("ordinal scan exceeded the reachability bound");
        }
    }

    Word word(dfa.alphabet());
    std::uint32_t state = q;
    for (std::uint64_t depth = 0; depth < length; ++depth) {
        const std::uint64_t remaining = length - depth - 1;
        bool descended = false;
        for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
            std::uint32_t target = dfa.next_state(state, static_cast<std::uint32_t>(a));
            std::uint64_t below = counts.count(target, remaining);
            if (remainder <= below) {
                word.indices.push_back(static_cast<std::uint8_t>(a));
                state = target;
                descended = true;
                break;
            }
            remainder -= below;
        }
        if (!descended) {
            throw std::logic_error("ordinal descent lost its remainder");
        }
    }
    if (remainder != 1 || !dfa.is_accepting(state)) {
        throw std::logic_error("ordinal descent ended off an accepting state");
    }
    return word;
}

std::optional<Word> jth_word_from_state(const Dfa& dfa, std::uint32_t q, std::uint64_t j) {
    require_positive_j(j);
    SaturatingCounts counts(dfa, j);
    std::vector<bool> infinite = infinite_residual_states(dfa);
    return jth_word_from_state(dfa, q, j, counts, infinite);
}

std::vector<Word> ordinal_set_exact(const Dfa& dfa, std::uint64_t j) {
    require_positive_j(j);
    SaturatingCounts counts(dfa, j);
    std::vector<bool> infinite = infinite_residual_states(dfa);
    std::vector<bool> reach = reachable_states(dfa);
    std::map<Word, std::monostate, LenLexLess> elements;
    for (std::uint32_t q = 0; q < dfa.state_count(); ++q) {
        if (!reach[q]) {
            continue;
        }
        if (auto word = jth_word_from_state(dfa, q, j, counts, infinite)) {
            elements.emplace(std::move(*word), std::monostate{});
        }
    }
    std::vector<Word> out;
    out.reserve(elements.size());
    for (const auto& [word, ignored] : elements) {
        out.push_back(word);
    }
    return out;
}

std::vector<SpectrumRow> spectrum_exact(const Dfa& dfa, std::uint64_t jmax, bool with_witnesses) {
    require_positive_j(jmax);
    SaturatingCounts counts(dfa, jmax);
    std::vector<bool> infinite = infinite_residual_states(dfa);
    std::vector<std::optional<Word>> prefixes = least_prefixes(dfa);

    std::vector<SpectrumRow> rows;
    rows.reserve(jmax);
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        std::map<Word, Word, LenLexLess> by_extension;  // extension -> least prefix
        for (std::uint32_t q = 0; q < dfa.state_count(); ++q) {
            if (!prefixes[q]) {
                continue;
            }
            auto word = jth_word_from_state(dfa, q, j, counts, infinite);
            if (!word) {
                continue;
            }
            auto [it, inserted] = by_extension.emplace(std::move(*word), *prefixes[q]);
            if (!inserted && compare_lenlex(*prefixes[q], it->second) < 0) {
                it->second = *prefixes[q];
            }
        }
        SpectrumRow row;
        row.j = j;
        row.size = by_extension.size();
        row.exact = true;
        row.inconclusive_prefixes = 0;
        if (with_witnesses) {
            std::vector<ExtensionWitness> witnesses;
            witnesses.reserve(by_extension.size());
            for (const auto& [extension, prefix] : by_extension) {
                witnesses.push_back({prefix, extension});
            }
            row.witnesses = std::move(witnesses);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint32_t mn_index(const Dfa& dfa) { return minimize(dfa).state_count(); }

// ------------------------------------------------------------ bounded route

namespace {

/// First `want` members of A_x with extension length <= ext_len, in
/// length-lex order; stops as soon as the `want`-th member appears.
struct ExtensionScan {
    std::vector<Word> found;
    std::uint64_t count = 0;
};

ExtensionScan scan_extensions(const LanguageOracle& oracle, const Word& x, std::uint64_t want,
                              std::uint64_t ext_len) {
    ExtensionScan scan;
    const std::size_t k = oracle.alphabet.size();
    const std::size_t base = x.indices.size();
    Word candidate(oracle.alphabet);
    candidate.indices = x.indices;
    std::vector<std::uint8_t> extension;
    while (true) {
        candidate.indices.resize(base + extension.size());
        std::copy(extension.begin(), extension.end(), candidate.indices.begin() + base);
        if (oracle.member(candidate)) {
            ++scan.count;
            scan.found.emplace_back(oracle.alphabet, extension);
            if (scan.count == want) {
                break;
            }
        }
        if (!advance_lenlex(extension, k, ext_len)) {
            break;
        }
    }
    return scan;
}

}  // namespace

BoundedExtensionResult jth_extension_bounded(const LanguageOracle& oracle, const Word& x,
                                             std::uint64_t j, std::uint64_t ext_len) {
    require_positive_j(j);
    if (x.alphabet != oracle.alphabet) {
        throw std::invalid_argument("prefix alphabet does not match the language");
    }
    ExtensionScan scan = scan_extensions(oracle, x, j, ext_len);
    BoundedExtensionResult result;
    result.found = scan.count;
    if (scan.count == j) {
        result.confirmed = std::move(scan.found.back());
    }
    return result;
}

std::vector<BoundedOrdinalSet> spectra_bounded_sets(const LanguageOracle& oracle,
                                                    std::uint64_t jmax, std::uint64_t prefix_len,
                                                    std::uint64_t ext_len) {
    require_positive_j(jmax);
    const std::size_t k = oracle.alphabet.size();

    std::vector<std::map<Word, Word, LenLexLess>> by_extension(jmax);
    std::vector<std::uint64_t> inconclusive(jmax, 0);

    std::vector<std::uint8_t> prefix_indices;
    while (true) {
        Word prefix(oracle.alphabet, prefix_indices);
        ExtensionScan scan = scan_extensions(oracle, prefix, jmax, ext_len);
        for (std::uint64_t j = 1; j <= jmax; ++j) {
            if (scan.count >= j) {
                // Prefixes arrive in length-lex order, so the first witness
                // for an extension is the least one; emplace keeps it.
                by_extension[j - 1].emplace(scan.found[j - 1], prefix);
            } else {
                ++inconclusive[j - 1];
            }
        }
        if (!advance_lenlex(prefix_indices, k, prefix_len)) {
            break;
        }
    }

    std::vector<BoundedOrdinalSet> sets(jmax);
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        BoundedOrdinalSet& set = sets[j - 1];
        set.inconclusive_prefixes = inconclusive[j - 1];
        set.confirmed.reserve(by_extension[j - 1].size());
        for (const auto& [extension, prefix] : by_extension[j - 1]) {
            set.confirmed.push_back({prefix, extension});
        }
    }
    return sets;
}

BoundedOrdinalSet ordinal_set_bounded(const LanguageOracle& oracle, std::uint64_t j,
                                      std::uint64_t prefix_len, std::uint64_t ext_len) {
    return std::move(spectra_bounded_sets(oracle, j, prefix_len, ext_len).back());
}

std::vector<SpectrumRow> spectrum_bounded(const LanguageOracle& oracle, std::uint64_t jmax,
                                          std::uint64_t prefix_len, std::uint64_t ext_len,
                                          bool with_witnesses) {
    std::vector<BoundedOrdinalSet> sets = spectra_bounded_sets(oracle, jmax, prefix_len, ext_len);
    std::vector<SpectrumRow> rows;
    rows.reserve(sets.size());
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        BoundedOrdinalSet& set = sets[j - 1];
        SpectrumRow row;
        row.j = j;
        row.size = set.confirmed.size();
        row.exact = false;
        row.inconclusive_prefixes = set.inconclusive_prefixes;
        if (with_witnesses) {
            row.witnesses = std::move(set.confirmed);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CertifyOutcome certify_nonregular(const LanguageOracle& oracle, std::uint64_t k,
                                  std::uint64_t jmax, std::uint64_t prefix_len,
                                  std::uint64_t ext_len) {
    if (k < 2) {
        throw std::invalid_argument("a certificate needs at least 2 classes");
    }
    require_positive_j(jmax);
    const std::size_t symbols = oracle.alphabet.size();

    CertifyFailure failure{k, 0, 0};
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        std::map<Word, std::monostate, LenLexLess> seen;
        std::vector<ExtensionWitness> entries;
        std::vector<std::uint8_t> prefix_indices;
        while (true) {
            Word prefix(oracle.alphabet, prefix_indices);
            ExtensionScan scan = scan_extensions(oracle, prefix, j, ext_len);
            if (scan.count == j) {
                Word extension = std::move(scan.found.back());
                if (seen.emplace(extension, std::monostate{}).second) {
                    entries.push_back({std::move(prefix), std::move(extension)});
                    if (entries.size() == k) {
                        return Certificate{oracle.name, j, ext_len, std::move(entries)};
                    }
                }
            }
            if (!advance_lenlex(prefix_indices, symbols, prefix_len)) {
                break;
            }
        }
        if (entries.size() > failure.best_count) {
            failure.best_count = entries.size();
            failure.best_j = j;
        }
    }
    return failure;
}

VerificationResult verify_certificate(const LanguageOracle& oracle, const Certificate& cert) {
    if (cert.j == 0) {
        throw std::invalid_argument("malformed certificate: j must be positive");
    }
    if (cert.entries.empty()) {
        throw std::invalid_argument("malformed certificate: no entries");
    }
    for (const ExtensionWitness& entry : cert.entries) {
        if (entry.prefix.alphabet != oracle.alphabet ||
            entry.extension.alphabet != oracle.alphabet) {
            throw std::invalid_argument("malformed certificate: alphabet mismatch");
        }
    }

    VerificationResult result;
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        const ExtensionWitness& entry = cert.entries[i];
        BoundedExtensionResult check =
            jth_extension_bounded(oracle, entry.prefix, cert.j, cert.ext_search_bound);
        if (!check.is_confirmed()) {
            result.problems.push_back(
                "entry " + std::to_string(i) + " (prefix \"" + entry.prefix.str() +
                "\"): extension " + std::to_string(cert.j) +
                " not confirmed within bound (found " + std::to_string(check.found) + ")");
        } else if (!(*check.confirmed == entry.extension)) {
            result.problems.push_back("entry " + std::to_string(i) + " (prefix \"" +
                                      entry.prefix.str() + "\"): states \"" +
                                      entry.extension.str() + "\" but the true extension is \"" +
                                      check.confirmed->str() + "\"");
        }
    }
    std::map<Word, std::size_t, LenLexLess> first_use;
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        auto [it, inserted] = first_use.emplace(cert.entries[i].extension, i);
        if (!inserted) {
            result.problems.push_back("entries " + std::to_string(it->second) + " and " +
                                      std::to_string(i) + " share extension \"" +
                                      cert.entries[i].extension.str() + "\"");
        }
    }
    result.ok = result.problems.empty();
    return result;
}

std::optional<Word> universal_extension_refute(const LanguageOracle& oracle, const Word& y,
                                               std::uint64_t prefix_len) {
    if (y.alphabet != oracle.alphabet) {
        throw std::invalid_argument("word alphabet does not match the language");
    }
    const std::size_t k = oracle.alphabet.size();
    Word candidate(oracle.alphabet);
    std::vector<std::uint8_t> prefix;
    while (true) {
        candidate.indices = prefix;
        candidate.indices.insert(candidate.indices.end(), y.indices.begin(), y.indices.end());
        if (!oracle.member(candidate)) {
            return Word(oracle.alphabet, prefix);
        }
        if (!advance_lenlex(prefix, k, prefix_len)) {
            break;
        }
    }
    return std::nullopt;
}

}  // namespace ordex
