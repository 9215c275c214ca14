#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordex/alphabet.hpp"
#include "ordex/dfa.hpp"
#include "ordex/oracle.hpp"

namespace ordex {

/// Outcome of a budget-limited search for the j-th extension of one prefix.
/// Confirmed is a proof (every length-lex-earlier candidate was enumerated);
/// Inconclusive reports how many extensions the budget did locate and never
/// asserts that no j-th extension exists.
struct BoundedExtensionResult {
    std::optional<Word> confirmed;
    std::uint64_t found = 0;

    bool is_confirmed() const noexcept { return confirmed.has_value(); }
};

/// A (prefix, j-th extension) pair.
struct ExtensionWitness {
    Word prefix;
    Word extension;
};

/// Confirmed part of A^(j) discovered by bounded search, with the
/// length-lex-least prefix witnessing each extension. `confirmed` is sorted
/// by extension; its size is a certified lower bound on |A^(j)|.
struct BoundedOrdinalSet {
    std::vector<ExtensionWitness> confirmed;
    std::uint64_t inconclusive_prefixes = 0;
};

/// One spectrum row: size of (the known part of) A^(j). `exact` is true only
/// for automaton-backed computation; otherwise size is a lower bound.
struct SpectrumRow {
    std::uint64_t j = 0;
    std::uint64_t size = 0;
    bool exact = false;
    std::uint64_t inconclusive_prefixes = 0;
    std::optional<std::vector<ExtensionWitness>> witnesses;
};

/// Checkable evidence that the language has at least `entries.size()`
/// Myhill-Nerode classes: the entries' extensions are pairwise distinct and
/// each is the j-th extension of its prefix (re-checkable within
/// `ext_search_bound`).
struct Certificate {
    std::string language;
    std::uint64_t j = 0;
    std::uint64_t ext_search_bound = 0;
    std::vector<ExtensionWitness> entries;
};

struct CertifyFailure {
    std::uint64_t requested_classes = 0;
    std::uint64_t best_j = 0;
    std::uint64_t best_count = 0;
};

using CertifyOutcome = std::variant<Certificate, CertifyFailure>;

struct VerificationResult {
    bool ok = false;
    std::vector<std::string> problems;
};

// ------------------------------------------------------------ exact route

/// The j-th word (length-lex, 1-based) of the right language of `q`, or
/// nothing if that language has fewer than j words. `counts` must have
/// cap >= j; `infinite` is infinite_residual_states(dfa).
std::optional<Word> jth_word_from_state(const Dfa& dfa, std::uint32_t q, std::uint64_t j,
                                        SaturatingCounts& counts,
                                        const std::vector<bool>& infinite);

/// Convenience form that builds the count table and cycle analysis itself.
std::optional<Word> jth_word_from_state(const Dfa& dfa, std::uint32_t q, std::uint64_t j);

/// Exact A^(j): the union of j-th residual words over all reachable states.
std::vector<Word> ordinal_set_exact(const Dfa& dfa, std::uint64_t j);

/// Exact spectrum rows for j = 1..jmax. Witness prefixes are the
/// length-lex-least prefixes reaching a state with that j-th word.
std::vector<SpectrumRow> spectrum_exact(const Dfa& dfa, std::uint64_t jmax, bool with_witnesses);

/// Myhill-Nerode index: state count of the minimized automaton.
std::uint32_t mn_index(const Dfa& dfa);

// ----------------------------------------------------------- bounded route

/// Enumerates extensions y of x in length-lex order, |y| <= ext_len, and
/// stops at the j-th member of A_x.
BoundedExtensionResult jth_extension_bounded(const LanguageOracle& oracle, const Word& x,
                                             std::uint64_t j, std::uint64_t ext_len);

/// Confirmed j-th extensions over all prefixes of length <= prefix_len.
BoundedOrdinalSet ordinal_set_bounded(const LanguageOracle& oracle, std::uint64_t j,
                                      std::uint64_t prefix_len, std::uint64_t ext_len);

/// ordinal_set_bounded for every j = 1..jmax in one pass over the prefixes
/// (each prefix's extension scan is shared across rows).
std::vector<BoundedOrdinalSet> spectra_bounded_sets(const LanguageOracle& oracle,
                                                    std::uint64_t jmax, std::uint64_t prefix_len,
                                                    std::uint64_t ext_len);

/// Lower-bound spectrum rows for j = 1..jmax (exact = false).
std::vector<SpectrumRow> spectrum_bounded(const LanguageOracle& oracle, std::uint64_t jmax,
                                          std::uint64_t prefix_len, std::uint64_t ext_len,
                                          bool with_witnesses);

/// Searches j = 1..jmax for k prefixes with pairwise-distinct confirmed j-th
/// extensions, scanning prefixes in length-lex order and greedily keeping
/// each first-seen extension. Failure reports the best (j, count) reached.
CertifyOutcome certify_nonregular(const LanguageOracle& oracle, std::uint64_t k,
                                  std::uint64_t jmax, std::uint64_t prefix_len,
                                  std::uint64_t ext_len);

/// Independent checker: re-enumerates every entry's j-th extension from
/// scratch and checks pairwise distinctness. Shares no state with the
/// producer. Structurally invalid certificates (j = 0, empty) throw
/// std::invalid_argument; verification failures are reported as problems.
VerificationResult verify_certificate(const LanguageOracle& oracle, const Certificate& cert);

/// Scans x over all words of length <= prefix_len in length-lex order and
/// returns the least x with x.y not in A, if any. An empty result means the
/// budget found no counterexample; it does not prove y universal.
std::optional<Word> universal_extension_refute(const LanguageOracle& oracle, const Word& y,
                                               std::uint64_t prefix_len);

}  // namespace ordex
