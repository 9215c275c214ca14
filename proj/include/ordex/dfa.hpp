#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ordex/alphabet.hpp"
#include "ordex/regex.hpp"

namespace ordex {

/// Deterministic finite automaton with a total transition table.
class Dfa {
public:
    /// `transitions` is row-major: entry for (state q, symbol a) at q*|A|+a.
    /// Throws std::invalid_argument on malformed input (wrong table size,
    /// out-of-range targets or start state).
    Dfa(Alphabet alphabet, std::uint32_t state_count, std::uint32_t start,
        std::vector<bool> accepting, std::vector<std::uint32_t> transitions);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t state_count() const noexcept { return state_count_; }
    std::uint32_t start() const noexcept { return start_; }
    bool is_accepting(std::uint32_t state) const { return accepting_.at(state); }
    const std::vector<bool>& accepting() const noexcept { return accepting_; }

    std::uint32_t next_state(std::uint32_t state, std::uint32_t symbol) const {
        return transitions_[state * alphabet_.size() + symbol];
    }

    std::uint32_t run_from(std::uint32_t state, std::span<const std::uint8_t> word) const;
    std::uint32_t run(std::span<const std::uint8_t> word) const { return run_from(start_, word); }

    bool accepts(const Word& word) const;
    bool accepts_from(std::uint32_t state, const Word& word) const;

private:
    Alphabet alphabet_;
    std::uint32_t state_count_;
    std::uint32_t start_;
    std::vector<bool> accepting_;
    std::vector<std::uint32_t> transitions_;
};

/// Thompson construction followed by the subset construction. The result is
/// total (a sink state materialises as the empty subset) but not minimal.
Dfa compile_regex(const Regex& regex);

/// Partition-refinement minimisation. Unreachable states are dropped first;
/// the quotient is renumbered by breadth-first search from the start state in
/// symbol order, so equal languages over equal alphabets yield identical
/// automata. The result stays total: a sink needed for totality is kept, so
/// the state count equals the number of distinct left quotients.
Dfa minimize(const Dfa& dfa);

/// State reached from the start on `word`.
std::uint32_t residual_state(const Dfa& dfa, const Word& word);

/// Number of length-`length` words accepted from `state`, saturated at `cap`
/// (cap must be >= 1).
std::uint64_t residual_count(const Dfa& dfa, std::uint32_t state, std::uint64_t length,
                             std::uint64_t cap);

/// Whether infinitely many words are accepted from `state`: true iff, after
/// trimming to states that can still reach an accepting state, a cycle is
/// reachable from `state`.
bool residual_is_infinite(const Dfa& dfa, std::uint32_t state);

/// Per-state variant of residual_is_infinite, computed in one pass.
std::vector<bool> infinite_residual_states(const Dfa& dfa);

std::vector<bool> reachable_states(const Dfa& dfa);

/// Length-lexicographically least word reaching each state (no value for
/// unreachable states).
std::vector<std::optional<Word>> least_prefixes(const Dfa& dfa);

/// Saturating table of residual_count values, extended lazily by length.
/// Counts saturate at `cap`; selection arithmetic against remainders <= cap
/// is unaffected by the saturation.
class SaturatingCounts {
public:
    SaturatingCounts(const Dfa& dfa, std::uint64_t cap);

    std::uint64_t count(std::uint32_t state, std::uint64_t length);
    std::uint64_t cap() const noexcept { return cap_; }

private:
    void ensure(std::uint64_t length);

    const Dfa& dfa_;
    std::uint64_t cap_;
    std::vector<std::vector<std::uint64_t>> by_length_;
};

}  // namespace ordex
