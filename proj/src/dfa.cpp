#include "ordex/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace ordex {

Dfa::Dfa(Alphabet alphabet, std::uint32_t state_count, std::uint32_t start,
         std::vector<bool> accepting, std::vector<std::uint32_t> transitions)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      start_(start),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
    if (state_count_ == 0) {
        throw std::invalid_argument("automaton needs at least one state");
    }
    if (start_ >= state_count_) {
        throw std::invalid_argument("start state out of range");
    }
    if (accepting_.size() != state_count_) {
        throw std::invalid_argument("accepting vector size does not match state count");
    }
    if (transitions_.size() != static_cast<std::size_t>(state_count_) * alphabet_.size()) {
        throw std::invalid_argument("transition table is not total");
    }
    for (std::uint32_t target : transitions_) {
        if (target >= state_count_) {
            throw std::invalid_argument("transition target out of range");
        }
    }
}

std::uint32_t Dfa::run_from(std::uint32_t state, std::span<const std::uint8_t> word) const {
    if (state >= state_count_) {
        throw std::invalid_argument("state out of range");
    }
    for (std::uint8_t symbol : word) {
        state = next_state(state, symbol);
    }
    return state;
}

bool Dfa::accepts(const Word& word) const { return accepts_from(start_, word); }

bool Dfa::accepts_from(std::uint32_t state, const Word& word) const {
    if (word.alphabet != alphabet_) {
        throw std::invalid_argument("word alphabet does not match the automaton");
    }
    return accepting_[run_from(state, word.indices)];
}

namespace {

// ---------------------------------------------------------------- Thompson

struct NfaState {
    std::vector<std::pair<std::uint8_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> epsilon;
};

struct Fragment {
    std::uint32_t start;
    std::uint32_t accept;
};

class NfaBuilder {
public:
    Fragment build(const RegexNode* node) {
        switch (node->kind) {
            case RegexNode::Kind::EmptyLang: {
                return {fresh(), fresh()};
            }
            case RegexNode::Kind::Epsilon: {
                Fragment f{fresh(), fresh()};
                states_[f.start].epsilon.push_back(f.accept);
                return f;
            }
            case RegexNode::Kind::Symbol: {
                Fragment f{fresh(), fresh()};
                states_[f.start].edges.emplace_back(node->symbol, f.accept);
                return f;
            }
            case RegexNode::Kind::Union: {
                Fragment a = build(node->left.get());
                Fragment b = build(node->right.get());
                Fragment f{fresh(), fresh()};
                states_[f.start].epsilon = {a.start, b.start};
                states_[a.accept].epsilon.push_back(f.accept);
                states_[b.accept].epsilon.push_back(f.accept);
                return f;
            }
            case RegexNode::Kind::Concat: {
                Fragment a = build(node->left.get());
                Fragment b = build(node->right.get());
                states_[a.accept].epsilon.push_back(b.start);
                return {a.start, b.accept};
            }
            case RegexNode::Kind::Star: {
                Fragment a = build(node->left.get());
                Fragment f{fresh(), fresh()};
                states_[f.start].epsilon = {a.start, f.accept};
                states_[a.accept].epsilon.push_back(a.start);
                states_[a.accept].epsilon.push_back(f.accept);
                return f;
            }
        }
        throw std::logic_error("unknown syntax node");
    }

    const std::vector<NfaState>& states() const { return states_; }

private:
    std::uint32_t fresh() {
        states_.emplace_back();
        return static_cast<std::uint32_t>(states_.size() - 1);
    }

    std::vector<NfaState> states_;
};

std::vector<std::uint32_t> epsilon_closure(const std::vector<NfaState>& states,
                                           std::vector<std::uint32_t> set) {
    std::vector<bool> in_set(states.size(), false);
    for (std::uint32_t s : set) {
        in_set[s] = true;
    }
    std::deque<std::uint32_t> queue(set.begin(), set.end());
    while (!queue.empty()) {
        std::uint32_t s = queue.front();
        queue.pop_front();
        for (std::uint32_t t : states[s].epsilon) {
            if (!in_set[t]) {
                in_set[t] = true;
                set.push_back(t);
                queue.push_back(t);
            }
        }
    }
    std::sort(set.begin(), set.end());
    return set;
}

}  // namespace

Dfa compile_regex(const Regex& regex) {
    NfaBuilder builder;
    Fragment nfa = builder.build(regex.root.get());
    const auto& nstates = builder.states();
    const std::size_t k = regex.alphabet.size();

    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> subsets;
    std::deque<std::uint32_t> queue;

    auto intern = [&](std::vector<std::uint32_t> subset) {
        auto [it, inserted] = ids.emplace(std::move(subset), static_cast<std::uint32_t>(subsets.size()));
        if (inserted) {
            subsets.push_back(it->first);
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern(epsilon_closure(nstates, {nfa.start}));

    std::vector<std::uint32_t> transitions;
    std::vector<bool> accepting;
    std::vector<std::vector<std::uint32_t>> rows;
    while (!queue.empty()) {
        std::uint32_t id = queue.front();
        queue.pop_front();
        std::vector<std::uint32_t> subset = subsets[id];
        std::vector<std::uint32_t> row(k);
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<std::uint32_t> moved;
            for (std::uint32_t s : subset) {
                for (auto [symbol, target] : nstates[s].edges) {
                    if (symbol == a) {
                        moved.push_back(target);
                    }
                }
            }
            std::sort(moved.begin(), moved.end());
            moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
            row[a] = intern(epsilon_closure(nstates, std::move(moved)));
        }
        if (rows.size() <= id) {
            rows.resize(id + 1);
        }
        rows[id] = std::move(row);
    }

    transitions.reserve(subsets.size() * k);
    accepting.resize(subsets.size());
    for (std::uint32_t id = 0; id < subsets.size(); ++id) {
        const auto& subset = subsets[id];
        accepting[id] = std::binary_search(subset.begin(), subset.end(), nfa.accept);
        transitions.insert(transitions.end(), rows[id].begin(), rows[id].end());
    }
    return Dfa(regex.alphabet, static_cast<std::uint32_t>(subsets.size()), 0, std::move(accepting),
               std::move(transitions));
}

std::vector<bool> reachable_states(const Dfa& dfa) {
    std::vector<bool> seen(dfa.state_count(), false);
    std::deque<std::uint32_t> queue{dfa.start()};
    seen[dfa.start()] = true;
    while (!queue.empty()) {
        std::uint32_t q = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
            std::uint32_t t = dfa.next_state(q, static_cast<std::uint32_t>(a));
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

namespace {

/// Breadth-first renumbering from the start state in symbol order. Input must
/// have all states reachable.
Dfa canonical_renumber(const Dfa& dfa) {
    const std::size_t k = dfa.alphabet().size();
    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::vector<std::uint32_t> order(dfa.state_count(), kUnset);
    std::vector<std::uint32_t> sequence;
    order[dfa.start()] = 0;
    sequence.push_back(dfa.start());
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        std::uint32_t q = sequence[i];
        for (std::size_t a = 0; a < k; ++a) {
            std::uint32_t t = dfa.next_state(q, static_cast<std::uint32_t>(a));
            if (order[t] == kUnset) {
                order[t] = static_cast<std::uint32_t>(sequence.size());
                sequence.push_back(t);
            }
        }
    }
    std::vector<bool> accepting(sequence.size());
    std::vector<std::uint32_t> transitions(sequence.size() * k);
    for (std::uint32_t fresh = 0; fresh < sequence.size(); ++fresh) {
        std::uint32_t old = sequence[fresh];
        accepting[fresh] = dfa.is_accepting(old);
        for (std::size_t a = 0; a < k; ++a) {
            transitions[fresh * k + a] = order[dfa.next_state(old, static_cast<std::uint32_t>(a))];
        }
    }
    return Dfa(dfa.alphabet(), static_cast<std::uint32_t>(sequence.size()), 0, std::move(accepting),
               std::move(transitions));
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
    const std::size_t k = dfa.alphabet().size();

    // Restrict to reachable states.
    std::vector<bool> reach = reachable_states(dfa);
    std::vector<std::uint32_t> compact(dfa.state_count(), 0);
    std::vector<std::uint32_t> kept;
    for (std::uint32_t q = 0; q < dfa.state_count(); ++q) {
        if (reach[q]) {
            compact[q] = static_cast<std::uint32_t>(kept.size());
            kept.push_back(q);
        }
    }
    const std::uint32_t n = static_cast<std::uint32_t>(kept.size());

    std::vector<std::uint32_t> delta(n * k);
    std::vector<bool> acc(n);
    for (std::uint32_t q = 0; q < n; ++q) {
        acc[q] = dfa.is_accepting(kept[q]);
        for (std::size_t a = 0; a < k; ++a) {
            delta[q * k + a] = compact[dfa.next_state(kept[q], static_cast<std::uint32_t>(a))];
        }
    }

    // Hopcroft refinement over the reachable part.
    std::vector<std::vector<std::uint32_t>> inverse(n * k);
    for (std::uint32_t q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            inverse[delta[q * k + a] * k + a].push_back(q);
        }
    }

    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::uint32_t> block_of(n);
    {
        std::vector<std::uint32_t> accepted, rejected;
        for (std::uint32_t q = 0; q < n; ++q) {
            (acc[q] ? accepted : rejected).push_back(q);
        }
        if (!accepted.empty()) {
            for (std::uint32_t q : accepted) {
                block_of[q] = static_cast<std::uint32_t>(blocks.size());
            }
            blocks.push_back(std::move(accepted));
        }
        if (!rejected.empty()) {
            for (std::uint32_t q : rejected) {
                block_of[q] = static_cast<std::uint32_t>(blocks.size());
            }
            blocks.push_back(std::move(rejected));
        }
    }

    std::deque<std::pair<std::uint32_t, std::uint32_t>> worklist;
    std::set<std::pair<std::uint32_t, std::uint32_t>> queued;
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        for (std::uint32_t a = 0; a < k; ++a) {
            worklist.emplace_back(b, a);
            queued.emplace(b, a);
        }
    }

    while (!worklist.empty()) {
        auto [splitter, a] = worklist.front();
        worklist.pop_front();
        queued.erase({splitter, a});

        std::vector<std::uint32_t> incoming;
        for (std::uint32_t t : blocks[splitter]) {
            const auto& sources = inverse[t * k + a];
            incoming.insert(incoming.end(), sources.begin(), sources.end());
        }
        if (incoming.empty()) {
            continue;
        }

        std::map<std::uint32_t, std::vector<std::uint32_t>> touched;
        for (std::uint32_t q : incoming) {
            touched[block_of[q]].push_back(q);
        }
        for (auto& [block_id, hit] : touched) {
            if (hit.size() == blocks[block_id].size()) {
                continue;  // block maps entirely into the splitter
            }
            std::sort(hit.begin(), hit.end());
            hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
            if (hit.size() == blocks[block_id].size()) {
                continue;
            }
            std::vector<std::uint32_t> rest;
            rest.reserve(blocks[block_id].size() - hit.size());
            for (std::uint32_t q : blocks[block_id]) {
                if (!std::binary_search(hit.begin(), hit.end(), q)) {
                    rest.push_back(q);
                }
            }
            const std::uint32_t fresh = static_cast<std::uint32_t>(blocks.size());
            blocks[block_id] = std::move(hit);
            for (std::uint32_t q : blocks[block_id]) {
                block_of[q] = block_id;
            }
            blocks.push_back(std::move(rest));
            for (std::uint32_t q : blocks[fresh]) {
                block_of[q] = fresh;
            }
            for (std::uint32_t b = 0; b < k; ++b) {
                if (queued.count({block_id, b})) {
                    worklist.emplace_back(fresh, b);
                    queued.emplace(fresh, b);
                } else {
                    // Enqueue the smaller half.
                    std::uint32_t pick =
                        blocks[fresh].size() < blocks[block_id].size() ? fresh : block_id;
                    worklist.emplace_back(pick, b);
                    queued.emplace(pick, b);
                }
            }
        }
    }

    std::vector<bool> q_acc(blocks.size());
    std::vector<std::uint32_t> q_delta(blocks.size() * k);
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        std::uint32_t representative = blocks[b].front();
        q_acc[b] = acc[representative];
        for (std::size_t a = 0; a < k; ++a) {
            q_delta[b * k + a] = block_of[delta[representative * k + a]];
        }
    }
    Dfa quotient(dfa.alphabet(), static_cast<std::uint32_t>(blocks.size()),
                 block_of[compact[dfa.start()]], std::move(q_acc), std::move(q_delta));
    return canonical_renumber(quotient);
}

std::uint32_t residual_state(const Dfa& dfa, const Word& word) {
    if (word.alphabet != dfa.alphabet()) {
        throw std::invalid_argument("word alphabet does not match the automaton");
    }
    return dfa.run(word.indices);
}

SaturatingCounts::SaturatingCounts(const Dfa& dfa, std::uint64_t cap) : dfa_(dfa), cap_(cap) {
    if (cap_ == 0) {
        throw std::invalid_argument("count cap must be at least 1");
    }
    std::vector<std::uint64_t> base(dfa_.state_count());
    for (std::uint32_t q = 0; q < dfa_.state_count(); ++q) {
        base[q] = dfa_.is_accepting(q) ? 1 : 0;
    }
    by_length_.push_back(std::move(base));
}

void SaturatingCounts::ensure(std::uint64_t length) {
    const std::size_t k = dfa_.alphabet().size();
    while (by_length_.size() <= length) {
        const auto& prev = by_length_.back();
        std::vector<std::uint64_t> next(dfa_.state_count(), 0);
        for (std::uint32_t q = 0; q < dfa_.state_count(); ++q) {
            std::uint64_t total = 0;
            for (std::size_t a = 0; a < k; ++a) {
                total += prev[dfa_.next_state(q, static_cast<std::uint32_t>(a))];
                if (total >= cap_) {
                    total = cap_;
                    break;
                }
            }
            next[q] = total;
        }
        by_length_.push_back(std::move(next));
    }
}

std::uint64_t SaturatingCounts::count(std::uint32_t state, std::uint64_t length) {
    ensure(length);
    return by_length_[length][state];
}

std::uint64_t residual_count(const Dfa& dfa, std::uint32_t state, std::uint64_t length,
                             std::uint64_t cap) {
    if (state >= dfa.state_count()) {
        throw std::invalid_argument("state out of range");
    }
    SaturatingCounts counts(dfa, cap);
    return counts.count(state, length);
}

std::vector<bool> infinite_residual_states(const Dfa& dfa) {
    const std::size_t k = dfa.alphabet().size();
    const std::uint32_t n = dfa.state_count();

    // States that can still reach an accepting state.
    std::vector<std::vector<std::uint32_t>> inverse(n);
    for (std::uint32_t q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            inverse[dfa.next_state(q, static_cast<std::uint32_t>(a))].push_back(q);
        }
    }
    std::vector<bool> useful(n, false);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t q = 0; q < n; ++q) {
        if (dfa.is_accepting(q)) {
            useful[q] = true;
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        std::uint32_t q = queue.front();
        queue.pop_front();
        for (std::uint32_t p : inverse[q]) {
            if (!useful[p]) {
                useful[p] = true;
                queue.push_back(p);
            }
        }
    }

    // States lying on a cycle of the trimmed graph, found by iterative
    // three-colour depth-first search.
    enum : std::uint8_t { White, Gray, Black };
    std::vector<std::uint8_t> colour(n, White);
    std::vector<bool> on_cycle(n, false);
    for (std::uint32_t root = 0; root < n; ++root) {
        if (!useful[root] || colour[root] != White) {
            continue;
        }
        std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
        colour[root] = Gray;
        while (!stack.empty()) {
            auto& [q, a] = stack.back();
            if (a == k) {
                colour[q] = Black;
                stack.pop_back();
                continue;
            }
            std::uint32_t t = dfa.next_state(q, static_cast<std::uint32_t>(a));
            ++a;
            if (!useful[t]) {
                continue;
            }
            if (colour[t] == White) {
                colour[t] = Gray;
                stack.emplace_back(t, 0);
            } else if (colour[t] == Gray) {
                on_cycle[t] = true;
            }
        }
    }

    // A state has an infinite residual iff it reaches a marked cycle state
    // through the trimmed graph.
    std::vector<bool> infinite(n, false);
    for (std::uint32_t q = 0; q < n; ++q) {
        if (on_cycle[q]) {
            infinite[q] = true;
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        std::uint32_t q = queue.front();
        queue.pop_front();
        for (std::uint32_t p : inverse[q]) {
            if (useful[p] && !infinite[p]) {
                infinite[p] = true;
                queue.push_back(p);
            }
        }
    }
    return infinite;
}

bool residual_is_infinite(const Dfa& dfa, std::uint32_t state) {
    if (state >= dfa.state_count()) {
        throw std::invalid_argument("state out of range");
    }
    return infinite_residual_states(dfa)[state];
}

std::vector<std::optional<Word>> least_prefixes(const Dfa& dfa) {
    std::vector<std::optional<Word>> prefix(dfa.state_count());
    prefix[dfa.start()] = Word(dfa.alphabet());
    std::deque<std::uint32_t> queue{dfa.start()};
    while (!queue.empty()) {
        std::uint32_t q = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
            std::uint32_t t = dfa.next_state(q, static_cast<std::uint32_t>(a));
            if (!prefix[t]) {
                Word w = *prefix[q];
                w.indices.push_back(static_cast<std::uint8_t>(a));
                prefix[t] = std::move(w);
                queue.push_back(t);
            }
        }
    }
    return prefix;
}

}  // namespace ordex
