#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pfx/alphabet.hpp"
#include "pfx/dfa.hpp"

namespace pfx {

/// Nondeterministic finite automaton with a single initial state and no
/// epsilon transitions.  Target lists are kept sorted and duplicate-free.
///
/// The prefix-free-normal shape (exactly one final state with empty outgoing
/// transition sets) is a property checked by is_prefix_free_normal(), not an
/// invariant of the type.
class Nfa {
public:
    Nfa(Alphabet alphabet, int state_count, int initial,
        const std::vector<int>& finals,
        std::vector<std::vector<int32_t>> transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return state_count_; }
    int initial() const { return initial_; }

    const std::vector<int32_t>& targets(int state, int symbol) const {
        return transitions_[static_cast<size_t>(state) * static_cast<size_t>(alphabet_.size()) +
                            static_cast<size_t>(symbol)];
    }

    bool is_final(int state) const { return final_[static_cast<size_t>(state)] != 0; }
    std::vector<int> finals() const;
    int final_count() const;

    bool has_outgoing(int state) const;

    bool accepts(std::string_view w) const;

    bool operator==(const Nfa& other) const;
    bool operator!=(const Nfa& other) const { return !(*this == other); }

private:
    Alphabet alphabet_;
    int state_count_ = 0;
    int initial_ = 0;
    std::vector<uint8_t> final_;
    std::vector<std::vector<int32_t>> transitions_; // state-major, like Dfa::table()
};

inline bool accepts(const Nfa& a, std::string_view w) { return a.accepts(w); }

/// Incremental construction helper for hand-built machines.
class NfaBuilder {
public:
    NfaBuilder(Alphabet alphabet, int state_count, int initial);

    NfaBuilder& mark_final(int state);
    NfaBuilder& add(int from, char symbol, int to);
    NfaBuilder& add(int from, int symbol_index, int to);

    Nfa build() const;

private:
    Alphabet alphabet_;
    int state_count_;
    int initial_;
    std::vector<int> finals_;
    std::vector<std::vector<int32_t>> transitions_;
};

/// A DFA viewed as an NFA (singleton target sets).
Nfa dfa_as_nfa(const Dfa& d);

/// Exactly one final state and that state has no outgoing transitions.
/// Necessary, not sufficient, for accepting a prefix-free language.
bool is_prefix_free_normal(const Nfa& a);

} // namespace pfx
