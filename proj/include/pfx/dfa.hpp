#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pfx/alphabet.hpp"

namespace pfx {

/// Complete deterministic finite automaton.
///
/// Completeness is mandatory: every (state, symbol) pair has exactly one
/// target, so a partial machine must materialize its dead state before it can
/// be represented.  Instances are immutable after construction and safe to
/// share between threads.
class Dfa {
public:
    /// `table` is state-major: entry [s * alphabet.size() + a] is the target
    /// of state s under symbol index a.
    Dfa(Alphabet alphabet, int state_count, int initial,
        const std::vector<int>& finals, std::vector<int32_t> table);

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return state_count_; }
    int initial() const { return initial_; }

    int next(int state, int symbol) const {
        return table_[static_cast<size_t>(state) * static_cast<size_t>(alphabet_.size()) +
                      static_cast<size_t>(symbol)];
    }

    bool is_final(int state) const { return final_[static_cast<size_t>(state)] != 0; }
    std::vector<int> finals() const;
    int final_count() const;

    const std::vector<int32_t>& table() const { return table_; }

    /// State reached from `state` by word `w`; throws RejectedInput on
    /// foreign symbols.
    int walk(int state, std::string_view w) const;

    bool accepts(std::string_view w) const { return is_final(walk(initial_, w)); }

    bool operator==(const Dfa& other) const;
    bool operator!=(const Dfa& other) const { return !(*this == other); }

private:
    Alphabet alphabet_;
    int state_count_ = 0;
    int initial_ = 0;
    std::vector<uint8_t> final_;
    std::vector<int32_t> table_;
};

/// Membership test, spelled as a free function to mirror the NFA overload.
inline bool accepts(const Dfa& d, std::string_view w) { return d.accepts(w); }

} // namespace pfx
