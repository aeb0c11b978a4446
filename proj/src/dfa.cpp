#include "pfx/dfa.hpp"

#include <string>

#include "pfx/errors.hpp"

namespace pfx {

Dfa::Dfa(Alphabet alphabet, int state_count, int initial,
         const std::vector<int>& finals, std::vector<int32_t> table)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      table_(std::move(table)) {
    if (state_count_ <= 0)
        throw RejectedInput("dfa: state count must be positive");
    if (initial_ < 0 || initial_ >= state_count_)
        throw RejectedInput("dfa: initial state " + std::to_string(initial_) + " out of range");
    const size_t expected = static_cast<size_t>(state_count_) * static_cast<size_t>(alphabet_.size());
    if (table_.size() != expected)
        throw RejectedInput("dfa: transition table has " + std::to_string(table_.size()) +
                            " entries, expected " + std::to_string(expected));
    for (int32_t t : table_)
        if (t < 0 || t >= state_count_)
            throw RejectedInput("dfa: transition target " + std::to_string(t) + " out of range");
    final_.assign(static_cast<size_t>(state_count_), 0);
    for (int f : finals) {
        if (f < 0 || f >= state_count_)
            throw RejectedInput("dfa: final state " + std::to_string(f) + " out of range");
        final_[static_cast<size_t>(f)] = 1;
    }
}

std::vector<int> Dfa::finals() const {
    std::vector<int> out;
    for (int s = 0; s < state_count_; ++s)
        if (final_[static_cast<size_t>(s)]) out.push_back(s);
    return out;
}

int Dfa::final_count() const {
    int count = 0;
    for (uint8_t f : final_) count += f;
    return count;
}

int Dfa::walk(int state, std::string_view w) const {
    for (char c : w)
        state = next(state, alphabet_.index_checked(c));
    return state;
}

bool Dfa::operator==(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
           initial_ == other.initial_ && final_ == other.final_ && table_ == other.table_;
}

} // namespace pfx
