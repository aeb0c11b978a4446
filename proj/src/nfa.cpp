#include "pfx/nfa.hpp"

#include <algorithm>
#include <string>

#include "pfx/errors.hpp"

namespace pfx {

Nfa::Nfa(Alphabet alphabet, int state_count, int initial,
         const std::vector<int>& finals,
         std::vector<std::vector<int32_t>> transitions)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      transitions_(std::move(transitions)) {
    if (state_count_ <= 0)
        throw RejectedInput("nfa: state count must be positive");
    if (initial_ < 0 || initial_ >= state_count_)
        throw RejectedInput("nfa: initial state " + std::to_string(initial_) + " out of range");
    const size_t expected = static_cast<size_t>(state_count_) * static_cast<size_t>(alphabet_.size());
    if (transitions_.size() != expected)
        throw RejectedInput("nfa: transition map has " + std::to_string(transitions_.size()) +
                            " cells, expected " + std::to_string(expected));
    for (auto& cell : transitions_) {
        std::sort(cell.begin(), cell.end());
        cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
        for (int32_t t : cell)
            if (t < 0 || t >= state_count_)
                throw RejectedInput("nfa: transition target " + std::to_string(t) + " out of range");
    }
    final_.assign(static_cast<size_t>(state_count_), 0);
    for (int f : finals) {
        if (f < 0 || f >= state_count_)
            throw RejectedInput("nfa: final state " + std::to_string(f) + " out of range");
        final_[static_cast<size_t>(f)] = 1;
    }
}

std::vector<int> Nfa::finals() const {
    std::vector<int> out;
    for (int s = 0; s < state_count_; ++s)
        if (final_[static_cast<size_t>(s)]) out.push_back(s);
    return out;
}

int Nfa::final_count() const {
    int count = 0;
    for (uint8_t f : final_) count += f;
    return count;
}

bool Nfa::has_outgoing(int state) const {
    for (int a = 0; a < alphabet_.size(); ++a)
        if (!targets(state, a).empty()) return true;
    return false;
}

bool Nfa::accepts(std::string_view w) const {
    // Subset simulation; two scratch marks, no allocation per step beyond these.
    std::vector<uint8_t> cur(static_cast<size_t>(state_count_), 0);
    std::vector<uint8_t> nxt(static_cast<size_t>(state_count_), 0);
    std::vector<int> frontier;
    frontier.reserve(static_cast<size_t>(state_count_));
    cur[static_cast<size_t>(initial_)] = 1;
    frontier.push_back(initial_);
    for (char c : w) {
        int a = alphabet_.index_checked(c);
        std::fill(nxt.begin(), nxt.end(), 0);
        std::vector<int> next_frontier;
        next_frontier.reserve(static_cast<size_t>(state_count_));
        for (int s : frontier)
            for (int32_t t : targets(s, a))
                if (!nxt[static_cast<size_t>(t)]) {
                    nxt[static_cast<size_t>(t)] = 1;
                    next_frontier.push_back(t);
                }
        cur.swap(nxt);
        frontier = std::move(next_frontier);
        if (frontier.empty()) return false;
    }
    for (int s : frontier)
        if (is_final(s)) return true;
    return false;
}

bool Nfa::operator==(const Nfa& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
           initial_ == other.initial_ && final_ == other.final_ &&
           transitions_ == other.transitions_;
}

NfaBuilder::NfaBuilder(Alphabet alphabet, int state_count, int initial)
    : alphabet_(std::move(alphabet)), state_count_(state_count), initial_(initial) {
    transitions_.resize(static_cast<size_t>(state_count) *
                        static_cast<size_t>(alphabet_.size()));
}

NfaBuilder& NfaBuilder::mark_final(int state) {
    finals_.push_back(state);
    return *this;
}

NfaBuilder& NfaBuilder::add(int from, char symbol, int to) {
    return add(from, alphabet_.index_checked(symbol), to);
}

NfaBuilder& NfaBuilder::add(int from, int symbol_index, int to) {
    transitions_[static_cast<size_t>(from) * static_cast<size_t>(alphabet_.size()) +
                 static_cast<size_t>(symbol_index)]
        .push_back(static_cast<int32_t>(to));
    return *this;
}

Nfa NfaBuilder::build() const {
    return Nfa(alphabet_, state_count_, initial_, finals_, transitions_);
}

Nfa dfa_as_nfa(const Dfa& d) {
    const int k = d.alphabet().size();
    std::vector<std::vector<int32_t>> transitions(
        static_cast<size_t>(d.state_count()) * static_cast<size_t>(k));
    for (int s = 0; s < d.state_count(); ++s)
        for (int a = 0; a < k; ++a)
            transitions[static_cast<size_t>(s) * static_cast<size_t>(k) + static_cast<size_t>(a)] = {
                static_cast<int32_t>(d.next(s, a))};
    return Nfa(d.alphabet(), d.state_count(), d.initial(), d.finals(), std::move(transitions));
}

bool is_prefix_free_normal(const Nfa& a) {
    if (a.final_count() != 1) return false;
    return !a.has_outgoing(a.finals().front());
}

} // namespace pfx
