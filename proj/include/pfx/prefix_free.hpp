#pragma once

#include <optional>

#include "pfx/dfa.hpp"
#include "pfx/nfa.hpp"

namespace pfx {

/// True iff no accepted string is a proper prefix of another accepted string.
/// Decided on the minimal DFA: either the language is empty, or there is
/// exactly one final state and all of its transitions enter the dead state.
bool is_prefix_free(const Dfa& d);
bool is_prefix_free(const Nfa& a);

/// The unique state of a minimal DFA from which no final state is reachable,
/// if the machine has one.
std::optional<int> dead_state(const Dfa& d);

/// Shape probe used by the paper-style constructions: exactly one final
/// state, all its transitions entering a dead state, on an already-minimal
/// machine.  Returns {final, dead} when the shape holds.
struct PrefixFreeShape {
    int final_state;
    int dead;
};
std::optional<PrefixFreeShape> prefix_free_shape(const Dfa& minimal);

} // namespace pfx
