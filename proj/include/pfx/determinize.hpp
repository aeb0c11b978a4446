#pragma once

#include "pfx/dfa.hpp"
#include "pfx/nfa.hpp"

namespace pfx {

enum class MergeFinals { No, Yes };

/// Subset construction over reachable subsets only.  Subsets are bitmasks, so
/// the input is limited to 64 states (ResourceLimit beyond that; desk scale
/// stays far below).
///
/// With MergeFinals::Yes — valid only for prefix-free inputs, checked — every
/// subset containing a final NFA state collapses into a single final DFA
/// state whose transitions all enter the dead state.  For a prefix-free-normal
/// input with n states the result then has at most 2^(n-1)+1 states.
Dfa determinize(const Nfa& a, MergeFinals merge = MergeFinals::No);

/// Number of distinct reachable subset-states (no final merging, empty subset
/// counted when reached).
long long reachable_subset_count(const Nfa& a);

} // namespace pfx
