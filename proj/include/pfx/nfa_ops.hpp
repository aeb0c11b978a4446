#pragma once

#include "pfx/nfa.hpp"

namespace pfx {

/// All operations below expect prefix-free-normal operands: a single final
/// state whose outgoing transition sets are empty.  Violations raise
/// ContractViolation.  State numbering is deterministic: left operand's
/// states first, then the right's, then fresh states.

/// Fresh initial state firing the union of both start rows; the two final
/// states merge.  Exactly m + n states.
Nfa nfa_union(const Nfa& k, const Nfa& l);

/// Cross product restricted to pairs with zero or two final coordinates.
/// Exactly (m-1)(n-1) + 1 states.
Nfa nfa_intersection(const Nfa& k, const Nfa& l);

/// Complement via the merged-final subset automaton: swap accepting and
/// rejecting states, add back-edges into the initial state wherever an edge
/// entered the dead state, make the dead state rejecting, and retire the old
/// final state into the dead one.  At most 2^(n-1) states.
Nfa nfa_complement_prefix_free(const Nfa& l);

/// K minus L as K intersected with the complement machine; at most
/// (m-1)2^(n-1) + 1 states.
Nfa nfa_difference(const Nfa& k, const Nfa& l);

/// K's final state identified with L's initial state.  Exactly m + n - 1 states.
Nfa nfa_concat(const Nfa& k, const Nfa& l);

/// All transitions reversed, initial and final roles swapped.  n states.
Nfa nfa_reverse(const Nfa& l);

/// The final state becomes the (accepting) initial state and mirrors the old
/// start row.  n states.
Nfa nfa_star(const Nfa& l);

/// Split-concatenation union over all non-final pivots, with the multi-initial
/// set folded into one fresh initial state.  Exactly 2n^2 - 4n + 3 states.
Nfa nfa_cyclic_shift(const Nfa& l);

} // namespace pfx
