#pragma once

#include "pfx/dfa.hpp"

namespace pfx {

/// Unique (up to isomorphism) minimal complete DFA for the same language:
/// reachable states only, equivalent states merged, output BFS-renumbered
/// from the initial state in alphabet order.
Dfa minimize(const Dfa& d);

/// BFS renumbering from the initial state in alphabet order.  Unreachable
/// states are dropped (they carry no language).
Dfa canonical_form(const Dfa& d);

/// Same machine under canonical renumbering.
bool isomorphic(const Dfa& a, const Dfa& b);

bool is_minimal(const Dfa& d);

} // namespace pfx
