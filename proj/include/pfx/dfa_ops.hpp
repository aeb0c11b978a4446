#pragma once

#include <vector>

#include "pfx/dfa.hpp"
#include "pfx/nfa.hpp"

namespace pfx {

enum class BoolOp { Intersection, Union, SymmetricDifference, Difference };

const char* to_string(BoolOp op);

/// Cross-product automaton with the operation applied to the final-state
/// predicates, plus the structural state merges that make the worst-case
/// budget visible before any generic minimization:
///   intersection        mn - 2(m+n) + 6
///   union               mn - 2
///   symmetric difference mn - 2
///   difference          mn - m - 2n + 4
/// The merges apply when both operands are minimal prefix-free machines with
/// at least 3 states; degenerate inputs fall back to the plain product with
/// no budget claim.  The result is not minimized.
Dfa dfa_bool(const Dfa& k, const Dfa& l, BoolOp op);

/// Prefix-free concatenation: drop K's dead state, identify K's final state
/// with L's initial state, reroute K's former dead-edges into L's dead state.
/// Exactly sc(K) + sc(L) - 2 states for nonempty K.
Dfa dfa_concat_prefix_free(const Dfa& k, const Dfa& l);

/// Prefix-free star: the final state becomes initial and copies the old
/// start state's outgoing transitions.  At most sc(L) states.
Dfa dfa_star_prefix_free(const Dfa& l);

/// Reversal NFA of a minimal prefix-free DFA: dead state removed, transitions
/// reversed, initial and final roles swapped.  The initial state of the
/// result has no incoming transitions.
Nfa dfa_reverse(const Dfa& d);

/// State count of the minimal DFA for the reversed language; at most
/// 2^(n-2) + 1 for a prefix-free input with sc = n.
int reverse_sc(const Dfa& d);

/// Ternary prefix-free reversal witness built from a binary base machine
/// whose own reversal needs 2^k deterministic states: two fresh states are
/// added (a sole final and a dead state) and a new symbol c maps the base's
/// final state to the fresh final, every other state to dead.
Dfa augment_reversal_witness(const Dfa& base);

/// One per interior pivot state i: the left machine runs from i to the final
/// state, the right machine from the original initial state to i.
struct SplitConcatenationPlan {
    int pivot;
    int left_initial;   // = pivot
    int left_final;     // machine's sole final state
    int right_initial;  // machine's initial state
    int right_final;    // = pivot
};

/// Plans over minimize(d); requires the minimal prefix-free single-final
/// shape with at least 3 states.
std::vector<SplitConcatenationPlan> cyclic_shift_plans(const Dfa& d);

/// The 2n-3-state branch DFA recognizing L(B_i)L(C_i): left copy loses its
/// dead state, the left final merges with the right initial, and the right
/// copy's final/dead pair collapses into one sink.
Dfa split_concat_branch(const Dfa& minimal, const SplitConcatenationPlan& plan);

/// Union of the n-2 split-concatenation branches, built as a reachable
/// product; accepts the cyclic shift of L and stays within (2n-3)^(n-2)
/// states.  Not minimized.
Dfa dfa_cyclic_shift(const Dfa& d);

} // namespace pfx
