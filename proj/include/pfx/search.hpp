#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfx/dfa.hpp"
#include "pfx/io.hpp"
#include "pfx/nfa.hpp"
#include "pfx/witnesses.hpp"

namespace pfx {

enum class MachineKind { Dfa, Nfa };

struct SearchConfig {
    long long budget = 10'000'000; // candidates examined (exhaustive modes)
    long long samples = 3000;      // candidates drawn (sampled modes)
    int workers = 0;               // 0 = OpenMP default, 1 = serial reference path
    uint64_t seed = 1;             // sampled modes only
};

struct SearchOutcome {
    long long best = -1;
    long long target = 0;
    bool exhaustive = false;
    std::optional<uint64_t> seed; // present for sampled runs
    long long examined = 0;       // candidates that reached evaluation
    std::vector<Automaton> witnesses;

    bool met_target() const { return best >= target; }
};

/// Canonical enumeration of complete prefix-free DFAs: initial state 0, one
/// final state whose transitions all enter a dead self-loop state, every
/// state reachable, BFS numbering equal to identity.  `minimal_only` keeps
/// machines whose language needs all n states.
void enumerate_prefix_free_dfas(int n, int k, bool minimal_only,
                                const std::function<void(const Dfa&)>& yield);

/// Canonical enumeration of prefix-free-normal NFAs (final state n-1, no
/// exits) whose language is actually prefix-free; same canonical-form
/// discipline, all states reachable and co-reachable.
void enumerate_prefix_free_normal_nfas(int n, int k,
                                       const std::function<void(const Nfa&)>& yield);

/// Machines yielded by the corresponding enumeration; the first exhaustive
/// run doubles as the regression oracle for these counts.
long long count_prefix_free(MachineKind kind, int n, int k);

/// Exhaustive search over ordered pairs of minimal binary prefix-free DFAs
/// maximizing the minimized intersection; target mn-2(m+n)+6.
SearchOutcome search_intersection_pair(int m, int n, const SearchConfig& config = {});

/// Exhaustive search over binary single-final complete DFAs with k states
/// maximizing sc of the reversed language; target 2^k.
SearchOutcome search_reversal_base(int k, const SearchConfig& config = {});

/// Exhaustive maximum of reverse_sc over minimal binary prefix-free DFAs
/// with n states; the paper's bound 2^(n-2)+1 is the (unreachable) target.
SearchOutcome search_reversal_binary_max(int n, const SearchConfig& config = {});

/// Exhaustive maximum of sc over binary prefix-free n-state NFAs; the
/// ternary bound 2^(n-1)+1 is the (unreachable) target.
SearchOutcome search_nfa_to_dfa_binary_max(int n, const SearchConfig& config = {});

/// Exhaustive sweep of the cyclic-shift construction over minimal k-ary
/// prefix-free DFAs with n states; best = largest constructed (pre-minimize)
/// product, target (2n-3)^(n-2).
SearchOutcome search_cyclic_shift_bound(int n, int k, const SearchConfig& config = {});

/// Hole-filling search over a DFA template; the objective is the minimized
/// cyclic shift of fillings whose own language keeps all template states.
SearchOutcome fill_template_search(const TemplateDfa& tmpl, long long target,
                                   const SearchConfig& config = {});

/// Searches tiny binary NFAs B such that L' = Bc is a prefix-free-normal
/// n-state witness whose complement construction has exactly 2^(n-1) states
/// and carries a fooling set of that size.
SearchOutcome search_complement_base(int n, const SearchConfig& config = {});

/// Sampled search over binary prefix-free-normal NFAs maximizing a certified
/// fooling lower bound on the cyclic-shift construction; target 2n^2-4n+3.
SearchOutcome search_nfa_cyclic_shift(int n, const SearchConfig& config = {});

/// Reversal of a complete single-final DFA (no prefix-freeness required):
/// transitions reversed, the final state becomes initial, the old initial
/// becomes final.
Nfa reverse_single_final(const Dfa& d);

} // namespace pfx
