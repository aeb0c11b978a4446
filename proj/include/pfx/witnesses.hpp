#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfx/complexity.hpp"
#include "pfx/dfa.hpp"
#include "pfx/io.hpp"
#include "pfx/nfa.hpp"

namespace pfx {

enum class Provenance { ClosedForm, Reconstructed, Searched };

/// Parameterized generator for one named witness family.  Searched families
/// have no generator; their machines are loaded from fixture files written by
/// the search commands.
struct WitnessFamily {
    std::string id;
    int arity = 1; // operand machines produced
    Provenance provenance = Provenance::ClosedForm;
    std::string description;
    std::function<bool(int m, int n)> in_domain;
    std::string domain_note;
    // (m, n) -> machines; null for searched slots.
    std::function<std::vector<Automaton>(int m, int n)> generate;
    std::string search_command; // how to populate a searched slot
    bool uses_m = true, uses_n = true;
};

const std::vector<WitnessFamily>& witness_families();
const WitnessFamily& witness_family(const std::string& id);

/// Fixture file name for one (family, m, n) cell; unary-parameter families
/// render the unused parameter as 0.
std::string fixture_filename(const WitnessFamily& family, int m, int n);

/// Closed-form and reconstructed families generate (and validate state
/// counts); searched families load `fixtures_dir/<family>-m<m>-n<n>.json`,
/// raising UnavailableError naming the populating search command when the
/// file is missing.
std::vector<Automaton> make_witness(const std::string& id, int m, int n,
                                    const std::string& fixtures_dir = "fixtures");

/// DFA template with unresolved transitions (target -1) to be filled by the
/// template search.
struct TemplateDfa {
    Alphabet alphabet;
    int state_count = 0;
    int initial = 0;
    std::vector<int> finals;
    std::vector<int32_t> table; // -1 marks a hole

    std::vector<int> hole_cells() const;
    Dfa fill(const std::vector<int>& targets) const;
};

/// Six-letter cyclic-shift witness template: m = n-2 core states, a fixed
/// d-column (state m steps to the final state, every other core state to
/// itself), final and dead rows fixed, and holes on a, b, c, g, h for the
/// core states.
TemplateDfa cyclic_shift_partial_witness(int n);

/// The ternary prefix-free NFA whose subset automaton realizes every subset
/// of the cycle states: a rotates the n-1 cycle states, b adjoins state 0,
/// and c exits to the final state from the last cycle state only.  Validated
/// to reach sc = 2^(n-1)+1 on construction.
Nfa nfa_to_dfa_witness(int n);

/// Extended fooling fixture for (a^(m-1))*b  u  (b^(n-1))*a, certifying
/// nsc >= m + n for the union.
FoolingCertificate union_fooling_fixture(int m, int n);

/// Plain fooling set {(a^i, a^(p-i))} for the singleton language a^p,
/// certifying nsc >= p + 1.
std::vector<FoolingPair> unary_fooling_fixture(int p);

/// Plain fooling set {(eps,eps)} u {(b^i, b^(n-1-i) a)} for ((b^(n-1))*a)*,
/// certifying nsc >= n.
std::vector<FoolingPair> star_fooling_fixture(int n);

} // namespace pfx
