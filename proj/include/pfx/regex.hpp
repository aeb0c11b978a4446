#pragma once

#include <vector>

#include "pfx/alphabet.hpp"
#include "pfx/nfa.hpp"

namespace pfx {

/// Syntax tree for the witness expressions: empty string, single symbols,
/// union, concatenation, star, and bounded power r^k as sugar.
struct Regex {
    enum class Kind { Epsilon, Symbol, Union, Concat, Star, Power };

    Kind kind = Kind::Epsilon;
    char symbol = 0;              // Kind::Symbol
    int exponent = 0;             // Kind::Power, exponent >= 0
    std::vector<Regex> children;  // Union/Concat: 2, Star/Power: 1
};

namespace re {
Regex eps();
Regex sym(char c);
Regex alt(Regex a, Regex b);
Regex seq(Regex a, Regex b);
Regex seq(Regex a, Regex b, Regex c);
Regex star(Regex r);
Regex pow(Regex r, int exponent);
} // namespace re

/// Position-automaton (Glushkov) construction: single initial state, no
/// epsilon transitions, one state per symbol occurrence plus the initial.
/// All symbols of `r` must belong to `alphabet`.
Nfa regex_to_nfa(const Regex& r, const Alphabet& alphabet);

} // namespace pfx
