#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pfx/dfa.hpp"
#include "pfx/nfa.hpp"

namespace pfx {

using Automaton = std::variant<Dfa, Nfa>;

const Alphabet& automaton_alphabet(const Automaton& a);
int automaton_states(const Automaton& a);
bool automaton_accepts(const Automaton& a, std::string_view w);

/// File format: a JSON object with fields `type` ("dfa"|"nfa"), `alphabet`
/// (array of 1-char strings), `states`, `initial`, `finals`, `transitions`
/// (array of [from, symbol, to] triples; a DFA must list exactly
/// states x |alphabet| triples).  States are 0-based, encoding UTF-8.
Automaton read_automaton(const std::string& path);
void write_automaton(const Automaton& a, const std::string& path);

std::string automaton_to_json_line(const Automaton& a);
Automaton automaton_from_json_text(const std::string& text, const std::string& context);

/// Fixture files hold either a single automaton object or an array of them
/// (binary witness families store the operand pair in one file).
std::vector<Automaton> read_fixture(const std::string& path);
void write_fixture(const std::vector<Automaton>& machines, const std::string& path);

} // namespace pfx
