#include "pfx/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pfx/errors.hpp"

namespace pfx {

using nlohmann::json;

namespace {

json to_json(const Automaton& a);

std::string type_of(const Automaton& a) {
    return std::holds_alternative<Dfa>(a) ? "dfa" : "nfa";
}

Alphabet parse_alphabet(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty())
        throw ParseError(ctx + ": field 'alphabet' must be a nonempty array");
    std::string symbols;
    for (const auto& item : j) {
        if (!item.is_string() || item.get<std::string>().size() != 1)
            throw ParseError(ctx + ": field 'alphabet' entries must be 1-char strings");
        symbols += item.get<std::string>();
    }
    try {
        return Alphabet(symbols);
    } catch (const RejectedInput& e) {
        throw ParseError(ctx + ": field 'alphabet': " + e.what());
    }
}

int require_int(const json& j, const char* field, const std::string& ctx) {
    if (!j.contains(field) || !j.at(field).is_number_integer())
        throw ParseError(ctx + ": missing or non-integer field '" + field + "'");
    return j.at(field).get<int>();
}

Automaton parse_automaton(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ParseError(ctx + ": expected a JSON object");
    if (!j.contains("type") || !j.at("type").is_string())
        throw ParseError(ctx + ": missing or non-string field 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type != "dfa" && type != "nfa")
        throw ParseError(ctx + ": field 'type' must be \"dfa\" or \"nfa\"");
    if (!j.contains("alphabet")) throw ParseError(ctx + ": missing field 'alphabet'");
    Alphabet alphabet = parse_alphabet(j.at("alphabet"), ctx);
    const int states = require_int(j, "states", ctx);
    const int initial = require_int(j, "initial", ctx);
    if (states <= 0) throw ParseError(ctx + ": field 'states' must be positive");
    if (initial < 0 || initial >= states)
        throw ParseError(ctx + ": field 'initial' out of range [0," + std::to_string(states) + ")");

    if (!j.contains("finals") || !j.at("finals").is_array())
        throw ParseError(ctx + ": missing or non-array field 'finals'");
    std::vector<int> finals;
    for (const auto& f : j.at("finals")) {
        if (!f.is_number_integer()) throw ParseError(ctx + ": field 'finals' entries must be integers");
        int v = f.get<int>();
        if (v < 0 || v >= states)
            throw ParseError(ctx + ": final state " + std::to_string(v) + " out of range");
        finals.push_back(v);
    }

    if (!j.contains("transitions") || !j.at("transitions").is_array())
        throw ParseError(ctx + ": missing or non-array field 'transitions'");
    const int k = alphabet.size();
    std::vector<std::vector<int32_t>> cells(static_cast<size_t>(states) * static_cast<size_t>(k));
    size_t triple_idx = 0;
    for (const auto& t : j.at("transitions")) {
        std::string where = ctx + ": transitions[" + std::to_string(triple_idx) + "]";
        ++triple_idx;
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_string() ||
            !t[2].is_number_integer())
            throw ParseError(where + ": expected [from, symbol, to]");
        int from = t[0].get<int>();
        std::string sym = t[1].get<std::string>();
        int to = t[2].get<int>();
        if (from < 0 || from >= states) throw ParseError(where + ": source state out of range");
        if (to < 0 || to >= states) throw ParseError(where + ": target state out of range");
        if (sym.size() != 1 || !alphabet.contains(sym[0]))
            throw ParseError(where + ": symbol \"" + sym + "\" not in alphabet");
        cells[static_cast<size_t>(from) * static_cast<size_t>(k) +
              static_cast<size_t>(alphabet.index(sym[0]))]
            .push_back(static_cast<int32_t>(to));
    }

    if (type == "nfa")
        return Nfa(alphabet, states, initial, finals, std::move(cells));

    // DFA: every (state, symbol) pair must be defined exactly once.
    std::vector<int32_t> table(static_cast<size_t>(states) * static_cast<size_t>(k));
    for (int s = 0; s < states; ++s)
        for (int a = 0; a < k; ++a) {
            const auto& cell = cells[static_cast<size_t>(s) * static_cast<size_t>(k) + static_cast<size_t>(a)];
            std::string where = ctx + ": state " + std::to_string(s) + " on '" +
                                std::string(1, alphabet.symbol(a)) + "'";
            if (cell.empty())
                throw ParseError(where + ": missing transition (a dfa must be complete)");
            if (cell.size() > 1) throw ParseError(where + ": duplicate transition");
            table[static_cast<size_t>(s) * static_cast<size_t>(k) + static_cast<size_t>(a)] = cell[0];
        }
    return Dfa(alphabet, states, initial, finals, std::move(table));
}

json to_json(const Automaton& a) {
    json j;
    j["type"] = type_of(a);
    const Alphabet& alphabet = automaton_alphabet(a);
    json syms = json::array();
    for (int i = 0; i < alphabet.size(); ++i) syms.push_back(std::string(1, alphabet.symbol(i)));
    j["alphabet"] = syms;
    json transitions = json::array();
    if (const Dfa* d = std::get_if<Dfa>(&a)) {
        j["states"] = d->state_count();
        j["initial"] = d->initial();
        j["finals"] = d->finals();
        for (int s = 0; s < d->state_count(); ++s)
            for (int sym = 0; sym < alphabet.size(); ++sym)
                transitions.push_back(json::array(
                    {s, std::string(1, alphabet.symbol(sym)), d->next(s, sym)}));
    } else {
        const Nfa& n = std::get<Nfa>(a);
        j["states"] = n.state_count();
        j["initial"] = n.initial();
        j["finals"] = n.finals();
        for (int s = 0; s < n.state_count(); ++s)
            for (int sym = 0; sym < alphabet.size(); ++sym)
                for (int32_t t : n.targets(s, sym))
                    transitions.push_back(json::array(
                        {s, std::string(1, alphabet.symbol(sym)), t}));
    }
    j["transitions"] = transitions;
    return j;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace

const Alphabet& automaton_alphabet(const Automaton& a) {
    return std::visit([](const auto& m) -> const Alphabet& { return m.alphabet(); }, a);
}

int automaton_states(const Automaton& a) {
    return std::visit([](const auto& m) { return m.state_count(); }, a);
}

bool automaton_accepts(const Automaton& a, std::string_view w) {
    return std::visit([&](const auto& m) { return m.accepts(w); }, a);
}

Automaton read_automaton(const std::string& path) {
    return parse_automaton(parse_file(path), path);
}

void write_automaton(const Automaton& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << automaton_to_json_line(a) << "\n";
}

std::string automaton_to_json_line(const Automaton& a) { return to_json(a).dump(); }

Automaton automaton_from_json_text(const std::string& text, const std::string& context) {
    try {
        return parse_automaton(json::parse(text), context);
    } catch (const json::parse_error& e) {
        throw ParseError(context + ": " + e.what());
    }
}

std::vector<Automaton> read_fixture(const std::string& path) {
    json j = parse_file(path);
    std::vector<Automaton> out;
    if (j.is_array()) {
        size_t i = 0;
        for (const auto& item : j)
            out.push_back(parse_automaton(item, path + "[" + std::to_string(i++) + "]"));
    } else {
        out.push_back(parse_automaton(j, path));
    }
    if (out.empty()) throw ParseError(path + ": fixture holds no machines");
    return out;
}

void write_fixture(const std::vector<Automaton>& machines, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    if (machines.size() == 1) {
        out << automaton_to_json_line(machines[0]) << "\n";
        return;
    }
    out << "[";
    for (size_t i = 0; i < machines.size(); ++i)
        out << (i ? ",\n " : "") << automaton_to_json_line(machines[i]);
    out << "]\n";
}

} // namespace pfx
