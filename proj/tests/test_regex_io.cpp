#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "pfx/determinize.hpp"
#include "pfx/errors.hpp"
#include "pfx/io.hpp"
#include "pfx/minimize.hpp"
#include "pfx/regex.hpp"

using namespace pfx;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("pfx_test_") + name + ".json";
}

struct FileGuard {
    std::string path;
    ~FileGuard() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("regex_to_nfa: a^3 accepts exactly aaa") {
    Alphabet a = Alphabet::first(1);
    Nfa m = regex_to_nfa(re::pow(re::sym('a'), 3), a);
    CHECK(m.accepts("aaa"));
    CHECK_FALSE(m.accepts("aa"));
    CHECK_FALSE(m.accepts("aaaa"));
    CHECK_FALSE(m.accepts(""));
}

TEST_CASE("regex_to_nfa: (a^2)*b language check up to length 8") {
    Alphabet ab = Alphabet::first(2);
    Nfa m = regex_to_nfa(re::seq(re::star(re::pow(re::sym('a'), 2)), re::sym('b')), ab);
    oracle::StringSpace s = oracle::make_space(2, 8);
    oracle::Bitmap got = oracle::lang_bitmap(s, m);
    for (int len = 0; len <= 8; ++len)
        for (uint64_t v = 0; v < oracle::pow_k(s, len); ++v) {
            std::string w = oracle::string_at(s, ab, len, v);
            bool expect = !w.empty() && w.back() == 'b' && w.find('b') == w.size() - 1 &&
                          (w.size() - 1) % 2 == 0;
            REQUIRE(got[oracle::index_of(s, len, v)] == (expect ? 1 : 0));
        }
}

TEST_CASE("regex_to_nfa: (b*(a+c))^1 over {a,b,c}") {
    Alphabet abc = Alphabet::first(3);
    Nfa m = regex_to_nfa(re::pow(re::seq(re::star(re::sym('b')), re::alt(re::sym('a'), re::sym('c'))), 1), abc);
    oracle::StringSpace s = oracle::make_space(3, 6);
    oracle::Bitmap got = oracle::lang_bitmap(s, m);
    for (int len = 0; len <= 6; ++len)
        for (uint64_t v = 0; v < oracle::pow_k(s, len); ++v) {
            std::string w = oracle::string_at(s, abc, len, v);
            bool expect = !w.empty() && (w.back() == 'a' || w.back() == 'c') &&
                          w.find_first_not_of('b') == w.size() - 1;
            REQUIRE(got[oracle::index_of(s, len, v)] == (expect ? 1 : 0));
        }
}

TEST_CASE("regex star property: L(star(r)) is the closure of {eps} under concatenation") {
    Alphabet ab = Alphabet::first(2);
    Regex r = re::seq(re::sym('a'), re::star(re::sym('b')));
    Nfa base = regex_to_nfa(r, ab);
    Nfa starred = regex_to_nfa(re::star(r), ab);
    oracle::StringSpace s = oracle::make_space(2, 7);
    CHECK(oracle::first_difference(s, oracle::star_oracle(s, oracle::lang_bitmap(s, base)),
                                   oracle::lang_bitmap(s, starred))
              .equal);
}

TEST_CASE("regex power expands to iterated concatenation") {
    Alphabet ab = Alphabet::first(2);
    Regex unit = re::seq(re::star(re::sym('a')), re::sym('b'));
    Nfa powered = regex_to_nfa(re::pow(unit, 3), ab);
    Nfa chained = regex_to_nfa(re::seq(unit, re::seq(unit, unit)), ab);
    CHECK(isomorphic(minimize(determinize(powered)), minimize(determinize(chained))));
    CHECK(regex_to_nfa(re::pow(unit, 0), ab).accepts(""));
    CHECK_THROWS_AS(re::pow(unit, -1), RejectedInput);
}

TEST_CASE("regex rejects symbols outside the declared alphabet") {
    CHECK_THROWS_AS(regex_to_nfa(re::sym('z'), Alphabet::first(2)), RejectedInput);
}

TEST_CASE("automaton file round trip") {
    Alphabet ab = Alphabet::first(2);
    Dfa d(ab, 3, 0, {1}, {0, 1, 2, 2, 2, 2});
    FileGuard guard{temp_path("roundtrip_dfa")};
    write_automaton(d, guard.path);
    Automaton back = read_automaton(guard.path);
    REQUIRE(std::holds_alternative<Dfa>(back));
    CHECK(std::get<Dfa>(back) == d);

    Nfa m = NfaBuilder(ab, 3, 0).add(0, 'a', 1).add(0, 'a', 2).add(1, 'b', 2).mark_final(2).build();
    FileGuard nguard{temp_path("roundtrip_nfa")};
    write_automaton(m, nguard.path);
    Automaton nback = read_automaton(nguard.path);
    REQUIRE(std::holds_alternative<Nfa>(nback));
    CHECK(std::get<Nfa>(nback) == m);
}

TEST_CASE("parse errors name the offending field") {
    FileGuard guard{temp_path("bad")};

    auto write_text = [&](const std::string& text) {
        std::ofstream out(guard.path);
        out << text;
    };

    // Transition target out of range.
    write_text(R"({"type":"dfa","alphabet":["a"],"states":2,"initial":0,
                   "finals":[1],"transitions":[[0,"a",7],[1,"a",1]]})");
    CHECK_THROWS_WITH_AS(read_automaton(guard.path),
                         doctest::Contains("transitions[0]"), ParseError);

    // Missing (state, symbol) pair for a DFA.
    write_text(R"({"type":"dfa","alphabet":["a","b"],"states":2,"initial":0,
                   "finals":[1],"transitions":[[0,"a",1],[1,"a",1],[1,"b",1]]})");
    CHECK_THROWS_WITH_AS(read_automaton(guard.path),
                         doctest::Contains("state 0 on 'b'"), ParseError);

    // Not JSON at all.
    write_text("not json");
    CHECK_THROWS_AS(read_automaton(guard.path), ParseError);

    // Unknown type value.
    write_text(R"({"type":"pda","alphabet":["a"],"states":1,"initial":0,"finals":[],"transitions":[]})");
    CHECK_THROWS_WITH_AS(read_automaton(guard.path), doctest::Contains("'type'"), ParseError);
}

TEST_CASE("fixture files hold one machine or an operand pair") {
    Alphabet a = Alphabet::first(1);
    Dfa d1(a, 2, 0, {1}, {1, 1});
    Dfa d2(a, 1, 0, {0}, {0});
    FileGuard guard{temp_path("fixture_pair")};
    write_fixture({d1, d2}, guard.path);
    std::vector<Automaton> pair = read_fixture(guard.path);
    REQUIRE(pair.size() == 2);
    CHECK(std::get<Dfa>(pair[0]) == d1);
    CHECK(std::get<Dfa>(pair[1]) == d2);

    FileGuard single_guard{temp_path("fixture_single")};
    write_fixture({d1}, single_guard.path);
    CHECK(read_fixture(single_guard.path).size() == 1);
}
