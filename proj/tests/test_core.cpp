#include <doctest.h>

#include "oracles.hpp"
#include "pfx/determinize.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/nfa.hpp"
#include "pfx/prefix_free.hpp"
#include "pfx/regex.hpp"

using namespace pfx;

namespace {

// a^p over a unary alphabet: path of p+1 states plus a dead state.
Dfa unary_power_dfa(int p) {
    Alphabet a = Alphabet::first(1);
    int n = p + 2;
    std::vector<int32_t> table(static_cast<size_t>(n));
    for (int s = 0; s < p; ++s) table[static_cast<size_t>(s)] = static_cast<int32_t>(s + 1);
    table[static_cast<size_t>(p)] = static_cast<int32_t>(p + 1);
    table[static_cast<size_t>(p + 1)] = static_cast<int32_t>(p + 1);
    return Dfa(a, n, 0, {p}, std::move(table));
}

// a*b over {a,b}: 0 loops on a, b goes to the final 1, everything after is dead.
Dfa a_star_b_dfa() {
    Alphabet ab = Alphabet::first(2);
    return Dfa(ab, 3, 0, {1}, {0, 1, 2, 2, 2, 2});
}

} // namespace

TEST_CASE("alphabet basics and canonical order") {
    Alphabet six = Alphabet::first(6);
    CHECK(six.symbols() == "abcdgh");
    CHECK(six.index('g') == 4);
    CHECK(six.index('e') == -1);
    CHECK_THROWS_AS(six.index_checked('z'), RejectedInput);
    CHECK_THROWS_AS(Alphabet("aba"), RejectedInput);
    CHECK_THROWS_AS(Alphabet(""), RejectedInput);
}

TEST_CASE("dfa membership on a^2") {
    Dfa d = unary_power_dfa(2);
    CHECK(d.state_count() == 4);
    CHECK(d.accepts("aa"));
    CHECK_FALSE(d.accepts("aaa")); // prefix-freeness forces it
    CHECK_FALSE(d.accepts(""));
    CHECK_THROWS_AS(d.accepts("ab"), RejectedInput);
}

TEST_CASE("nfa membership on (a^2)*b") {
    Alphabet ab = Alphabet::first(2);
    Nfa m = NfaBuilder(ab, 3, 0).add(0, 'a', 1).add(1, 'a', 0).add(0, 'b', 2).mark_final(2).build();
    CHECK(m.accepts("aab"));
    CHECK(m.accepts("b"));
    CHECK_FALSE(m.accepts("ab"));
    CHECK_FALSE(m.accepts("aa"));
    CHECK(is_prefix_free_normal(m));
}

TEST_CASE("dfa validation rejects malformed machines") {
    Alphabet a = Alphabet::first(1);
    CHECK_THROWS_AS(Dfa(a, 2, 5, {}, {0, 1}), RejectedInput);
    CHECK_THROWS_AS(Dfa(a, 2, 0, {7}, {0, 1}), RejectedInput);
    CHECK_THROWS_AS(Dfa(a, 2, 0, {}, {0}), RejectedInput);   // incomplete table
    CHECK_THROWS_AS(Dfa(a, 2, 0, {}, {0, 9}), RejectedInput); // target out of range
}

TEST_CASE("determinize agrees with the nfa on bounded strings") {
    Alphabet ab = Alphabet::first(2);
    Nfa m = NfaBuilder(ab, 3, 0).add(0, 'a', 1).add(1, 'a', 0).add(0, 'b', 2).mark_final(2).build();
    Dfa d = determinize(m);
    CHECK(oracle::agree_bounded(m, d, 2 * m.state_count()));

    // A DFA viewed as an NFA determinizes back to an isomorphic machine.
    Dfa base = a_star_b_dfa();
    CHECK(isomorphic(determinize(dfa_as_nfa(base)), base));
}

TEST_CASE("determinize with final merging obeys the prefix-free bound") {
    // Prefix-free-normal 3-state machine over {a,b}: subsets of the two
    // non-final states plus the merged final, at most 2^(3-1)+1 = 5 states.
    Alphabet ab = Alphabet::first(2);
    Nfa m = NfaBuilder(ab, 3, 0)
                .add(0, 'a', 0)
                .add(0, 'a', 1)
                .add(1, 'a', 0)
                .add(0, 'b', 2)
                .mark_final(2)
                .build();
    REQUIRE(is_prefix_free(m));
    Dfa merged = determinize(m, MergeFinals::Yes);
    CHECK(merged.state_count() <= 5);
    CHECK(oracle::agree_bounded(m, merged, 8));

    // Merging on a non-prefix-free input is a contract violation.
    Nfa not_pf = NfaBuilder(ab, 2, 0).add(0, 'a', 0).add(0, 'a', 1).mark_final(1).build();
    REQUIRE_FALSE(is_prefix_free(not_pf));
    CHECK_THROWS_AS(determinize(not_pf, MergeFinals::Yes), ContractViolation);
}

TEST_CASE("minimize: fixpoint, naive collapse, and oracle agreement") {
    Dfa already_minimal = unary_power_dfa(1); // 3 states for the language {a}
    CHECK(isomorphic(minimize(already_minimal), already_minimal));

    // (a*b)* built naively collapses to the 2-state machine for {eps} + S*b.
    Alphabet ab = Alphabet::first(2);
    Dfa naive = determinize(regex_to_nfa(re::star(re::seq(re::star(re::sym('a')), re::sym('b'))), ab));
    Dfa m = minimize(naive);
    CHECK(m.state_count() == 2);
    CHECK(oracle::agree_bounded(naive, m, 8));
    CHECK(m.state_count() == oracle::myhill_nerode_classes(naive, 2 * naive.state_count()));

    // Idempotence.
    CHECK(isomorphic(minimize(m), m));
}

TEST_CASE("prefix-freeness checks") {
    CHECK(is_prefix_free(a_star_b_dfa()));
    CHECK(is_prefix_free(unary_power_dfa(3)));

    // a* accepts both eps and a, so it is not prefix-free.
    Alphabet a = Alphabet::first(1);
    Dfa a_star(a, 1, 0, {0}, {0});
    CHECK_FALSE(is_prefix_free(a_star));

    // Empty language is vacuously prefix-free.
    Dfa empty(a, 1, 0, {}, {0});
    CHECK(is_prefix_free(empty));

    // K = (a*b)^1 and L = (b*a)^1: b is in K and ba is in L, so the union is
    // not prefix-free (checked against the brute-force definition).
    Alphabet ab = Alphabet::first(2);
    Dfa k = minimize(determinize(regex_to_nfa(re::seq(re::star(re::sym('a')), re::sym('b')), ab)));
    Dfa l = minimize(determinize(regex_to_nfa(re::seq(re::star(re::sym('b')), re::sym('a')), ab)));
    oracle::StringSpace space = oracle::make_space(2, 6);
    oracle::Bitmap u = oracle::bm_union(oracle::lang_bitmap(space, k), oracle::lang_bitmap(space, l));
    CHECK_FALSE(oracle::brute_prefix_free(space, u));
    Dfa ku = determinize(regex_to_nfa(
        re::alt(re::seq(re::star(re::sym('a')), re::sym('b')), re::seq(re::star(re::sym('b')), re::sym('a'))), ab));
    CHECK_FALSE(is_prefix_free(ku));
}

TEST_CASE("is_prefix_free agrees with the brute-force definition on small machines") {
    // All 2-symbol DFAs with 3 states, a handful of final sets.
    Alphabet ab = Alphabet::first(2);
    int checked = 0;
    for (int code = 0; code < 3 * 3 * 3 * 3 * 3 * 3; ++code) {
        int c = code;
        std::vector<int32_t> table(6);
        for (auto& t : table) {
            t = static_cast<int32_t>(c % 3);
            c /= 3;
        }
        for (int fmask = 1; fmask < 8; fmask += 3) {
            std::vector<int> finals;
            for (int s = 0; s < 3; ++s)
                if (fmask & (1 << s)) finals.push_back(s);
            Dfa d(ab, 3, 0, finals, table);
            oracle::StringSpace space = oracle::make_space(2, 2 * d.state_count());
            bool brute = oracle::brute_prefix_free(space, oracle::lang_bitmap(space, d));
            REQUIRE(is_prefix_free(d) == brute);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("canonical form is stable under relabeling") {
    Alphabet ab = Alphabet::first(2);
    Dfa d(ab, 3, 0, {1}, {0, 1, 2, 2, 2, 2});
    // Same machine with states 1 and 2 swapped.
    Dfa relabeled(ab, 3, 0, {2}, {0, 2, 1, 1, 1, 1});
    CHECK(isomorphic(d, relabeled));
    CHECK(canonical_form(d) == canonical_form(relabeled));
    Dfa different(ab, 3, 0, {1}, {0, 1, 2, 2, 1, 2});
    CHECK_FALSE(isomorphic(d, different));
}
