#include <doctest.h>

#include "oracles.hpp"
#include "pfx/determinize.hpp"
#include "pfx/dfa_ops.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/prefix_free.hpp"
#include "pfx/regex.hpp"
#include "pfx/search.hpp"
#include "pfx/witnesses.hpp"

using namespace pfx;

namespace {

Dfa witness_dfa(const std::string& family, int m, int n, int which = 0) {
    return std::get<Dfa>(make_witness(family, m, n)[static_cast<size_t>(which)]);
}

oracle::Bitmap op_bitmap(BoolOp op, const oracle::Bitmap& a, const oracle::Bitmap& b) {
    switch (op) {
        case BoolOp::Intersection: return oracle::bm_intersection(a, b);
        case BoolOp::Union: return oracle::bm_union(a, b);
        case BoolOp::SymmetricDifference: return oracle::bm_symdiff(a, b);
        case BoolOp::Difference: return oracle::bm_difference(a, b);
    }
    return {};
}

void check_bool_semantics(const Dfa& k, const Dfa& l, BoolOp op, int len) {
    oracle::StringSpace s = oracle::make_space(k.alphabet().size(), len);
    oracle::Bitmap expect = op_bitmap(op, oracle::lang_bitmap(s, k), oracle::lang_bitmap(s, l));
    oracle::Bitmap got = oracle::lang_bitmap(s, dfa_bool(k, l, op));
    auto diff = oracle::first_difference(s, expect, got);
    CHECK_MESSAGE(diff.equal, "bool op ", to_string(op), " differs on \"",
                  oracle::string_at(s, k.alphabet(), diff.len, diff.value), "\"");
}

} // namespace

TEST_CASE("boolean constructions hit the paper values on the witness pairs") {
    auto uw = make_witness("union-dfa", 4, 4);
    const Dfa& k = std::get<Dfa>(uw[0]);
    const Dfa& l = std::get<Dfa>(uw[1]);

    Dfa u = dfa_bool(k, l, BoolOp::Union);
    CHECK(u.state_count() == 14); // mn - 2, visible before minimization
    CHECK(minimize(u).state_count() == 14);

    Dfa x = dfa_bool(k, l, BoolOp::SymmetricDifference);
    CHECK(x.state_count() == 14);
    CHECK(minimize(x).state_count() == 14);

    auto dw = make_witness("difference-dfa", 3, 4);
    Dfa d = dfa_bool(std::get<Dfa>(dw[0]), std::get<Dfa>(dw[1]), BoolOp::Difference);
    CHECK(d.state_count() == 5); // mn - m - 2n + 4
    CHECK(minimize(d).state_count() == 5);
}

TEST_CASE("boolean constructions agree with set semantics") {
    auto uw = make_witness("union-dfa", 4, 3);
    const Dfa& k = std::get<Dfa>(uw[0]);
    const Dfa& l = std::get<Dfa>(uw[1]);
    for (BoolOp op : {BoolOp::Intersection, BoolOp::Union, BoolOp::SymmetricDifference,
                      BoolOp::Difference})
        check_bool_semantics(k, l, op, 10);

    auto dw = make_witness("difference-dfa", 4, 4);
    for (BoolOp op : {BoolOp::Intersection, BoolOp::Union, BoolOp::Difference})
        check_bool_semantics(std::get<Dfa>(dw[0]), std::get<Dfa>(dw[1]), op, 7);
}

TEST_CASE("k minus k is the empty language") {
    Dfa k = witness_dfa("union-dfa", 4, 4);
    Dfa d = minimize(dfa_bool(k, k, BoolOp::Difference));
    CHECK(d.state_count() == 1);
    CHECK(d.final_count() == 0);
}

TEST_CASE("boolean ops preserve prefix-freeness where the paper asserts it") {
    auto uw = make_witness("union-dfa", 4, 4);
    const Dfa& k = std::get<Dfa>(uw[0]);
    const Dfa& l = std::get<Dfa>(uw[1]);
    CHECK(is_prefix_free(dfa_bool(k, l, BoolOp::Intersection)));
    CHECK(is_prefix_free(dfa_bool(k, l, BoolOp::Difference)));
    // Union and symmetric difference need not be prefix-free; not asserted.
}

TEST_CASE("boolean ops reject non-prefix-free operands") {
    Alphabet ab = Alphabet::first(2);
    Dfa a_star(ab, 1, 0, {0}, {0, 0});
    Dfa fine = witness_dfa("union-dfa", 3, 3);
    CHECK_THROWS_AS(dfa_bool(a_star, fine, BoolOp::Union), ContractViolation);
    CHECK_THROWS_AS(dfa_bool(fine, a_star, BoolOp::Intersection), ContractViolation);
}

TEST_CASE("prefix-free concatenation: unary witnesses and shape") {
    auto cw = make_witness("concat-unary", 3, 4);
    Dfa cat = dfa_concat_prefix_free(std::get<Dfa>(cw[0]), std::get<Dfa>(cw[1]));
    CHECK(cat.state_count() == 5); // exactly m + n - 2 before minimization
    CHECK(minimize(cat).state_count() == 5);
    CHECK(cat.accepts("aaa"));
    CHECK_FALSE(cat.accepts("aa"));
    CHECK(is_prefix_free(cat));

    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 6; ++n) {
            auto w = make_witness("concat-unary", m, n);
            CHECK(dfa_concat_prefix_free(std::get<Dfa>(w[0]), std::get<Dfa>(w[1])).state_count() ==
                  m + n - 2);
        }
}

TEST_CASE("prefix-free concatenation: right identity and bounded oracle") {
    Alphabet ab = Alphabet::first(2);
    Dfa k = minimize(determinize(regex_to_nfa(re::seq(re::star(re::sym('a')), re::sym('b')), ab)));
    Dfa l = minimize(determinize(regex_to_nfa(re::seq(re::star(re::sym('b')), re::sym('a')), ab)));

    // l = {eps}: the two-state machine with a final initial state.
    Dfa eps(ab, 2, 0, {0}, {1, 1, 1, 1});
    Dfa cat_eps = dfa_concat_prefix_free(k, eps);
    CHECK(oracle::agree_bounded(cat_eps, k, 8));

    Dfa cat = dfa_concat_prefix_free(k, l);
    oracle::StringSpace s = oracle::make_space(2, 8);
    oracle::Bitmap expect =
        oracle::concat_oracle(s, oracle::lang_bitmap(s, k), oracle::lang_bitmap(s, l));
    CHECK(oracle::first_difference(s, expect, oracle::lang_bitmap(s, cat)).equal);

    // Empty K gives the empty language (generic path, no bound claim).
    Dfa empty(ab, 1, 0, {}, {0, 0});
    CHECK(minimize(dfa_concat_prefix_free(empty, l)).final_count() == 0);
}

TEST_CASE("prefix-free star: witness values") {
    CHECK(minimize(dfa_star_prefix_free(witness_dfa("star-binary", 0, 5))).state_count() == 5);
    CHECK(minimize(dfa_star_prefix_free(witness_dfa("star-unary", 0, 5))).state_count() == 3);
    // n = 3 sits outside the binary tightness domain; the value drops to 2.
    CHECK(minimize(dfa_star_prefix_free(witness_dfa("star-binary", 0, 3))).state_count() == 2);
    // Construction itself stays within n states.
    Dfa w = witness_dfa("star-binary", 0, 6);
    CHECK(dfa_star_prefix_free(w).state_count() <= 6);
}

TEST_CASE("prefix-free star agrees with the star oracle") {
    Dfa w = witness_dfa("star-binary", 0, 4);
    oracle::StringSpace s = oracle::make_space(2, 9);
    oracle::Bitmap expect = oracle::star_oracle(s, oracle::lang_bitmap(s, w));
    CHECK(oracle::first_difference(s, expect, oracle::lang_bitmap(s, dfa_star_prefix_free(w))).equal);

    // Star of the empty language is {eps}.
    Alphabet ab = Alphabet::first(2);
    Dfa empty(ab, 1, 0, {}, {0, 0});
    Dfa star_empty = dfa_star_prefix_free(empty);
    CHECK(star_empty.accepts(""));
    CHECK(minimize(star_empty).state_count() == 2);
}

TEST_CASE("reversal: unary palindrome and oracle agreement") {
    Dfa a3 = witness_dfa("concat-unary", 5, 3, 0); // a^3
    CHECK(reverse_sc(a3) == 5);

    Dfa w = witness_dfa("star-binary", 0, 5);
    Nfa rev = dfa_reverse(w);
    oracle::StringSpace s = oracle::make_space(2, 8);
    oracle::Bitmap expect = oracle::reverse_oracle(s, oracle::lang_bitmap(s, w));
    CHECK(oracle::first_difference(s, expect, oracle::lang_bitmap(s, rev)).equal);

    // No transition enters the reversal NFA's initial state.
    for (int q = 0; q < rev.state_count(); ++q)
        for (int a = 0; a < rev.alphabet().size(); ++a)
            for (int32_t t : rev.targets(q, a)) CHECK(t != rev.initial());
}

TEST_CASE("augmented reversal witness hits 2^(n-2)+1") {
    SearchConfig cfg;
    for (int k = 3; k <= 4; ++k) {
        SearchOutcome base = search_reversal_base(k, cfg);
        REQUIRE(base.best == (1 << k));
        Dfa aug = augment_reversal_witness(std::get<Dfa>(base.witnesses[0]));
        CHECK(minimize(aug).state_count() == k + 2);
        CHECK(is_prefix_free(aug));
        CHECK(reverse_sc(aug) == (1 << k) + 1);
    }
    Dfa ternary = witness_dfa("difference-dfa", 3, 3, 0);
    CHECK_THROWS_AS(augment_reversal_witness(ternary), ContractViolation);
}

TEST_CASE("cyclic shift: plans, branch shape, and size bound") {
    Dfa w = witness_dfa("star-binary", 0, 4); // n = 4
    auto plans = cyclic_shift_plans(w);
    CHECK(plans.size() == 2); // n - 2 pivots
    for (const auto& plan : plans) {
        Dfa branch = split_concat_branch(minimize(w), plan);
        CHECK(branch.state_count() == 2 * 4 - 3);
    }
    Dfa shifted = dfa_cyclic_shift(w);
    CHECK(shifted.state_count() <= 25); // (2n-3)^(n-2)
}

TEST_CASE("cyclic shift agrees with the rotation oracle") {
    // A single-string language: rotations of "aab".
    Alphabet ab = Alphabet::first(2);
    Nfa one = regex_to_nfa(re::seq(re::sym('a'), re::seq(re::sym('a'), re::sym('b'))), ab);
    Dfa d = minimize(determinize(one));
    Dfa shifted = dfa_cyclic_shift(d);
    oracle::StringSpace s = oracle::make_space(2, 6);
    oracle::Bitmap expect = oracle::cyclic_shift_oracle(s, oracle::lang_bitmap(s, d));
    CHECK(oracle::first_difference(s, expect, oracle::lang_bitmap(s, shifted)).equal);
    CHECK(shifted.accepts("aab"));
    CHECK(shifted.accepts("aba"));
    CHECK(shifted.accepts("baa"));
    CHECK_FALSE(shifted.accepts("abb"));

    // Unary language: rotations change nothing.
    Dfa a3 = witness_dfa("star-unary", 0, 5);
    CHECK(oracle::agree_bounded(dfa_cyclic_shift(a3), a3, 8));

    // Witness pairs over two letters at n = 4.
    Dfa bw = witness_dfa("star-binary", 0, 4);
    oracle::StringSpace s2 = oracle::make_space(2, 8);
    oracle::Bitmap expect2 = oracle::cyclic_shift_oracle(s2, oracle::lang_bitmap(s2, bw));
    CHECK(oracle::first_difference(s2, expect2, oracle::lang_bitmap(s2, dfa_cyclic_shift(bw))).equal);
}

TEST_CASE("cyclic shift degenerate inputs") {
    Alphabet ab = Alphabet::first(2);
    Dfa eps(ab, 2, 0, {0}, {1, 1, 1, 1});
    CHECK(oracle::agree_bounded(dfa_cyclic_shift(eps), eps, 5));
    Dfa empty(ab, 1, 0, {}, {0, 0});
    CHECK(minimize(dfa_cyclic_shift(empty)).final_count() == 0);
    Dfa a_star(ab, 1, 0, {0}, {0, 0});
    CHECK_THROWS_AS(dfa_cyclic_shift(a_star), ContractViolation);
}
