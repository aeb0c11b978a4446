#include "pfx/witnesses.hpp"

#include <cstdio>
#include <stdexcept>

#include "pfx/complexity.hpp"
#include "pfx/determinize.hpp"
#include "pfx/dfa_ops.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/prefix_free.hpp"
#include "pfx/regex.hpp"

namespace pfx {

namespace {

Dfa dfa_from_regex(const Regex& r, const Alphabet& alphabet) {
    return minimize(determinize(regex_to_nfa(r, alphabet)));
}

Dfa expect_sc(Dfa d, int expected, const std::string& who) {
    if (d.state_count() != expected)
        throw std::logic_error(who + ": generated machine has " +
                               std::to_string(d.state_count()) + " states, expected " +
                               std::to_string(expected));
    return d;
}

// Cycle of `cycle_len` states on `cycle_sym` with an exit edge from state 0
// into a fresh final state: the machines of (a^p)*b and friends.
Nfa cycle_exit_nfa(const Alphabet& alphabet, int cycle_len, char cycle_sym, char exit_sym) {
    NfaBuilder b(alphabet, cycle_len + 1, 0);
    for (int i = 0; i < cycle_len; ++i) b.add(i, cycle_sym, (i + 1) % cycle_len);
    b.add(0, exit_sym, cycle_len);
    b.mark_final(cycle_len);
    return b.build();
}

// The singleton language a^p.
Nfa unary_path_nfa(int p) {
    Alphabet a = Alphabet::first(1);
    NfaBuilder b(a, p + 1, 0);
    for (int i = 0; i < p; ++i) b.add(i, 'a', i + 1);
    b.mark_final(p);
    return b.build();
}

Dfa unary_path_dfa(int p) {
    Alphabet a = Alphabet::first(1);
    std::vector<int32_t> table(static_cast<size_t>(p + 2));
    for (int s = 0; s <= p; ++s) table[static_cast<size_t>(s)] = static_cast<int32_t>(s + 1);
    table[static_cast<size_t>(p + 1)] = static_cast<int32_t>(p + 1);
    return Dfa(a, p + 2, 0, {p}, std::move(table));
}

// ((a+b)*d)^(m-2) (a+b)*c over {a,b,c,d}.
Nfa difference_k_nfa(int m) {
    Alphabet abcd = Alphabet::first(4);
    NfaBuilder b(abcd, m, 0);
    for (int level = 0; level <= m - 2; ++level) {
        b.add(level, 'a', level);
        b.add(level, 'b', level);
        if (level < m - 2) b.add(level, 'd', level + 1);
    }
    b.add(m - 2, 'c', m - 1);
    b.mark_final(m - 1);
    return b.build();
}

Nfa strip_dead_state(const Dfa& d) {
    const Dfa m = minimize(d);
    auto dead = dead_state(m);
    if (!dead) return dfa_as_nfa(m);
    std::vector<int> keep(static_cast<size_t>(m.state_count()), -1);
    int next_id = 0;
    for (int s = 0; s < m.state_count(); ++s)
        if (s != *dead) keep[static_cast<size_t>(s)] = next_id++;
    NfaBuilder b(m.alphabet(), next_id, keep[static_cast<size_t>(m.initial())]);
    for (int s = 0; s < m.state_count(); ++s) {
        if (s == *dead) continue;
        if (m.is_final(s)) b.mark_final(keep[static_cast<size_t>(s)]);
        for (int a = 0; a < m.alphabet().size(); ++a) {
            int t = m.next(s, a);
            if (t != *dead) b.add(keep[static_cast<size_t>(s)], a, keep[static_cast<size_t>(t)]);
        }
    }
    return b.build();
}

std::vector<WitnessFamily> build_families() {
    using re::alt;
    using re::pow;
    using re::seq;
    using re::star;
    using re::sym;

    std::vector<WitnessFamily> fams;

    auto ge = [](int lo_m, int lo_n) {
        return [lo_m, lo_n](int m, int n) { return m >= lo_m && n >= lo_n; };
    };
    auto n_only = [](int lo_n) {
        return [lo_n](int, int n) { return n >= lo_n; };
    };
    auto m_only = [](int lo_m) {
        return [lo_m](int m, int) { return m >= lo_m; };
    };

    fams.push_back({"union-dfa", 2, Provenance::ClosedForm,
                    "K=(a*b)^(m-2), L=(b*a)^(n-2); union and symmetric difference reach mn-2",
                    ge(3, 3), "m, n >= 3",
                    [](int m, int n) -> std::vector<Automaton> {
                        Alphabet ab = Alphabet::first(2);
                        Dfa k = expect_sc(
                            dfa_from_regex(pow(seq(star(sym('a')), sym('b')), m - 2), ab), m,
                            "union-dfa/K");
                        Dfa l = expect_sc(
                            dfa_from_regex(pow(seq(star(sym('b')), sym('a')), n - 2), ab), n,
                            "union-dfa/L");
                        return {k, l};
                    },
                    ""});

    fams.push_back({"difference-dfa", 2, Provenance::ClosedForm,
                    "K=(b*(a+c))^(m-2), L=((a+c)*b)^(n-3) c*(a+b); difference reaches mn-m-2n+4",
                    ge(3, 3), "m, n >= 3",
                    [](int m, int n) -> std::vector<Automaton> {
                        Alphabet abc = Alphabet::first(3);
                        Dfa k = expect_sc(
                            dfa_from_regex(pow(seq(star(sym('b')), alt(sym('a'), sym('c'))), m - 2),
                                           abc),
                            m, "difference-dfa/K");
                        Dfa l = expect_sc(
                            dfa_from_regex(
                                seq(pow(seq(star(alt(sym('a'), sym('c'))), sym('b')), n - 3),
                                    seq(star(sym('c')), alt(sym('a'), sym('b')))),
                                abc),
                            n, "difference-dfa/L");
                        return {k, l};
                    },
                    ""});

    fams.push_back({"concat-unary", 2, Provenance::ClosedForm,
                    "a^(m-2) and a^(n-2); concatenation reaches m+n-2", ge(3, 3), "m, n >= 3",
                    [](int m, int n) -> std::vector<Automaton> {
                        return {expect_sc(unary_path_dfa(m - 2), m, "concat-unary/K"),
                                expect_sc(unary_path_dfa(n - 2), n, "concat-unary/L")};
                    },
                    ""});

    fams.push_back({"star-binary", 1, Provenance::ClosedForm,
                    "(a^(n-2))*b; star reaches n when n != 3", n_only(3), "n >= 3 (tight for n != 3)",
                    [](int, int n) -> std::vector<Automaton> {
                        Alphabet ab = Alphabet::first(2);
                        return {expect_sc(
                            dfa_from_regex(seq(star(pow(sym('a'), n - 2)), sym('b')), ab), n,
                            "star-binary")};
                    },
                    "", false, true});

    fams.push_back({"star-unary", 1, Provenance::ClosedForm, "a^(n-2); star reaches n-2",
                    n_only(3), "n >= 3",
                    [](int, int n) -> std::vector<Automaton> {
                        return {expect_sc(unary_path_dfa(n - 2), n, "star-unary")};
                    },
                    "", false, true});

    fams.push_back({"nfa-union", 2, Provenance::ClosedForm,
                    "K=(a^(m-1))*b, L=(b^(n-1))*a; nfa union reaches m+n", ge(2, 2), "m, n >= 2",
                    [](int m, int n) -> std::vector<Automaton> {
                        Alphabet ab = Alphabet::first(2);
                        return {cycle_exit_nfa(ab, m - 1, 'a', 'b'),
                                cycle_exit_nfa(ab, n - 1, 'b', 'a')};
                    },
                    ""});

    fams.push_back({"nfa-concat-unary", 2, Provenance::ClosedForm,
                    "a^(m-1) and a^(n-1); nfa concatenation reaches m+n-1", ge(1, 1), "m, n >= 1",
                    [](int m, int n) -> std::vector<Automaton> {
                        return {unary_path_nfa(m - 1), unary_path_nfa(n - 1)};
                    },
                    ""});

    fams.push_back({"nfa-reverse-unary", 1, Provenance::ClosedForm,
                    "a^(n-1); nfa reversal reaches n", n_only(1), "n >= 1",
                    [](int, int n) -> std::vector<Automaton> { return {unary_path_nfa(n - 1)}; },
                    "", false, true});

    fams.push_back({"nfa-star", 1, Provenance::ClosedForm,
                    "(b^(n-1))*a; nfa star reaches n", n_only(2), "n >= 2",
                    [](int, int n) -> std::vector<Automaton> {
                        return {cycle_exit_nfa(Alphabet::first(2), n - 1, 'b', 'a')};
                    },
                    "", false, true});

    fams.push_back({"nfa-difference-k", 1, Provenance::ClosedForm,
                    "((a+b)*d)^(m-2)(a+b)*c; the K side of the nfa difference bound", m_only(3),
                    "m >= 3",
                    [](int m, int) -> std::vector<Automaton> { return {difference_k_nfa(m)}; },
                    "", true, false});

    fams.push_back({"nfa-to-dfa-ternary", 1, Provenance::Reconstructed,
                    "ternary prefix-free nfa whose subset automaton has 2^(n-1)+1 states",
                    n_only(2), "n >= 2",
                    [](int, int n) -> std::vector<Automaton> { return {nfa_to_dfa_witness(n)}; },
                    "", false, true});

    fams.push_back({"intersection-binary-dfa", 2, Provenance::Searched,
                    "binary prefix-free pair meeting mn-2(m+n)+6 for intersection", ge(3, 3),
                    "m, n >= 3", nullptr, "pfxcomplex search intersection-dfa --m %m --n %n"});

    fams.push_back({"reversal-binary-base", 1, Provenance::Searched,
                    "binary base machine whose reversal needs the full subset count", n_only(2),
                    "n >= 2 (base state count)", nullptr, "pfxcomplex search reversal-base --k %n",
                    false, true});

    fams.push_back({"reversal-ternary", 1, Provenance::Searched,
                    "ternary prefix-free reversal witness built from the searched binary base",
                    n_only(4), "n >= 4", nullptr, "pfxcomplex search reversal-base --k %k", false,
                    true});

    fams.push_back({"cyclic-shift-full", 1, Provenance::Searched,
                    "six-letter cyclic-shift witness discovered by filling the d-template",
                    n_only(4), "n >= 4", nullptr, "pfxcomplex search cyclic-shift-template --n %n",
                    false, true});

    fams.push_back({"nfa-cyclic-shift-binary", 1, Provenance::Searched,
                    "binary prefix-free-normal nfa stressing the 2n^2-4n+3 construction",
                    n_only(3), "n >= 3", nullptr,
                    "pfxcomplex search nfa-cyclic-shift --n %n --sampled", false, true});

    fams.push_back({"nfa-complement-base", 1, Provenance::Searched,
                    "ternary prefix-free nfa Bc whose complement needs 2^(n-1) nfa states",
                    n_only(3), "n >= 3", nullptr, "pfxcomplex search complement-base --n %n",
                    false, true});

    fams.push_back({"nfa-intersection-binary", 2, Provenance::Searched,
                    "the searched binary intersection pair viewed as dead-state-free nfas",
                    ge(2, 2), "m, n >= 2", nullptr,
                    "pfxcomplex search intersection-dfa --m %m --n %n"});

    return fams;
}

std::string substitute(std::string text, const std::string& key, int value) {
    size_t at = text.find(key);
    if (at != std::string::npos) text.replace(at, key.size(), std::to_string(value));
    return text;
}

} // namespace

const std::vector<WitnessFamily>& witness_families() {
    static const std::vector<WitnessFamily> fams = build_families();
    return fams;
}

const WitnessFamily& witness_family(const std::string& id) {
    for (const auto& f : witness_families())
        if (f.id == id) return f;
    throw DomainError("unknown witness family '" + id + "'");
}

std::string fixture_filename(const WitnessFamily& family, int m, int n) {
    return family.id + "-m" + std::to_string(family.uses_m ? m : 0) + "-n" +
           std::to_string(family.uses_n ? n : 0) + ".json";
}

std::vector<Automaton> make_witness(const std::string& id, int m, int n,
                                    const std::string& fixtures_dir) {
    const WitnessFamily& fam = witness_family(id);
    if (!fam.in_domain(m, n))
        throw DomainError("witness family '" + id + "': parameters (m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ") outside domain " + fam.domain_note);
    if (fam.generate) return fam.generate(m, n);

    // Derived searched slots.
    if (id == "reversal-ternary") {
        std::vector<Automaton> base =
            make_witness("reversal-binary-base", 0, n - 2, fixtures_dir);
        Dfa witness = augment_reversal_witness(std::get<Dfa>(base.front()));
        return {expect_sc(minimize(witness), n, "reversal-ternary")};
    }
    if (id == "nfa-intersection-binary") {
        std::vector<Automaton> dfas =
            make_witness("intersection-binary-dfa", m + 1, n + 1, fixtures_dir);
        return {strip_dead_state(std::get<Dfa>(dfas[0])), strip_dead_state(std::get<Dfa>(dfas[1]))};
    }

    const std::string path = fixtures_dir + "/" + fixture_filename(fam, m, n);
    if (FILE* f = std::fopen(path.c_str(), "rb")) {
        std::fclose(f);
        std::vector<Automaton> machines = read_fixture(path);
        if (static_cast<int>(machines.size()) != fam.arity)
            throw ParseError(path + ": fixture holds " + std::to_string(machines.size()) +
                             " machines, family expects " + std::to_string(fam.arity));
        return machines;
    }
    std::string cmd = substitute(fam.search_command, "%m", m);
    cmd = substitute(cmd, "%n", n);
    cmd = substitute(cmd, "%k", n - 2);
    throw UnavailableError("witness family '" + id + "' at (m=" + std::to_string(m) +
                           ", n=" + std::to_string(n) + ") is a searched slot without a fixture (" +
                           path + "); populate it with: " + cmd);
}

std::vector<int> TemplateDfa::hole_cells() const {
    std::vector<int> holes;
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] < 0) holes.push_back(static_cast<int>(i));
    return holes;
}

Dfa TemplateDfa::fill(const std::vector<int>& targets) const {
    std::vector<int> holes = hole_cells();
    if (targets.size() != holes.size())
        throw RejectedInput("template fill: expected " + std::to_string(holes.size()) +
                            " targets, got " + std::to_string(targets.size()));
    std::vector<int32_t> t = table;
    for (size_t i = 0; i < holes.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= state_count)
            throw RejectedInput("template fill: target out of range");
        t[static_cast<size_t>(holes[i])] = static_cast<int32_t>(targets[i]);
    }
    return Dfa(alphabet, state_count, initial, finals, std::move(t));
}

TemplateDfa cyclic_shift_partial_witness(int n) {
    if (n < 4) throw DomainError("cyclic_shift_partial_witness: need n >= 4");
    const Alphabet six = Alphabet::first(6); // a b c d g h
    const int m = n - 2;                     // core states 0..m-1
    const int final_state = m, dead = m + 1;
    const int d_sym = six.index('d');

    TemplateDfa t;
    t.alphabet = six;
    t.state_count = n;
    t.initial = 0;
    t.finals = {final_state};
    t.table.assign(static_cast<size_t>(n) * 6, -1);
    auto cell = [&](int s, int a) -> int32_t& { return t.table[static_cast<size_t>(s) * 6 + static_cast<size_t>(a)]; };

    // The d column is the paper's fixed part: the top core state steps into
    // the final state, every other core state stays put.
    for (int s = 0; s < m; ++s) cell(s, d_sym) = static_cast<int32_t>(s == m - 1 ? final_state : s);
    for (int a = 0; a < 6; ++a) {
        cell(final_state, a) = static_cast<int32_t>(dead);
        cell(dead, a) = static_cast<int32_t>(dead);
    }
    return t;
}

FoolingCertificate union_fooling_fixture(int m, int n) {
    auto rep = [](char c, int count) { return std::string(static_cast<size_t>(count), c); };
    FoolingCertificate cert;
    FoolingCertificate::Extension ext;
    ext.a.push_back({rep('a', m - 1) + "b", ""});
    for (int i = 1; i <= m - 2; ++i) ext.a.push_back({rep('a', i), rep('a', m - 1 - i) + "b"});
    ext.a.push_back({rep('a', m - 1), rep('a', m - 1) + "b"});
    for (int j = 1; j <= n - 2; ++j) ext.b.push_back({rep('b', j), rep('b', n - 1 - j) + "a"});
    ext.b.push_back({rep('b', n - 1), rep('b', n - 1) + "a"});
    ext.u = rep('b', n - 1) + "a";
    ext.v = rep('a', m - 1) + "b";
    cert.pairs = ext.a;
    cert.pairs.insert(cert.pairs.end(), ext.b.begin(), ext.b.end());
    cert.extension = std::move(ext);
    return cert;
}

std::vector<FoolingPair> unary_fooling_fixture(int p) {
    std::vector<FoolingPair> pairs;
    for (int i = 0; i <= p; ++i)
        pairs.push_back({std::string(static_cast<size_t>(i), 'a'),
                         std::string(static_cast<size_t>(p - i), 'a')});
    return pairs;
}

std::vector<FoolingPair> star_fooling_fixture(int n) {
    std::vector<FoolingPair> pairs;
    pairs.push_back({"", ""});
    for (int i = 1; i <= n - 1; ++i)
        pairs.push_back({std::string(static_cast<size_t>(i), 'b'),
                         std::string(static_cast<size_t>(n - 1 - i), 'b') + "a"});
    return pairs;
}

Nfa nfa_to_dfa_witness(int n) {
    if (n < 2) throw DomainError("nfa_to_dfa_witness: need n >= 2");
    const Alphabet abc = Alphabet::first(3);
    const int cycle = n - 1;
    NfaBuilder b(abc, n, 0);
    for (int i = 0; i < cycle; ++i) {
        b.add(i, 'a', (i + 1) % cycle);
        b.add(i, 'b', i);
        b.add(i, 'b', 0);
    }
    b.add(cycle - 1, 'c', cycle);
    b.mark_final(cycle);
    Nfa witness = b.build();

    const int expected = (1 << (n - 1)) + 1;
    if (sc(witness) != expected)
        throw std::logic_error("nfa_to_dfa_witness: reconstruction missed the subset bound at n=" +
                               std::to_string(n));
    return witness;
}

} // namespace pfx
