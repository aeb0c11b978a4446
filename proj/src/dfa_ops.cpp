#include "pfx/dfa_ops.hpp"

#include <string>
#include <unordered_map>

#include "pfx/determinize.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/prefix_free.hpp"

namespace pfx {

namespace {

void require_same_alphabet(const Dfa& k, const Dfa& l) {
    if (k.alphabet() != l.alphabet())
        throw RejectedInput("binary operation requires both operands over the same alphabet");
}

void require_prefix_free(const Dfa& d, const char* who) {
    if (!is_prefix_free(d))
        throw ContractViolation(std::string(who) + ": operand is not prefix-free");
}

Dfa empty_language_dfa(const Alphabet& alphabet) {
    std::vector<int32_t> table(static_cast<size_t>(alphabet.size()), 0);
    return Dfa(alphabet, 1, 0, {}, std::move(table));
}

Dfa epsilon_language_dfa(const Alphabet& alphabet) {
    std::vector<int32_t> table;
    for (int a = 0; a < alphabet.size(); ++a) table.push_back(1);
    for (int a = 0; a < alphabet.size(); ++a) table.push_back(1);
    return Dfa(alphabet, 2, 0, {0}, std::move(table));
}

bool op_final(BoolOp op, bool fi, bool fj) {
    switch (op) {
        case BoolOp::Intersection: return fi && fj;
        case BoolOp::Union: return fi || fj;
        case BoolOp::SymmetricDifference: return fi != fj;
        case BoolOp::Difference: return fi && !fj;
    }
    return false;
}

} // namespace

const char* to_string(BoolOp op) {
    switch (op) {
        case BoolOp::Intersection: return "intersection";
        case BoolOp::Union: return "union";
        case BoolOp::SymmetricDifference: return "symmetric-difference";
        case BoolOp::Difference: return "difference";
    }
    return "?";
}

Dfa dfa_bool(const Dfa& k, const Dfa& l, BoolOp op) {
    require_same_alphabet(k, l);
    require_prefix_free(k, "dfa_bool");
    require_prefix_free(l, "dfa_bool");
    const Dfa km = minimize(k);
    const Dfa lm = minimize(l);
    const int m = km.state_count(), n = lm.state_count();
    const int syms = km.alphabet().size();

    auto ks = prefix_free_shape(km);
    auto ls = prefix_free_shape(lm);
    const bool structured = ks && ls && m >= 3 && n >= 3;

    // Union-find over pair states; the structural merges below never mix an
    // accepting pair with a rejecting one.
    std::vector<int> parent(static_cast<size_t>(m) * static_cast<size_t>(n));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };
    auto id = [&](int i, int j) { return i * n + j; };

    if (structured) {
        const int fk = ks->final_state, dk = ks->dead;
        const int fl = ls->final_state, dl = ls->dead;
        switch (op) {
            case BoolOp::Intersection:
                // Only interior pairs and the final pair survive; everything
                // that passed through a final or dead coordinate alone is dead.
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j) {
                        bool interior = i != fk && i != dk && j != fl && j != dl;
                        bool final_pair = i == fk && j == fl;
                        if (!interior && !final_pair) unite(id(dk, dl), id(i, j));
                    }
                break;
            case BoolOp::Union:
                // The three accept-then-die pairs are equivalent.
                unite(id(fk, fl), id(fk, dl));
                unite(id(fk, fl), id(dk, fl));
                break;
            case BoolOp::SymmetricDifference:
                // (final,final) rejects and is dead; the two mixed pairs
                // accept exactly the empty continuation.
                unite(id(fk, fl), id(dk, dl));
                unite(id(fk, dl), id(dk, fl));
                break;
            case BoolOp::Difference: {
                // Last row dead, (final,final) dead, final row collapses to a
                // single epsilon-acceptor, and the two L-side columns agree.
                for (int j = 0; j < n; ++j) unite(id(dk, dl), id(dk, j));
                unite(id(dk, dl), id(fk, fl));
                int eps_rep = fl == 0 ? 1 : 0;
                for (int j = 0; j < n; ++j)
                    if (j != fl) unite(id(fk, eps_rep), id(fk, j));
                for (int i = 0; i < m; ++i)
                    if (i != fk && i != dk) unite(id(i, fl), id(i, dl));
                break;
            }
        }
    }

    // Quotient, classes numbered by first appearance in pair order.
    const int total = m * n;
    std::vector<int> cls(static_cast<size_t>(total), -1);
    int n_classes = 0;
    for (int p = 0; p < total; ++p) {
        int root = find(p);
        if (cls[static_cast<size_t>(root)] < 0) cls[static_cast<size_t>(root)] = n_classes++;
        cls[static_cast<size_t>(p)] = cls[static_cast<size_t>(root)];
    }
    std::vector<int32_t> table(static_cast<size_t>(n_classes) * static_cast<size_t>(syms));
    std::vector<uint8_t> done(static_cast<size_t>(n_classes), 0);
    std::vector<int> finals;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int c = cls[static_cast<size_t>(id(i, j))];
            if (done[static_cast<size_t>(c)]) continue;
            done[static_cast<size_t>(c)] = 1;
            if (op_final(op, km.is_final(i), lm.is_final(j))) finals.push_back(c);
            for (int a = 0; a < syms; ++a)
                table[static_cast<size_t>(c) * static_cast<size_t>(syms) + static_cast<size_t>(a)] =
                    static_cast<int32_t>(cls[static_cast<size_t>(id(km.next(i, a), lm.next(j, a)))]);
        }
    return Dfa(km.alphabet(), n_classes, cls[static_cast<size_t>(id(km.initial(), lm.initial()))],
               finals, std::move(table));
}

Dfa dfa_concat_prefix_free(const Dfa& k, const Dfa& l) {
    require_same_alphabet(k, l);
    require_prefix_free(k, "dfa_concat_prefix_free");
    require_prefix_free(l, "dfa_concat_prefix_free");
    const Dfa km = minimize(k);
    const Dfa lm = minimize(l);
    if (km.final_count() == 0) return empty_language_dfa(km.alphabet()); // K empty, no bound claim
    const auto ks = prefix_free_shape(km);
    const auto ldead = dead_state(lm);
    if (!ks || !ldead)
        throw ContractViolation("dfa_concat_prefix_free: operands lost the prefix-free shape");
    const int syms = km.alphabet().size();
    const int m = km.state_count(), n = lm.state_count();
    const int fk = ks->final_state, dk = ks->dead;

    // Left states except the dead one keep their relative order; right states
    // except the initial follow; the right initial lives in the left final's slot.
    std::vector<int> left_id(static_cast<size_t>(m), -1);
    int next_id = 0;
    for (int s = 0; s < m; ++s)
        if (s != dk) left_id[static_cast<size_t>(s)] = next_id++;
    std::vector<int> right_id(static_cast<size_t>(n), -1);
    for (int t = 0; t < n; ++t)
        right_id[static_cast<size_t>(t)] =
            (t == lm.initial()) ? left_id[static_cast<size_t>(fk)] : next_id++;

    const int total = m + n - 2;
    std::vector<int32_t> table(static_cast<size_t>(total) * static_cast<size_t>(syms));
    auto set = [&](int s, int a, int t) {
        table[static_cast<size_t>(s) * static_cast<size_t>(syms) + static_cast<size_t>(a)] =
            static_cast<int32_t>(t);
    };
    for (int s = 0; s < m; ++s) {
        if (s == dk || s == fk) continue;
        for (int a = 0; a < syms; ++a) {
            int t = km.next(s, a);
            set(left_id[static_cast<size_t>(s)], a,
                t == dk ? right_id[static_cast<size_t>(*ldead)] : left_id[static_cast<size_t>(t)]);
        }
    }
    for (int t = 0; t < n; ++t)
        for (int a = 0; a < syms; ++a)
            set(right_id[static_cast<size_t>(t)], a, right_id[static_cast<size_t>(lm.next(t, a))]);

    std::vector<int> finals;
    for (int t : lm.finals()) finals.push_back(right_id[static_cast<size_t>(t)]);
    return Dfa(km.alphabet(), total, left_id[static_cast<size_t>(km.initial())], finals,
               std::move(table));
}

Dfa dfa_star_prefix_free(const Dfa& l) {
    require_prefix_free(l, "dfa_star_prefix_free");
    const Dfa lm = minimize(l);
    if (lm.final_count() == 0) return epsilon_language_dfa(lm.alphabet()); // empty L, star is {eps}
    const auto shape = prefix_free_shape(lm);
    if (!shape) throw ContractViolation("dfa_star_prefix_free: operand lost the prefix-free shape");
    const int syms = lm.alphabet().size();
    std::vector<int32_t> table = lm.table();
    for (int a = 0; a < syms; ++a)
        table[static_cast<size_t>(shape->final_state) * static_cast<size_t>(syms) +
              static_cast<size_t>(a)] = static_cast<int32_t>(lm.next(lm.initial(), a));
    return Dfa(lm.alphabet(), lm.state_count(), shape->final_state, {shape->final_state},
               std::move(table));
}

Nfa dfa_reverse(const Dfa& d) {
    require_prefix_free(d, "dfa_reverse");
    const Dfa dm = minimize(d);
    if (dm.final_count() == 0) {
        std::vector<std::vector<int32_t>> none(static_cast<size_t>(dm.alphabet().size()));
        return Nfa(dm.alphabet(), 1, 0, {}, std::move(none));
    }
    const auto shape = prefix_free_shape(dm);
    if (!shape) throw ContractViolation("dfa_reverse: operand lost the prefix-free shape");
    const int dd = shape->dead;
    const int syms = dm.alphabet().size();
    std::vector<int> keep_id(static_cast<size_t>(dm.state_count()), -1);
    int next_id = 0;
    for (int s = 0; s < dm.state_count(); ++s)
        if (s != dd) keep_id[static_cast<size_t>(s)] = next_id++;
    NfaBuilder b(dm.alphabet(), next_id, keep_id[static_cast<size_t>(shape->final_state)]);
    b.mark_final(keep_id[static_cast<size_t>(dm.initial())]);
    for (int s = 0; s < dm.state_count(); ++s) {
        if (s == dd) continue;
        for (int a = 0; a < syms; ++a) {
            int t = dm.next(s, a);
            if (t != dd)
                b.add(keep_id[static_cast<size_t>(t)], a, keep_id[static_cast<size_t>(s)]);
        }
    }
    return b.build();
}

int reverse_sc(const Dfa& d) { return minimize(determinize(dfa_reverse(d))).state_count(); }

Dfa augment_reversal_witness(const Dfa& base) {
    if (base.alphabet() != Alphabet::first(2))
        throw ContractViolation("augment_reversal_witness: base must be a binary dfa over {a,b}");
    const Dfa bm = minimize(base);
    if (bm.final_count() != 1)
        throw ContractViolation("augment_reversal_witness: base must have a single final state");
    const int n0 = bm.state_count();
    const int attach = bm.finals().front(); // the c-edge hangs off the base's final state
    const int F = n0, D = n0 + 1;
    const Alphabet abc = Alphabet::first(3);
    std::vector<int32_t> table(static_cast<size_t>(n0 + 2) * 3);
    auto set = [&](int s, int a, int t) { table[static_cast<size_t>(s) * 3 + static_cast<size_t>(a)] = static_cast<int32_t>(t); };
    for (int s = 0; s < n0; ++s) {
        set(s, 0, bm.next(s, 0));
        set(s, 1, bm.next(s, 1));
        set(s, 2, s == attach ? F : D);
    }
    for (int a = 0; a < 3; ++a) {
        set(F, a, D);
        set(D, a, D);
    }
    return Dfa(abc, n0 + 2, bm.initial(), {F}, std::move(table));
}

std::vector<SplitConcatenationPlan> cyclic_shift_plans(const Dfa& d) {
    const Dfa dm = minimize(d);
    const auto shape = prefix_free_shape(dm);
    if (!shape || dm.state_count() < 3)
        throw ContractViolation("cyclic_shift_plans: need a minimal prefix-free machine with >= 3 states");
    std::vector<SplitConcatenationPlan> plans;
    for (int i = 0; i < dm.state_count(); ++i)
        if (i != shape->final_state && i != shape->dead)
            plans.push_back({i, i, shape->final_state, dm.initial(), i});
    return plans;
}

Dfa split_concat_branch(const Dfa& minimal, const SplitConcatenationPlan& plan) {
    const auto shape = prefix_free_shape(minimal);
    if (!shape) throw ContractViolation("split_concat_branch: machine lost the prefix-free shape");
    const int n = minimal.state_count();
    const int f = shape->final_state, dd = shape->dead;
    const int s0 = minimal.initial();
    const int syms = minimal.alphabet().size();

    // Left copy drops the dead state; right copy starts in the left final's
    // slot and its final/dead pair collapses into one sink.
    std::vector<int> left_id(static_cast<size_t>(n), -1);
    int next_id = 0;
    for (int s = 0; s < n; ++s)
        if (s != dd) left_id[static_cast<size_t>(s)] = next_id++;
    std::vector<int> right_id(static_cast<size_t>(n), -1);
    int sink = -1;
    for (int t = 0; t < n; ++t) {
        if (t == s0) {
            right_id[static_cast<size_t>(t)] = left_id[static_cast<size_t>(f)];
        } else if (t == f || t == dd) {
            if (sink < 0) sink = next_id++;
            right_id[static_cast<size_t>(t)] = sink;
        } else {
            right_id[static_cast<size_t>(t)] = next_id++;
        }
    }
    const int total = 2 * n - 3;

    std::vector<int32_t> table(static_cast<size_t>(total) * static_cast<size_t>(syms));
    auto set = [&](int s, int a, int t) {
        table[static_cast<size_t>(s) * static_cast<size_t>(syms) + static_cast<size_t>(a)] =
            static_cast<int32_t>(t);
    };
    for (int s = 0; s < n; ++s) {
        if (s == dd || s == f) continue;
        for (int a = 0; a < syms; ++a) {
            int t = minimal.next(s, a);
            set(left_id[static_cast<size_t>(s)], a,
                t == dd ? sink : left_id[static_cast<size_t>(t)]);
        }
    }
    // The merged state (t == s0) and every appended right-side state follow
    // the right machine; the collapsed final/dead pair becomes the sink.
    for (int t = 0; t < n; ++t) {
        if (t == f || t == dd) continue;
        int rid = right_id[static_cast<size_t>(t)];
        for (int a = 0; a < syms; ++a)
            set(rid, a, right_id[static_cast<size_t>(minimal.next(t, a))]);
    }
    for (int a = 0; a < syms; ++a) set(sink, a, sink);

    return Dfa(minimal.alphabet(), total, left_id[static_cast<size_t>(plan.pivot)],
               {right_id[static_cast<size_t>(plan.pivot)]}, std::move(table));
}

Dfa dfa_cyclic_shift(const Dfa& d) {
    require_prefix_free(d, "dfa_cyclic_shift");
    const Dfa dm = minimize(d);
    if (dm.state_count() < 3) return dm; // empty language or {eps}: fixed under rotation
    const auto plans = cyclic_shift_plans(dm);
    std::vector<Dfa> branches;
    branches.reserve(plans.size());
    for (const auto& plan : plans) branches.push_back(split_concat_branch(dm, plan));

    // Reachable product of the branches, tuples encoded in mixed radix.
    const int syms = dm.alphabet().size();
    const uint64_t radix = static_cast<uint64_t>(2 * dm.state_count() - 3);
    uint64_t capacity = 1;
    for (size_t i = 0; i < branches.size(); ++i) {
        if (capacity > (uint64_t(1) << 58) / radix)
            throw ResourceLimit("dfa_cyclic_shift: product space too large to enumerate");
        capacity *= radix;
    }
    auto encode = [&](const std::vector<int>& tuple) {
        uint64_t code = 0;
        for (size_t i = 0; i < tuple.size(); ++i) code = code * radix + static_cast<uint64_t>(tuple[i]);
        return code;
    };

    std::unordered_map<uint64_t, int> index;
    std::vector<std::vector<int>> worklist;
    std::vector<int> start;
    for (const Dfa& b : branches) start.push_back(b.initial());
    index.emplace(encode(start), 0);
    worklist.push_back(start);
    std::vector<int32_t> table;
    std::vector<int> finals;
    for (size_t i = 0; i < worklist.size(); ++i) {
        std::vector<int> cur = worklist[i];
        bool accepting = false;
        for (size_t b = 0; b < branches.size(); ++b)
            accepting = accepting || branches[b].is_final(cur[b]);
        if (accepting) finals.push_back(static_cast<int>(i));
        for (int a = 0; a < syms; ++a) {
            std::vector<int> nxt(cur.size());
            for (size_t b = 0; b < branches.size(); ++b) nxt[b] = branches[b].next(cur[b], a);
            auto [it, inserted] = index.emplace(encode(nxt), static_cast<int>(worklist.size()));
            if (inserted) worklist.push_back(nxt);
            table.push_back(static_cast<int32_t>(it->second));
        }
    }
    return Dfa(dm.alphabet(), static_cast<int>(worklist.size()), 0, finals, std::move(table));
}

} // namespace pfx
