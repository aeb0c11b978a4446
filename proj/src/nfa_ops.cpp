#include "pfx/nfa_ops.hpp"

#include <string>

#include "pfx/determinize.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/prefix_free.hpp"

namespace pfx {

namespace {

void require_normal(const Nfa& a, const char* who) {
    if (!is_prefix_free_normal(a))
        throw ContractViolation(std::string(who) +
                                ": operand is not prefix-free-normal (one final state, no exits)");
}

void require_same_alphabet(const Nfa& k, const Nfa& l) {
    if (k.alphabet() != l.alphabet())
        throw RejectedInput("binary operation requires both operands over the same alphabet");
}

int sole_final(const Nfa& a) { return a.finals().front(); }

Nfa single_state_language(const Alphabet& alphabet, bool accepts_epsilon) {
    std::vector<std::vector<int32_t>> cells(static_cast<size_t>(alphabet.size()));
    std::vector<int> finals;
    if (accepts_epsilon) finals.push_back(0);
    return Nfa(alphabet, 1, 0, finals, std::move(cells));
}

} // namespace

Nfa nfa_union(const Nfa& k, const Nfa& l) {
    require_same_alphabet(k, l);
    require_normal(k, "nfa_union");
    require_normal(l, "nfa_union");
    const int m = k.state_count(), n = l.state_count();
    const int syms = k.alphabet().size();
    const int fk = sole_final(k), fl = sole_final(l);

    // l's final folds into k's; the fresh initial state is last.
    std::vector<int> lid(static_cast<size_t>(n));
    int next_id = m;
    for (int t = 0; t < n; ++t) lid[static_cast<size_t>(t)] = (t == fl) ? fk : next_id++;
    const int q0 = m + n - 1;

    NfaBuilder b(k.alphabet(), m + n, q0);
    for (int s = 0; s < m; ++s)
        for (int a = 0; a < syms; ++a)
            for (int32_t t : k.targets(s, a)) b.add(s, a, t);
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < syms; ++a)
            for (int32_t t : l.targets(s, a))
                b.add(lid[static_cast<size_t>(s)], a, lid[static_cast<size_t>(t)]);
    for (int a = 0; a < syms; ++a) {
        for (int32_t t : k.targets(k.initial(), a)) b.add(q0, a, t);
        for (int32_t t : l.targets(l.initial(), a)) b.add(q0, a, lid[static_cast<size_t>(t)]);
    }
    b.mark_final(fk);
    if (k.is_final(k.initial()) || l.is_final(l.initial())) b.mark_final(q0); // an operand is {eps}
    return b.build();
}

Nfa nfa_intersection(const Nfa& k, const Nfa& l) {
    require_same_alphabet(k, l);
    require_normal(k, "nfa_intersection");
    require_normal(l, "nfa_intersection");
    const int fk = sole_final(k), fl = sole_final(l);
    if (k.is_final(k.initial()) || l.is_final(l.initial())) {
        // An operand is {eps}; the intersection is {eps} or empty.
        bool eps = k.is_final(k.initial()) && l.is_final(l.initial());
        return single_state_language(k.alphabet(), eps);
    }
    const int m = k.state_count(), n = l.state_count();
    const int syms = k.alphabet().size();

    // Live pairs have both coordinates non-final; the sole final pair is last.
    std::vector<int> krank(static_cast<size_t>(m), -1), lrank(static_cast<size_t>(n), -1);
    int kr = 0, lr = 0;
    for (int s = 0; s < m; ++s)
        if (s != fk) krank[static_cast<size_t>(s)] = kr++;
    for (int s = 0; s < n; ++s)
        if (s != fl) lrank[static_cast<size_t>(s)] = lr++;
    const int final_id = (m - 1) * (n - 1);
    auto pair_id = [&](int p, int q) {
        return krank[static_cast<size_t>(p)] * (n - 1) + lrank[static_cast<size_t>(q)];
    };

    NfaBuilder b(k.alphabet(), final_id + 1, pair_id(k.initial(), l.initial()));
    for (int p = 0; p < m; ++p) {
        if (p == fk) continue;
        for (int q = 0; q < n; ++q) {
            if (q == fl) continue;
            for (int a = 0; a < syms; ++a)
                for (int32_t pt : k.targets(p, a))
                    for (int32_t qt : l.targets(q, a)) {
                        bool pf = pt == fk, qf = qt == fl;
                        if (pf && qf)
                            b.add(pair_id(p, q), a, final_id);
                        else if (!pf && !qf)
                            b.add(pair_id(p, q), a, pair_id(pt, qt));
                    }
        }
    }
    b.mark_final(final_id);
    return b.build();
}

Nfa nfa_complement_prefix_free(const Nfa& l) {
    require_normal(l, "nfa_complement_prefix_free");
    const Dfa d = minimize(determinize(l, MergeFinals::Yes));
    const auto shape = prefix_free_shape(d);
    const int syms = d.alphabet().size();
    if (!shape || d.initial() == shape->final_state || d.state_count() < 3) {
        // Empty or {eps} language: complement the minimal DFA directly.
        std::vector<int> finals;
        for (int s = 0; s < d.state_count(); ++s)
            if (!d.is_final(s)) finals.push_back(s);
        std::vector<std::vector<int32_t>> cells(
            static_cast<size_t>(d.state_count()) * static_cast<size_t>(syms));
        for (int s = 0; s < d.state_count(); ++s)
            for (int a = 0; a < syms; ++a)
                cells[static_cast<size_t>(s) * static_cast<size_t>(syms) + static_cast<size_t>(a)] = {
                    static_cast<int32_t>(d.next(s, a))};
        return Nfa(d.alphabet(), d.state_count(), d.initial(), finals, std::move(cells));
    }

    const int f = shape->final_state, dd = shape->dead, s0 = d.initial();
    // After swapping accepting/rejecting states: every state but f accepts.
    // The machine below drops f, keeps dd as a rejecting hub, and jumps back
    // to the accepting initial state wherever an edge used to enter dd.
    std::vector<int> keep_id(static_cast<size_t>(d.state_count()), -1);
    int next_id = 0;
    for (int s = 0; s < d.state_count(); ++s)
        if (s != f) keep_id[static_cast<size_t>(s)] = next_id++;

    NfaBuilder b(d.alphabet(), next_id, keep_id[static_cast<size_t>(s0)]);
    for (int s = 0; s < d.state_count(); ++s) {
        if (s == f) continue;
        int sid = keep_id[static_cast<size_t>(s)];
        if (s != dd) b.mark_final(sid);
        for (int a = 0; a < syms; ++a) {
            int t = d.next(s, a);
            if (t == dd) {
                b.add(sid, a, keep_id[static_cast<size_t>(dd)]);
                b.add(sid, a, keep_id[static_cast<size_t>(s0)]);
            } else if (t == f) {
                b.add(sid, a, keep_id[static_cast<size_t>(dd)]);
            } else {
                b.add(sid, a, keep_id[static_cast<size_t>(t)]);
            }
        }
    }
    return b.build();
}

Nfa nfa_difference(const Nfa& k, const Nfa& l) {
    require_same_alphabet(k, l);
    require_normal(k, "nfa_difference");
    require_normal(l, "nfa_difference");
    const int fk = sole_final(k);
    if (k.is_final(k.initial()))
        return single_state_language(k.alphabet(), !l.is_final(l.initial())); // K = {eps}
    const Nfa lc = nfa_complement_prefix_free(l);
    const int m = k.state_count(), c = lc.state_count();
    const int syms = k.alphabet().size();

    // Pairs (p, q) with p non-final; accepting pairs collapse into one final.
    std::vector<int> krank(static_cast<size_t>(m), -1);
    int kr = 0;
    for (int s = 0; s < m; ++s)
        if (s != fk) krank[static_cast<size_t>(s)] = kr++;
    const int final_id = (m - 1) * c;
    auto pair_id = [&](int p, int q) { return krank[static_cast<size_t>(p)] * c + q; };

    NfaBuilder b(k.alphabet(), final_id + 1, pair_id(k.initial(), lc.initial()));
    for (int p = 0; p < m; ++p) {
        if (p == fk) continue;
        for (int q = 0; q < c; ++q)
            for (int a = 0; a < syms; ++a)
                for (int32_t pt : k.targets(p, a))
                    for (int32_t qt : lc.targets(q, a)) {
                        if (pt == fk) {
                            if (lc.is_final(qt)) b.add(pair_id(p, q), a, final_id);
                        } else {
                            b.add(pair_id(p, q), a, pair_id(pt, qt));
                        }
                    }
    }
    b.mark_final(final_id);
    return b.build();
}

Nfa nfa_concat(const Nfa& k, const Nfa& l) {
    require_same_alphabet(k, l);
    require_normal(k, "nfa_concat");
    require_normal(l, "nfa_concat");
    const int m = k.state_count(), n = l.state_count();
    const int syms = k.alphabet().size();
    const int fk = sole_final(k);

    std::vector<int> lid(static_cast<size_t>(n));
    int next_id = m;
    for (int t = 0; t < n; ++t) lid[static_cast<size_t>(t)] = (t == l.initial()) ? fk : next_id++;

    NfaBuilder b(k.alphabet(), m + n - 1, k.initial());
    for (int s = 0; s < m; ++s)
        for (int a = 0; a < syms; ++a)
            for (int32_t t : k.targets(s, a)) b.add(s, a, t);
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < syms; ++a)
            for (int32_t t : l.targets(s, a))
                b.add(lid[static_cast<size_t>(s)], a, lid[static_cast<size_t>(t)]);
    b.mark_final(lid[static_cast<size_t>(sole_final(l))]);
    return b.build();
}

Nfa nfa_reverse(const Nfa& l) {
    require_normal(l, "nfa_reverse");
    const int syms = l.alphabet().size();
    NfaBuilder b(l.alphabet(), l.state_count(), sole_final(l));
    for (int s = 0; s < l.state_count(); ++s)
        for (int a = 0; a < syms; ++a)
            for (int32_t t : l.targets(s, a)) b.add(t, a, s);
    b.mark_final(l.initial());
    return b.build();
}

Nfa nfa_star(const Nfa& l) {
    require_normal(l, "nfa_star");
    const int syms = l.alphabet().size();
    const int f = sole_final(l);
    NfaBuilder b(l.alphabet(), l.state_count(), f);
    for (int s = 0; s < l.state_count(); ++s)
        for (int a = 0; a < syms; ++a)
            for (int32_t t : l.targets(s, a)) b.add(s, a, t);
    for (int a = 0; a < syms; ++a)
        for (int32_t t : l.targets(l.initial(), a)) b.add(f, a, t);
    b.mark_final(f);
    return b.build();
}

Nfa nfa_cyclic_shift(const Nfa& l) {
    require_normal(l, "nfa_cyclic_shift");
    const int n = l.state_count();
    if (n == 1) {
        // {eps} (or an empty reachable language): fixed under rotation.
        return l;
    }
    const int syms = l.alphabet().size();
    const int f = sole_final(l);
    const int s0 = l.initial();

    // Branch per non-final pivot i: a full copy runs from i to the final
    // state, then continues as a second copy running from the initial state
    // back to i.  The second copy drops the useless final state and shares
    // the first copy's final slot for its initial state.  2n-2 states each.
    std::vector<int> pivots;
    for (int i = 0; i < n; ++i)
        if (i != f) pivots.push_back(i);
    const int branch_size = 2 * n - 2;
    const int total = static_cast<int>(pivots.size()) * branch_size + 1;
    const int q0 = total - 1;

    NfaBuilder b(l.alphabet(), total, q0);
    for (size_t bi = 0; bi < pivots.size(); ++bi) {
        const int base = static_cast<int>(bi) * branch_size;
        const int pivot = pivots[bi];
        // C-copy slots: q == s0 shares the B-copy final slot; f is dropped.
        std::vector<int> cid(static_cast<size_t>(n), -1);
        int next_id = base + n;
        for (int q = 0; q < n; ++q) {
            if (q == f) continue;
            cid[static_cast<size_t>(q)] = (q == s0) ? base + f : next_id++;
        }
        for (int q = 0; q < n; ++q)
            for (int a = 0; a < syms; ++a)
                for (int32_t t : l.targets(q, a)) {
                    b.add(base + q, a, base + t); // B-copy (q == f has no exits)
                    if (q != f && cid[static_cast<size_t>(q)] != base + f &&
                        cid[static_cast<size_t>(t)] >= 0)
                        b.add(cid[static_cast<size_t>(q)], a, cid[static_cast<size_t>(t)]);
                }
        // The merged slot continues as the C-copy's initial state.
        for (int a = 0; a < syms; ++a)
            for (int32_t t : l.targets(s0, a))
                if (cid[static_cast<size_t>(t)] >= 0) b.add(base + f, a, cid[static_cast<size_t>(t)]);
        b.mark_final(cid[static_cast<size_t>(pivot)]);
    }
    // Fold the multi-initial set into q0 by copying the pivot rows.
    for (size_t bi = 0; bi < pivots.size(); ++bi) {
        const int base = static_cast<int>(bi) * branch_size;
        for (int a = 0; a < syms; ++a)
            for (int32_t t : l.targets(pivots[bi], a)) b.add(q0, a, base + t);
    }
    return b.build();
}

} // namespace pfx
