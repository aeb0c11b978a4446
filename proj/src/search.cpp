#include "pfx/search.hpp"

#include <climits>
#include <cstring>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pfx/complexity.hpp"
#include "pfx/determinize.hpp"
#include "pfx/dfa_ops.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/nfa_ops.hpp"
#include "pfx/prefix_free.hpp"

namespace pfx {

namespace {

constexpr int kDenseMaxStates = 6; // subset tables live in 64-entry arrays

// ---------------------------------------------------------------------------
// Dense kernels.  These run inside the hot enumeration loops on stack arrays;
// every reported witness is re-materialized and re-measured through the
// public pipeline afterwards, which pins the kernels' correctness in tests.
// ---------------------------------------------------------------------------

// BFS from state 0 expanding symbols in order and mask bits ascending must
// discover states exactly in the order 0,1,2,...  Rows with no outgoing
// transitions are fine (the final state of a normal NFA).
bool canonical_bfs_identity_masks(const uint16_t* rows, int n, int k) {
    int seen_count = 1;
    uint16_t seen = 1;
    for (int s = 0; s < seen_count; ++s)
        for (int a = 0; a < k; ++a) {
            uint16_t bits = rows[s * k + a];
            while (bits) {
                int t = __builtin_ctz(bits);
                bits = static_cast<uint16_t>(bits & (bits - 1));
                if (!(seen & (1 << t))) {
                    if (t != seen_count) return false;
                    seen = static_cast<uint16_t>(seen | (1 << t));
                    ++seen_count;
                }
            }
        }
    return seen_count == n;
}

// Every state reaches the final state n-1.
bool all_coreachable_masks(const uint16_t* rows, int n, int k) {
    uint16_t alive = static_cast<uint16_t>(1 << (n - 1));
    for (int round = 0; round < n; ++round) {
        uint16_t grown = alive;
        for (int s = 0; s < n - 1; ++s) {
            if (grown & (1 << s)) continue;
            for (int a = 0; a < k; ++a)
                if (rows[s * k + a] & alive) {
                    grown = static_cast<uint16_t>(grown | (1 << s));
                    break;
                }
        }
        if (grown == alive) break;
        alive = grown;
    }
    return alive == (1 << n) - 1;
}

struct SubsetEvalResult {
    int reachable = 0;
    int sc = 0;
    bool prefix_free = false;
};

// Subset construction plus Moore refinement over mask rows; works for the
// forward language of an NFA and, with reversed rows, for reversals.
SubsetEvalResult subset_eval(const uint16_t* rows, int n, int k, uint16_t initial_mask,
                             uint16_t final_mask) {
    const int space = 1 << n;
    int8_t id_of[1 << kDenseMaxStates];
    std::memset(id_of, -1, static_cast<size_t>(space));
    uint16_t subs[(1 << kDenseMaxStates) + 1];
    int8_t trans[((1 << kDenseMaxStates) + 1) * 8];
    int8_t accept[(1 << kDenseMaxStates) + 1];

    int count = 0;
    subs[count] = initial_mask;
    id_of[initial_mask] = static_cast<int8_t>(count++);
    for (int i = 0; i < count; ++i) {
        uint16_t sub = subs[i];
        accept[i] = (sub & final_mask) ? 1 : 0;
        for (int a = 0; a < k; ++a) {
            uint16_t nxt = 0;
            uint16_t bits = sub;
            while (bits) {
                int s = __builtin_ctz(bits);
                bits = static_cast<uint16_t>(bits & (bits - 1));
                nxt |= rows[s * k + a];
            }
            if (id_of[nxt] < 0) {
                subs[count] = nxt;
                id_of[nxt] = static_cast<int8_t>(count++);
            }
            trans[i * k + a] = id_of[nxt];
        }
    }

    // Moore refinement; refinement never merges, so a stable class count
    // means a stable partition.
    int8_t cls[(1 << kDenseMaxStates) + 1];
    int8_t next_cls[(1 << kDenseMaxStates) + 1];
    int n_classes = 0;
    {
        int8_t label[2] = {-1, -1};
        for (int i = 0; i < count; ++i) {
            if (label[accept[i]] < 0) label[accept[i]] = static_cast<int8_t>(n_classes++);
            cls[i] = label[accept[i]];
        }
    }
    for (;;) {
        int fresh = 0;
        for (int i = 0; i < count; ++i) {
            int found = -1;
            for (int j = 0; j < i; ++j) {
                if (cls[j] != cls[i]) continue;
                bool same = true;
                for (int a = 0; a < k && same; ++a)
                    same = cls[static_cast<size_t>(trans[j * k + a])] ==
                           cls[static_cast<size_t>(trans[i * k + a])];
                if (same) {
                    found = j;
                    break;
                }
            }
            next_cls[i] = static_cast<int8_t>(found >= 0 ? next_cls[found] : fresh++);
        }
        for (int i = 0; i < count; ++i) cls[i] = next_cls[i];
        if (fresh == n_classes) break;
        n_classes = fresh;
    }

    SubsetEvalResult r;
    r.reachable = count;
    r.sc = n_classes;

    // Prefix-freeness on the quotient: no final class means the language is
    // empty; otherwise exactly one final class whose row enters a class from
    // which no final class is reachable.
    int8_t cls_final[(1 << kDenseMaxStates) + 1];
    int8_t cls_trans[((1 << kDenseMaxStates) + 1) * 8];
    std::memset(cls_final, 0, static_cast<size_t>(n_classes));
    for (int i = 0; i < count; ++i) {
        if (accept[i]) cls_final[static_cast<size_t>(cls[i])] = 1;
        for (int a = 0; a < k; ++a)
            cls_trans[cls[i] * k + a] = cls[static_cast<size_t>(trans[i * k + a])];
    }
    int final_classes = 0, the_final = -1;
    for (int c = 0; c < n_classes; ++c)
        if (cls_final[c]) {
            ++final_classes;
            the_final = c;
        }
    if (final_classes == 0) {
        r.prefix_free = true;
        return r;
    }
    if (final_classes > 1) {
        r.prefix_free = false;
        return r;
    }
    uint64_t alive = 0;
    for (int c = 0; c < n_classes; ++c)
        if (cls_final[c]) alive |= uint64_t(1) << c;
    for (int round = 0; round < n_classes; ++round) {
        uint64_t grown = alive;
        for (int c = 0; c < n_classes; ++c) {
            if (grown & (uint64_t(1) << c)) continue;
            for (int a = 0; a < k; ++a)
                if (alive & (uint64_t(1) << cls_trans[c * k + a])) {
                    grown |= uint64_t(1) << c;
                    break;
                }
        }
        if (grown == alive) break;
        alive = grown;
    }
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
        ok = !(alive & (uint64_t(1) << cls_trans[the_final * k + a]));
    r.prefix_free = ok;
    return r;
}

// BFS-identity check for a complete DFA table.
bool canonical_bfs_identity_dfa(const int8_t* table, int n, int k) {
    int seen_count = 1;
    uint16_t seen = 1;
    for (int s = 0; s < seen_count; ++s)
        for (int a = 0; a < k; ++a) {
            int t = table[s * k + a];
            if (!(seen & (1 << t))) {
                if (t != seen_count) return false;
                seen = static_cast<uint16_t>(seen | (1 << t));
                ++seen_count;
            }
        }
    return seen_count == n;
}

int dfa_class_count(const int8_t* table, int n, int k, uint16_t final_mask) {
    int8_t cls[12], nxt[12];
    for (int s = 0; s < n; ++s) cls[s] = (final_mask & (1 << s)) ? 1 : 0;
    for (;;) {
        int fresh = 0;
        for (int i = 0; i < n; ++i) {
            int found = -1;
            for (int j = 0; j < i; ++j) {
                if (cls[j] != cls[i]) continue;
                bool same = true;
                for (int a = 0; a < k && same; ++a)
                    same = cls[static_cast<size_t>(table[j * k + a])] ==
                           cls[static_cast<size_t>(table[i * k + a])];
                if (same) {
                    found = j;
                    break;
                }
            }
            nxt[i] = static_cast<int8_t>(found >= 0 ? nxt[found] : fresh++);
        }
        bool changed = false;
        for (int i = 0; i < n; ++i)
            if (nxt[i] != cls[i]) {
                changed = true;
                break;
            }
        for (int i = 0; i < n; ++i) cls[i] = nxt[i];
        if (!changed) return fresh;
    }
}

// ---------------------------------------------------------------------------
// Scan driver: deterministic max-reduce over a code range.  The parallel
// kernel partitions the range across OpenMP threads; ties break toward the
// smaller code, so the outcome is independent of the worker count.  The
// serial loop is the reference implementation the tests compare against.
// ---------------------------------------------------------------------------

struct ScanBest {
    long long value = -1;
    long long index = -1;
};

template <class Eval>
ScanBest scan_codes_serial(long long total, long long& examined, const Eval& eval) {
    ScanBest best;
    for (long long code = 0; code < total; ++code) {
        auto v = eval(code);
        if (!v) continue;
        ++examined;
        if (*v > best.value) best = {*v, code};
    }
    return best;
}

template <class Eval>
ScanBest scan_codes_parallel(long long total, int workers, long long& examined,
                             const Eval& eval) {
#ifndef _OPENMP
    (void)workers;
    return scan_codes_serial(total, examined, eval);
#else
    ScanBest best;
    long long total_examined = 0;
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
        ScanBest local;
        long long local_examined = 0;
#pragma omp for schedule(dynamic, 4096) nowait
        for (long long code = 0; code < total; ++code) {
            auto v = eval(code);
            if (!v) continue;
            ++local_examined;
            if (*v > local.value || (*v == local.value && code < local.index))
                local = {*v, code};
        }
#pragma omp critical
        {
            total_examined += local_examined;
            if (local.value > best.value ||
                (local.value == best.value && local.index >= 0 &&
                 (best.index < 0 || local.index < best.index)))
                best = local;
        }
    }
    examined = total_examined;
    return best;
#endif
}

template <class Eval>
ScanBest scan_codes(long long total, const SearchConfig& cfg, long long& examined,
                    const Eval& eval) {
    examined = 0;
    if (cfg.workers == 1) return scan_codes_serial(total, examined, eval);
    return scan_codes_parallel(total, cfg.workers, examined, eval);
}

void check_budget(long long total, const SearchConfig& cfg, const char* who) {
    if (total > cfg.budget)
        throw ResourceLimit(std::string(who) + ": search space of " + std::to_string(total) +
                            " candidates exceeds the budget of " + std::to_string(cfg.budget) +
                            " (raise --budget to run it)");
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > LLONG_MAX / base) throw ResourceLimit("search: code space overflows 64 bits");
        r *= base;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Candidate decoders.
// ---------------------------------------------------------------------------

struct DfaSpace {
    int n, k;
    std::vector<std::pair<int, int>> fd; // (final, dead) placements
    long long codes_per_fd;
    long long total;

    DfaSpace(int n_, int k_) : n(n_), k(k_) {
        for (int f = 0; f < n; ++f)
            for (int d = 0; d < n; ++d)
                if (f != d) fd.push_back({f, d});
        codes_per_fd = ipow(n, k * (n - 2));
        total = codes_per_fd * static_cast<long long>(fd.size());
    }

    // Fills `table` (n*k entries) and returns false when out of range.
    bool decode(long long code, int8_t* table, int* final_out, int* dead_out) const {
        const auto& [f, d] = fd[static_cast<size_t>(code / codes_per_fd)];
        long long t = code % codes_per_fd;
        for (int s = n - 1; s >= 0; --s)
            for (int a = k - 1; a >= 0; --a) {
                if (s == f || s == d) {
                    table[s * k + a] = static_cast<int8_t>(d);
                } else {
                    table[s * k + a] = static_cast<int8_t>(t % n);
                    t /= n;
                }
            }
        *final_out = f;
        *dead_out = d;
        return true;
    }
};

Dfa materialize_dfa(const int8_t* table, int n, int k, int final_state) {
    std::vector<int32_t> t(static_cast<size_t>(n) * static_cast<size_t>(k));
    for (int i = 0; i < n * k; ++i) t[static_cast<size_t>(i)] = table[i];
    return Dfa(Alphabet::first(k), n, 0, {final_state}, std::move(t));
}

struct NfaSpace {
    int n, k;
    long long radix;
    int cells;
    long long total;

    NfaSpace(int n_, int k_) : n(n_), k(k_) {
        radix = 1LL << n;
        cells = (n - 1) * k;
        total = ipow(radix, cells);
    }

    void decode(long long code, uint16_t* rows) const {
        for (int c = cells - 1; c >= 0; --c) {
            rows[c] = static_cast<uint16_t>(code % radix);
            code /= radix;
        }
        for (int a = 0; a < k; ++a) rows[(n - 1) * k + a] = 0; // final row
    }
};

Nfa materialize_nfa(const uint16_t* rows, int n, int k) {
    NfaBuilder b(Alphabet::first(k), n, 0);
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < k; ++a) {
            uint16_t bits = rows[s * k + a];
            while (bits) {
                int t = __builtin_ctz(bits);
                bits = static_cast<uint16_t>(bits & (bits - 1));
                b.add(s, a, t);
            }
        }
    b.mark_final(n - 1);
    return b.build();
}

} // namespace

// ---------------------------------------------------------------------------
// Enumerations.
// ---------------------------------------------------------------------------

void enumerate_prefix_free_dfas(int n, int k, bool minimal_only,
                                const std::function<void(const Dfa&)>& yield) {
    if (n < 2 || n > 10 || k < 1 || k > 6)
        throw ResourceLimit("enumerate_prefix_free_dfas: supported ranges are 2<=n<=10, 1<=k<=6");
    DfaSpace space(n, k);
    int8_t table[12 * 6];
    for (long long code = 0; code < space.total; ++code) {
        int f, d;
        space.decode(code, table, &f, &d);
        if (!canonical_bfs_identity_dfa(table, n, k)) continue;
        uint16_t final_mask = static_cast<uint16_t>(1 << f);
        if (minimal_only && dfa_class_count(table, n, k, final_mask) != n) continue;
        yield(materialize_dfa(table, n, k, f));
    }
}

void enumerate_prefix_free_normal_nfas(int n, int k,
                                       const std::function<void(const Nfa&)>& yield) {
    if (n < 2 || n > kDenseMaxStates || k < 1 || k > 4)
        throw ResourceLimit("enumerate_prefix_free_normal_nfas: supported ranges are 2<=n<=6, k<=4");
    NfaSpace space(n, k);
    uint16_t rows[kDenseMaxStates * 4];
    for (long long code = 0; code < space.total; ++code) {
        space.decode(code, rows);
        if (!canonical_bfs_identity_masks(rows, n, k)) continue;
        if (!all_coreachable_masks(rows, n, k)) continue;
        SubsetEvalResult r = subset_eval(rows, n, k, 1, static_cast<uint16_t>(1 << (n - 1)));
        if (!r.prefix_free) continue;
        yield(materialize_nfa(rows, n, k));
    }
}

long long count_prefix_free(MachineKind kind, int n, int k) {
    long long count = 0;
    if (kind == MachineKind::Dfa)
        enumerate_prefix_free_dfas(n, k, false, [&](const Dfa&) { ++count; });
    else
        enumerate_prefix_free_normal_nfas(n, k, [&](const Nfa&) { ++count; });
    return count;
}

// ---------------------------------------------------------------------------
// Searches.
// ---------------------------------------------------------------------------

SearchOutcome search_intersection_pair(int m, int n, const SearchConfig& config) {
    std::vector<Dfa> left, right;
    enumerate_prefix_free_dfas(m, 2, true, [&](const Dfa& d) { left.push_back(d); });
    if (m == n)
        right = left;
    else
        enumerate_prefix_free_dfas(n, 2, true, [&](const Dfa& d) { right.push_back(d); });

    const long long total = static_cast<long long>(left.size()) * static_cast<long long>(right.size());
    check_budget(total, config, "search_intersection_pair");
    auto eval = [&](long long code) -> std::optional<long long> {
        const Dfa& a = left[static_cast<size_t>(code / static_cast<long long>(right.size()))];
        const Dfa& b = right[static_cast<size_t>(code % static_cast<long long>(right.size()))];
        return minimize(dfa_bool(a, b, BoolOp::Intersection)).state_count();
    };
    SearchOutcome out;
    out.target = static_cast<long long>(m) * n - 2 * (m + n) + 6;
    out.exhaustive = true;
    ScanBest best = scan_codes(total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) {
        const Dfa& a = left[static_cast<size_t>(best.index / static_cast<long long>(right.size()))];
        const Dfa& b = right[static_cast<size_t>(best.index % static_cast<long long>(right.size()))];
        if (minimize(dfa_bool(a, b, BoolOp::Intersection)).state_count() != best.value)
            throw std::logic_error("search_intersection_pair: witness failed re-verification");
        out.witnesses = {a, b};
    }
    return out;
}

Nfa reverse_single_final(const Dfa& d) {
    if (d.final_count() != 1)
        throw ContractViolation("reverse_single_final: machine must have exactly one final state");
    NfaBuilder b(d.alphabet(), d.state_count(), d.finals().front());
    for (int s = 0; s < d.state_count(); ++s)
        for (int a = 0; a < d.alphabet().size(); ++a) b.add(d.next(s, a), a, s);
    b.mark_final(d.initial());
    return b.build();
}

SearchOutcome search_reversal_base(int k_states, const SearchConfig& config) {
    if (k_states < 2 || k_states > kDenseMaxStates)
        throw ResourceLimit("search_reversal_base: supported base sizes are 2..6");
    const int n = k_states, k = 2;
    const long long tables = ipow(n, n * k);
    const long long total = tables * n; // final-state choice folded in
    check_budget(total, config, "search_reversal_base");

    auto eval = [&](long long code) -> std::optional<long long> {
        int f = static_cast<int>(code / tables);
        long long t = code % tables;
        int8_t table[12 * 6];
        for (int c = n * k - 1; c >= 0; --c) {
            table[c] = static_cast<int8_t>(t % n);
            t /= n;
        }
        if (!canonical_bfs_identity_dfa(table, n, k)) return std::nullopt;
        // Reverse rows as masks, then the subset automaton from {f}.
        uint16_t rev[kDenseMaxStates * 4];
        std::memset(rev, 0, sizeof(rev));
        for (int s = 0; s < n; ++s)
            for (int a = 0; a < k; ++a)
                rev[table[s * k + a] * k + a] |= static_cast<uint16_t>(1 << s);
        SubsetEvalResult r = subset_eval(rev, n, k, static_cast<uint16_t>(1 << f), 1);
        return r.sc;
    };

    SearchOutcome out;
    out.target = 1LL << k_states;
    out.exhaustive = true;
    ScanBest best = scan_codes(total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) {
        int f = static_cast<int>(best.index / tables);
        long long t = best.index % tables;
        int8_t table[12 * 6];
        for (int c = n * k - 1; c >= 0; --c) {
            table[c] = static_cast<int8_t>(t % n);
            t /= n;
        }
        Dfa base = materialize_dfa(table, n, k, f);
        if (minimize(determinize(reverse_single_final(base))).state_count() != best.value)
            throw std::logic_error("search_reversal_base: witness failed re-verification");
        out.witnesses = {base};
    }
    return out;
}

SearchOutcome search_reversal_binary_max(int n, const SearchConfig& config) {
    DfaSpace space(n, 2);
    check_budget(space.total, config, "search_reversal_binary_max");
    auto eval = [&](long long code) -> std::optional<long long> {
        int8_t table[12 * 6];
        int f, d;
        space.decode(code, table, &f, &d);
        if (!canonical_bfs_identity_dfa(table, n, 2)) return std::nullopt;
        if (dfa_class_count(table, n, 2, static_cast<uint16_t>(1 << f)) != n) return std::nullopt;
        // Reversal of the prefix-free machine: drop the dead state by never
        // entering it (no transition into `d` survives reversal from live
        // states), start from {f}, accept {0}.
        uint16_t rev[kDenseMaxStates * 4];
        std::memset(rev, 0, sizeof(rev));
        for (int s = 0; s < n; ++s) {
            if (s == d) continue;
            for (int a = 0; a < 2; ++a) {
                int t = table[s * 2 + a];
                if (t != d) rev[t * 2 + a] |= static_cast<uint16_t>(1 << s);
            }
        }
        SubsetEvalResult r = subset_eval(rev, n, 2, static_cast<uint16_t>(1 << f), 1);
        return r.sc;
    };
    SearchOutcome out;
    out.target = (1LL << (n - 2)) + 1;
    out.exhaustive = true;
    ScanBest best = scan_codes(space.total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) {
        int8_t table[12 * 6];
        int f, d;
        space.decode(best.index, table, &f, &d);
        Dfa witness = materialize_dfa(table, n, 2, f);
        if (reverse_sc(witness) != best.value)
            throw std::logic_error("search_reversal_binary_max: witness failed re-verification");
        out.witnesses = {witness};
    }
    return out;
}

SearchOutcome search_nfa_to_dfa_binary_max(int n, const SearchConfig& config) {
    NfaSpace space(n, 2);
    check_budget(space.total, config, "search_nfa_to_dfa_binary_max");
    auto eval = [&](long long code) -> std::optional<long long> {
        uint16_t rows[kDenseMaxStates * 4];
        space.decode(code, rows);
        if (!canonical_bfs_identity_masks(rows, n, 2)) return std::nullopt;
        if (!all_coreachable_masks(rows, n, 2)) return std::nullopt;
        SubsetEvalResult r = subset_eval(rows, n, 2, 1, static_cast<uint16_t>(1 << (n - 1)));
        if (!r.prefix_free) return std::nullopt;
        return r.sc;
    };
    SearchOutcome out;
    out.target = (1LL << (n - 1)) + 1;
    out.exhaustive = true;
    ScanBest best = scan_codes(space.total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) {
        uint16_t rows[kDenseMaxStates * 4];
        space.decode(best.index, rows);
        Nfa witness = materialize_nfa(rows, n, 2);
        if (sc(witness) != best.value || !is_prefix_free(witness))
            throw std::logic_error("search_nfa_to_dfa_binary_max: witness failed re-verification");
        out.witnesses = {witness};
    }
    return out;
}

SearchOutcome search_cyclic_shift_bound(int n, int k, const SearchConfig& config) {
    std::vector<Dfa> machines;
    enumerate_prefix_free_dfas(n, k, true, [&](const Dfa& d) { machines.push_back(d); });
    const long long total = static_cast<long long>(machines.size());
    check_budget(total, config, "search_cyclic_shift_bound");
    auto eval = [&](long long code) -> std::optional<long long> {
        return dfa_cyclic_shift(machines[static_cast<size_t>(code)]).state_count();
    };
    SearchOutcome out;
    long long target = 1;
    for (int i = 0; i < n - 2; ++i) target *= 2 * n - 3;
    out.target = target;
    out.exhaustive = true;
    ScanBest best = scan_codes(total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) out.witnesses = {machines[static_cast<size_t>(best.index)]};
    return out;
}

SearchOutcome fill_template_search(const TemplateDfa& tmpl, long long target,
                                   const SearchConfig& config) {
    const std::vector<int> holes = tmpl.hole_cells();
    const long long total = ipow(tmpl.state_count, static_cast<int>(holes.size()));
    check_budget(total, config, "fill_template_search");

    auto decode_fill = [&](long long code) {
        std::vector<int> targets(holes.size());
        for (int i = static_cast<int>(holes.size()) - 1; i >= 0; --i) {
            targets[static_cast<size_t>(i)] = static_cast<int>(code % tmpl.state_count);
            code /= tmpl.state_count;
        }
        return tmpl.fill(targets);
    };
    auto eval = [&](long long code) -> std::optional<long long> {
        Dfa filled = decode_fill(code);
        // Only fillings that keep every template state meaningful qualify as
        // witnesses for the target.
        if (minimize(filled).state_count() != tmpl.state_count) return std::nullopt;
        return minimize(dfa_cyclic_shift(filled)).state_count();
    };

    SearchOutcome out;
    out.target = target;
    out.exhaustive = true;
    ScanBest best = scan_codes(total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) {
        Dfa witness = decode_fill(best.index);
        if (minimize(dfa_cyclic_shift(witness)).state_count() != best.value)
            throw std::logic_error("fill_template_search: witness failed re-verification");
        out.witnesses = {witness};
    }
    return out;
}

SearchOutcome search_complement_base(int n, const SearchConfig& config) {
    if (n < 3 || n > 4)
        throw ResourceLimit("search_complement_base: supported witness sizes are n in {3, 4}");
    const int nb = n - 1; // binary base B; the witness is L' = Bc
    const long long radix = 1LL << nb;
    const int cells = nb * 2;
    const long long tables = ipow(radix, cells);
    const long long final_sets = (1LL << nb) - 1; // nonempty
    const long long total = tables * final_sets;
    check_budget(total, config, "search_complement_base");

    const Alphabet abc = Alphabet::first(3);
    auto build_witness = [&](long long code) {
        long long fs = code / tables + 1;
        long long t = code % tables;
        NfaBuilder b(abc, n, 0);
        for (int c = cells - 1; c >= 0; --c) {
            uint16_t mask = static_cast<uint16_t>(t % radix);
            t /= radix;
            int s = c / 2, a = c % 2;
            uint16_t bits = mask;
            while (bits) {
                int tgt = __builtin_ctz(bits);
                bits = static_cast<uint16_t>(bits & (bits - 1));
                b.add(s, a, tgt);
            }
        }
        for (int s = 0; s < nb; ++s)
            if (fs & (1LL << s)) b.add(s, 'c', nb); // old finals step into the new final by c
        b.mark_final(nb);
        return b.build();
    };

    const int target = 1 << (n - 1);
    auto eval = [&](long long code) -> std::optional<long long> {
        Nfa witness = build_witness(code);
        // sc(L') = 2^(n-1)+1 forces nsc(L') = n, and the complement
        // construction then has exactly 2^(n-1) states.
        if (sc(witness) != target + 1) return std::nullopt;
        Nfa complement = nfa_complement_prefix_free(witness);
        return static_cast<long long>(
            best_fooling_clique(complement, 2 * n + 2, 400, target).size());
    };

    SearchOutcome out;
    out.target = target;
    out.exhaustive = true;
    ScanBest best = scan_codes(total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) {
        Nfa witness = build_witness(best.index);
        Nfa complement = nfa_complement_prefix_free(witness);
        auto cert = best_fooling_clique(complement, 2 * n + 2, 400, target);
        if (!verify_fooling_set(cert, complement).ok ||
            static_cast<long long>(cert.size()) != best.value)
            throw std::logic_error("search_complement_base: witness failed re-verification");
        out.witnesses = {witness};
    }
    return out;
}

SearchOutcome search_nfa_cyclic_shift(int n, const SearchConfig& config) {
    if (n < 3 || n > kDenseMaxStates)
        throw ResourceLimit("search_nfa_cyclic_shift: supported sizes are 3..6");
    NfaSpace space(n, 2);
    const long long total = config.samples;

    auto eval = [&](long long index) -> std::optional<long long> {
        uint16_t rows[kDenseMaxStates * 4];
        uint64_t state = splitmix64(config.seed ^ (0x51ED2701ULL + static_cast<uint64_t>(index)));
        for (int c = 0; c < space.cells; ++c) {
            state = splitmix64(state);
            rows[c] = static_cast<uint16_t>(state % static_cast<uint64_t>(space.radix));
        }
        for (int a = 0; a < 2; ++a) rows[(n - 1) * 2 + a] = 0;
        if (!all_coreachable_masks(rows, n, 2)) return std::nullopt;
        SubsetEvalResult r = subset_eval(rows, n, 2, 1, static_cast<uint16_t>(1 << (n - 1)));
        if (!r.prefix_free) return std::nullopt;
        Nfa machine = materialize_nfa(rows, n, 2);
        Nfa shifted = nfa_cyclic_shift(machine);
        std::vector<FoolingPair> cert =
            best_fooling_clique(shifted, 2 * n, 300, static_cast<int>(2 * n * n - 4 * n + 3), 100000);
        return static_cast<long long>(cert.size());
    };

    SearchOutcome out;
    out.target = 2LL * n * n - 4 * n + 3;
    out.exhaustive = false;
    out.seed = config.seed;
    ScanBest best = scan_codes(total, config, out.examined, eval);
    out.best = best.value;
    if (best.index >= 0) {
        uint16_t rows[kDenseMaxStates * 4];
        uint64_t state = splitmix64(config.seed ^ (0x51ED2701ULL + static_cast<uint64_t>(best.index)));
        for (int c = 0; c < space.cells; ++c) {
            state = splitmix64(state);
            rows[c] = static_cast<uint16_t>(state % static_cast<uint64_t>(space.radix));
        }
        for (int a = 0; a < 2; ++a) rows[(n - 1) * 2 + a] = 0;
        out.witnesses = {materialize_nfa(rows, n, 2)};
    }
    return out;
}

} // namespace pfx
