#include "pfx/determinize.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfx/errors.hpp"
#include "pfx/prefix_free.hpp"

namespace pfx {

namespace {

constexpr int kMaxNfaStates = 64;
constexpr size_t kMaxSubsetStates = size_t(1) << 22;

struct MaskTable {
    int n = 0, k = 0;
    std::vector<uint64_t> row;      // [s * k + a]
    uint64_t final_mask = 0;

    explicit MaskTable(const Nfa& a) {
        n = a.state_count();
        k = a.alphabet().size();
        if (n > kMaxNfaStates)
            throw ResourceLimit("determinize: input has " + std::to_string(n) +
                                " states, bitmask subsets support at most 64");
        row.assign(static_cast<size_t>(n) * static_cast<size_t>(k), 0);
        for (int s = 0; s < n; ++s) {
            if (a.is_final(s)) final_mask |= uint64_t(1) << s;
            for (int sym = 0; sym < k; ++sym)
                for (int32_t t : a.targets(s, sym))
                    row[static_cast<size_t>(s) * static_cast<size_t>(k) + static_cast<size_t>(sym)] |=
                        uint64_t(1) << t;
        }
    }

    uint64_t step(uint64_t subset, int sym) const {
        uint64_t out = 0;
        while (subset) {
            int s = __builtin_ctzll(subset);
            subset &= subset - 1;
            out |= row[static_cast<size_t>(s) * static_cast<size_t>(k) + static_cast<size_t>(sym)];
        }
        return out;
    }
};

} // namespace

Dfa determinize(const Nfa& a, MergeFinals merge) {
    if (merge == MergeFinals::Yes && !is_prefix_free(a))
        throw ContractViolation("determinize: final merging requires a prefix-free input");

    const MaskTable t(a);
    const int k = t.k;

    // Discovery-ordered subset states.  With merging, two sentinel states are
    // used: every final subset maps to `merged_final`, and `dead` hosts the
    // empty subset plus everything after the merged final.
    std::unordered_map<uint64_t, int> index;
    std::vector<uint64_t> subsets;
    std::vector<int32_t> table;
    std::vector<int> finals;
    int merged_final = -1, dead = -1;

    auto intern_plain = [&](uint64_t s) {
        auto [it, inserted] = index.emplace(s, static_cast<int>(subsets.size()));
        if (inserted) {
            subsets.push_back(s);
            if (subsets.size() > kMaxSubsetStates)
                throw ResourceLimit("determinize: more than " +
                                    std::to_string(kMaxSubsetStates) + " subset states");
        }
        return it->second;
    };

    if (merge == MergeFinals::No) {
        int start = intern_plain(uint64_t(1) << a.initial());
        for (size_t i = 0; i < subsets.size(); ++i)
            for (int sym = 0; sym < k; ++sym)
                table.push_back(static_cast<int32_t>(intern_plain(t.step(subsets[i], sym))));
        for (size_t i = 0; i < subsets.size(); ++i)
            if (subsets[i] & t.final_mask) finals.push_back(static_cast<int>(i));
        return Dfa(a.alphabet(), static_cast<int>(subsets.size()), start, finals,
                   std::move(table));
    }

    // Merging path.  State ids: plain (non-final, non-empty) subsets in
    // discovery order, then the merged final and the dead state appended on
    // first use.  Rows are filled in a second pass so ids are stable.
    std::vector<int> order_kind;  // 0 plain, 1 merged final, 2 dead
    auto intern = [&](uint64_t s) -> int {
        if (s == 0) {
            if (dead < 0) { dead = static_cast<int>(order_kind.size()); order_kind.push_back(2); }
            return dead;
        }
        if (s & t.final_mask) {
            if (merged_final < 0) { merged_final = static_cast<int>(order_kind.size()); order_kind.push_back(1); }
            return merged_final;
        }
        auto [it, inserted] = index.emplace(s, static_cast<int>(order_kind.size()));
        if (inserted) {
            subsets.push_back(s);
            order_kind.push_back(0);
        }
        return it->second;
    };

    std::vector<uint64_t> worklist;
    int start = intern(uint64_t(1) << a.initial());
    if (start != merged_final && start != dead) worklist.push_back(uint64_t(1) << a.initial());

    std::unordered_map<int, std::vector<int32_t>> rows;
    for (size_t i = 0; i < worklist.size(); ++i) {
        uint64_t s = worklist[i];
        int id = index.at(s);
        std::vector<int32_t> row(static_cast<size_t>(k));
        for (int sym = 0; sym < k; ++sym) {
            uint64_t nxt = t.step(s, sym);
            size_t before = subsets.size();
            int tid = intern(nxt);
            if (subsets.size() > before) worklist.push_back(nxt);
            row[static_cast<size_t>(sym)] = static_cast<int32_t>(tid);
        }
        rows.emplace(id, std::move(row));
    }
    // The merged final, if present, needs a dead state to exit into.
    if (merged_final >= 0 && dead < 0) { dead = static_cast<int>(order_kind.size()); order_kind.push_back(2); }

    const int n_out = static_cast<int>(order_kind.size());
    table.assign(static_cast<size_t>(n_out) * static_cast<size_t>(k), 0);
    for (int s = 0; s < n_out; ++s)
        for (int sym = 0; sym < k; ++sym) {
            int32_t target;
            if (order_kind[static_cast<size_t>(s)] == 0) target = rows.at(s)[static_cast<size_t>(sym)];
            else target = static_cast<int32_t>(dead);  // final row exits to dead; dead self-loops
            table[static_cast<size_t>(s) * static_cast<size_t>(k) + static_cast<size_t>(sym)] = target;
        }
    if (merged_final >= 0) finals.push_back(merged_final);
    return Dfa(a.alphabet(), n_out, start, finals, std::move(table));
}

long long reachable_subset_count(const Nfa& a) {
    const MaskTable t(a);
    std::unordered_map<uint64_t, int> seen;
    std::vector<uint64_t> worklist{uint64_t(1) << a.initial()};
    seen.emplace(worklist[0], 0);
    for (size_t i = 0; i < worklist.size(); ++i)
        for (int sym = 0; sym < t.k; ++sym) {
            uint64_t nxt = t.step(worklist[i], sym);
            if (seen.emplace(nxt, static_cast<int>(seen.size())).second) {
                worklist.push_back(nxt);
                if (seen.size() > kMaxSubsetStates)
                    throw ResourceLimit("reachable_subset_count: subset budget exceeded");
            }
        }
    return static_cast<long long>(seen.size());
}

} // namespace pfx
