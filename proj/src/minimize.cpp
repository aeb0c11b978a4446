#include "pfx/minimize.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace pfx {

namespace {

// Reachable states in BFS discovery order (alphabet order at each state).
std::vector<int> bfs_order(const Dfa& d) {
    std::vector<int> order;
    std::vector<uint8_t> seen(static_cast<size_t>(d.state_count()), 0);
    order.push_back(d.initial());
    seen[static_cast<size_t>(d.initial())] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int a = 0; a < d.alphabet().size(); ++a) {
            int t = d.next(order[i], a);
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                order.push_back(t);
            }
        }
    return order;
}

Dfa renumber(const Dfa& d, const std::vector<int>& order) {
    const int k = d.alphabet().size();
    std::vector<int> newid(static_cast<size_t>(d.state_count()), -1);
    for (size_t i = 0; i < order.size(); ++i) newid[static_cast<size_t>(order[i])] = static_cast<int>(i);
    std::vector<int32_t> table(order.size() * static_cast<size_t>(k));
    std::vector<int> finals;
    for (size_t i = 0; i < order.size(); ++i) {
        int s = order[i];
        if (d.is_final(s)) finals.push_back(static_cast<int>(i));
        for (int a = 0; a < k; ++a)
            table[i * static_cast<size_t>(k) + static_cast<size_t>(a)] =
                static_cast<int32_t>(newid[static_cast<size_t>(d.next(s, a))]);
    }
    return Dfa(d.alphabet(), static_cast<int>(order.size()), 0, finals, std::move(table));
}

/*
 * Hopcroft partition refinement on the reachable part.
 *
 * Blocks are maintained as contiguous ranges of the `elems` array.  A split
 * moves the states hit by the current splitter to the front of their block;
 * the smaller half is pushed back on the worklist.
 */
std::vector<int> hopcroft_classes(const Dfa& d) {
    const int n = d.state_count();
    const int k = d.alphabet().size();

    // Inverse transitions bucketed by (symbol, target).
    std::vector<int> inv_count(static_cast<size_t>(k) * static_cast<size_t>(n) + 1, 0);
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < k; ++a)
            ++inv_count[static_cast<size_t>(a) * static_cast<size_t>(n) +
                        static_cast<size_t>(d.next(s, a)) + 1];
    for (size_t i = 1; i < inv_count.size(); ++i) inv_count[i] += inv_count[i - 1];
    std::vector<int> inv(static_cast<size_t>(k) * static_cast<size_t>(n));
    {
        std::vector<int> fill(inv_count.begin(), inv_count.end() - 1);
        for (int s = 0; s < n; ++s)
            for (int a = 0; a < k; ++a)
                inv[static_cast<size_t>(
                    fill[static_cast<size_t>(a) * static_cast<size_t>(n) +
                         static_cast<size_t>(d.next(s, a))]++)] = s;
    }

    std::vector<int> elems(static_cast<size_t>(n));
    std::iota(elems.begin(), elems.end(), 0);
    std::stable_partition(elems.begin(), elems.end(), [&](int s) { return d.is_final(s); });
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;

    std::vector<int> block_of(static_cast<size_t>(n), 0);
    std::vector<int> block_start{0}, block_len{n};
    int n_final = d.final_count();
    if (n_final > 0 && n_final < n) {
        block_start = {0, n_final};
        block_len = {n_final, n - n_final};
        for (int i = n_final; i < n; ++i) block_of[static_cast<size_t>(elems[static_cast<size_t>(i)])] = 1;
    }

    std::vector<int> worklist;
    if (block_start.size() == 2)
        worklist.push_back(block_len[0] <= block_len[1] ? 0 : 1);
    else
        worklist.push_back(0);

    std::vector<int> touched_blocks;
    std::vector<int> moved(static_cast<size_t>(block_start.capacity()), 0);
    moved.assign(block_start.size(), 0);

    while (!worklist.empty()) {
        int splitter = worklist.back();
        worklist.pop_back();
        for (int a = 0; a < k; ++a) {
            touched_blocks.clear();
            // Preimage of the splitter block under symbol a.
            int sb = block_start[static_cast<size_t>(splitter)];
            int se = sb + block_len[static_cast<size_t>(splitter)];
            for (int i = sb; i < se; ++i) {
                int t = elems[static_cast<size_t>(i)];
                int lo = inv_count[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(t)];
                int hi = inv_count[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(t) + 1];
                for (int j = lo; j < hi; ++j) {
                    int s = inv[static_cast<size_t>(j)];
                    int b = block_of[static_cast<size_t>(s)];
                    if (moved[static_cast<size_t>(b)] == 0) touched_blocks.push_back(b);
                    // Swap s to the front part of its block.
                    int target_idx = block_start[static_cast<size_t>(b)] + moved[static_cast<size_t>(b)];
                    int cur_idx = pos[static_cast<size_t>(s)];
                    if (cur_idx >= target_idx) {
                        int other = elems[static_cast<size_t>(target_idx)];
                        std::swap(elems[static_cast<size_t>(cur_idx)], elems[static_cast<size_t>(target_idx)]);
                        pos[static_cast<size_t>(s)] = target_idx;
                        pos[static_cast<size_t>(other)] = cur_idx;
                        ++moved[static_cast<size_t>(b)];
                    }
                }
            }
            for (int b : touched_blocks) {
                int m = moved[static_cast<size_t>(b)];
                moved[static_cast<size_t>(b)] = 0;
                if (m == 0 || m == block_len[static_cast<size_t>(b)]) continue;
                // Split: front m elements become a new block.
                int nb = static_cast<int>(block_start.size());
                block_start.push_back(block_start[static_cast<size_t>(b)]);
                block_len.push_back(m);
                block_start[static_cast<size_t>(b)] += m;
                block_len[static_cast<size_t>(b)] -= m;
                for (int i = block_start[static_cast<size_t>(nb)];
                     i < block_start[static_cast<size_t>(nb)] + m; ++i)
                    block_of[static_cast<size_t>(elems[static_cast<size_t>(i)])] = nb;
                moved.push_back(0);
                // Keep refining with the smaller half.
                worklist.push_back(m <= block_len[static_cast<size_t>(b)] ? nb : b);
            }
        }
    }
    return block_of;
}

} // namespace

Dfa minimize(const Dfa& d) {
    Dfa reachable = renumber(d, bfs_order(d));
    std::vector<int> cls = hopcroft_classes(reachable);
    const int k = reachable.alphabet().size();

    // Renumber classes in order of first appearance over states 0..n-1.
    int n_classes = 0;
    std::vector<int> remap(cls.size(), -1);
    for (int s = 0; s < reachable.state_count(); ++s)
        if (remap[static_cast<size_t>(cls[static_cast<size_t>(s)])] < 0)
            remap[static_cast<size_t>(cls[static_cast<size_t>(s)])] = n_classes++;
    std::vector<int32_t> table(static_cast<size_t>(n_classes) * static_cast<size_t>(k));
    std::vector<int> finals;
    std::vector<uint8_t> done(static_cast<size_t>(n_classes), 0);
    for (int s = 0; s < reachable.state_count(); ++s) {
        int c = remap[static_cast<size_t>(cls[static_cast<size_t>(s)])];
        if (done[static_cast<size_t>(c)]) continue;
        done[static_cast<size_t>(c)] = 1;
        if (reachable.is_final(s)) finals.push_back(c);
        for (int a = 0; a < k; ++a)
            table[static_cast<size_t>(c) * static_cast<size_t>(k) + static_cast<size_t>(a)] =
                static_cast<int32_t>(remap[static_cast<size_t>(cls[static_cast<size_t>(reachable.next(s, a))])]);
    }
    Dfa quotient(reachable.alphabet(), n_classes,
                 remap[static_cast<size_t>(cls[static_cast<size_t>(reachable.initial())])], finals,
                 std::move(table));
    return canonical_form(quotient);
}

Dfa canonical_form(const Dfa& d) { return renumber(d, bfs_order(d)); }

bool isomorphic(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool is_minimal(const Dfa& d) {
    return minimize(d).state_count() == d.state_count();
}

} // namespace pfx
