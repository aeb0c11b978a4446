#include "pfx/prefix_free.hpp"

#include <vector>

#include "pfx/determinize.hpp"
#include "pfx/minimize.hpp"

namespace pfx {

std::optional<int> dead_state(const Dfa& d) {
    // Backward reachability from the final states.
    const int n = d.state_count();
    const int k = d.alphabet().size();
    std::vector<std::vector<int>> preds(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < k; ++a) preds[static_cast<size_t>(d.next(s, a))].push_back(s);
    std::vector<uint8_t> alive(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s)
        if (d.is_final(s)) {
            alive[static_cast<size_t>(s)] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int p : preds[static_cast<size_t>(s)])
            if (!alive[static_cast<size_t>(p)]) {
                alive[static_cast<size_t>(p)] = 1;
                stack.push_back(p);
            }
    }
    std::optional<int> dead;
    for (int s = 0; s < n; ++s)
        if (!alive[static_cast<size_t>(s)]) {
            if (dead) return std::nullopt; // not minimal: more than one dead state
            dead = s;
        }
    return dead;
}

std::optional<PrefixFreeShape> prefix_free_shape(const Dfa& minimal) {
    if (minimal.final_count() != 1) return std::nullopt;
    auto dead = dead_state(minimal);
    if (!dead) return std::nullopt;
    int f = minimal.finals().front();
    for (int a = 0; a < minimal.alphabet().size(); ++a)
        if (minimal.next(f, a) != *dead) return std::nullopt;
    return PrefixFreeShape{f, *dead};
}

bool is_prefix_free(const Dfa& d) {
    Dfa m = minimize(d);
    if (m.final_count() == 0) return true; // empty language
    return prefix_free_shape(m).has_value();
}

bool is_prefix_free(const Nfa& a) { return is_prefix_free(determinize(a)); }

} // namespace pfx
