#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfx/dfa.hpp"
#include "pfx/nfa.hpp"

namespace pfx {

/// Deterministic state complexity: states of the minimal complete DFA, dead
/// state included.
int sc(const Dfa& d);
int sc(const Nfa& a);

struct FoolingPair {
    std::string x, y;
    bool operator==(const FoolingPair&) const = default;
};

/// Pair list plus an optional extension (A, B, u, v) in the sense of the
/// extended fooling lemma.  A populated `pairs` field certifies
/// nsc >= |pairs|; a populated extension certifies nsc >= |A| + |B| + 1.
struct FoolingCertificate {
    std::vector<FoolingPair> pairs;
    struct Extension {
        std::vector<FoolingPair> a, b;
        std::string u, v;
    };
    std::optional<Extension> extension;
};

struct FoolingCheck {
    bool ok = false;
    int bound = 0;
    // First violated pair indices and a short reason when !ok.
    std::optional<std::pair<int, int>> violation;
    std::string detail;
};

using Membership = std::function<bool(const std::string&)>;

FoolingCheck verify_fooling_set(const std::vector<FoolingPair>& pairs, const Membership& lang);
FoolingCheck verify_fooling_set(const std::vector<FoolingPair>& pairs, const Dfa& lang);
FoolingCheck verify_fooling_set(const std::vector<FoolingPair>& pairs, const Nfa& lang);

/// Checks that A u B, A u {(eps,u)} and B u {(eps,v)} are all fooling sets;
/// certifies nsc >= |A| + |B| + 1 on success.
FoolingCheck verify_extended_fooling(const std::vector<FoolingPair>& a,
                                     const std::vector<FoolingPair>& b, const std::string& u,
                                     const std::string& v, const Membership& lang);
FoolingCheck verify_extended_fooling(const std::vector<FoolingPair>& a,
                                     const std::vector<FoolingPair>& b, const std::string& u,
                                     const std::string& v, const Dfa& lang);
FoolingCheck verify_extended_fooling(const std::vector<FoolingPair>& a,
                                     const std::vector<FoolingPair>& b, const std::string& u,
                                     const std::string& v, const Nfa& lang);

FoolingCheck verify_certificate(const FoolingCertificate& cert, const Membership& lang);

/// Certificate file format: JSON object with `pairs` (array of [x, y]) and
/// optional `A`, `B`, `u`, `v` for the extended form.
FoolingCertificate read_certificate(const std::string& path);
void write_certificate(const FoolingCertificate& cert, const std::string& path);

struct BruteforceConfig {
    long long budget = 10'000'000; // candidate machines examined
    int workers = 0;               // 0 = library default
};

/// Smallest k <= cap such that some k-state single-initial NFA over the
/// language's alphabet accepts it; nullopt when no such machine exists within
/// the cap.  Enumeration is canonical (trim machines, BFS numbering), checked
/// by determinize + minimize + isomorphism.  Exceeding the budget raises
/// ResourceLimit.
std::optional<int> nsc_exact_bruteforce(const Dfa& lang, int cap,
                                        const BruteforceConfig& config = {});

/// Reachable subset-states of the plain subset automaton.
long long reachable_subsets(const Nfa& a);

/// Greedy fooling-set builder over candidate splits of accepted strings up to
/// max_len; the result always passes verify_fooling_set, so its size is a
/// certified nsc lower bound (not necessarily the best one).
std::vector<FoolingPair> greedy_fooling_pairs(const Nfa& lang, int max_len,
                                              int max_candidates = 4000);

/// Branch-and-bound maximum-fooling-set search over the same candidate pool;
/// stops early once `target` pairs are found.  Deterministic for fixed
/// parameters.  Stronger than the greedy builder on small targets.
std::vector<FoolingPair> best_fooling_clique(const Nfa& lang, int max_len, int max_candidates,
                                             int target, long long node_budget = 2'000'000);

/// The intersection proof's pairs (x_q, y_q) derived mechanically from the
/// cross product of two prefix-free-normal NFAs: x_q drives the product to
/// exactly {q} and y_q is accepted from exactly {q}.  Empty result when some
/// state admits no such pair.
std::vector<FoolingPair> intersection_fooling_pairs(const Nfa& k, const Nfa& l);

struct ComplexityResult {
    int sc = 0;
    int nsc_lower = 0;
    int nsc_upper = 0;
    std::optional<int> nsc_exact;
};

/// Measurement bundle for one machine.  For DFAs nsc_upper starts from sc;
/// for NFAs from the machine's own state count.  `exact_cap` > 0 additionally
/// runs the brute-force oracle.
ComplexityResult measure(const Dfa& d, int exact_cap = 0, const BruteforceConfig& config = {});
ComplexityResult measure(const Nfa& a, int exact_cap = 0, const BruteforceConfig& config = {});

} // namespace pfx
