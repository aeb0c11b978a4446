#include "pfx/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pfx/determinize.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/nfa_ops.hpp"

namespace pfx {

int sc(const Dfa& d) { return minimize(d).state_count(); }
int sc(const Nfa& a) { return minimize(determinize(a)).state_count(); }

namespace {

FoolingCheck check_pairs(const std::vector<FoolingPair>& pairs, const Membership& lang,
                         const char* label) {
    FoolingCheck out;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (!lang(pairs[i].x + pairs[i].y)) {
            out.violation = {static_cast<int>(i), static_cast<int>(i)};
            out.detail = std::string(label) + ": pair " + std::to_string(i) +
                         " concatenates outside the language";
            return out;
        }
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if (lang(pairs[i].x + pairs[j].y) && lang(pairs[j].x + pairs[i].y)) {
                out.violation = {static_cast<int>(i), static_cast<int>(j)};
                out.detail = std::string(label) + ": pairs " + std::to_string(i) + "," +
                             std::to_string(j) + " have both cross concatenations inside";
                return out;
            }
    out.ok = true;
    out.bound = static_cast<int>(pairs.size());
    return out;
}

} // namespace

FoolingCheck verify_fooling_set(const std::vector<FoolingPair>& pairs, const Membership& lang) {
    return check_pairs(pairs, lang, "fooling set");
}

FoolingCheck verify_fooling_set(const std::vector<FoolingPair>& pairs, const Dfa& lang) {
    return verify_fooling_set(pairs, [&](const std::string& w) { return lang.accepts(w); });
}

FoolingCheck verify_fooling_set(const std::vector<FoolingPair>& pairs, const Nfa& lang) {
    return verify_fooling_set(pairs, [&](const std::string& w) { return lang.accepts(w); });
}

FoolingCheck verify_extended_fooling(const std::vector<FoolingPair>& a,
                                     const std::vector<FoolingPair>& b, const std::string& u,
                                     const std::string& v, const Membership& lang) {
    std::vector<FoolingPair> ab(a);
    ab.insert(ab.end(), b.begin(), b.end());
    FoolingCheck r = check_pairs(ab, lang, "A u B");
    if (!r.ok) return r;
    std::vector<FoolingPair> au(a);
    au.push_back({"", u});
    r = check_pairs(au, lang, "A u {(eps,u)}");
    if (!r.ok) return r;
    std::vector<FoolingPair> bv(b);
    bv.push_back({"", v});
    r = check_pairs(bv, lang, "B u {(eps,v)}");
    if (!r.ok) return r;
    FoolingCheck out;
    out.ok = true;
    out.bound = static_cast<int>(a.size() + b.size()) + 1;
    return out;
}

FoolingCheck verify_extended_fooling(const std::vector<FoolingPair>& a,
                                     const std::vector<FoolingPair>& b, const std::string& u,
                                     const std::string& v, const Dfa& lang) {
    return verify_extended_fooling(a, b, u, v,
                                   [&](const std::string& w) { return lang.accepts(w); });
}

FoolingCheck verify_extended_fooling(const std::vector<FoolingPair>& a,
                                     const std::vector<FoolingPair>& b, const std::string& u,
                                     const std::string& v, const Nfa& lang) {
    return verify_extended_fooling(a, b, u, v,
                                   [&](const std::string& w) { return lang.accepts(w); });
}

FoolingCheck verify_certificate(const FoolingCertificate& cert, const Membership& lang) {
    if (cert.extension)
        return verify_extended_fooling(cert.extension->a, cert.extension->b, cert.extension->u,
                                       cert.extension->v, lang);
    return verify_fooling_set(cert.pairs, lang);
}

namespace {

std::vector<FoolingPair> pairs_from_json(const nlohmann::json& j, const std::string& ctx) {
    if (!j.is_array()) throw ParseError(ctx + ": expected an array of [x, y] pairs");
    std::vector<FoolingPair> out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            throw ParseError(ctx + ": each entry must be a [x, y] string pair");
        out.push_back({item[0].get<std::string>(), item[1].get<std::string>()});
    }
    return out;
}

nlohmann::json pairs_to_json(const std::vector<FoolingPair>& pairs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : pairs) j.push_back(nlohmann::json::array({p.x, p.y}));
    return j;
}

} // namespace

FoolingCertificate read_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path + ": expected a JSON object");
    FoolingCertificate cert;
    if (j.contains("pairs")) cert.pairs = pairs_from_json(j.at("pairs"), path + ": field 'pairs'");
    const bool has_ext = j.contains("A") || j.contains("B") || j.contains("u") || j.contains("v");
    if (has_ext) {
        FoolingCertificate::Extension ext;
        if (j.contains("A")) ext.a = pairs_from_json(j.at("A"), path + ": field 'A'");
        if (j.contains("B")) ext.b = pairs_from_json(j.at("B"), path + ": field 'B'");
        if (j.contains("u")) {
            if (!j.at("u").is_string()) throw ParseError(path + ": field 'u' must be a string");
            ext.u = j.at("u").get<std::string>();
        }
        if (j.contains("v")) {
            if (!j.at("v").is_string()) throw ParseError(path + ": field 'v' must be a string");
            ext.v = j.at("v").get<std::string>();
        }
        cert.extension = std::move(ext);
    }
    if (cert.pairs.empty() && !cert.extension)
        throw ParseError(path + ": certificate holds neither 'pairs' nor an extension");
    return cert;
}

void write_certificate(const FoolingCertificate& cert, const std::string& path) {
    nlohmann::json j;
    j["pairs"] = pairs_to_json(cert.pairs);
    if (cert.extension) {
        j["A"] = pairs_to_json(cert.extension->a);
        j["B"] = pairs_to_json(cert.extension->b);
        j["u"] = cert.extension->u;
        j["v"] = cert.extension->v;
    }
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << j.dump() << "\n";
}

long long reachable_subsets(const Nfa& a) { return reachable_subset_count(a); }

// ---------------------------------------------------------------------------
// Brute-force minimal-NFA oracle.
// ---------------------------------------------------------------------------

namespace {

constexpr int kBruteMaxStates = 8;

// Exact language-equality against a minimal target DFA: paired BFS of the
// candidate's subset automaton with the target.  Since the target is minimal,
// any subset seen with two different target states witnesses inequality.
bool candidate_equals_target(const uint16_t* rows, int k, int g, uint16_t final_mask,
                             const Dfa& target) {
    int16_t seen[1 << kBruteMaxStates];
    std::memset(seen, -1, sizeof(int16_t) * (size_t(1) << k));
    uint16_t queue[1 << kBruteMaxStates];
    int16_t tstate[1 << kBruteMaxStates];
    int head = 0, tail = 0;
    queue[tail] = 1; // subset {0}
    tstate[tail++] = static_cast<int16_t>(target.initial());
    seen[1] = static_cast<int16_t>(target.initial());
    while (head < tail) {
        uint16_t subset = queue[head];
        int ts = tstate[head++];
        bool cand_accept = (subset & final_mask) != 0;
        if (cand_accept != target.is_final(ts)) return false;
        for (int a = 0; a < g; ++a) {
            uint16_t nxt = 0;
            uint16_t bits = subset;
            while (bits) {
                int s = __builtin_ctz(bits);
                bits = static_cast<uint16_t>(bits & (bits - 1));
                nxt |= rows[s * g + a];
            }
            int tt = target.next(ts, a);
            if (seen[nxt] < 0) {
                seen[nxt] = static_cast<int16_t>(tt);
                queue[tail] = nxt;
                tstate[tail++] = static_cast<int16_t>(tt);
            } else if (seen[nxt] != tt) {
                return false;
            }
        }
    }
    return true;
}

// DFS over canonical transition tables: scanning cells in (state, symbol)
// order with targets ascending, newly introduced states must be consecutive.
// Counts candidates (table x final-set combinations) and reports any hit.
struct BruteWorker {
    int k, g;
    const Dfa* target;
    bool eps_in_lang;
    long long examined = 0;
    bool found = false;
    const std::atomic<bool>* stop;

    void leaf(uint16_t* rows) {
        const int nfinal_sets = 1 << (k - 1);
        for (int fs = 0; fs < nfinal_sets && !found; ++fs) {
            // State 0 is final iff epsilon is in the language.
            uint16_t final_mask = static_cast<uint16_t>((fs << 1) | (eps_in_lang ? 1 : 0));
            if (final_mask == 0) continue;
            ++examined;
            if (candidate_equals_target(rows, k, g, final_mask, *target)) found = true;
        }
    }

    void dfs(int cell, int max_used, uint16_t* rows) {
        if (found || (stop && stop->load(std::memory_order_relaxed))) return;
        const int cells = k * g;
        if (cell == cells) {
            if (max_used == k - 1) leaf(rows); // all states discovered
            return;
        }
        const uint16_t all = static_cast<uint16_t>((1 << k) - 1);
        for (uint16_t mask = 0; mask <= all; ++mask) {
            uint16_t fresh = static_cast<uint16_t>(mask >> (max_used + 1));
            if (fresh & (fresh + 1)) continue; // new states must be consecutive
            int new_used = max_used;
            while (fresh) {
                ++new_used;
                fresh = static_cast<uint16_t>(fresh >> 1);
            }
            rows[cell] = mask;
            dfs(cell + 1, new_used, rows);
            if (found) return;
        }
    }
};

} // namespace

std::optional<int> nsc_exact_bruteforce(const Dfa& lang, int cap, const BruteforceConfig& config) {
    if (cap < 1) return std::nullopt;
    if (cap > kBruteMaxStates)
        throw ResourceLimit("nsc_exact_bruteforce: cap " + std::to_string(cap) +
                            " exceeds the supported maximum of " + std::to_string(kBruteMaxStates));
    const Dfa target = minimize(lang);
    if (target.final_count() == 0) return 1; // one transition-free, final-free state
    const int g = target.alphabet().size();
    const bool eps_in_lang = target.is_final(target.initial());

    long long total_examined = 0;
    for (int k = 1; k <= cap; ++k) {
        // Fast refusal for spaces that are hopeless under the budget: the raw
        // mask space is an upper bound on DFS leaves.
        long double raw = 1;
        for (int c = 0; c < k * g; ++c) raw *= static_cast<long double>(1 << k);
        if (raw > static_cast<long double>(config.budget) &&
            raw > static_cast<long double>(1 << 26))
            throw ResourceLimit("nsc_exact_bruteforce: state count " + std::to_string(k) +
                                " spans ~" + std::to_string(static_cast<double>(raw)) +
                                " tables, over the budget of " + std::to_string(config.budget));

        // Parallel partition by the first cell's mask; a hit is a hit
        // regardless of scan order, so the outcome is worker-independent.
        std::atomic<bool> stop{false};
        const int chunks = 1 << k;
        std::vector<long long> chunk_examined(static_cast<size_t>(chunks), 0);
        std::vector<uint8_t> chunk_found(static_cast<size_t>(chunks), 0);

#ifdef _OPENMP
        int requested = config.workers > 0 ? config.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(requested)
#endif
        for (int first = 0; first < chunks; ++first) {
            uint16_t fresh = static_cast<uint16_t>(first >> 1);
            if (fresh & (fresh + 1)) continue;
            int used = 0;
            while (fresh) {
                ++used;
                fresh = static_cast<uint16_t>(fresh >> 1);
            }
            BruteWorker w{k, g, &target, eps_in_lang, 0, false, &stop};
            uint16_t rows[kBruteMaxStates * Alphabet::kMaxSymbols] = {0};
            rows[0] = static_cast<uint16_t>(first);
            w.dfs(1, used, rows);
            chunk_examined[static_cast<size_t>(first)] = w.examined;
            if (w.found) {
                chunk_found[static_cast<size_t>(first)] = 1;
                stop.store(true, std::memory_order_relaxed);
            }
        }

        bool found = false;
        for (int c = 0; c < chunks; ++c) {
            total_examined += chunk_examined[static_cast<size_t>(c)];
            found = found || chunk_found[static_cast<size_t>(c)] != 0;
        }
        if (found) return k;
        if (total_examined > config.budget)
            throw ResourceLimit("nsc_exact_bruteforce: examined " + std::to_string(total_examined) +
                                " machines, over the budget of " + std::to_string(config.budget));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fooling-set builders.
// ---------------------------------------------------------------------------

std::vector<FoolingPair> greedy_fooling_pairs(const Nfa& lang, int max_len, int max_candidates) {
    const Alphabet& alphabet = lang.alphabet();
    std::unordered_map<std::string, bool> memo;
    auto member = [&](const std::string& w) {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        bool r = lang.accepts(w);
        memo.emplace(w, r);
        return r;
    };

    // Accepted strings in length-lexicographic order, then all their splits.
    std::vector<FoolingPair> candidates;
    std::vector<std::string> frontier{""};
    for (int len = 0; len <= max_len && static_cast<int>(candidates.size()) < max_candidates;
         ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier) {
            if (member(w))
                for (size_t p = 0; p <= w.size(); ++p) {
                    candidates.push_back({w.substr(0, p), w.substr(p)});
                    if (static_cast<int>(candidates.size()) >= max_candidates) break;
                }
            if (len < max_len)
                for (int a = 0; a < alphabet.size(); ++a) next.push_back(w + alphabet.symbol(a));
        }
        frontier = std::move(next);
    }

    std::vector<FoolingPair> chosen;
    for (const FoolingPair& cand : candidates) {
        bool compatible = true;
        for (const FoolingPair& have : chosen)
            if (member(cand.x + have.y) && member(have.x + cand.y)) {
                compatible = false;
                break;
            }
        if (compatible) chosen.push_back(cand);
    }
    return chosen;
}

namespace {

std::vector<FoolingPair> fooling_candidates(const Nfa& lang, int max_len, int max_candidates,
                                            const Membership& member) {
    const Alphabet& alphabet = lang.alphabet();
    std::vector<FoolingPair> candidates;
    std::vector<std::string> frontier{""};
    for (int len = 0; len <= max_len && static_cast<int>(candidates.size()) < max_candidates;
         ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier) {
            if (member(w))
                for (size_t p = 0; p <= w.size(); ++p) {
                    candidates.push_back({w.substr(0, p), w.substr(p)});
                    if (static_cast<int>(candidates.size()) >= max_candidates) break;
                }
            if (len < max_len)
                for (int a = 0; a < alphabet.size(); ++a) next.push_back(w + alphabet.symbol(a));
        }
        frontier = std::move(next);
    }
    return candidates;
}

} // namespace

std::vector<FoolingPair> best_fooling_clique(const Nfa& lang, int max_len, int max_candidates,
                                             int target, long long node_budget) {
    std::unordered_map<std::string, bool> memo;
    auto member = [&](const std::string& w) {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        bool r = lang.accepts(w);
        memo.emplace(w, r);
        return r;
    };
    std::vector<FoolingPair> cands = fooling_candidates(lang, max_len, max_candidates, member);
    const int n = static_cast<int>(cands.size());
    if (n == 0) return {};

    // Compatibility graph: pairs that can coexist in one fooling set.
    const int words = (n + 63) / 64;
    std::vector<uint64_t> adj(static_cast<size_t>(n) * static_cast<size_t>(words), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ok = !(member(cands[static_cast<size_t>(i)].x + cands[static_cast<size_t>(j)].y) &&
                        member(cands[static_cast<size_t>(j)].x + cands[static_cast<size_t>(i)].y));
            if (ok) {
                adj[static_cast<size_t>(i) * words + static_cast<size_t>(j / 64)] |= uint64_t(1)
                                                                                     << (j % 64);
                adj[static_cast<size_t>(j) * words + static_cast<size_t>(i / 64)] |= uint64_t(1)
                                                                                     << (i % 64);
            }
        }

    std::vector<int> best, current;
    long long nodes = 0;
    std::vector<uint64_t> full(static_cast<size_t>(words), ~uint64_t(0));
    if (n % 64) full[static_cast<size_t>(words - 1)] = (uint64_t(1) << (n % 64)) - 1;

    std::function<void(std::vector<uint64_t>&, int)> grow = [&](std::vector<uint64_t>& allowed,
                                                                int from) {
        if (static_cast<int>(best.size()) >= target || ++nodes > node_budget) return;
        if (static_cast<int>(current.size()) > static_cast<int>(best.size())) best = current;
        int remaining = 0;
        for (int w = 0; w < words; ++w) remaining += __builtin_popcountll(allowed[static_cast<size_t>(w)]);
        if (static_cast<int>(current.size()) + remaining <= static_cast<int>(best.size())) return;
        for (int v = from; v < n; ++v) {
            if (!(allowed[static_cast<size_t>(v / 64)] & (uint64_t(1) << (v % 64)))) continue;
            std::vector<uint64_t> next(static_cast<size_t>(words));
            for (int w = 0; w < words; ++w)
                next[static_cast<size_t>(w)] =
                    allowed[static_cast<size_t>(w)] & adj[static_cast<size_t>(v) * words + static_cast<size_t>(w)];
            // Only vertices after v stay eligible, keeping the scan ordered.
            for (int w = 0; w < words; ++w) {
                uint64_t mask = ~uint64_t(0);
                if (w * 64 + 63 <= v)
                    mask = 0;
                else if (v / 64 == w)
                    mask = ~((uint64_t(2) << (v % 64)) - 1);
                next[static_cast<size_t>(w)] &= mask;
            }
            current.push_back(v);
            grow(next, v + 1);
            current.pop_back();
            if (static_cast<int>(best.size()) >= target || nodes > node_budget) return;
        }
    };
    std::vector<uint64_t> allowed = full;
    grow(allowed, 0);

    std::vector<FoolingPair> out;
    for (int i : best) out.push_back(cands[static_cast<size_t>(i)]);
    return out;
}

std::vector<FoolingPair> intersection_fooling_pairs(const Nfa& k, const Nfa& l) {
    const Nfa product = nfa_intersection(k, l);
    const int n = product.state_count();
    const int g = product.alphabet().size();
    if (n > 63) return {};

    // Forward: shortest word driving the product to each exact singleton.
    std::vector<std::string> to_singleton(static_cast<size_t>(n));
    std::vector<uint8_t> have_x(static_cast<size_t>(n), 0);
    {
        std::unordered_map<uint64_t, std::string> word;
        std::vector<uint64_t> queue{uint64_t(1) << product.initial()};
        word.emplace(queue[0], "");
        for (size_t i = 0; i < queue.size(); ++i) {
            uint64_t subset = queue[i];
            const std::string& w = word.at(subset);
            if (__builtin_popcountll(subset) == 1) {
                int q = __builtin_ctzll(subset);
                if (!have_x[static_cast<size_t>(q)]) {
                    have_x[static_cast<size_t>(q)] = 1;
                    to_singleton[static_cast<size_t>(q)] = w;
                }
            }
            for (int a = 0; a < g; ++a) {
                uint64_t nxt = 0;
                uint64_t bits = subset;
                while (bits) {
                    int s = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    for (int32_t t : product.targets(s, a)) nxt |= uint64_t(1) << t;
                }
                if (nxt && !word.count(nxt)) {
                    word.emplace(nxt, w + product.alphabet().symbol(a));
                    queue.push_back(nxt);
                }
            }
        }
    }

    // Backward: shortest word accepted from exactly one state.
    std::vector<std::string> from_singleton(static_cast<size_t>(n));
    std::vector<uint8_t> have_y(static_cast<size_t>(n), 0);
    {
        uint64_t final_set = 0;
        for (int f : product.finals()) final_set |= uint64_t(1) << f;
        std::unordered_map<uint64_t, std::string> word;
        std::vector<uint64_t> queue{final_set};
        word.emplace(final_set, "");
        for (size_t i = 0; i < queue.size(); ++i) {
            uint64_t acc = queue[i];
            const std::string& w = word.at(acc);
            if (__builtin_popcountll(acc) == 1) {
                int q = __builtin_ctzll(acc);
                if (!have_y[static_cast<size_t>(q)]) {
                    have_y[static_cast<size_t>(q)] = 1;
                    from_singleton[static_cast<size_t>(q)] = w;
                }
            }
            for (int a = 0; a < g; ++a) {
                uint64_t pre = 0;
                for (int s = 0; s < n; ++s)
                    for (int32_t t : product.targets(s, a))
                        if (acc & (uint64_t(1) << t)) {
                            pre |= uint64_t(1) << s;
                            break;
                        }
                if (pre && !word.count(pre)) {
                    word.emplace(pre, product.alphabet().symbol(a) + w);
                    queue.push_back(pre);
                }
            }
        }
    }

    std::vector<FoolingPair> pairs;
    for (int q = 0; q < n; ++q) {
        if (!have_x[static_cast<size_t>(q)] || !have_y[static_cast<size_t>(q)]) return {};
        pairs.push_back({to_singleton[static_cast<size_t>(q)], from_singleton[static_cast<size_t>(q)]});
    }
    return pairs;
}

ComplexityResult measure(const Dfa& d, int exact_cap, const BruteforceConfig& config) {
    ComplexityResult r;
    Dfa m = minimize(d);
    r.sc = m.state_count();
    r.nsc_upper = r.sc;
    Nfa as_nfa = dfa_as_nfa(m);
    r.nsc_lower = std::max<int>(
        1, static_cast<int>(greedy_fooling_pairs(as_nfa, std::min(2 * r.sc, 12)).size()));
    if (exact_cap > 0) r.nsc_exact = nsc_exact_bruteforce(m, exact_cap, config);
    if (r.nsc_exact) {
        r.nsc_lower = std::max(r.nsc_lower, *r.nsc_exact);
        r.nsc_upper = std::min(r.nsc_upper, *r.nsc_exact);
    }
    return r;
}

ComplexityResult measure(const Nfa& a, int exact_cap, const BruteforceConfig& config) {
    ComplexityResult r;
    Dfa m = minimize(determinize(a));
    r.sc = m.state_count();
    r.nsc_upper = a.state_count();
    r.nsc_lower = std::max<int>(
        1, static_cast<int>(greedy_fooling_pairs(a, std::min(2 * a.state_count(), 12)).size()));
    if (exact_cap > 0) r.nsc_exact = nsc_exact_bruteforce(m, exact_cap, config);
    if (r.nsc_exact) {
        r.nsc_lower = std::max(r.nsc_lower, *r.nsc_exact);
        r.nsc_upper = std::min(r.nsc_upper, *r.nsc_exact);
    }
    return r;
}

} // namespace pfx
