// Test-only brute-force language oracles.
//
// Languages are represented as bitmaps over all strings of length <= max_len,
// indexed by length then lexicographic value (first character most
// significant).  Everything here works from string membership alone and is
// deliberately independent of the construction code it is used to check.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfx/dfa.hpp"
#include "pfx/io.hpp"
#include "pfx/nfa.hpp"

namespace oracle {

struct StringSpace {
    int k = 2;
    int max_len = 0;
    std::vector<uint64_t> offset; // offset[l] = index of first length-l string
    uint64_t total = 0;
};

inline StringSpace make_space(int k, int max_len) {
    StringSpace s;
    s.k = k;
    s.max_len = max_len;
    uint64_t run = 0, pow = 1;
    for (int l = 0; l <= max_len; ++l) {
        s.offset.push_back(run);
        run += pow;
        pow *= static_cast<uint64_t>(k);
    }
    s.total = run;
    return s;
}

inline uint64_t pow_k(const StringSpace& s, int e) {
    uint64_t p = 1;
    for (int i = 0; i < e; ++i) p *= static_cast<uint64_t>(s.k);
    return p;
}

inline uint64_t index_of(const StringSpace& s, int len, uint64_t value) {
    return s.offset[static_cast<size_t>(len)] + value;
}

inline std::string string_at(const StringSpace& s, const pfx::Alphabet& alphabet, int len,
                             uint64_t value) {
    std::string w(static_cast<size_t>(len), '?');
    for (int i = len - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = alphabet.symbol(static_cast<int>(value % static_cast<uint64_t>(s.k)));
        value /= static_cast<uint64_t>(s.k);
    }
    return w;
}

using Bitmap = std::vector<uint8_t>;

namespace detail {

template <typename Machine>
struct Walker;

template <>
struct Walker<pfx::Dfa> {
    const pfx::Dfa& m;
    int state;
    explicit Walker(const pfx::Dfa& d) : m(d), state(d.initial()) {}
    Walker advance(int sym) const {
        Walker w(*this);
        w.state = m.next(state, sym);
        return w;
    }
    bool accepting() const { return m.is_final(state); }
};

template <>
struct Walker<pfx::Nfa> {
    const pfx::Nfa& m;
    std::vector<uint64_t> subset;
    explicit Walker(const pfx::Nfa& a)
        : m(a), subset(static_cast<size_t>((a.state_count() + 63) / 64), 0) {
        subset[static_cast<size_t>(a.initial() / 64)] |= uint64_t(1) << (a.initial() % 64);
    }
    Walker advance(int sym) const {
        Walker w(*this);
        std::fill(w.subset.begin(), w.subset.end(), 0);
        for (size_t word = 0; word < subset.size(); ++word) {
            uint64_t bits = subset[word];
            while (bits) {
                int s = static_cast<int>(word) * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                for (int32_t t : m.targets(s, sym))
                    w.subset[static_cast<size_t>(t / 64)] |= uint64_t(1) << (t % 64);
            }
        }
        return w;
    }
    bool accepting() const {
        for (size_t word = 0; word < subset.size(); ++word) {
            uint64_t bits = subset[word];
            while (bits) {
                int s = static_cast<int>(word) * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (m.is_final(s)) return true;
            }
        }
        return false;
    }
};

template <typename Machine>
void fill_bitmap(const StringSpace& s, const Walker<Machine>& w, int len, uint64_t value,
                 Bitmap& out) {
    out[index_of(s, len, value)] = w.accepting() ? 1 : 0;
    if (len == s.max_len) return;
    for (int sym = 0; sym < s.k; ++sym)
        fill_bitmap(s, w.advance(sym), len + 1, value * static_cast<uint64_t>(s.k) + static_cast<uint64_t>(sym), out);
}

} // namespace detail

inline Bitmap lang_bitmap(const StringSpace& s, const pfx::Dfa& d) {
    Bitmap out(s.total, 0);
    detail::fill_bitmap(s, detail::Walker<pfx::Dfa>(d), 0, 0, out);
    return out;
}

inline Bitmap lang_bitmap(const StringSpace& s, const pfx::Nfa& a) {
    Bitmap out(s.total, 0);
    detail::fill_bitmap(s, detail::Walker<pfx::Nfa>(a), 0, 0, out);
    return out;
}

inline Bitmap lang_bitmap(const StringSpace& s, const pfx::Automaton& a) {
    return std::holds_alternative<pfx::Dfa>(a) ? lang_bitmap(s, std::get<pfx::Dfa>(a))
                                               : lang_bitmap(s, std::get<pfx::Nfa>(a));
}

// Set-theoretic combinators.

inline Bitmap bm_union(const Bitmap& a, const Bitmap& b) {
    Bitmap out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
    return out;
}

inline Bitmap bm_intersection(const Bitmap& a, const Bitmap& b) {
    Bitmap out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

inline Bitmap bm_symdiff(const Bitmap& a, const Bitmap& b) {
    Bitmap out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

inline Bitmap bm_difference(const Bitmap& a, const Bitmap& b) {
    Bitmap out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<uint8_t>(a[i] & ~b[i] & 1);
    return out;
}

inline Bitmap bm_complement(const Bitmap& a) {
    Bitmap out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<uint8_t>(!a[i]);
    return out;
}

// w in KL  iff  some split w = uv has u in K and v in L.
inline Bitmap concat_oracle(const StringSpace& s, const Bitmap& ka, const Bitmap& lb) {
    Bitmap out(s.total, 0);
    for (int len = 0; len <= s.max_len; ++len)
        for (uint64_t v = 0; v < pow_k(s, len); ++v) {
            bool in = false;
            for (int p = 0; p <= len && !in; ++p) {
                uint64_t tail = pow_k(s, len - p);
                in = ka[index_of(s, p, v / tail)] && lb[index_of(s, len - p, v % tail)];
            }
            out[index_of(s, len, v)] = in ? 1 : 0;
        }
    return out;
}

inline Bitmap star_oracle(const StringSpace& s, const Bitmap& a) {
    Bitmap out(s.total, 0);
    out[0] = 1; // epsilon
    for (int len = 1; len <= s.max_len; ++len)
        for (uint64_t v = 0; v < pow_k(s, len); ++v) {
            bool in = false;
            for (int p = 1; p <= len && !in; ++p) {
                uint64_t tail = pow_k(s, len - p);
                in = a[index_of(s, p, v / tail)] && out[index_of(s, len - p, v % tail)];
            }
            out[index_of(s, len, v)] = in ? 1 : 0;
        }
    return out;
}

inline uint64_t reversed_value(const StringSpace& s, int len, uint64_t v) {
    uint64_t r = 0;
    for (int i = 0; i < len; ++i) {
        r = r * static_cast<uint64_t>(s.k) + v % static_cast<uint64_t>(s.k);
        v /= static_cast<uint64_t>(s.k);
    }
    return r;
}

inline Bitmap reverse_oracle(const StringSpace& s, const Bitmap& a) {
    Bitmap out(s.total, 0);
    for (int len = 0; len <= s.max_len; ++len)
        for (uint64_t v = 0; v < pow_k(s, len); ++v)
            out[index_of(s, len, v)] = a[index_of(s, len, reversed_value(s, len, v))];
    return out;
}

// w = uv in L^cs  iff  vu in L for some split.
inline Bitmap cyclic_shift_oracle(const StringSpace& s, const Bitmap& a) {
    Bitmap out(s.total, 0);
    for (int len = 0; len <= s.max_len; ++len)
        for (uint64_t v = 0; v < pow_k(s, len); ++v) {
            bool in = false;
            for (int p = 0; p <= len && !in; ++p) {
                uint64_t tail = pow_k(s, len - p);
                uint64_t u = v / tail, rest = v % tail;
                in = a[index_of(s, len, rest * pow_k(s, p) + u)] != 0;
            }
            out[index_of(s, len, v)] = in ? 1 : 0;
        }
    return out;
}

inline bool brute_prefix_free(const StringSpace& s, const Bitmap& a) {
    for (int len = 1; len <= s.max_len; ++len)
        for (uint64_t v = 0; v < pow_k(s, len); ++v) {
            if (!a[index_of(s, len, v)]) continue;
            for (int p = 0; p < len; ++p)
                if (a[index_of(s, p, v / pow_k(s, len - p))]) return false;
        }
    return true;
}

struct FirstDiff {
    bool equal = true;
    int len = 0;
    uint64_t value = 0;
};

inline FirstDiff first_difference(const StringSpace& s, const Bitmap& a, const Bitmap& b) {
    for (int len = 0; len <= s.max_len; ++len)
        for (uint64_t v = 0; v < pow_k(s, len); ++v)
            if (a[index_of(s, len, v)] != b[index_of(s, len, v)]) return {false, len, v};
    return {};
}

template <typename A, typename B>
bool agree_bounded(const A& lhs, const B& rhs, int max_len) {
    StringSpace s = make_space(lhs.alphabet().size(), max_len);
    return first_difference(s, lang_bitmap(s, lhs), lang_bitmap(s, rhs)).equal;
}

// Independent distinguishability pass: states are equivalent iff they accept
// the same strings of length <= max_len.  Counts classes among reachable
// states only.
inline int myhill_nerode_classes(const pfx::Dfa& d, int max_len) {
    StringSpace s = make_space(d.alphabet().size(), max_len);
    std::vector<int> reachable{d.initial()};
    std::vector<uint8_t> seen(static_cast<size_t>(d.state_count()), 0);
    seen[static_cast<size_t>(d.initial())] = 1;
    for (size_t i = 0; i < reachable.size(); ++i)
        for (int a = 0; a < d.alphabet().size(); ++a) {
            int t = d.next(reachable[i], a);
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                reachable.push_back(t);
            }
        }
    std::vector<Bitmap> signatures;
    for (int q : reachable) {
        Bitmap sig(s.total, 0);
        detail::Walker<pfx::Dfa> w(d);
        w.state = q;
        detail::fill_bitmap(s, w, 0, 0, sig);
        signatures.push_back(std::move(sig));
    }
    int classes = 0;
    for (size_t i = 0; i < signatures.size(); ++i) {
        bool fresh = true;
        for (size_t j = 0; j < i && fresh; ++j) fresh = signatures[i] != signatures[j];
        if (fresh) ++classes;
    }
    return classes;
}

} // namespace oracle
