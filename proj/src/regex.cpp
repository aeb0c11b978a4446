#include "pfx/regex.hpp"

#include <string>
#include <utility>

#include "pfx/errors.hpp"

namespace pfx {

namespace re {

Regex eps() { return Regex{}; }

Regex sym(char c) {
    Regex r;
    r.kind = Regex::Kind::Symbol;
    r.symbol = c;
    return r;
}

Regex alt(Regex a, Regex b) {
    Regex r;
    r.kind = Regex::Kind::Union;
    r.children.push_back(std::move(a));
    r.children.push_back(std::move(b));
    return r;
}

Regex seq(Regex a, Regex b) {
    Regex r;
    r.kind = Regex::Kind::Concat;
    r.children.push_back(std::move(a));
    r.children.push_back(std::move(b));
    return r;
}

Regex seq(Regex a, Regex b, Regex c) { return seq(seq(std::move(a), std::move(b)), std::move(c)); }

Regex star(Regex r) {
    Regex s;
    s.kind = Regex::Kind::Star;
    s.children.push_back(std::move(r));
    return s;
}

Regex pow(Regex r, int exponent) {
    if (exponent < 0) throw RejectedInput("regex: power exponent must be >= 0");
    Regex p;
    p.kind = Regex::Kind::Power;
    p.exponent = exponent;
    p.children.push_back(std::move(r));
    return p;
}

} // namespace re

namespace {

/*
 * Glushkov sets.  Positions are 1-based (0 is the fresh initial state);
 * nullable/first/last/follow are computed bottom-up with Power expanded as
 * iterated concatenation of the same subtree, re-linearized each time.
 */
struct GlushkovBuild {
    const Alphabet& alphabet;
    std::vector<int> pos_symbol;               // symbol index per position (slot 0 unused)
    std::vector<std::vector<int>> follow;      // per position

    struct Sets {
        bool nullable = false;
        std::vector<int> first, last;
    };

    explicit GlushkovBuild(const Alphabet& a) : alphabet(a) {
        pos_symbol.push_back(-1);
        follow.emplace_back();
    }

    Sets visit(const Regex& r) {
        switch (r.kind) {
            case Regex::Kind::Epsilon: {
                Sets s;
                s.nullable = true;
                return s;
            }
            case Regex::Kind::Symbol: {
                int sym = alphabet.index(r.symbol);
                if (sym < 0)
                    throw RejectedInput(std::string("regex: symbol '") + r.symbol +
                                        "' is not in the declared alphabet");
                int p = static_cast<int>(pos_symbol.size());
                pos_symbol.push_back(sym);
                follow.emplace_back();
                Sets s;
                s.first = {p};
                s.last = {p};
                return s;
            }
            case Regex::Kind::Union: {
                Sets a = visit(r.children[0]);
                Sets b = visit(r.children[1]);
                Sets s;
                s.nullable = a.nullable || b.nullable;
                s.first = merge(a.first, b.first);
                s.last = merge(a.last, b.last);
                return s;
            }
            case Regex::Kind::Concat: {
                Sets a = visit(r.children[0]);
                Sets b = visit(r.children[1]);
                return concat_sets(a, b);
            }
            case Regex::Kind::Star: {
                Sets a = visit(r.children[0]);
                link(a.last, a.first);
                a.nullable = true;
                return a;
            }
            case Regex::Kind::Power: {
                if (r.exponent == 0) {
                    Sets s;
                    s.nullable = true;
                    return s;
                }
                Sets acc = visit(r.children[0]);
                for (int i = 1; i < r.exponent; ++i) {
                    Sets next = visit(r.children[0]);
                    acc = concat_sets(acc, next);
                }
                return acc;
            }
        }
        throw RejectedInput("regex: malformed node");
    }

    Sets concat_sets(Sets& a, Sets& b) {
        link(a.last, b.first);
        Sets s;
        s.nullable = a.nullable && b.nullable;
        s.first = a.nullable ? merge(a.first, b.first) : std::move(a.first);
        s.last = b.nullable ? merge(a.last, b.last) : std::move(b.last);
        return s;
    }

    void link(const std::vector<int>& from, const std::vector<int>& to) {
        for (int p : from)
            for (int q : to) follow[static_cast<size_t>(p)].push_back(q);
    }

    static std::vector<int> merge(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(a);
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }
};

} // namespace

Nfa regex_to_nfa(const Regex& r, const Alphabet& alphabet) {
    GlushkovBuild g(alphabet);
    GlushkovBuild::Sets top = g.visit(r);

    const int n = static_cast<int>(g.pos_symbol.size()); // positions + initial 0
    NfaBuilder b(alphabet, n, 0);
    for (int p : top.first) b.add(0, g.pos_symbol[static_cast<size_t>(p)], p);
    for (int p = 1; p < n; ++p)
        for (int q : g.follow[static_cast<size_t>(p)])
            b.add(p, g.pos_symbol[static_cast<size_t>(q)], q);
    for (int p : top.last) b.mark_final(p);
    if (top.nullable) b.mark_final(0);
    return b.build();
}

} // namespace pfx
