#include "pfx/bounds.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "pfx/complexity.hpp"
#include "pfx/determinize.hpp"
#include "pfx/dfa_ops.hpp"
#include "pfx/errors.hpp"
#include "pfx/minimize.hpp"
#include "pfx/nfa_ops.hpp"
#include "pfx/witnesses.hpp"

namespace pfx {

namespace {

struct Measured {
    long long constructed;
    long long minimized;
};

struct OpSpec {
    std::string id;
    std::string family;
    bool uses_m, uses_n;
    bool expect_tight; // the paper claims tightness and the desk check can reach it
    std::function<long long(int m, int n)> formula;
    // May throw UnavailableError / DomainError; those become row statuses.
    std::function<Measured(int m, int n, const std::string& fixtures)> run;
    std::function<bool(int m, int n)> out_of_domain; // optional extra guard
    // Cap on the raw construction when it differs from the tight formula
    // (unary star: the construction has n states, the minimal result n-2).
    std::function<long long(int m, int n)> construction_bound;
};

Measured measure_bool(const std::string& family, BoolOp op, int m, int n,
                      const std::string& fixtures) {
    std::vector<Automaton> w = make_witness(family, m, n, fixtures);
    Dfa out = dfa_bool(std::get<Dfa>(w[0]), std::get<Dfa>(w[1]), op);
    return {out.state_count(), minimize(out).state_count()};
}

long long certified_bound(const FoolingCheck& check) { return check.ok ? check.bound : 0; }

const std::vector<OpSpec>& op_specs() {
    static const std::vector<OpSpec> specs = [] {
        std::vector<OpSpec> v;

        v.push_back({"union", "union-dfa", true, true, true,
                     [](int m, int n) { return static_cast<long long>(m) * n - 2; },
                     [](int m, int n, const std::string& fx) {
                         return measure_bool("union-dfa", BoolOp::Union, m, n, fx);
                     },
                     nullptr});

        v.push_back({"symmetric-difference", "union-dfa", true, true, true,
                     [](int m, int n) { return static_cast<long long>(m) * n - 2; },
                     [](int m, int n, const std::string& fx) {
                         return measure_bool("union-dfa", BoolOp::SymmetricDifference, m, n, fx);
                     },
                     nullptr});

        v.push_back({"difference", "difference-dfa", true, true, true,
                     [](int m, int n) { return static_cast<long long>(m) * n - m - 2 * n + 4; },
                     [](int m, int n, const std::string& fx) {
                         return measure_bool("difference-dfa", BoolOp::Difference, m, n, fx);
                     },
                     nullptr});

        v.push_back({"intersection", "intersection-binary-dfa", true, true, true,
                     [](int m, int n) {
                         return static_cast<long long>(m) * n - 2 * (m + n) + 6;
                     },
                     [](int m, int n, const std::string& fx) {
                         return measure_bool("intersection-binary-dfa", BoolOp::Intersection, m, n,
                                             fx);
                     },
                     nullptr});

        v.push_back({"concat-unary", "concat-unary", true, true, true,
                     [](int m, int n) { return static_cast<long long>(m) + n - 2; },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("concat-unary", m, n, fx);
                         Dfa out = dfa_concat_prefix_free(std::get<Dfa>(w[0]), std::get<Dfa>(w[1]));
                         return Measured{out.state_count(), minimize(out).state_count()};
                     },
                     nullptr});

        v.push_back({"star-binary", "star-binary", false, true, true,
                     [](int, int n) { return static_cast<long long>(n); },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("star-binary", m, n, fx);
                         Dfa out = dfa_star_prefix_free(std::get<Dfa>(w[0]));
                         return Measured{out.state_count(), minimize(out).state_count()};
                     },
                     [](int, int n) { return n == 3; }}); // tight only for n != 3

        v.push_back({"star-unary", "star-unary", false, true, true,
                     [](int, int n) { return static_cast<long long>(n) - 2; },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("star-unary", m, n, fx);
                         Dfa out = dfa_star_prefix_free(std::get<Dfa>(w[0]));
                         return Measured{out.state_count(), minimize(out).state_count()};
                     },
                     nullptr,
                     [](int, int n) { return static_cast<long long>(n); }});

        v.push_back({"reversal", "reversal-ternary", false, true, true,
                     [](int, int n) { return (1LL << (n - 2)) + 1; },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("reversal-ternary", m, n, fx);
                         const Dfa& d = std::get<Dfa>(w[0]);
                         Dfa subset = determinize(dfa_reverse(d));
                         return Measured{subset.state_count(), minimize(subset).state_count()};
                     },
                     nullptr});

        v.push_back({"nfa-to-dfa", "nfa-to-dfa-ternary", false, true, true,
                     [](int, int n) { return (1LL << (n - 1)) + 1; },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("nfa-to-dfa-ternary", m, n, fx);
                         const Nfa& a = std::get<Nfa>(w[0]);
                         Dfa subset = determinize(a, MergeFinals::Yes);
                         return Measured{subset.state_count(), minimize(subset).state_count()};
                     },
                     nullptr});

        v.push_back({"cyclic-shift", "cyclic-shift-full", false, true, false,
                     [](int, int n) {
                         long long f = 1;
                         for (int i = 0; i < n - 2; ++i) f *= 2 * n - 3;
                         return f;
                     },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("cyclic-shift-full", m, n, fx);
                         Dfa out = dfa_cyclic_shift(std::get<Dfa>(w[0]));
                         return Measured{out.state_count(), minimize(out).state_count()};
                     },
                     nullptr});

        v.push_back({"nfa-union", "nfa-union", true, true, true,
                     [](int m, int n) { return static_cast<long long>(m) + n; },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("nfa-union", m, n, fx);
                         Nfa out = nfa_union(std::get<Nfa>(w[0]), std::get<Nfa>(w[1]));
                         FoolingCertificate cert = union_fooling_fixture(m, n);
                         FoolingCheck check = verify_extended_fooling(
                             cert.extension->a, cert.extension->b, cert.extension->u,
                             cert.extension->v, out);
                         return Measured{out.state_count(), certified_bound(check)};
                     },
                     nullptr});

        v.push_back({"nfa-intersection", "nfa-intersection-binary", true, true, true,
                     [](int m, int n) {
                         return static_cast<long long>(m) * n - (m + n) + 2;
                     },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("nfa-intersection-binary", m, n, fx);
                         const Nfa& k = std::get<Nfa>(w[0]);
                         const Nfa& l = std::get<Nfa>(w[1]);
                         Nfa out = nfa_intersection(k, l);
                         std::vector<FoolingPair> pairs = intersection_fooling_pairs(k, l);
                         FoolingCheck check = verify_fooling_set(pairs, out);
                         return Measured{out.state_count(), certified_bound(check)};
                     },
                     nullptr});

        v.push_back({"nfa-concat", "nfa-concat-unary", true, true, true,
                     [](int m, int n) { return static_cast<long long>(m) + n - 1; },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("nfa-concat-unary", m, n, fx);
                         Nfa out = nfa_concat(std::get<Nfa>(w[0]), std::get<Nfa>(w[1]));
                         FoolingCheck check = verify_fooling_set(unary_fooling_fixture(m + n - 2), out);
                         return Measured{out.state_count(), certified_bound(check)};
                     },
                     nullptr});

        v.push_back({"nfa-reverse", "nfa-reverse-unary", false, true, true,
                     [](int, int n) { return static_cast<long long>(n); },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("nfa-reverse-unary", m, n, fx);
                         Nfa out = nfa_reverse(std::get<Nfa>(w[0]));
                         FoolingCheck check = verify_fooling_set(unary_fooling_fixture(n - 1), out);
                         return Measured{out.state_count(), certified_bound(check)};
                     },
                     nullptr});

        v.push_back({"nfa-star", "nfa-star", false, true, true,
                     [](int, int n) { return static_cast<long long>(n); },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("nfa-star", m, n, fx);
                         Nfa out = nfa_star(std::get<Nfa>(w[0]));
                         FoolingCheck check = verify_fooling_set(star_fooling_fixture(n), out);
                         return Measured{out.state_count(), certified_bound(check)};
                     },
                     nullptr});

        v.push_back({"nfa-cyclic-shift", "nfa-star", false, true, false,
                     [](int, int n) { return 2LL * n * n - 4 * n + 3; },
                     [](int m, int n, const std::string& fx) {
                         std::vector<Automaton> w = make_witness("nfa-star", m, n, fx);
                         Nfa out = nfa_cyclic_shift(std::get<Nfa>(w[0]));
                         std::vector<FoolingPair> pairs = greedy_fooling_pairs(out, 2 * n, 600);
                         FoolingCheck check = verify_fooling_set(pairs, out);
                         return Measured{out.state_count(), certified_bound(check)};
                     },
                     nullptr});

        return v;
    }();
    return specs;
}

BoundRow evaluate_row(const OpSpec& spec, int m, int n, const std::string& fixtures) {
    BoundRow row;
    row.op = spec.id;
    row.m = spec.uses_m ? m : 0;
    row.n = spec.uses_n ? n : 0;
    row.family = spec.family;
    row.formula = spec.formula(m, n);
    if (spec.out_of_domain && spec.out_of_domain(m, n)) {
        row.status = BoundRow::Status::OutOfDomain;
        row.note = "paper claims tightness outside this parameter";
        return row;
    }
    try {
        Measured got = spec.run(m, n, fixtures);
        row.constructed = got.constructed;
        row.minimized = got.minimized;
        long long cap = spec.construction_bound ? spec.construction_bound(m, n) : row.formula;
        if (got.constructed > cap) {
            row.status = BoundRow::Status::UpperViolated;
            row.note = "construction exceeded its bound";
        } else if (got.minimized == row.formula) {
            row.status = BoundRow::Status::Tight;
        } else {
            row.status = spec.expect_tight ? BoundRow::Status::Untight : BoundRow::Status::UpperOk;
        }
        return row;
    } catch (const UnavailableError& e) {
        row.status = BoundRow::Status::Unavailable;
        row.note = e.what();
    } catch (const DomainError& e) {
        row.status = BoundRow::Status::OutOfDomain;
        row.note = e.what();
    }
    return row;
}

} // namespace

const std::vector<std::string>& bound_operations() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& s : op_specs()) v.push_back(s.id);
        return v;
    }();
    return ids;
}

int BoundReport::exit_code() const {
    bool unavailable = false;
    for (const auto& row : rows) {
        if (row.status == BoundRow::Status::Untight ||
            row.status == BoundRow::Status::UpperViolated)
            return 2;
        unavailable = unavailable || row.status == BoundRow::Status::Unavailable;
    }
    return unavailable ? 3 : 0;
}

BoundReport verify_bounds(const BoundOptions& options) {
    std::vector<const OpSpec*> selected;
    if (options.ops.empty()) {
        for (const auto& s : op_specs()) selected.push_back(&s);
    } else {
        for (const std::string& id : options.ops) {
            const OpSpec* found = nullptr;
            for (const auto& s : op_specs())
                if (s.id == id) found = &s;
            if (!found) throw DomainError("verify-bounds: unknown operation '" + id + "'");
            selected.push_back(found);
        }
    }

    struct Cell {
        const OpSpec* spec;
        int m, n;
    };
    std::vector<Cell> cells;
    for (const OpSpec* spec : selected) {
        if (spec->uses_m && spec->uses_n) {
            for (int m = options.m_lo; m <= options.m_hi; ++m)
                for (int n = options.n_lo; n <= options.n_hi; ++n) cells.push_back({spec, m, n});
        } else {
            for (int n = options.n_lo; n <= options.n_hi; ++n) cells.push_back({spec, 0, n});
        }
    }

    BoundReport report;
    report.rows.resize(cells.size());
    // Rows are independent; the report order is fixed by the cell list, not
    // by completion order.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.workers > 0 ? options.workers : 1)
#endif
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
        const Cell& cell = cells[static_cast<size_t>(i)];
        report.rows[static_cast<size_t>(i)] =
            evaluate_row(*cell.spec, cell.m, cell.n, options.fixtures_dir);
    }
    return report;
}

const char* to_string(BoundRow::Status status) {
    switch (status) {
        case BoundRow::Status::Tight: return "true";
        case BoundRow::Status::Untight: return "false";
        case BoundRow::Status::UpperOk: return "upper-ok";
        case BoundRow::Status::UpperViolated: return "upper-violated";
        case BoundRow::Status::Unavailable: return "unavailable";
        case BoundRow::Status::OutOfDomain: return "out-of-domain";
    }
    return "?";
}

std::string render_report(const BoundReport& report, ReportFormat format) {
    std::ostringstream out;
    auto cell = [](long long v) { return v < 0 ? std::string() : std::to_string(v); };
    auto param = [](int v) { return v == 0 ? std::string() : std::to_string(v); };
    switch (format) {
        case ReportFormat::Csv: {
            out << "operation,m,n,constructed,minimized,formula,tight,family\n";
            for (const auto& r : report.rows)
                out << r.op << "," << param(r.m) << "," << param(r.n) << "," << cell(r.constructed)
                    << "," << cell(r.minimized) << "," << cell(r.formula) << ","
                    << to_string(r.status) << "," << r.family << "\n";
            break;
        }
        case ReportFormat::Json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : report.rows) {
                nlohmann::json j;
                j["operation"] = r.op;
                if (r.m > 0) j["m"] = r.m;
                if (r.n > 0) j["n"] = r.n;
                if (r.constructed >= 0) j["constructed"] = r.constructed;
                if (r.minimized >= 0) j["minimized"] = r.minimized;
                j["formula"] = r.formula;
                j["tight"] = to_string(r.status);
                j["family"] = r.family;
                if (!r.note.empty()) j["note"] = r.note;
                rows.push_back(j);
            }
            out << rows.dump(2) << "\n";
            break;
        }
        case ReportFormat::Md: {
            out << "| operation | m | n | constructed | minimized | formula | tight | family |\n";
            out << "|---|---|---|---|---|---|---|---|\n";
            for (const auto& r : report.rows)
                out << "| " << r.op << " | " << param(r.m) << " | " << param(r.n) << " | "
                    << cell(r.constructed) << " | " << cell(r.minimized) << " | " << cell(r.formula)
                    << " | " << to_string(r.status) << " | " << r.family << " |\n";
            break;
        }
    }
    return out.str();
}

} // namespace pfx
