// pfxcomplex: construct, measure, search, and report on the state complexity
// of operations over prefix-free regular languages.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfx/bounds.hpp"
#include "pfx/complexity.hpp"
#include "pfx/determinize.hpp"
#include "pfx/dfa_ops.hpp"
#include "pfx/errors.hpp"
#include "pfx/io.hpp"
#include "pfx/minimize.hpp"
#include "pfx/nfa_ops.hpp"
#include "pfx/prefix_free.hpp"
#include "pfx/search.hpp"
#include "pfx/witnesses.hpp"

namespace {

using namespace pfx;

struct GlobalOptions {
    std::string fixtures = "fixtures";
    std::string format = "csv";
    int workers = 0;
    long long budget = 10'000'000;
    long long samples = 3000;
    uint64_t seed = 1;
};

ReportFormat parse_format(const std::string& f) {
    if (f == "csv") return ReportFormat::Csv;
    if (f == "json") return ReportFormat::Json;
    if (f == "md") return ReportFormat::Md;
    throw DomainError("unknown format '" + f + "' (expected csv, json, or md)");
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

SearchConfig search_config(const GlobalOptions& g) {
    SearchConfig c;
    c.budget = g.budget;
    c.samples = g.samples;
    c.workers = g.workers;
    c.seed = g.seed;
    return c;
}

void ensure_fixtures_dir(const std::string& dir) {
    std::filesystem::create_directories(dir);
}

std::string write_outcome(const SearchOutcome& outcome, const std::string& dir,
                          const std::string& slot, const std::vector<std::string>& witness_files) {
    nlohmann::json j;
    j["best"] = outcome.best;
    j["target"] = outcome.target;
    j["exhaustive"] = outcome.exhaustive;
    if (outcome.seed) j["seed"] = *outcome.seed;
    j["examined"] = outcome.examined;
    j["witnesses"] = witness_files;
    const std::string path = dir + "/" + slot + ".outcome.json";
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    return path;
}

void print_outcome(const SearchOutcome& outcome, const std::string& label) {
    std::cout << label << ": best=" << outcome.best << " target=" << outcome.target
              << (outcome.met_target() ? " (met)" : " (not met)")
              << " exhaustive=" << (outcome.exhaustive ? "yes" : "no")
              << " examined=" << outcome.examined;
    if (outcome.seed) std::cout << " seed=" << *outcome.seed;
    std::cout << "\n";
}

int cmd_verify_bounds(const GlobalOptions& g, const std::string& ops_csv,
                      const std::string& m_range, const std::string& n_range) {
    BoundOptions opt;
    opt.fixtures_dir = g.fixtures;
    opt.workers = g.workers;
    if (!ops_csv.empty()) {
        std::stringstream ss(ops_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) opt.ops.push_back(item);
    }
    std::tie(opt.m_lo, opt.m_hi) = parse_range(m_range);
    std::tie(opt.n_lo, opt.n_hi) = parse_range(n_range);
    BoundReport report = verify_bounds(opt);
    std::cout << render_report(report, parse_format(g.format));
    return report.exit_code();
}

Automaton load(const std::string& path) { return read_automaton(path); }

int cmd_op(const GlobalOptions& g, const std::string& name, const std::vector<std::string>& inputs,
           const std::string& output) {
    (void)g;
    auto need = [&](size_t count) {
        if (inputs.size() != count)
            throw DomainError("op " + name + " expects " + std::to_string(count) + " input file(s)");
    };
    Automaton result = [&]() -> Automaton {
        auto as_dfa = [](const Automaton& a) {
            if (!std::holds_alternative<Dfa>(a))
                throw DomainError("this operation needs dfa inputs (file type \"dfa\")");
            return std::get<Dfa>(a);
        };
        auto as_nfa = [](const Automaton& a) {
            if (!std::holds_alternative<Nfa>(a))
                throw DomainError("this operation needs nfa inputs (file type \"nfa\")");
            return std::get<Nfa>(a);
        };
        if (name == "union" || name == "intersection" || name == "symmetric-difference" ||
            name == "difference") {
            need(2);
            Automaton a = load(inputs[0]), b = load(inputs[1]);
            if (std::holds_alternative<Dfa>(a)) {
                BoolOp op = name == "union"          ? BoolOp::Union
                            : name == "intersection" ? BoolOp::Intersection
                            : name == "difference"   ? BoolOp::Difference
                                                     : BoolOp::SymmetricDifference;
                return dfa_bool(as_dfa(a), as_dfa(b), op);
            }
            if (name == "union") return nfa_union(as_nfa(a), as_nfa(b));
            if (name == "intersection") return nfa_intersection(as_nfa(a), as_nfa(b));
            if (name == "difference") return nfa_difference(as_nfa(a), as_nfa(b));
            throw DomainError("symmetric-difference is a dfa-only operation");
        }
        if (name == "concat") {
            need(2);
            Automaton a = load(inputs[0]), b = load(inputs[1]);
            if (std::holds_alternative<Dfa>(a))
                return dfa_concat_prefix_free(as_dfa(a), as_dfa(b));
            return nfa_concat(as_nfa(a), as_nfa(b));
        }
        need(1);
        Automaton a = load(inputs[0]);
        if (name == "star")
            return std::holds_alternative<Dfa>(a) ? Automaton(dfa_star_prefix_free(as_dfa(a)))
                                                  : Automaton(nfa_star(as_nfa(a)));
        if (name == "reverse")
            return std::holds_alternative<Dfa>(a) ? Automaton(dfa_reverse(as_dfa(a)))
                                                  : Automaton(nfa_reverse(as_nfa(a)));
        if (name == "cyclic-shift")
            return std::holds_alternative<Dfa>(a) ? Automaton(dfa_cyclic_shift(as_dfa(a)))
                                                  : Automaton(nfa_cyclic_shift(as_nfa(a)));
        if (name == "complement") return nfa_complement_prefix_free(as_nfa(a));
        if (name == "determinize") return determinize(as_nfa(a));
        if (name == "determinize-merge") return determinize(as_nfa(a), MergeFinals::Yes);
        if (name == "minimize") return minimize(as_dfa(a));
        throw DomainError("unknown operation '" + name + "'");
    }();
    std::cout << "states=" << automaton_states(result) << "\n";
    if (!output.empty()) write_automaton(result, output);
    return 0;
}

int cmd_measure(const GlobalOptions& g, const std::string& input, int exact_cap) {
    Automaton a = load(input);
    BruteforceConfig bc;
    bc.budget = g.budget;
    bc.workers = g.workers;
    ComplexityResult r = std::holds_alternative<Dfa>(a)
                             ? measure(std::get<Dfa>(a), exact_cap, bc)
                             : measure(std::get<Nfa>(a), exact_cap, bc);
    bool pf = std::holds_alternative<Dfa>(a) ? is_prefix_free(std::get<Dfa>(a))
                                             : is_prefix_free(std::get<Nfa>(a));
    if (g.format == "json") {
        nlohmann::json j;
        j["sc"] = r.sc;
        j["nsc_lower"] = r.nsc_lower;
        j["nsc_upper"] = r.nsc_upper;
        if (r.nsc_exact) j["nsc_exact"] = *r.nsc_exact;
        j["prefix_free"] = pf;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sc=" << r.sc << " nsc_lower=" << r.nsc_lower << " nsc_upper=" << r.nsc_upper;
        if (r.nsc_exact) std::cout << " nsc_exact=" << *r.nsc_exact;
        std::cout << " prefix_free=" << (pf ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_fooling(const std::string& cert_path, const std::string& lang_path) {
    FoolingCertificate cert = read_certificate(cert_path);
    Automaton lang = load(lang_path);
    FoolingCheck check = verify_certificate(
        cert, [&](const std::string& w) { return automaton_accepts(lang, w); });
    if (check.ok) {
        std::cout << "valid: certified nsc >= " << check.bound << "\n";
        return 0;
    }
    std::cout << "invalid: " << check.detail << "\n";
    return 1;
}

int cmd_search(const GlobalOptions& g, const std::string& slot, int m, int n, int k, bool sampled,
               long long target_override) {
    ensure_fixtures_dir(g.fixtures);
    SearchConfig cfg = search_config(g);
    (void)sampled;

    auto persist = [&](const SearchOutcome& outcome, const std::string& family_id,
                       int fm, int fn, bool write_witness) {
        std::vector<std::string> files;
        if (write_witness && !outcome.witnesses.empty()) {
            const WitnessFamily& fam = witness_family(family_id);
            std::string path = g.fixtures + "/" + fixture_filename(fam, fm, fn);
            write_fixture(outcome.witnesses, path);
            files.push_back(path);
        }
        std::string tag = family_id + "-m" + std::to_string(fm) + "-n" + std::to_string(fn);
        write_outcome(outcome, g.fixtures, tag, files);
        return files;
    };

    if (slot == "intersection-dfa") {
        SearchOutcome outcome = search_intersection_pair(m, n, cfg);
        print_outcome(outcome, slot);
        persist(outcome, "intersection-binary-dfa", m, n, outcome.met_target());
        return outcome.met_target() ? 0 : 2;
    }
    if (slot == "reversal-base") {
        SearchOutcome outcome = search_reversal_base(k, cfg);
        print_outcome(outcome, slot);
        persist(outcome, "reversal-binary-base", 0, k, outcome.met_target());
        return outcome.met_target() ? 0 : 2;
    }
    if (slot == "reversal-max") {
        SearchOutcome outcome = search_reversal_binary_max(n, cfg);
        print_outcome(outcome, slot);
        std::string tag = "reversal-binary-max-n" + std::to_string(n);
        write_outcome(outcome, g.fixtures, tag, {});
        return 0;
    }
    if (slot == "nfa-to-dfa-max") {
        SearchOutcome outcome = search_nfa_to_dfa_binary_max(n, cfg);
        print_outcome(outcome, slot);
        write_outcome(outcome, g.fixtures, "nfa-to-dfa-binary-max-n" + std::to_string(n), {});
        return 0;
    }
    if (slot == "cyclic-shift-template") {
        TemplateDfa tmpl = cyclic_shift_partial_witness(n);
        long long target = target_override;
        if (target <= 0) {
            target = 1;
            for (int i = 0; i < n - 2; ++i) target *= 2 * n - 3;
        }
        SearchOutcome outcome = fill_template_search(tmpl, target, cfg);
        print_outcome(outcome, slot);
        persist(outcome, "cyclic-shift-full", 0, n, !outcome.witnesses.empty());
        return 0; // best-found is recorded either way
    }
    if (slot == "cyclic-shift-bound") {
        SearchOutcome outcome = search_cyclic_shift_bound(n, k > 0 ? k : 2, cfg);
        print_outcome(outcome, slot);
        write_outcome(outcome, g.fixtures,
                      "cyclic-shift-bound-n" + std::to_string(n) + "-k" + std::to_string(k), {});
        return outcome.best <= outcome.target ? 0 : 2;
    }
    if (slot == "nfa-cyclic-shift") {
        SearchOutcome outcome = search_nfa_cyclic_shift(n, cfg);
        print_outcome(outcome, slot);
        persist(outcome, "nfa-cyclic-shift-binary", 0, n, !outcome.witnesses.empty());
        return 0;
    }
    if (slot == "complement-base") {
        SearchOutcome outcome = search_complement_base(n, cfg);
        print_outcome(outcome, slot);
        persist(outcome, "nfa-complement-base", 0, n, outcome.met_target());
        return outcome.met_target() ? 0 : 2;
    }
    throw DomainError("unknown search slot '" + slot + "'");
}

int cmd_fixtures(const GlobalOptions& g, bool generate, const std::string& m_range,
                 const std::string& n_range) {
    ensure_fixtures_dir(g.fixtures);
    auto [m_lo, m_hi] = parse_range(m_range);
    auto [n_lo, n_hi] = parse_range(n_range);
    if (generate) {
        int written = 0;
        for (const WitnessFamily& fam : witness_families()) {
            if (!fam.generate) continue;
            for (int m = fam.uses_m ? m_lo : 0; m <= (fam.uses_m ? m_hi : 0); ++m)
                for (int n = fam.uses_n ? n_lo : 0; n <= (fam.uses_n ? n_hi : 0); ++n) {
                    if (!fam.in_domain(m, n)) continue;
                    std::vector<Automaton> machines = fam.generate(m, n);
                    write_fixture(machines, g.fixtures + "/" + fixture_filename(fam, m, n));
                    ++written;
                }
        }
        std::cout << "wrote " << written << " fixture files to " << g.fixtures << "\n";
        return 0;
    }
    // Status listing.
    for (const WitnessFamily& fam : witness_families()) {
        int present = 0;
        for (const auto& entry : std::filesystem::directory_iterator(g.fixtures)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind(fam.id + "-m", 0) == 0 && name.find(".outcome.") == std::string::npos)
                ++present;
        }
        const char* prov = fam.provenance == Provenance::ClosedForm    ? "closed-form"
                           : fam.provenance == Provenance::Reconstructed ? "reconstructed"
                                                                         : "searched";
        std::cout << fam.id << " [" << prov << ", arity " << fam.arity << ", domain "
                  << fam.domain_note << "] fixtures: " << present;
        if (!fam.generate && !fam.search_command.empty())
            std::cout << " (populate: " << fam.search_command << ")";
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-complexity workbench for operations on prefix-free regular languages"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--fixtures", g.fixtures, "fixture directory")->capture_default_str();
    app.add_option("--format", g.format, "output format: csv, json, md")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--budget", g.budget, "max machines examined by searches")->capture_default_str();
    app.add_option("--samples", g.samples, "samples drawn by sampled searches")->capture_default_str();
    app.add_option("--seed", g.seed, "random seed for sampled searches")->capture_default_str();

    auto* verify = app.add_subcommand("verify-bounds", "sweep witness grids against the formulas");
    std::string ops_csv, m_range = "3..5", n_range = "3..5";
    verify->add_option("--ops", ops_csv, "comma-separated operation ids (default: all)");
    verify->add_option("--m-range", m_range, "m range, e.g. 3..8")->capture_default_str();
    verify->add_option("--n-range", n_range, "n range, e.g. 3..8")->capture_default_str();

    auto* op = app.add_subcommand("op", "apply one construction to automaton files");
    std::string op_name, op_output;
    std::vector<std::string> op_inputs;
    op->add_option("name", op_name, "operation id")->required();
    op->add_option("inputs", op_inputs, "input automaton files")->required();
    op->add_option("-o,--output", op_output, "write the result here");

    auto* measure_cmd = app.add_subcommand("measure", "state complexity of an automaton file");
    std::string measure_input;
    int exact_cap = 0;
    measure_cmd->add_option("input", measure_input, "automaton file")->required();
    measure_cmd->add_option("--exact-cap", exact_cap, "run the brute-force nsc oracle up to this size");

    auto* fooling = app.add_subcommand("fooling", "validate a fooling certificate against a language");
    std::string cert_path, lang_path;
    fooling->add_option("certificate", cert_path, "certificate JSON file")->required();
    fooling->add_option("language", lang_path, "automaton file")->required();

    auto* search = app.add_subcommand("search", "run a witness/impossibility search");
    std::string slot;
    int sm = 3, sn = 3, sk = 0;
    bool sampled = false;
    long long starget = 0;
    search->add_option("slot", slot,
                       "one of: intersection-dfa, reversal-base, reversal-max, nfa-to-dfa-max, "
                       "cyclic-shift-template, cyclic-shift-bound, nfa-cyclic-shift, complement-base")
        ->required();
    search->add_option("--m", sm, "left parameter");
    search->add_option("--n", sn, "right parameter");
    search->add_option("--k", sk, "alphabet size or base state count, slot-dependent");
    search->add_flag("--sampled", sampled, "sampled mode (where supported)");
    search->add_option("--target", starget, "override the search target");

    auto* fixtures = app.add_subcommand("fixtures", "generate or list witness fixtures");
    bool generate = false;
    std::string fm_range = "3..8", fn_range = "3..8";
    fixtures->add_flag("--generate", generate, "write closed-form fixtures for the grid");
    fixtures->add_option("--m-range", fm_range, "m range")->capture_default_str();
    fixtures->add_option("--n-range", fn_range, "n range")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify_bounds(g, ops_csv, m_range, n_range);
        if (op->parsed()) return cmd_op(g, op_name, op_inputs, op_output);
        if (measure_cmd->parsed()) return cmd_measure(g, measure_input, exact_cap);
        if (fooling->parsed()) return cmd_fooling(cert_path, lang_path);
        if (search->parsed()) return cmd_search(g, slot, sm, sn, sk, sampled, starget);
        if (fixtures->parsed()) return cmd_fixtures(g, generate, fm_range, fn_range);
    } catch (const pfx::UnavailableError& e) {
        std::cerr << "unavailable: " << e.what() << "\n";
        return 3;
    } catch (const pfx::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 4;
    } catch (const pfx::RejectedInput& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 4;
}
