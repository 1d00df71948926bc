// conjecture: command-line front end for .trigc datasets and .interp
// interpretation files.
//
// Exit codes: 0 success/true, 1 violation/false, 2 usage or I/O error,
// 3 internal limit (exhaustion, oracle bound, oracle disagreement).

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "conjectures/canonical.hpp"
#include "conjectures/collapse.hpp"
#include "conjectures/conjecture.hpp"
#include "conjectures/entailment.hpp"
#include "conjectures/error.hpp"
#include "conjectures/interpretation.hpp"
#include "conjectures/parse.hpp"
#include "conjectures/satisfaction.hpp"
#include "conjectures/serialize.hpp"

namespace {

using namespace conjectures;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

int exit_code_for(const ConjError& e) {
    switch (e.code()) {
    case Errc::Io:
    case Errc::UnmappedTerm:
    case Errc::InvalidInterpretation:
        return kUsage;
    case Errc::TooLarge:
    case Errc::Exhaustion:
        return kLimit;
    default:
        return kViolation;
    }
}

void print_report(const ValidationReport& report) {
    for (const auto& v : report.violations) {
        std::cerr << "violation";
        if (v.span) std::cerr << " at " << v.span->line << ":" << v.span->column;
        std::cerr << " [" << v.code << "] in <" << v.graph.iri
                  << ">: " << v.message << "\n";
    }
}

void print_trace(const Verdict& v) {
    for (const auto& e : v.trace)
        std::cout << (e.ok ? "  ok   " : "  FAIL ") << e.clause << "  "
                  << e.subject << "\n";
}

// Expands a graph argument: plain prefixed-name-or-IRI resolved against
// the dataset's prefix table.
GraphName resolve_graph_arg(const Dataset& d, const std::string& arg) {
    if (!arg.empty() && arg.front() == '<' && arg.back() == '>')
        return graph_name(arg.substr(1, arg.size() - 2));
    auto colon = arg.find(':');
    if (colon != std::string::npos) {
        auto it = d.prefixes.find(arg.substr(0, colon));
        if (it != d.prefixes.end())
            return graph_name(it->second + arg.substr(colon + 1));
    }
    return graph_name(arg);
}

ValidationReport validate_all(const Dataset& d, bool lenient) {
    ValidationReport report;
    ValidationOptions opts{lenient};
    for (const auto& g : d.named_graphs) {
        ValidationReport r;
        if (g.kind == GraphKind::Conjectural)
            r = validate_conjectural_graph(g, d, opts);
        else if (g.kind == GraphKind::Collapse)
            r = validate_collapse_graph(g, d);
        for (auto& v : r.violations) report.violations.push_back(std::move(v));
    }
    return report;
}

int cmd_validate(const std::string& path, bool lenient) {
    Dataset d = parse_file(path);
    ValidationReport report = validate_all(d, lenient);
    print_report(report);
    return report.clean() ? kOk : kViolation;
}

int cmd_weaken(const std::string& path) {
    std::cout << serialize(parse_file(path));
    return kOk;
}

int cmd_collapse(const std::string& path, const std::string& graph,
                 const std::string& as) {
    Dataset d = parse_file(path);
    GraphName target = resolve_graph_arg(d, graph);
    GraphName name;
    if (!as.empty()) {
        name = resolve_graph_arg(d, as);
    } else {
        // :attr1 collapses into :collapseOfattr1.
        auto pos = target.iri.find_last_of("#/");
        std::string ns =
            pos == std::string::npos ? "" : target.iri.substr(0, pos + 1);
        std::string local =
            pos == std::string::npos ? target.iri : target.iri.substr(pos + 1);
        name = graph_name(ns + "collapseOf" + local);
    }
    std::cout << serialize(collapse_conjecture(target, d, name));
    return kOk;
}

int cmd_cascade(const std::string& path) {
    std::cout << serialize(cascade(parse_file(path)));
    return kOk;
}

int cmd_check_model(const std::string& data_path,
                    const std::string& interp_path, bool lenient) {
    Dataset d = parse_file(data_path);
    Interpretation i = parse_interp_file(interp_path, d.prefixes);
    SatisfyOptions opts;
    opts.require_conjform = !lenient;
    Verdict v = satisfies_dataset(d, i, opts);
    print_trace(v);
    std::cout << (v.value ? "satisfied" : "not satisfied") << "\n";
    return v.value ? kOk : kViolation;
}

int cmd_find_model(const std::string& path, bool lenient) {
    Dataset d = parse_file(path);
    ValidationReport report = validate_all(d, lenient);
    if (!report.clean()) {
        print_report(report);
        return kViolation;
    }
    std::cout << serialize_interp(canonical_interpretation(d), d.prefixes);
    return kOk;
}

int cmd_entails(const std::string& e_path, const std::string& g_path,
                bool rename, int oracle_domain) {
    Dataset e = parse_file(e_path);
    Dataset g = parse_file(g_path);
    bool result = entails(e, g, EntailOptions{rename});
    if (oracle_domain > 0) {
        bool expected = brute_force_entails(e, g, oracle_domain);
        if (expected != result) {
            std::cerr << "oracle disagreement: entails says "
                      << (result ? "yes" : "no") << ", oracle says "
                      << (expected ? "yes" : "no") << "\n";
            return kLimit;
        }
    }
    std::cerr << (result ? "entailed" : "not entailed") << "\n";
    return result ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjectural RDF datasets: parse, transform and check"};
    app.require_subcommand(1);

    std::string path, second, graph, as;
    bool lenient = false, rename = false;
    int oracle = 0;

    auto* validate =
        app.add_subcommand("validate", "check conjectural and collapse graphs");
    validate->add_option("file", path)->required();
    validate->add_flag("--lenient", lenient,
                       "allow plain triples inside conjectural graphs");

    auto* weaken =
        app.add_subcommand("weaken", "emit the weak form of a dataset");
    weaken->add_option("file", path)->required();

    auto* collapse =
        app.add_subcommand("collapse", "collapse a conjectural graph");
    collapse->add_option("file", path)->required();
    collapse->add_option("--graph", graph, "conjectural graph to collapse")
        ->required();
    collapse->add_option("--as", as, "name of the new collapse graph");

    auto* casc = app.add_subcommand("cascade", "apply cascading collapses");
    casc->add_option("file", path)->required();

    auto* check = app.add_subcommand(
        "check-model", "check a dataset against an interpretation");
    check->add_option("data", path)->required();
    check->add_option("interp", second)->required();
    check->add_flag("--lenient", lenient,
                    "drop the CONJFORM condition of the conjectural clause");

    auto* find =
        app.add_subcommand("find-model", "print a model of the dataset");
    find->add_option("file", path)->required();
    find->add_flag("--lenient", lenient,
                   "allow plain triples inside conjectural graphs");

    auto* ent = app.add_subcommand("entails",
                                   "does the first dataset entail the second");
    ent->add_option("e", path)->required();
    ent->add_option("g", second)->required();
    ent->add_flag("--rename-conjectural", rename,
                  "match conjectural predicates up to injective renaming");
    ent->add_option("--oracle", oracle,
                    "cross-check with the brute-force oracle up to this "
                    "domain size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(path, lenient);
        if (weaken->parsed()) return cmd_weaken(path);
        if (collapse->parsed()) return cmd_collapse(path, graph, as);
        if (casc->parsed()) return cmd_cascade(path);
        if (check->parsed()) return cmd_check_model(path, second, lenient);
        if (find->parsed()) return cmd_find_model(path, lenient);
        if (ent->parsed()) return cmd_entails(path, second, rename, oracle);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConjError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kUsage;
}
