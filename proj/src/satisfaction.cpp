#include "conjectures/satisfaction.hpp"

#include <algorithm>
#include <set>

#include "conjectures/conjecture.hpp"
#include "conjectures/error.hpp"

namespace conjectures {

Resource denote(const Term& t, const Interpretation& i,
                const BlankNodeAssignment* a) {
    switch (t.kind()) {
    case TermKind::Iri: {
        auto it = i.is_map.find(t.value());
        if (it == i.is_map.end())
            throw ConjError(Errc::UnmappedTerm,
                            "IS does not map <" + t.value() + ">");
        return it->second;
    }
    case TermKind::Literal: {
        auto it = i.il_map.find(t.value());
        if (it == i.il_map.end())
            throw ConjError(Errc::UnmappedTerm,
                            "IL does not map \"" + t.value() + "\"");
        return it->second;
    }
    case TermKind::Blank: {
        if (a) {
            auto it = a->mapping.find(t.value());
            if (it != a->mapping.end()) return it->second;
        }
        throw ConjError(Errc::UnmappedTerm,
                        "no assignment for blank node _:" + t.value());
    }
    }
    throw ConjError(Errc::UnmappedTerm, "unreachable");
}

namespace {

void note(std::vector<TraceEntry>* trace, const std::string& clause,
          const std::string& subject, bool ok) {
    if (trace) trace->push_back({clause, subject, ok});
}

bool pair_in_iext(const Interpretation& i, const Resource& p,
                  const ResourcePair& pair) {
    auto it = i.iext.find(p);
    return it != i.iext.end() && it->second.count(pair) > 0;
}

bool pair_is_iextc(const Interpretation& i, const Resource& cp,
                   const ResourcePair& pair) {
    auto it = i.iextc.find(cp);
    return it != i.iextc.end() && it->second == pair;
}

bool conjform_contains(const Interpretation& i, const Resource& p,
                       const Resource& cp) {
    auto it = i.conjform.find(p);
    return it != i.conjform.end() && it->second.count(cp) > 0;
}

bool some_conjform(const Interpretation& i, const Resource& cp) {
    for (const auto& p : i.ip)
        if (conjform_contains(i, p, cp)) return true;
    return false;
}

bool eval_triple(const Triple& t, const Interpretation& i,
                 const BlankNodeAssignment* a, const SatisfyOptions& opts,
                 std::vector<TraceEntry>* trace) {
    const std::string subject = show(t);
    const Resource s = denote(t.subject(), i, a);
    const Resource o = denote(t.object(), i, a);

    if (t.predicate().is_iri(kIsAConjecturalFormOfIri)) {
        const Resource link = denote(t.predicate(), i, a);
        bool ok = i.ipc.count(s) && i.ip.count(o) &&
                  conjform_contains(i, o, s) && i.ip.count(link) &&
                  pair_in_iext(i, link, {s, o});
        note(trace, "form-link", subject, ok);
        return ok;
    }

    const Resource p = denote(t.predicate(), i, a);

    if (t.predicate().is_iri(kCollapsesIri)) {
        bool ok = i.ip.count(p) && pair_in_iext(i, p, {s, o});
        note(trace, "collapse-triple", subject, ok);
        return ok;
    }

    if (i.ipc.count(p)) {
        bool ok = pair_is_iextc(i, p, {s, o});
        if (ok && opts.require_conjform) ok = some_conjform(i, p);
        note(trace, "conjectural", subject, ok);
        return ok;
    }
    if (i.ip.count(p)) {
        bool ok = pair_in_iext(i, p, {s, o});
        note(trace, "plain", subject, ok);
        return ok;
    }
    note(trace, "predicate-not-a-property", subject, false);
    return false;
}

std::vector<std::string> blank_labels_of(const std::vector<Triple>& triples) {
    std::set<std::string> labels;
    for (const auto& t : triples) {
        if (t.subject().is_blank()) labels.insert(t.subject().value());
        if (t.object().is_blank()) labels.insert(t.object().value());
    }
    return {labels.begin(), labels.end()};
}

std::string show_assignment(const BlankNodeAssignment& a) {
    std::string s;
    for (const auto& [label, r] : a.mapping) {
        if (!s.empty()) s += ", ";
        s += "A(_:" + label + ") = " + r;
    }
    return s;
}

// Conjunction over the triples, existentially quantified over blank-node
// assignments when the graph has blank nodes. `eval` judges one triple
// under the current assignment.
template <typename Eval>
bool eval_triples(const std::vector<Triple>& triples, const Interpretation& i,
                  const SatisfyOptions& opts, const std::string& where,
                  std::vector<TraceEntry>* trace, Eval&& eval) {
    const auto labels = blank_labels_of(triples);
    if (labels.empty()) {
        bool all = true;
        for (const auto& t : triples)
            if (!eval(t, nullptr, trace)) all = false;
        return all;
    }

    const std::size_t n = i.resource_order.size();
    std::size_t candidates = 1;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        candidates *= n;
        if (candidates > opts.max_assignments)
            throw ConjError(Errc::Exhaustion,
                            "blank-node assignment search space for " + where +
                                " exceeds the cap of " +
                                std::to_string(opts.max_assignments));
    }

    std::vector<std::size_t> odometer(labels.size(), 0);
    for (;;) {
        BlankNodeAssignment a;
        for (std::size_t k = 0; k < labels.size(); ++k)
            a.mapping[labels[k]] = i.resource_order[odometer[k]];
        bool all = true;
        for (const auto& t : triples)
            if (!eval(t, &a, nullptr)) {
                all = false;
                break;
            }
        if (all) {
            note(trace, "blank-assignment", where + ": " + show_assignment(a),
                 true);
            for (const auto& t : triples) eval(t, &a, trace);
            return true;
        }
        // Advance, least-significant label last so the first witness in
        // declaration order wins.
        std::size_t k = labels.size();
        while (k > 0) {
            --k;
            if (++odometer[k] < n) break;
            odometer[k] = 0;
            if (k == 0) {
                note(trace, "blank-assignment",
                     where + ": no assignment of " +
                         std::to_string(labels.size()) + " blank node(s) over " +
                         std::to_string(n) + " resources satisfies the graph",
                     false);
                return false;
            }
        }
    }
}

bool eval_plain_set(const std::vector<Triple>& triples, const Interpretation& i,
                    const SatisfyOptions& opts, const std::string& where,
                    std::vector<TraceEntry>* trace) {
    return eval_triples(triples, i, opts, where, trace,
                        [&](const Triple& t, const BlankNodeAssignment* a,
                            std::vector<TraceEntry>* tr) {
                            return eval_triple(t, i, a, opts, tr);
                        });
}

} // namespace

Verdict satisfies_triple(const Triple& t, const Interpretation& i,
                         const BlankNodeAssignment* a,
                         const SatisfyOptions& opts) {
    Verdict v;
    v.value = eval_triple(t, i, a, opts, &v.trace);
    return v;
}

Verdict satisfies_graph(const NamedGraph& g, const Interpretation& i,
                        const SatisfyOptions& opts) {
    Verdict v;
    v.value = eval_plain_set(g.triples, i, opts, "<" + g.name.iri + ">",
                             &v.trace);
    return v;
}

Verdict satisfies_default_graph(const Dataset& d, const Interpretation& i,
                                const SatisfyOptions& opts) {
    Verdict v;
    v.value = eval_plain_set(d.default_graph, i, opts, "default graph",
                             &v.trace);
    return v;
}

namespace {

struct ConjecturePair {
    Triple conjecture;
    std::optional<std::string> form; // original predicate IRI
};

std::vector<ConjecturePair> conjectures_of(const NamedGraph& g,
                                           const Dataset& d) {
    std::vector<ConjecturePair> out;
    for (const auto& t : g.triples) {
        if (t.predicate().is_iri(kIsAConjecturalFormOfIri)) continue;
        std::optional<std::string> form;
        try {
            form = conjectural_form_of(t.predicate().value(), d);
        } catch (const ConjError&) {
            form = std::nullopt;
        }
        out.push_back({t, std::move(form)});
    }
    return out;
}

// The six collapse-to-reality conditions per conjecture of the graph.
// Leniency does not apply here: the conditions come as a package.
bool eval_collapse_pair(const NamedGraph& conjecture_graph, const Dataset& d,
                        const Interpretation& i,
                        std::vector<TraceEntry>* trace) {
    bool all = true;
    for (const auto& [t, form] : conjectures_of(conjecture_graph, d)) {
        const std::string subject = show(t);
        const Resource cp = denote(t.predicate(), i);
        const Resource s = denote(t.subject(), i);
        const Resource o = denote(t.object(), i);

        bool c1 = i.ipc.count(cp) > 0;
        note(trace, "collapse.cp-in-ipc", subject, c1);

        bool c2 = false, c3 = false, c5 = false;
        if (form) {
            const Resource p = denote(Term::iri(*form), i);
            c2 = i.ip.count(p) > 0;
            c3 = conjform_contains(i, p, cp);
            c5 = pair_in_iext(i, p, {s, o});
        }
        note(trace, "collapse.p-in-ip", subject, c2);
        note(trace, "collapse.conjform", subject, c3);

        bool c4 = pair_is_iextc(i, cp, {s, o});
        note(trace, "collapse.pair-in-iextc", subject, c4);
        note(trace, "collapse.pair-in-iext", subject, c5);

        // collapses(I(s),I(p),I(o)) = (I(s),I(cp),I(o)): cp is the
        // conjectural form of p and is bound to exactly this pair.
        bool c6 = c3 && c4;
        note(trace, "collapse.collapses-relation", subject, c6);

        all = all && c1 && c2 && c3 && c4 && c5 && c6;
    }
    return all;
}

} // namespace

Verdict satisfies_collapse(const GraphName& conjecture,
                           const GraphName& collapse, const Dataset& d,
                           const Interpretation& i,
                           const SatisfyOptions& opts) {
    (void)opts;
    const NamedGraph* cg = d.find_graph(conjecture);
    if (!cg || cg->kind != GraphKind::Conjectural)
        throw ConjError(Errc::NotConjectural,
                        "<" + conjecture.iri + "> is not a conjectural graph");
    if (!d.has_graph(collapse))
        throw ConjError(Errc::NotConjectural,
                        "<" + collapse.iri + "> names no graph");
    Verdict v;
    v.value = eval_collapse_pair(*cg, d, i, &v.trace);
    return v;
}

std::vector<std::pair<GraphName, Verdict>> evaluate_nested(
    const Dataset& d, const Interpretation& i, const SatisfyOptions& opts) {
    // Conjectural graphs and their dependencies: graph names used as
    // subject or object of a conjecture triple.
    std::vector<const NamedGraph*> graphs;
    for (const auto& g : d.named_graphs)
        if (g.kind == GraphKind::Conjectural) graphs.push_back(&g);

    auto conjectural_named = [&](const Term& t) -> const NamedGraph* {
        if (!t.is_iri()) return nullptr;
        const NamedGraph* g = d.find_graph(GraphName{t.value()});
        return g && g->kind == GraphKind::Conjectural ? g : nullptr;
    };

    std::map<std::string, std::vector<std::string>> deps;
    for (const NamedGraph* g : graphs) {
        auto& dd = deps[g->name.iri];
        for (const auto& t : g->triples) {
            if (t.predicate().is_iri(kIsAConjecturalFormOfIri)) continue;
            if (const NamedGraph* s = conjectural_named(t.subject()))
                dd.push_back(s->name.iri);
            if (const NamedGraph* o = conjectural_named(t.object()))
                dd.push_back(o->name.iri);
        }
    }

    // Kahn's algorithm, stable in dataset order.
    std::map<std::string, std::size_t> remaining;
    for (const NamedGraph* g : graphs)
        remaining[g->name.iri] = deps[g->name.iri].size();
    std::vector<const NamedGraph*> order;
    std::set<std::string> done;
    while (order.size() < graphs.size()) {
        bool progressed = false;
        for (const NamedGraph* g : graphs) {
            if (done.count(g->name.iri)) continue;
            std::size_t unmet = 0;
            for (const auto& dep : deps[g->name.iri])
                if (!done.count(dep)) ++unmet;
            if (unmet == 0) {
                order.push_back(g);
                done.insert(g->name.iri);
                progressed = true;
            }
        }
        if (!progressed)
            throw ConjError(Errc::CyclicNesting,
                            "conjecture dependencies form a cycle");
    }

    std::map<std::string, bool> verdicts;
    std::vector<std::pair<GraphName, Verdict>> out;
    for (const NamedGraph* g : order) {
        Verdict v;
        auto eval_nested_triple = [&](const Triple& t,
                                      const BlankNodeAssignment* a,
                                      std::vector<TraceEntry>* tr) {
            if (t.predicate().is_iri(kIsAConjecturalFormOfIri))
                return eval_triple(t, i, a, opts, tr);

            const std::string subject = show(t);
            const NamedGraph* inner_s = conjectural_named(t.subject());
            const NamedGraph* inner_o = conjectural_named(t.object());
            const char* clause = !inner_s && !inner_o ? "nested.base"
                                 : inner_s && inner_o ? "nested.case-so"
                                 : inner_s            ? "nested.case-s"
                                                      : "nested.case-o";
            bool ok = true;
            if (inner_s) ok = ok && verdicts.at(inner_s->name.iri);
            if (inner_o) ok = ok && verdicts.at(inner_o->name.iri);

            const Resource cp = denote(t.predicate(), i, a);
            ok = ok && i.ipc.count(cp) > 0;
            ok = ok && pair_is_iextc(i, cp, {denote(t.subject(), i, a),
                                             denote(t.object(), i, a)});
            if (ok && opts.require_conjform) ok = some_conjform(i, cp);
            note(tr, clause, subject, ok);
            return ok;
        };
        v.value = eval_triples(g->triples, i, opts, "<" + g->name.iri + ">",
                               &v.trace, eval_nested_triple);
        verdicts[g->name.iri] = v.value;
        out.emplace_back(g->name, std::move(v));
    }
    return out;
}

Verdict satisfies_cascade(const Dataset& d, const Interpretation& i,
                          const SatisfyOptions& opts) {
    Verdict v;
    bool all = true;
    for (const auto& g : d.named_graphs) {
        if (g.kind != GraphKind::Collapse) continue;
        for (const auto& t : g.triples) {
            if (!t.predicate().is_iri(kCollapsesIri) || !t.object().is_iri())
                continue;
            const NamedGraph* target =
                d.find_graph(GraphName{t.object().value()});
            if (!target || target->kind != GraphKind::Conjectural) continue;

            const auto pairs = conjectures_of(*target, d);
            const std::string where =
                "<" + g.name.iri + "> collapses <" + target->name.iri + ">";
            const char* block = pairs.size() == 1 ? "cascade.triple-object"
                                                  : "cascade.graph-object";

            bool ok = true;
            for (const auto& [ct, form] : pairs) {
                const Resource cp = denote(ct.predicate(), i);
                const Resource s = denote(ct.subject(), i);
                const Resource o = denote(ct.object(), i);
                bool c = i.ipc.count(cp) && pair_is_iextc(i, cp, {s, o});
                if (form) {
                    const Resource p = denote(Term::iri(*form), i);
                    c = c && i.ip.count(p) && conjform_contains(i, p, cp) &&
                        pair_in_iext(i, p, {s, o});
                } else {
                    c = false;
                }
                note(&v.trace, block, where + ": " + show(ct), c);
                ok = ok && c;
            }

            const Resource cl = denote(t.predicate(), i);
            const Resource eg = denote(t.subject(), i);
            const Resource eo = denote(t.object(), i);
            bool pair_ok =
                i.ip.count(cl) > 0 && pair_in_iext(i, cl, {eg, eo});
            note(&v.trace, "cascade.collapses-pair", where, pair_ok);
            ok = ok && pair_ok;
            all = all && ok;
        }
    }
    (void)opts;
    v.value = all;
    if (v.trace.empty())
        note(&v.trace, "cascade", "no collapse graphs", true);
    return v;
}

Verdict satisfies_dataset(const Dataset& d, const Interpretation& i,
                          const SatisfyOptions& opts) {
    Verdict v;
    bool all = true;

    {
        Verdict dv = satisfies_default_graph(d, i, opts);
        all = all && dv.value;
        for (auto& e : dv.trace) v.trace.push_back(std::move(e));
    }
    for (const auto& g : d.named_graphs) {
        Verdict gv = satisfies_graph(g, i, opts);
        all = all && gv.value;
        for (auto& e : gv.trace) v.trace.push_back(std::move(e));
    }

    // Collapse triples outside collapse graphs pair a collapsing graph
    // with the conjecture it collapses; check the six conditions.
    auto check_pair = [&](const Triple& t) {
        if (!t.predicate().is_iri(kCollapsesIri)) return;
        if (!t.subject().is_iri() || !t.object().is_iri()) return;
        const NamedGraph* target = d.find_graph(GraphName{t.object().value()});
        const NamedGraph* source = d.find_graph(GraphName{t.subject().value()});
        if (!target || target->kind != GraphKind::Conjectural || !source)
            return;
        Verdict cv = satisfies_collapse(target->name, source->name, d, i, opts);
        all = all && cv.value;
        for (auto& e : cv.trace) v.trace.push_back(std::move(e));
    };
    for (const auto& t : d.default_graph) check_pair(t);
    for (const auto& g : d.named_graphs)
        if (g.kind == GraphKind::Plain)
            for (const auto& t : g.triples) check_pair(t);

    {
        Verdict cv = satisfies_cascade(d, i, opts);
        all = all && cv.value;
        for (auto& e : cv.trace) v.trace.push_back(std::move(e));
    }

    v.value = all;
    return v;
}

} // namespace conjectures
