#include "conjectures/collapse.hpp"

#include <algorithm>

#include "conjectures/conjecture.hpp"

namespace conjectures {

namespace {

bool is_form_triple(const Triple& t) {
    return t.predicate().is_iri(kIsAConjecturalFormOfIri);
}

bool is_effective_collapse(const Triple& t) {
    return t.predicate().is_iri(kCollapsesIri);
}

Term collapses_term() {
    return Term::iri(std::string(kCollapsesIri));
}

} // namespace

std::vector<std::pair<Triple, Triple>> collapse_pairs(const NamedGraph& g,
                                                      const Dataset& d) {
    std::vector<std::pair<Triple, Triple>> out;
    for (const auto& t : g.triples) {
        if (is_form_triple(t)) continue;
        auto form = conjectural_form_of(t.predicate().value(), d);
        if (!form)
            throw ConjError(Errc::MissingForm,
                            "no isAConjecturalFormOf triple for <" +
                                t.predicate().value() + "> in <" +
                                g.name.iri + ">");
        out.emplace_back(t, Triple(t.subject(), Term::iri(*form), t.object()));
    }
    return out;
}

CollapseRecord collapse_record(const GraphName& collapse_graph,
                               const GraphName& collapsed, const Dataset& d) {
    const NamedGraph* g = d.find_graph(collapsed);
    if (!g || g->kind != GraphKind::Conjectural)
        throw ConjError(Errc::NotConjectural,
                        "<" + collapsed.iri + "> is not a conjectural graph");
    return CollapseRecord{collapse_graph, collapsed, collapse_pairs(*g, d)};
}

Dataset collapse_conjecture(const GraphName& target, const Dataset& d,
                            const GraphName& new_name) {
    const NamedGraph* g = d.find_graph(target);
    if (!g)
        throw ConjError(Errc::NotConjectural,
                        "no graph named <" + target.iri + ">");
    if (g->kind != GraphKind::Conjectural)
        throw ConjError(Errc::NotConjectural,
                        "<" + target.iri + "> is a " +
                            graph_kind_name(g->kind) +
                            " graph, not a conjectural one");
    if (d.has_graph(new_name))
        throw ConjError(Errc::DuplicateGraphName,
                        "graph <" + new_name.iri + "> already exists");

    NamedGraph cot{new_name, GraphKind::Collapse, {}, {}};
    for (const auto& [conjecture, effective] : collapse_pairs(*g, d))
        cot.add(effective);
    cot.add(Triple(new_name.to_term(), collapses_term(), target.to_term()));

    Dataset out = d;
    out.named_graphs.push_back(std::move(cot));
    check_dataset_invariants(out);
    return out;
}

ValidationReport validate_collapse_graph(const NamedGraph& g,
                                         const Dataset& d) {
    if (g.kind != GraphKind::Collapse)
        throw ConjError(Errc::ValidationFailed,
                        "<" + g.name.iri + "> is not a collapse graph");

    ValidationReport report;
    std::vector<const NamedGraph*> targets;
    bool any_collapse_triple = false;
    for (std::size_t i = 0; i < g.triples.size(); ++i) {
        const Triple& t = g.triples[i];
        if (!is_effective_collapse(t)) continue;
        any_collapse_triple = true;
        std::optional<SourceSpan> span;
        if (i < g.spans.size() && g.spans[i] != SourceSpan{}) span = g.spans[i];
        if (!t.object().is_iri()) {
            report.add("collapse-object-not-a-name", g.name,
                       "conj:collapses object must name a graph", span);
            continue;
        }
        const NamedGraph* target = d.find_graph(GraphName{t.object().value()});
        if (!target) {
            report.add("collapse-object-unknown", g.name,
                       "conj:collapses object <" + t.object().value() +
                           "> names no graph in the dataset",
                       span);
            continue;
        }
        if (target->kind != GraphKind::Conjectural) {
            report.add("collapse-object-not-conjectural", g.name,
                       "conj:collapses object <" + target->name.iri +
                           "> is a " + graph_kind_name(target->kind) +
                           " graph, not a conjecture",
                       span);
            continue;
        }
        targets.push_back(target);
    }
    if (!any_collapse_triple)
        report.add("missing-collapse-triple", g.name,
                   "collapse graph carries no conj:collapses triple");

    for (const NamedGraph* target : targets) {
        for (const auto& t : target->triples) {
            if (is_form_triple(t)) continue;
            std::optional<std::string> form;
            try {
                form = conjectural_form_of(t.predicate().value(), d);
            } catch (const ConjError&) {
                form = std::nullopt;
            }
            if (!form) {
                report.add("missing-conjectural-form", g.name,
                           "conjecture " + show(t) + " of <" +
                               target->name.iri +
                               "> has no usable conjectural form");
                continue;
            }
            Triple effective(t.subject(), Term::iri(*form), t.object());
            if (!g.contains(effective))
                report.add("effective-form-absent", g.name,
                           "effective form " + show(effective) +
                               " of conjecture " + show(t) + " in <" +
                               target->name.iri + "> is absent");
        }
    }
    return report;
}

namespace {

struct CascadeState {
    Dataset* out;
    // (collapse graph, target) pairs already processed.
    std::set<std::pair<std::string, std::string>> processed;
};

void collapse_into(CascadeState& st, NamedGraph& g, const std::string& target,
                   std::vector<std::string>& chain) {
    if (std::find(chain.begin(), chain.end(), target) != chain.end())
        throw ConjError(Errc::CycleDetected,
                        "collapsing <" + target +
                            "> ultimately requires collapsing itself");
    if (!st.processed.insert({g.name.iri, target}).second) return;

    const NamedGraph* tg = st.out->find_graph(GraphName{target});
    if (!tg || tg->kind != GraphKind::Conjectural) return;

    chain.push_back(target);
    // Copy: g may be the target's own container sibling and grows below.
    const std::vector<Triple> body = tg->triples;
    for (const auto& t : body) {
        if (is_form_triple(t)) continue;
        auto form = conjectural_form_of(t.predicate().value(), *st.out);
        if (!form)
            throw ConjError(Errc::MissingForm,
                            "cascade: no conjectural form for <" +
                                t.predicate().value() + "> in <" + target +
                                ">");
        Triple effective(t.subject(), Term::iri(*form), t.object());
        g.add(effective);
        if (*form == kCollapsesIri && effective.object().is_iri())
            collapse_into(st, g, effective.object().value(), chain);
    }
    chain.pop_back();
}

} // namespace

Dataset cascade(const Dataset& d) {
    Dataset out = d;
    CascadeState st{&out, {}};
    for (auto& g : out.named_graphs) {
        if (g.kind != GraphKind::Collapse) continue;
        // The triple list grows while cascading; newly effective
        // collapses are picked up by index.
        for (std::size_t i = 0; i < g.triples.size(); ++i) {
            const Triple t = g.triples[i];
            if (!is_effective_collapse(t) || !t.object().is_iri()) continue;
            std::vector<std::string> chain;
            collapse_into(st, g, t.object().value(), chain);
        }
    }
    check_dataset_invariants(out);
    return out;
}

} // namespace conjectures
