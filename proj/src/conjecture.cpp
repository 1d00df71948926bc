#include "conjectures/conjecture.hpp"

#include <cstdio>

namespace conjectures {

namespace {

std::string local_name(const std::string& iri) {
    auto pos = iri.find_last_of("#/:");
    std::string local = pos == std::string::npos ? iri : iri.substr(pos + 1);
    if (local.empty()) local = "p";
    return local;
}

bool dataset_mentions_iri(const Dataset& d, const std::string& iri) {
    if (d.has_graph(GraphName{iri})) return true;
    bool found = false;
    for_each_triple(d, [&](const GraphName*, const Triple& t) {
        if (t.subject().is_iri(iri) || t.predicate().is_iri(iri) ||
            t.object().is_iri(iri))
            found = true;
    });
    return found;
}

} // namespace

PredicateMinter::PredicateMinter(const Dataset* scope) : scope_(scope) {}

bool PredicateMinter::fresh(const std::string& iri,
                            const std::string& label) const {
    if (minted_iris_.count(iri)) return false;
    if (minted_prefixes_.count(label)) return false;
    if (scope_) {
        if (scope_->prefixes.count(label)) return false;
        if (dataset_mentions_iri(*scope_, iri)) return false;
    }
    return true;
}

std::string PredicateMinter::mint(const std::string& original_predicate_iri) {
    const std::string local = local_name(original_predicate_iri);
    for (;;) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "conj%04u", next_++);
        const std::string label = buf;
        const std::string ns = std::string(kMintNamespaceBase) + label + "#";
        const std::string iri = ns + local;
        if (!fresh(iri, label)) continue;
        minted_prefixes_.emplace(label, ns);
        minted_iris_.insert(iri);
        return iri;
    }
}

bool PredicateMinter::knows_conjectural(const std::string& iri) const {
    if (recorded_cps_.count(iri)) return true;
    if (scope_ && term_is_conjectural_predicate(Term::iri(iri), *scope_))
        return true;
    return false;
}

void PredicateMinter::attach(ConjectureRecord record) {
    recorded_cps_.insert(record.conjectural_predicate);
    records_.push_back(std::move(record));
}

ConjectureResult conjecture_triple(const Triple& t, PredicateMinter& minter,
                                   const GraphName& graph) {
    const std::string& p = t.predicate().value();
    if (minter.knows_conjectural(p))
        throw ConjError(Errc::AlreadyConjectural,
                        "<" + p + "> is already a conjectural predicate; "
                        "nest through graph names instead");

    const std::string cp = minter.mint(p);
    Triple conjectural(t.subject(), Term::iri(cp), t.object());
    Triple annotation(Term::iri(cp), Term::iri(std::string(kIsAConjecturalFormOfIri)),
                      Term::iri(p));
    ConjectureRecord rec{p, cp, t.subject(), t.object(), graph};
    minter.attach(rec);
    return ConjectureResult{std::move(conjectural), std::move(annotation),
                            std::move(rec)};
}

NamedGraph weaken_graph(const GraphName& name,
                        const std::vector<Triple>& triples,
                        PredicateMinter& minter) {
    NamedGraph g{name, GraphKind::Conjectural, {}, {}};
    for (const auto& t : triples) {
        ConjectureResult r = conjecture_triple(t, minter, name);
        g.add(r.conjectural);
        g.add(r.annotation);
    }
    return g;
}

ValidationReport validate_conjectural_graph(const NamedGraph& g,
                                            const Dataset& d,
                                            const ValidationOptions& opts) {
    if (g.kind != GraphKind::Conjectural)
        throw ConjError(Errc::NotConjectural,
                        "<" + g.name.iri + "> is not a conjectural graph");

    ValidationReport report;
    auto span_at = [&](std::size_t i) -> std::optional<SourceSpan> {
        if (i < g.spans.size() && g.spans[i] != SourceSpan{}) return g.spans[i];
        return std::nullopt;
    };

    const auto dataset_cps = conjectural_predicates(d);

    // Conjectural predicates annotated inside this body.
    std::map<std::string, int> body_links;
    std::map<std::string, std::set<std::string>> body_link_targets;
    for (const auto& t : g.triples) {
        if (!t.predicate().is_iri(kIsAConjecturalFormOfIri)) continue;
        if (t.subject().is_iri()) {
            body_links[t.subject().value()]++;
            if (t.object().is_iri())
                body_link_targets[t.subject().value()].insert(t.object().value());
        }
    }

    std::map<std::string, int> uses;
    for (std::size_t i = 0; i < g.triples.size(); ++i) {
        const Triple& t = g.triples[i];
        if (t.predicate().is_iri(kIsAConjecturalFormOfIri)) {
            if (!t.subject().is_iri())
                report.add("conjectural-form-subject", g.name,
                           "isAConjecturalFormOf subject must be an IRI",
                           span_at(i));
            if (!t.object().is_iri())
                report.add("conjectural-form-object", g.name,
                           "isAConjecturalFormOf object must be an IRI",
                           span_at(i));
            continue;
        }
        const std::string& pr = t.predicate().value();
        bool conjectural = body_links.count(pr) || dataset_cps.count(pr);
        if (conjectural) {
            uses[pr]++;
        } else if (!opts.lenient) {
            report.add("non-conjectural-triple", g.name,
                       "triple " + show(t) +
                           " uses neither a conjectural predicate nor "
                           "isAConjecturalFormOf",
                       span_at(i));
        }
    }

    for (const auto& [cp, n] : uses) {
        if (n > 1)
            report.add("conjectural-predicate-reused", g.name,
                       "conjectural predicate <" + cp + "> used in " +
                           std::to_string(n) + " triples of the graph");
        auto it = body_links.find(cp);
        int links = it == body_links.end() ? 0 : it->second;
        if (links == 0)
            report.add("missing-conjectural-form", g.name,
                       "conjectural predicate <" + cp +
                           "> has no isAConjecturalFormOf triple in the graph");
        else if (links > 1)
            report.add("ambiguous-conjectural-form", g.name,
                       "conjectural predicate <" + cp + "> has " +
                           std::to_string(links) +
                           " isAConjecturalFormOf triples");
    }
    return report;
}

std::optional<std::string> conjectural_form_of(const std::string& cp_iri,
                                               const Dataset& d) {
    std::set<std::string> originals;
    for_each_triple(d, [&](const GraphName*, const Triple& t) {
        if (t.predicate().is_iri(kIsAConjecturalFormOfIri) &&
            t.subject().is_iri(cp_iri) && t.object().is_iri())
            originals.insert(t.object().value());
    });
    if (originals.empty()) return std::nullopt;
    if (originals.size() > 1)
        throw ConjError(Errc::AmbiguousForm,
                        "<" + cp_iri + "> is declared a conjectural form of " +
                            std::to_string(originals.size()) +
                            " distinct predicates");
    return *originals.begin();
}

} // namespace conjectures
