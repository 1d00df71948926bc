#include "conjectures/dataset.hpp"

#include <algorithm>

namespace conjectures {

const char* graph_kind_name(GraphKind k) {
    switch (k) {
    case GraphKind::Plain: return "plain";
    case GraphKind::Conjectural: return "conjectural";
    case GraphKind::Collapse: return "collapse";
    }
    return "?";
}

bool NamedGraph::contains(const Triple& t) const {
    return std::find(triples.begin(), triples.end(), t) != triples.end();
}

void NamedGraph::add(Triple t, SourceSpan span) {
    if (contains(t)) return;
    triples.push_back(std::move(t));
    spans.push_back(span);
}

const NamedGraph* Dataset::find_graph(const GraphName& name) const {
    for (const auto& g : named_graphs)
        if (g.name == name) return &g;
    return nullptr;
}

NamedGraph* Dataset::find_graph(const GraphName& name) {
    for (auto& g : named_graphs)
        if (g.name == name) return &g;
    return nullptr;
}

bool Dataset::has_graph(const GraphName& name) const {
    return find_graph(name) != nullptr;
}

void Dataset::add_default(Triple t, SourceSpan span) {
    if (std::find(default_graph.begin(), default_graph.end(), t) !=
        default_graph.end())
        return;
    default_graph.push_back(std::move(t));
    default_spans.push_back(span);
}

std::size_t Dataset::triple_count() const {
    std::size_t n = default_graph.size();
    for (const auto& g : named_graphs) n += g.triples.size();
    return n;
}

namespace {

std::set<Triple> as_set(const std::vector<Triple>& v) {
    return std::set<Triple>(v.begin(), v.end());
}

} // namespace

bool operator==(const Dataset& a, const Dataset& b) {
    if (a.prefixes != b.prefixes) return false;
    if (as_set(a.default_graph) != as_set(b.default_graph)) return false;
    if (a.named_graphs.size() != b.named_graphs.size()) return false;
    for (const auto& ga : a.named_graphs) {
        const NamedGraph* gb = b.find_graph(ga.name);
        if (!gb || gb->kind != ga.kind) return false;
        if (as_set(ga.triples) != as_set(gb->triples)) return false;
    }
    return true;
}

void for_each_triple(const Dataset& d,
                     const std::function<void(const GraphName*, const Triple&)>& fn) {
    for (const auto& t : d.default_graph) fn(nullptr, t);
    for (const auto& g : d.named_graphs)
        for (const auto& t : g.triples) fn(&g.name, t);
}

std::set<std::string> conjectural_predicates(const Dataset& d) {
    std::set<std::string> out;
    for_each_triple(d, [&](const GraphName*, const Triple& t) {
        if (t.predicate().is_iri(kIsAConjecturalFormOfIri) && t.subject().is_iri())
            out.insert(t.subject().value());
    });
    return out;
}

bool term_is_conjectural_predicate(const Term& t, const Dataset& d) {
    if (!t.is_iri()) return false;
    bool found = false;
    for_each_triple(d, [&](const GraphName*, const Triple& tr) {
        if (tr.predicate().is_iri(kIsAConjecturalFormOfIri) &&
            tr.subject() == t)
            found = true;
    });
    return found;
}

std::set<std::pair<Term, Term>> conjectural_pairs(const Dataset& d,
                                                  const std::string& cp) {
    std::set<std::pair<Term, Term>> pairs;
    for_each_triple(d, [&](const GraphName*, const Triple& t) {
        if (t.predicate().is_iri(cp) &&
            !t.predicate().is_iri(kIsAConjecturalFormOfIri))
            pairs.insert({t.subject(), t.object()});
    });
    return pairs;
}

void check_dataset_invariants(const Dataset& d) {
    std::set<std::string> names;
    for (const auto& g : d.named_graphs) {
        if (!names.insert(g.name.iri).second)
            throw ConjError(Errc::DuplicateGraphName,
                            "graph <" + g.name.iri + "> declared twice");
    }
    const auto cps = conjectural_predicates(d);
    std::map<std::string, std::pair<Term, Term>> first_pair;
    for_each_triple(d, [&](const GraphName*, const Triple& t) {
        if (!t.predicate().is_iri() ||
            t.predicate().is_iri(kIsAConjecturalFormOfIri))
            return;
        if (!cps.count(t.predicate().value())) return;
        std::pair<Term, Term> pair{t.subject(), t.object()};
        auto [it, fresh] = first_pair.emplace(t.predicate().value(), pair);
        if (!fresh && it->second != pair)
            throw ConjError(Errc::UniquenessViolation,
                            "conjectural predicate <" + t.predicate().value() +
                                "> is used with two distinct "
                                "subject/object pairs");
    });
}

Dataset dataset_merge(const Dataset& a, const Dataset& b) {
    Dataset out = a;
    for (const auto& [label, iri] : b.prefixes) {
        auto it = out.prefixes.find(label);
        if (it == out.prefixes.end()) {
            out.prefixes.emplace(label, iri);
        } else if (it->second != iri) {
            throw ConjError(Errc::PrefixConflict,
                            "prefix '" + label + ":' bound to <" + it->second +
                                "> and <" + iri + ">");
        }
    }
    for (std::size_t i = 0; i < b.default_graph.size(); ++i)
        out.add_default(b.default_graph[i]);
    for (const auto& gb : b.named_graphs) {
        NamedGraph* ga = out.find_graph(gb.name);
        if (!ga) {
            out.named_graphs.push_back(gb);
            continue;
        }
        if (ga->kind != gb.kind)
            throw ConjError(Errc::ConflictingGraphKind,
                            "graph <" + gb.name.iri + "> is " +
                                graph_kind_name(ga->kind) + " in one input and " +
                                graph_kind_name(gb.kind) + " in the other");
        for (const auto& t : gb.triples) ga->add(t);
    }
    check_dataset_invariants(out);
    return out;
}

namespace {

std::set<std::string> blank_labels(const Dataset& d) {
    std::set<std::string> out;
    for_each_triple(d, [&](const GraphName*, const Triple& t) {
        if (t.subject().is_blank()) out.insert(t.subject().value());
        if (t.object().is_blank()) out.insert(t.object().value());
    });
    return out;
}

Term rename_blank(const Term& t, const std::map<std::string, std::string>& m) {
    if (!t.is_blank()) return t;
    return Term::blank(m.at(t.value()));
}

bool equal_under(const Dataset& a, const Dataset& b,
                 const std::map<std::string, std::string>& m) {
    auto rename = [&](const std::vector<Triple>& ts) {
        std::set<Triple> out;
        for (const auto& t : ts)
            out.insert(Triple(rename_blank(t.subject(), m), t.predicate(),
                              rename_blank(t.object(), m)));
        return out;
    };
    if (rename(a.default_graph) != as_set(b.default_graph)) return false;
    for (const auto& ga : a.named_graphs) {
        const NamedGraph* gb = b.find_graph(ga.name);
        if (!gb) return false;
        if (rename(ga.triples) != as_set(gb->triples)) return false;
    }
    return true;
}

} // namespace

bool isomorphic(const Dataset& a, const Dataset& b) {
    if (a.named_graphs.size() != b.named_graphs.size()) return false;
    for (const auto& ga : a.named_graphs) {
        const NamedGraph* gb = b.find_graph(ga.name);
        if (!gb || gb->kind != ga.kind ||
            gb->triples.size() != ga.triples.size())
            return false;
    }
    if (a.default_graph.size() != b.default_graph.size()) return false;

    auto ba = blank_labels(a);
    auto bb = blank_labels(b);
    if (ba.size() != bb.size()) return false;

    std::vector<std::string> from(ba.begin(), ba.end());
    std::vector<std::string> to(bb.begin(), bb.end());
    std::vector<bool> used(to.size(), false);
    std::map<std::string, std::string> m;

    // Corpus graphs carry only a handful of blank nodes, so plain
    // backtracking over label bijections is plenty.
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == from.size()) return equal_under(a, b, m);
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            m[from[i]] = to[j];
            if (search(i + 1)) return true;
            m.erase(from[i]);
            used[j] = false;
        }
        return false;
    };
    return search(0);
}

} // namespace conjectures
