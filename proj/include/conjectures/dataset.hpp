#pragma once
// Datasets: a default graph of ground statements plus named graphs, some
// of which are conjectural or collapse graphs. Triple collections keep
// insertion order for serialization but compare as sets. Values are
// immutable by convention: engines never mutate a dataset in place, they
// return new ones.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conjectures/span.hpp"
#include "conjectures/term.hpp"

namespace conjectures {

enum class GraphKind { Plain, Conjectural, Collapse };

const char* graph_kind_name(GraphKind k);

struct NamedGraph {
    GraphName name;
    GraphKind kind = GraphKind::Plain;
    std::vector<Triple> triples;
    // Parallel to `triples` when produced by the parser, empty otherwise.
    // Never part of equality.
    std::vector<SourceSpan> spans;

    bool contains(const Triple& t) const;
    // Appends unless already present; keeps spans aligned.
    void add(Triple t, SourceSpan span = {});
};

struct Dataset {
    std::vector<Triple> default_graph;
    std::vector<SourceSpan> default_spans;
    std::vector<NamedGraph> named_graphs;
    // Prefix label (without the colon) to namespace IRI.
    std::map<std::string, std::string> prefixes;

    const NamedGraph* find_graph(const GraphName& name) const;
    NamedGraph* find_graph(const GraphName& name);
    bool has_graph(const GraphName& name) const;
    void add_default(Triple t, SourceSpan span = {});

    std::size_t triple_count() const;
};

// Set-based equality: prefixes, graph names and kinds, and per-graph
// triple sets must match; insertion order and spans are ignored.
bool operator==(const Dataset& a, const Dataset& b);

// Visits every triple; graph is nullptr for the default graph.
void for_each_triple(const Dataset& d,
                     const std::function<void(const GraphName*, const Triple&)>& fn);

// Subjects of isAConjecturalFormOf triples anywhere in the dataset.
std::set<std::string> conjectural_predicates(const Dataset& d);

// True iff t is an IRI recorded as a conjectural predicate in d.
bool term_is_conjectural_predicate(const Term& t, const Dataset& d);

// Distinct (subject, object) pairs bound to conjectural predicate cp,
// excluding isAConjecturalFormOf triples.
std::set<std::pair<Term, Term>> conjectural_pairs(const Dataset& d,
                                                  const std::string& cp);

// Enforces graph-name uniqueness and the dataset-wide uniqueness theorem:
// every conjectural predicate is used in at most one (subject, object)
// pair. Throws DuplicateGraphName or UniquenessViolation.
void check_dataset_invariants(const Dataset& d);

// Union of two datasets. Prefix tables must agree on shared labels;
// graphs with the same name must have the same kind. Triples are
// deduplicated and the uniqueness theorem is revalidated.
Dataset dataset_merge(const Dataset& a, const Dataset& b);

// Structural isomorphism under a bijection of blank-node labels.
bool isomorphic(const Dataset& a, const Dataset& b);

} // namespace conjectures
