#pragma once
// Collapse to reality: asserting a conjecture in full force by adding
// the effective form of each of its conjecture triples plus a
// conj:collapses triple, bundled in a collapse graph. Purely additive;
// nothing is replaced or deleted.

#include <string>
#include <utility>
#include <vector>

#include "conjectures/dataset.hpp"
#include "conjectures/validation.hpp"

namespace conjectures {

struct CollapseRecord {
    GraphName collapse_graph;
    GraphName collapsed_graph;
    // (conjecture triple, effective triple) per conjecture.
    std::vector<std::pair<Triple, Triple>> pairs;
};

// The (conjecture, effective) pairs of a conjectural graph. Throws
// MissingForm when a conjectural predicate lacks an annotation.
std::vector<std::pair<Triple, Triple>> collapse_pairs(const NamedGraph& g,
                                                      const Dataset& d);

// Assembles the record binding a collapse graph to the conjecture it
// collapses. Throws NotConjectural when collapsed does not name a
// conjectural graph of d.
CollapseRecord collapse_record(const GraphName& collapse_graph,
                               const GraphName& collapsed, const Dataset& d);

// Adds a collapse graph named new_name containing the effective form of
// every conjecture of target plus the triple
// (new_name, conj:collapses, target). Throws NotConjectural when target
// is not a conjectural graph of d and MissingForm when a conjectural
// predicate has no recorded original.
Dataset collapse_conjecture(const GraphName& target, const Dataset& d,
                            const GraphName& new_name);

// A collapse graph must carry at least one conj:collapses triple naming
// a conjectural graph, and the effective form of every conjecture of
// each collapsed target.
ValidationReport validate_collapse_graph(const NamedGraph& g,
                                         const Dataset& d);

// Cascading collapses: whenever a collapse graph contains conj:collapses
// in effective form with a conjectural graph as object, the effective
// forms of that graph's conjectures are added to the current collapse
// graph (the subject of collapses is disregarded), recursing on any
// collapses conjecture made effective along the way. Each
// (collapse graph, target) pair is processed at most once. Throws
// CycleDetected when a collapse ultimately requires collapsing itself.
Dataset cascade(const Dataset& d);

} // namespace conjectures
