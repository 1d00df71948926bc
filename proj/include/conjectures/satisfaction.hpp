#pragma once
// Truth conditions for datasets under an extended simple interpretation.
//
// Triples are judged by clause:
//   plain        I(p) in IP and <I(s),I(o)> in IEXT(I(p))
//   conjectural  I(cp) in IPC, <I(s),I(o)> = IEXTC(I(cp)), and I(cp) in
//                CONJFORM(I(p)) for some I(p) in IP
//   form link    (cp isAConjecturalFormOf p): I(cp) in IPC, I(p) in IP,
//                I(cp) in CONJFORM(I(p)), the link property in IP and
//                <I(cp),I(p)> in its extension
//   collapse     (x conj:collapses y): the property in IP and
//                <I(x),I(y)> in its extension
//
// Graphs with blank nodes are satisfied existentially: some assignment
// of blank nodes into IR makes every triple true. The search is
// deterministic (labels sorted, IR in declaration order, first witness
// wins) and capped; exceeding the cap raises Exhaustion.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conjectures/dataset.hpp"
#include "conjectures/interpretation.hpp"

namespace conjectures {

struct BlankNodeAssignment {
    std::map<std::string, Resource> mapping; // blank label -> resource
};

struct TraceEntry {
    std::string clause;
    std::string subject;
    bool ok = false;
};

struct Verdict {
    bool value = false;
    std::vector<TraceEntry> trace;
};

struct SatisfyOptions {
    // Strict reading of the conjectural clause: the CONJFORM condition
    // is required. Lenient mode drops it.
    bool require_conjform = true;
    // Cap on candidate blank-node assignments per graph.
    std::size_t max_assignments = 1'000'000;
};

// I(t): IL for literals, IS for IRIs, A for blank nodes. Throws
// UnmappedTerm when no mapping exists.
Resource denote(const Term& t, const Interpretation& i,
                const BlankNodeAssignment* a = nullptr);

Verdict satisfies_triple(const Triple& t, const Interpretation& i,
                         const BlankNodeAssignment* a = nullptr,
                         const SatisfyOptions& opts = {});

Verdict satisfies_graph(const NamedGraph& g, const Interpretation& i,
                        const SatisfyOptions& opts = {});

Verdict satisfies_default_graph(const Dataset& d, const Interpretation& i,
                                const SatisfyOptions& opts = {});

// The six collapse-to-reality conditions, checked for every conjecture
// triple of `conjecture` against its effective form: cp in IPC, p in IP,
// CONJFORM membership, the pair equal to IEXTC(cp), the pair in
// IEXT(p), and the structural collapses relation. Both graphs must
// exist in d and `conjecture` must be conjectural.
Verdict satisfies_collapse(const GraphName& conjecture,
                           const GraphName& collapse, const Dataset& d,
                           const Interpretation& i,
                           const SatisfyOptions& opts = {});

// Nested conjectures, evaluated bottom-up: a conjectural graph whose
// conjecture triples use other conjectural graphs as subject or object
// is true only when those inner conjectures are true, its conjectural
// predicate is in IPC and the pair matches IEXTC. Returns verdicts in
// evaluation (dependency) order. Throws CyclicNesting.
std::vector<std::pair<GraphName, Verdict>> evaluate_nested(
    const Dataset& d, const Interpretation& i, const SatisfyOptions& opts = {});

// Cascading-collapse conditions: for every effective conj:collapses
// triple inside a collapse graph whose object names a conjectural
// graph, each of that graph's conjectures must hold in both conjectural
// and effective form, and the collapses pair must be in the extension
// of conj:collapses. Vacuously true without collapse graphs.
Verdict satisfies_cascade(const Dataset& d, const Interpretation& i,
                          const SatisfyOptions& opts = {});

// Conjunction over the default graph, every named graph, the collapse
// conditions for collapse triples outside collapse graphs, and the
// cascade conditions for collapse graphs.
Verdict satisfies_dataset(const Dataset& d, const Interpretation& i,
                          const SatisfyOptions& opts = {});

} // namespace conjectures
