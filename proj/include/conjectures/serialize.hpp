#pragma once
// Deterministic .trigc output. Prefixes are emitted sorted, graphs in
// insertion order, triples in insertion order; only the weak form is
// ever written. parse(serialize(d)) == d.

#include <string>

#include "conjectures/dataset.hpp"

namespace conjectures {

std::string serialize(const Dataset& d);

// Order-independent form used for comparing datasets as quad sets:
// graphs sorted by name, triples sorted within each graph.
std::string serialize_canonical(const Dataset& d);

// IRI rendered as prefix:local when a declared namespace covers it,
// <iri> otherwise.
std::string render_term(const Term& t,
                        const std::map<std::string, std::string>& prefixes);

} // namespace conjectures
