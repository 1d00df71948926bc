#pragma once
// Herbrand-style model construction: one resource per mentioned IRI,
// literal and blank node, with IP, IPC, IEXT, IEXTC and CONJFORM read
// off the triples. The result satisfies every dataset that satisfies
// the uniqueness theorem.

#include "conjectures/dataset.hpp"
#include "conjectures/interpretation.hpp"

namespace conjectures {

Interpretation canonical_interpretation(const Dataset& d);

} // namespace conjectures
