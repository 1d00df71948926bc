#pragma once
// Simple entailment: e entails g when every interpretation satisfying e
// also satisfies g. Decided operationally by instance mapping: some
// mapping of g's blank nodes into e's terms makes every quad of g a
// quad of e. Conjectural predicates match as constants; rename mode
// additionally matches them up to injective renaming that preserves
// isAConjecturalFormOf links.

#include "conjectures/dataset.hpp"

namespace conjectures {

struct EntailOptions {
    bool rename_conjectural = false;
};

bool entails(const Dataset& e, const Dataset& g,
             const EntailOptions& opts = {});

struct OracleOptions {
    // Abort when the interpretation space exceeds this many candidates.
    unsigned long long max_candidates = 400'000'000ULL;
};

// Test oracle, independent of the instance-mapping path: enumerates
// every extended simple interpretation over domains of size
// 1..max_domain (IS/IL assignments, IP/IPC labelings, IEXT subsets,
// injective IEXTC assignments and CONJFORM relations, quotiented to the
// atoms the two datasets can query) and returns false iff some
// interpretation satisfies e but not g. Throws TooLarge when the space
// exceeds the bound or when a dataset needs collapse-graph semantics,
// which are outside the oracle's scope.
bool brute_force_entails(const Dataset& e, const Dataset& g, int max_domain,
                         const OracleOptions& opts = {});

} // namespace conjectures
