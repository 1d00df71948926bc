#pragma once
// Conjecturing: the conj function. A conjecture replaces a triple's
// predicate by a freshly minted conjectural predicate bound to exactly
// that (subject, object) pair, and records the binding with an
// isAConjecturalFormOf triple.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conjectures/dataset.hpp"
#include "conjectures/validation.hpp"

namespace conjectures {

struct ConjectureRecord {
    std::string original_predicate;
    std::string conjectural_predicate;
    Term subject;
    Term object;
    GraphName graph; // empty iri when not minted for a named graph
};

// Mints fresh conjectural predicate IRIs of the form
// <mint-base>conj<n>#<localname-of-p>, serialized as conj<n>:<localname>.
// The counter is scoped to the dataset the minter is bound to; freshness
// is checked against everything already in that dataset, so re-parsing
// plus re-minting cannot collide. Stateful: use from one thread or
// synchronize externally.
class PredicateMinter {
public:
    explicit PredicateMinter(const Dataset* scope = nullptr);

    // Returns the minted predicate IRI; registers its prefix label.
    std::string mint(const std::string& original_predicate_iri);

    bool knows_conjectural(const std::string& iri) const;

    void attach(ConjectureRecord record);
    const std::vector<ConjectureRecord>& records() const { return records_; }

    // Prefix label -> namespace IRI for every predicate minted so far.
    const std::map<std::string, std::string>& minted_prefixes() const {
        return minted_prefixes_;
    }

private:
    bool fresh(const std::string& iri, const std::string& label) const;

    const Dataset* scope_;
    unsigned next_ = 1;
    std::vector<ConjectureRecord> records_;
    std::set<std::string> recorded_cps_;
    std::map<std::string, std::string> minted_prefixes_;
    std::set<std::string> minted_iris_;
};

struct ConjectureResult {
    Triple conjectural; // (s, cp, o)
    Triple annotation;  // (cp, conj:isAConjecturalFormOf, p)
    ConjectureRecord record;
};

// conj(t): preserves subject and object, replaces the predicate by a
// fresh conjectural predicate. Throws AlreadyConjectural when t's
// predicate is itself a conjectural predicate of record; nesting is
// expressed through graph names instead.
ConjectureResult conjecture_triple(const Triple& t, PredicateMinter& minter,
                                   const GraphName& graph = {});

// Strong-to-weak lowering: every body triple is conjectured, yielding
// 2n triples (conjecture plus annotation each). The result is a
// conjectural graph.
NamedGraph weaken_graph(const GraphName& name,
                        const std::vector<Triple>& triples,
                        PredicateMinter& minter);

// A conjectural graph must contain only conjecture triples (each
// conjectural predicate used exactly once, linked by exactly one
// annotation) and isAConjecturalFormOf triples.
ValidationReport validate_conjectural_graph(const NamedGraph& g,
                                            const Dataset& d,
                                            const ValidationOptions& opts = {});

// Original predicate of cp, read off the isAConjecturalFormOf triples of
// d. Nothing when cp has no recorded form; AmbiguousForm when it maps to
// two distinct originals.
std::optional<std::string> conjectural_form_of(const std::string& cp_iri,
                                               const Dataset& d);

} // namespace conjectures
