#pragma once
// Terms, triples and graph names: the three disjoint lexical sorts (IRIs,
// blank nodes, literals) and the well-formedness rules of triples built
// from them. Literals are opaque strings compared by exact lexical
// equality; there is no datatype map.

#include <compare>
#include <string>
#include <string_view>

#include "conjectures/error.hpp"

namespace conjectures {

// Namespace the conjectures vocabulary lives in. The `conj:` prefix is
// pre-bound to it; a file may rebind the prefix, but the vocabulary IRIs
// themselves are fixed.
inline constexpr std::string_view kConjNamespace =
    "http://w3id.org/conjectures/";
inline constexpr std::string_view kIsAConjecturalFormOfIri =
    "http://w3id.org/conjectures/isAConjecturalFormOf";
inline constexpr std::string_view kCollapsesIri =
    "http://w3id.org/conjectures/collapses";
// Namespace under which fresh conjectural predicates are minted.
inline constexpr std::string_view kMintNamespaceBase =
    "http://w3id.org/conjectures/minted/";

enum class TermKind { Iri, Blank, Literal };

class Term {
public:
    // IRI strings must be non-empty and contain no whitespace.
    static Term iri(std::string value);
    // Blank labels must be non-empty; they are unique within one dataset.
    static Term blank(std::string label);
    // Literals carry an opaque lexical form; any string is allowed.
    static Term literal(std::string lexical);

    TermKind kind() const noexcept { return kind_; }
    const std::string& value() const noexcept { return value_; }

    bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
    bool is_blank() const noexcept { return kind_ == TermKind::Blank; }
    bool is_literal() const noexcept { return kind_ == TermKind::Literal; }

    bool is_iri(std::string_view v) const noexcept {
        return kind_ == TermKind::Iri && value_ == v;
    }

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

private:
    Term(TermKind kind, std::string value)
        : kind_(kind), value_(std::move(value)) {}

    TermKind kind_;
    std::string value_;
};

// (s, p, o) with s an IRI or blank node and p an IRI.
class Triple {
public:
    Triple(Term subject, Term predicate, Term object);

    const Term& subject() const noexcept { return subject_; }
    const Term& predicate() const noexcept { return predicate_; }
    const Term& object() const noexcept { return object_; }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;

private:
    Term subject_;
    Term predicate_;
    Term object_;
};

// Graph names are IRIs and double as terms: collapse and attribution
// triples refer to a graph through its name.
struct GraphName {
    std::string iri;

    Term to_term() const { return Term::iri(iri); }

    friend bool operator==(const GraphName&, const GraphName&) = default;
    friend std::strong_ordering operator<=>(const GraphName&, const GraphName&) = default;
};

GraphName graph_name(std::string iri);

// Debug/report rendering: <iri>, _:label, "literal".
std::string show(const Term& t);
std::string show(const Triple& t);

} // namespace conjectures
