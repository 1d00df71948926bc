#include "conjectures/term.hpp"

#include <cctype>

namespace conjectures {

namespace {

bool has_whitespace(const std::string& s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) return true;
    }
    return false;
}

} // namespace

Term Term::iri(std::string value) {
    if (value.empty())
        throw ConjError(Errc::ValidationFailed, "IRI must be non-empty");
    if (has_whitespace(value))
        throw ConjError(Errc::ValidationFailed,
                        "IRI must not contain whitespace: <" + value + ">");
    if (value.find_first_of("<>\"") != std::string::npos)
        throw ConjError(Errc::ValidationFailed,
                        "IRI must not contain angle brackets or quotes: <" +
                            value + ">");
    return Term(TermKind::Iri, std::move(value));
}

Term Term::blank(std::string label) {
    if (label.empty())
        throw ConjError(Errc::ValidationFailed, "blank label must be non-empty");
    for (unsigned char c : label)
        if (!std::isalnum(c) && c != '_')
            throw ConjError(Errc::ValidationFailed,
                            "blank label must match [A-Za-z0-9_]+: _:" + label);
    return Term(TermKind::Blank, std::move(label));
}

Term Term::literal(std::string lexical) {
    return Term(TermKind::Literal, std::move(lexical));
}

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)) {
    if (subject_.is_literal())
        throw ConjError(Errc::ValidationFailed,
                        "triple subject must not be a literal");
    if (!predicate_.is_iri())
        throw ConjError(Errc::ValidationFailed,
                        "triple predicate must be an IRI");
}

GraphName graph_name(std::string iri) {
    // Reuse the IRI invariants.
    Term t = Term::iri(std::move(iri));
    return GraphName{t.value()};
}

std::string show(const Term& t) {
    switch (t.kind()) {
    case TermKind::Iri: return "<" + t.value() + ">";
    case TermKind::Blank: return "_:" + t.value();
    case TermKind::Literal: return "\"" + t.value() + "\"";
    }
    return "?";
}

std::string show(const Triple& t) {
    return show(t.subject()) + " " + show(t.predicate()) + " " +
           show(t.object());
}

} // namespace conjectures
