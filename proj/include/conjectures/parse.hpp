#pragma once
// Parser for the .trigc concrete syntax: a TriG-like subset extended
// with CONJECTURE blocks (strong form) and conjectural named graphs
// (weak form).
//
//   doc            := (prefix | tripleStmt | graphBlock | conjectureBlock)*
//   prefix         := "@prefix" PNAME_NS IRIREF "."?
//   conjectureBlock:= "CONJECTURE" name "{" tripleStmt* "}"
//   graphBlock     := ["GRAPH"] name "{" tripleStmt* "}"
//   tripleStmt     := term term term "."
//
// Terms are IRIs in angle brackets, Turtle-style prefixed names, blank
// nodes (_:label) and double-quoted string literals. Line comments start
// with '#'. The conj: prefix is pre-bound to the conjectures namespace.
//
// Strong-form blocks are lowered to weak form while parsing; a GRAPH
// block is conjectural when its body carries an isAConjecturalFormOf
// triple, a collapse graph when it carries conj:collapses in effective
// form, and plain otherwise.

#include <stdexcept>
#include <string>
#include <string_view>

#include "conjectures/dataset.hpp"
#include "conjectures/span.hpp"

namespace conjectures {

enum class ParseErrc { Lex, Syntax, PrefixUnbound, GraphRedeclared };

const char* parse_errc_name(ParseErrc c);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrc kind, SourceSpan span, const std::string& message);
    ParseErrc kind() const noexcept { return kind_; }
    const SourceSpan& span() const noexcept { return span_; }

private:
    ParseErrc kind_;
    SourceSpan span_;
};

Dataset parse(std::string_view input);

// Reads the file and parses it; throws ConjError(Io) when unreadable.
Dataset parse_file(const std::string& path);

} // namespace conjectures
