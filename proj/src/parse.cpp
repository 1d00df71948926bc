#include "conjectures/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "conjectures/conjecture.hpp"
#include "conjectures/error.hpp"

namespace conjectures {

const char* parse_errc_name(ParseErrc c) {
    switch (c) {
    case ParseErrc::Lex: return "lex";
    case ParseErrc::Syntax: return "syntax";
    case ParseErrc::PrefixUnbound: return "prefix-unbound";
    case ParseErrc::GraphRedeclared: return "graph-redeclared";
    }
    return "?";
}

ParseError::ParseError(ParseErrc kind, SourceSpan span,
                       const std::string& message)
    : std::runtime_error(std::to_string(span.line) + ":" +
                         std::to_string(span.column) + ": " +
                         parse_errc_name(kind) + ": " + message),
      kind_(kind),
      span_(span) {}

namespace {

enum class Tok {
    Iri,      // a = iri text
    PName,    // a = prefix label, b = local part
    Blank,    // a = label
    String,   // a = unescaped lexical form
    Word,     // a = bare word (GRAPH, CONJECTURE)
    AtPrefix,
    LBrace,
    RBrace,
    Dot,
    End,
};

struct Token {
    Tok type;
    std::string a;
    std::string b;
    SourceSpan span;
};

bool is_pname_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
public:
    explicit Lexer(std::string_view in) : in_(in) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            Token t = next();
            bool end = t.type == Tok::End;
            out.push_back(std::move(t));
            if (end) return out;
        }
    }

private:
    [[noreturn]] void fail(SourceSpan span, const std::string& msg) {
        span.end = pos_;
        throw ParseError(ParseErrc::Lex, span, msg);
    }

    SourceSpan here() const { return SourceSpan{pos_, pos_, line_, col_}; }

    bool eof() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }

    char advance() {
        char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                return;
            }
        }
    }

    Token token(Tok type, SourceSpan span, std::string a = {},
                std::string b = {}) {
        span.end = pos_;
        return Token{type, std::move(a), std::move(b), span};
    }

    Token next() {
        SourceSpan span = here();
        if (eof()) return token(Tok::End, span);
        char c = peek();
        switch (c) {
        case '{': advance(); return token(Tok::LBrace, span);
        case '}': advance(); return token(Tok::RBrace, span);
        case '.': advance(); return token(Tok::Dot, span);
        case '<': return iri(span);
        case '"': return string_literal(span);
        case '@': return directive(span);
        default: break;
        }
        if (c == '_' && pos_ + 1 < in_.size() && in_[pos_ + 1] == ':')
            return blank(span);
        if (is_pname_char(c) || c == ':') return pname_or_word(span);
        fail(span, std::string("unexpected character '") + c + "'");
    }

    Token iri(SourceSpan span) {
        advance(); // <
        std::string text;
        while (!eof() && peek() != '>') {
            char c = advance();
            if (std::isspace(static_cast<unsigned char>(c)))
                fail(span, "whitespace inside IRI");
            text.push_back(c);
        }
        if (eof()) fail(span, "unterminated IRI");
        advance(); // >
        if (text.empty()) fail(span, "empty IRI");
        return token(Tok::Iri, span, std::move(text));
    }

    Token string_literal(SourceSpan span) {
        advance(); // "
        std::string text;
        for (;;) {
            if (eof()) fail(span, "unterminated string literal");
            char c = advance();
            if (c == '"') break;
            if (c == '\n') fail(span, "newline inside string literal");
            if (c == '\\') {
                if (eof()) fail(span, "unterminated escape");
                char e = advance();
                switch (e) {
                case '"': text.push_back('"'); break;
                case '\\': text.push_back('\\'); break;
                case 'n': text.push_back('\n'); break;
                case 't': text.push_back('\t'); break;
                case 'r': text.push_back('\r'); break;
                default:
                    fail(span, std::string("unknown escape '\\") + e + "'");
                }
            } else {
                text.push_back(c);
            }
        }
        return token(Tok::String, span, std::move(text));
    }

    Token directive(SourceSpan span) {
        advance(); // @
        std::string word;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek())))
            word.push_back(advance());
        if (word != "prefix")
            fail(span, "unknown directive '@" + word + "'");
        return token(Tok::AtPrefix, span);
    }

    Token blank(SourceSpan span) {
        advance(); // _
        advance(); // :
        std::string label;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '_'))
            label.push_back(advance());
        if (label.empty()) fail(span, "empty blank node label");
        return token(Tok::Blank, span, std::move(label));
    }

    Token pname_or_word(SourceSpan span) {
        std::string head;
        while (!eof() && is_pname_char(peek())) head.push_back(advance());
        if (eof() || peek() != ':')
            return token(Tok::Word, span, std::move(head));
        advance(); // :
        std::string local;
        while (!eof() && is_pname_char(peek())) local.push_back(advance());
        return token(Tok::PName, span, std::move(head), std::move(local));
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view in) : tokens_(Lexer(in).run()) {}

    Dataset run() {
        Dataset d;
        d.prefixes.emplace("conj", std::string(kConjNamespace));
        // Indices of strong-form blocks, lowered after the whole document
        // is read so minted predicates cannot collide with anything in it.
        std::vector<std::size_t> strong;

        for (;;) {
            const Token& t = peek();
            if (t.type == Tok::End) break;
            switch (t.type) {
            case Tok::AtPrefix:
                prefix_decl(d);
                break;
            case Tok::Word:
                if (t.a == "GRAPH") {
                    advance();
                    graph_block(d, expect_name(d), false);
                } else if (t.a == "CONJECTURE") {
                    advance();
                    strong.push_back(graph_block(d, expect_name(d), true));
                } else {
                    throw ParseError(ParseErrc::Syntax, t.span,
                                     "unexpected word '" + t.a + "'");
                }
                break;
            case Tok::Iri:
            case Tok::PName: {
                // Either a named graph block or a default-graph triple.
                SourceSpan span = t.span;
                Term term = term_token(d);
                if (peek().type == Tok::LBrace) {
                    graph_block(d, GraphName{term.value()}, false);
                } else {
                    d.add_default(finish_triple(d, term, span), span);
                }
                break;
            }
            case Tok::Blank: {
                SourceSpan span = t.span;
                Term subject = term_token(d);
                if (peek().type == Tok::LBrace)
                    throw ParseError(ParseErrc::Syntax, span,
                                     "graph names must be IRIs");
                d.add_default(finish_triple(d, subject, span), span);
                break;
            }
            case Tok::String:
                throw ParseError(ParseErrc::Syntax, t.span,
                                 "a literal cannot be a triple subject");
            default:
                throw ParseError(ParseErrc::Syntax, t.span,
                                 "expected a statement");
            }
        }

        lower_strong_blocks(d, strong);
        check_dataset_invariants(d);
        return d;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    const Token& expect(Tok type, const char* what) {
        const Token& t = peek();
        if (t.type != type)
            throw ParseError(ParseErrc::Syntax, t.span,
                             std::string("expected ") + what);
        return advance();
    }

    std::string expand(const Dataset& d, const Token& t) const {
        auto it = d.prefixes.find(t.a);
        if (it == d.prefixes.end())
            throw ParseError(ParseErrc::PrefixUnbound, t.span,
                             "prefix '" + t.a + ":' is not declared");
        return it->second + t.b;
    }

    Term term_token(Dataset& d) {
        const Token& t = advance();
        switch (t.type) {
        case Tok::Iri: return checked_iri(t.a, t.span);
        case Tok::PName: return checked_iri(expand(d, t), t.span);
        case Tok::Blank: return Term::blank(t.a);
        case Tok::String: return Term::literal(t.a);
        default:
            throw ParseError(ParseErrc::Syntax, t.span, "expected a term");
        }
    }

    Term checked_iri(const std::string& iri, SourceSpan span) {
        try {
            return Term::iri(iri);
        } catch (const ConjError& e) {
            throw ParseError(ParseErrc::Syntax, span, e.what());
        }
    }

    GraphName expect_name(Dataset& d) {
        const Token& t = peek();
        if (t.type != Tok::Iri && t.type != Tok::PName)
            throw ParseError(ParseErrc::Syntax, t.span,
                             "expected a graph name");
        return GraphName{term_token(d).value()};
    }

    void prefix_decl(Dataset& d) {
        advance(); // @prefix
        const Token& name = peek();
        if (name.type != Tok::PName || !name.b.empty())
            throw ParseError(ParseErrc::Syntax, name.span,
                             "expected a prefix label ending in ':'");
        advance();
        const Token& iri = expect(Tok::Iri, "a namespace IRI");
        // The terminating dot is optional.
        if (peek().type == Tok::Dot) advance();
        d.prefixes[name.a] = iri.a;
    }

    Triple finish_triple(Dataset& d, Term subject, SourceSpan span) {
        const Token& ptok = peek();
        Term predicate = term_token(d);
        if (!predicate.is_iri())
            throw ParseError(ParseErrc::Syntax, ptok.span,
                             "predicate must be an IRI");
        Term object = term_token(d);
        expect(Tok::Dot, "'.' after triple");
        if (subject.is_literal())
            throw ParseError(ParseErrc::Syntax, span,
                             "a literal cannot be a triple subject");
        return Triple(std::move(subject), std::move(predicate),
                      std::move(object));
    }

    // Returns the index of the new graph in d.named_graphs.
    std::size_t graph_block(Dataset& d, GraphName name, bool strong) {
        const Token& open = expect(Tok::LBrace, "'{'");
        if (d.has_graph(name))
            throw ParseError(ParseErrc::GraphRedeclared, open.span,
                             "graph <" + name.iri + "> declared twice");
        NamedGraph g{name, GraphKind::Plain, {}, {}};
        std::set<Triple> seen;
        while (peek().type != Tok::RBrace) {
            const Token& t = peek();
            if (t.type == Tok::End)
                throw ParseError(ParseErrc::Syntax, t.span,
                                 "unterminated graph block");
            if (t.type == Tok::LBrace)
                throw ParseError(ParseErrc::Syntax, t.span,
                                 "graph blocks cannot nest");
            SourceSpan span = t.span;
            Term subject = term_token(d);
            Triple triple = finish_triple(d, subject, span);
            if (seen.insert(triple).second) {
                g.triples.push_back(std::move(triple));
                g.spans.push_back(span);
            }
        }
        advance(); // }
        if (!strong) g.kind = infer_kind(g);
        d.named_graphs.push_back(std::move(g));
        return d.named_graphs.size() - 1;
    }

    static GraphKind infer_kind(const NamedGraph& g) {
        // Effective conj:collapses marks a collapse graph and wins over
        // the conjectural marker: a conjectural graph may not contain
        // effective triples at all.
        bool conjectural = false;
        for (const auto& t : g.triples) {
            if (t.predicate().is_iri(kCollapsesIri)) return GraphKind::Collapse;
            if (t.predicate().is_iri(kIsAConjecturalFormOfIri))
                conjectural = true;
        }
        return conjectural ? GraphKind::Conjectural : GraphKind::Plain;
    }

    void lower_strong_blocks(Dataset& d, const std::vector<std::size_t>& idx) {
        if (idx.empty()) return;
        PredicateMinter minter(&d);
        for (std::size_t i : idx) {
            NamedGraph& g = d.named_graphs[i];
            g = weaken_graph(g.name, g.triples, minter);
        }
        for (const auto& [label, ns] : minter.minted_prefixes())
            d.prefixes[label] = ns;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Dataset parse(std::string_view input) { return Parser(input).run(); }

Dataset parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConjError(Errc::Io, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

} // namespace conjectures
