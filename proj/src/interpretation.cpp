#include "conjectures/interpretation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "conjectures/error.hpp"
#include "conjectures/serialize.hpp"

namespace conjectures {

void Interpretation::add_resource(const Resource& r) {
    if (ir.insert(r).second) resource_order.push_back(r);
}

namespace {

[[noreturn]] void invalid(const std::string& msg) {
    throw ConjError(Errc::InvalidInterpretation, msg);
}

void require_resource(const Interpretation& i, const Resource& r,
                      const char* where) {
    if (!i.ir.count(r))
        invalid(std::string(where) + " mentions '" + r + "' outside IR");
}

} // namespace

void check_interpretation(const Interpretation& i) {
    if (i.ir.empty()) invalid("IR must be non-empty");
    for (const auto& r : i.ip) require_resource(i, r, "IP");
    for (const auto& r : i.ipc) require_resource(i, r, "IPC");
    for (const auto& r : i.ipc)
        if (i.ip.count(r))
            invalid("IP and IPC must be disjoint; '" + r + "' is in both");
    for (const auto& [p, pairs] : i.iext) {
        if (!i.ip.count(p)) invalid("IEXT key '" + p + "' is not in IP");
        for (const auto& [x, y] : pairs) {
            require_resource(i, x, "IEXT");
            require_resource(i, y, "IEXT");
        }
    }
    std::map<ResourcePair, Resource> seen;
    for (const auto& [cp, pair] : i.iextc) {
        if (!i.ipc.count(cp)) invalid("IEXTC key '" + cp + "' is not in IPC");
        require_resource(i, pair.first, "IEXTC");
        require_resource(i, pair.second, "IEXTC");
        auto [it, fresh] = seen.emplace(pair, cp);
        if (!fresh)
            invalid("IEXTC must be injective; '" + it->second + "' and '" + cp +
                    "' share a pair");
    }
    for (const auto& [p, cps] : i.conjform) {
        if (!i.ip.count(p)) invalid("CONJFORM key '" + p + "' is not in IP");
        for (const auto& cp : cps)
            if (!i.ipc.count(cp))
                invalid("CONJFORM value '" + cp + "' is not in IPC");
    }
    for (const auto& [iri, r] : i.is_map) require_resource(i, r, "IS");
    for (const auto& [lex, r] : i.il_map) require_resource(i, r, "IL");
}

namespace {

// Line tokenizer: words, '(', ')', ',', '{', '}', '->', quoted strings
// and <iri> forms kept whole.
std::vector<std::string> tokenize_line(const std::string& line, int lineno) {
    std::vector<std::string> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw ConjError(Errc::InvalidInterpretation,
                        "line " + std::to_string(lineno) + ": " + msg);
    };
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') break;
        if (c == '(' || c == ')' || c == ',' || c == '{' || c == '}') {
            out.emplace_back(1, c);
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.emplace_back("->");
            i += 2;
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            std::string text = "\"";
            while (j < line.size() && line[j] != '"') {
                if (line[j] == '\\' && j + 1 < line.size())
                    text.push_back(line[j++]);
                text.push_back(line[j++]);
            }
            if (j >= line.size()) fail("unterminated literal");
            text.push_back('"');
            out.push_back(std::move(text));
            i = j + 1;
            continue;
        }
        if (c == '<') {
            std::size_t j = line.find('>', i);
            if (j == std::string::npos) fail("unterminated IRI");
            out.push_back(line.substr(i, j - i + 1));
            i = j + 1;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[j])) &&
               std::string("(),{}#").find(line[j]) == std::string::npos &&
               !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
            ++j;
        out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string unescape_quoted(const std::string& s) {
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c == '\\' && i + 2 < s.size()) {
            char e = s[++i];
            switch (e) {
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            case 'r': out.push_back('\r'); break;
            default: out.push_back(e);
            }
        } else {
            out.push_back(c);
        }
    }
    return out;
}

class InterpParser {
public:
    InterpParser(std::string_view text,
                 const std::map<std::string, std::string>& prefixes)
        : text_(text), prefixes_(prefixes) {}

    Interpretation run() {
        std::istringstream in{std::string(text_)};
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto toks = tokenize_line(line, lineno);
            if (toks.empty()) continue;
            directive(toks, lineno);
        }
        check_interpretation(interp_);
        return std::move(interp_);
    }

private:
    [[noreturn]] void fail(int lineno, const std::string& msg) {
        throw ConjError(Errc::InvalidInterpretation,
                        "line " + std::to_string(lineno) + ": " + msg);
    }

    // Term on the left of '->': prefixed name, <iri> or quoted literal.
    // Returns (is_literal, key string).
    std::pair<bool, std::string> term_key(const std::string& tok, int lineno) {
        if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"')
            return {true, unescape_quoted(tok)};
        if (tok.size() >= 2 && tok.front() == '<' && tok.back() == '>')
            return {false, tok.substr(1, tok.size() - 2)};
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            fail(lineno, "expected a prefixed name, <iri> or \"literal\": " + tok);
        std::string label = tok.substr(0, colon);
        auto it = prefixes_.find(label);
        if (it == prefixes_.end())
            fail(lineno, "prefix '" + label + ":' is not declared by the dataset");
        return {false, it->second + tok.substr(colon + 1)};
    }

    void expect(const std::vector<std::string>& t, std::size_t i,
                const char* what, int lineno) {
        if (i >= t.size() || t[i] != what)
            fail(lineno, std::string("expected '") + what + "'");
    }

    void directive(const std::vector<std::string>& t, int lineno) {
        const std::string& head = t[0];
        if (head == "IR:") {
            for (std::size_t i = 1; i < t.size(); ++i)
                interp_.add_resource(t[i]);
        } else if (head == "IP:") {
            for (std::size_t i = 1; i < t.size(); ++i) interp_.ip.insert(t[i]);
        } else if (head == "IPC:") {
            for (std::size_t i = 1; i < t.size(); ++i) interp_.ipc.insert(t[i]);
        } else if (head == "IS:" || head == "IL:") {
            if (t.size() != 4 || t[2] != "->")
                fail(lineno, "expected '" + head + " <term> -> <resource>'");
            auto [is_lit, key] = term_key(t[1], lineno);
            if (head == "IL:") {
                if (!is_lit) fail(lineno, "IL keys must be quoted literals");
                interp_.il_map[key] = t[3];
            } else {
                if (is_lit) fail(lineno, "IS keys must be IRIs");
                interp_.is_map[key] = t[3];
            }
        } else if (head == "IEXT:") {
            if (t.size() < 4) fail(lineno, "malformed IEXT directive");
            expect(t, 2, "{", lineno);
            if (t.back() != "}") fail(lineno, "expected '}'");
            auto& pairs = interp_.iext[t[1]]; // empty set when no pairs
            std::size_t i = 3;
            while (i < t.size() - 1) {
                expect(t, i, "(", lineno);
                if (i + 4 >= t.size()) fail(lineno, "malformed pair");
                expect(t, i + 2, ",", lineno);
                expect(t, i + 4, ")", lineno);
                pairs.insert({t[i + 1], t[i + 3]});
                i += 5;
            }
        } else if (head == "IEXTC:") {
            if (t.size() != 7 || t[2] != "(" || t[4] != "," || t[6] != ")")
                fail(lineno, "expected 'IEXTC: cp (x, y)'");
            if (interp_.iextc.count(t[1]))
                fail(lineno, "IEXTC already assigns '" + t[1] + "'");
            interp_.iextc[t[1]] = {t[3], t[5]};
        } else if (head == "CONJFORM:") {
            if (t.size() < 4) fail(lineno, "malformed CONJFORM directive");
            expect(t, 2, "{", lineno);
            if (t.back() != "}") fail(lineno, "expected '}'");
            auto& cps = interp_.conjform[t[1]];
            for (std::size_t i = 3; i + 1 < t.size(); ++i) cps.insert(t[i]);
        } else {
            fail(lineno, "unknown directive '" + head + "'");
        }
    }

    std::string_view text_;
    const std::map<std::string, std::string>& prefixes_;
    Interpretation interp_;
};

} // namespace

Interpretation parse_interp(std::string_view text,
                            const std::map<std::string, std::string>& prefixes) {
    return InterpParser(text, prefixes).run();
}

Interpretation parse_interp_file(const std::string& path,
                                 const std::map<std::string, std::string>& prefixes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConjError(Errc::Io, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_interp(buf.str(), prefixes);
}

std::string serialize_interp(const Interpretation& i,
                             const std::map<std::string, std::string>& prefixes) {
    std::ostringstream out;
    auto words = [&](const char* head, const auto& seq) {
        out << head;
        for (const auto& r : seq) out << " " << r;
        out << "\n";
    };
    words("IR:", i.resource_order);
    words("IP:", i.ip);
    words("IPC:", i.ipc);
    for (const auto& [iri, r] : i.is_map)
        out << "IS: " << render_term(Term::iri(iri), prefixes) << " -> " << r
            << "\n";
    for (const auto& [lex, r] : i.il_map)
        out << "IL: " << render_term(Term::literal(lex), prefixes) << " -> "
            << r << "\n";
    for (const auto& [p, pairs] : i.iext) {
        out << "IEXT: " << p << " {";
        for (const auto& [x, y] : pairs) out << " (" << x << ", " << y << ")";
        out << " }\n";
    }
    for (const auto& [cp, pair] : i.iextc)
        out << "IEXTC: " << cp << " (" << pair.first << ", " << pair.second
            << ")\n";
    for (const auto& [p, cps] : i.conjform) {
        out << "CONJFORM: " << p << " {";
        for (const auto& cp : cps) out << " " << cp;
        out << " }\n";
    }
    return out.str();
}

} // namespace conjectures
