#include "conjectures/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace conjectures {

namespace {

bool valid_local(const std::string& s) {
    if (!s.empty() && s.front() == '-') return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
              c == '-'))
            return false;
    return true;
}

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string render_term(const Term& t,
                        const std::map<std::string, std::string>& prefixes) {
    switch (t.kind()) {
    case TermKind::Blank:
        return "_:" + t.value();
    case TermKind::Literal:
        return "\"" + escape_literal(t.value()) + "\"";
    case TermKind::Iri: {
        const std::string& iri = t.value();
        const std::string* best_label = nullptr;
        std::size_t best_len = 0;
        for (const auto& [label, ns] : prefixes) {
            if (ns.empty() || ns.size() < best_len) continue;
            if (iri.compare(0, ns.size(), ns) != 0) continue;
            std::string local = iri.substr(ns.size());
            if (!valid_local(local)) continue;
            // std::map iteration gives the lexicographically first label
            // among equal-length namespaces.
            if (ns.size() > best_len) {
                best_len = ns.size();
                best_label = &label;
            }
        }
        if (best_label)
            return *best_label + ":" + iri.substr(best_len);
        return "<" + iri + ">";
    }
    }
    return "?";
}

namespace {

void write_triple(std::ostringstream& out, const Triple& t,
                  const std::map<std::string, std::string>& prefixes,
                  const char* indent) {
    out << indent << render_term(t.subject(), prefixes) << " "
        << render_term(t.predicate(), prefixes) << " "
        << render_term(t.object(), prefixes) << " .\n";
}

std::string serialize_impl(const Dataset& d, bool canonical) {
    std::ostringstream out;
    for (const auto& [label, ns] : d.prefixes)
        out << "@prefix " << label << ": <" << ns << "> .\n";
    if (!d.prefixes.empty() &&
        (!d.named_graphs.empty() || !d.default_graph.empty()))
        out << "\n";

    std::vector<const NamedGraph*> graphs;
    graphs.reserve(d.named_graphs.size());
    for (const auto& g : d.named_graphs) graphs.push_back(&g);
    if (canonical)
        std::sort(graphs.begin(), graphs.end(),
                  [](const NamedGraph* a, const NamedGraph* b) {
                      return a->name < b->name;
                  });

    for (const NamedGraph* g : graphs) {
        out << render_term(g->name.to_term(), d.prefixes) << " {\n";
        std::vector<Triple> ts = g->triples;
        if (canonical) std::sort(ts.begin(), ts.end());
        for (const auto& t : ts) write_triple(out, t, d.prefixes, "    ");
        out << "}\n\n";
    }

    std::vector<Triple> def = d.default_graph;
    if (canonical) std::sort(def.begin(), def.end());
    for (const auto& t : def) write_triple(out, t, d.prefixes, "");
    return out.str();
}

} // namespace

std::string serialize(const Dataset& d) { return serialize_impl(d, false); }

std::string serialize_canonical(const Dataset& d) {
    return serialize_impl(d, true);
}

} // namespace conjectures
