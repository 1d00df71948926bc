#include "conjectures/entailment.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "conjectures/error.hpp"

namespace conjectures {

namespace {

// ---------------------------------------------------------------------
// Instance mapping
// ---------------------------------------------------------------------

// Conjectural predicates of d for renaming: annotated predicates plus
// the non-special predicates used inside conjectural graphs.
std::set<std::string> renameable_cps(const Dataset& d) {
    std::set<std::string> out = conjectural_predicates(d);
    for (const auto& g : d.named_graphs) {
        if (g.kind != GraphKind::Conjectural) continue;
        for (const auto& t : g.triples)
            if (!t.predicate().is_iri(kIsAConjecturalFormOfIri) &&
                !t.predicate().is_iri(kCollapsesIri))
                out.insert(t.predicate().value());
    }
    return out;
}

struct Matcher {
    // quads of e, keyed by graph iri ("" for the default graph)
    std::map<std::string, std::set<Triple>> egraphs;
    std::vector<Term> universe; // candidate targets for blank nodes
    std::vector<std::string> ecps;
    std::set<std::string> gcps;

    std::vector<std::pair<std::string, Triple>> quads; // of g

    std::map<std::string, Term> blank_binding;
    std::map<std::string, std::string> cp_binding;
    std::set<std::string> cp_used;

    bool resolved(const Term& t, Term* out) const {
        if (t.is_blank()) {
            auto it = blank_binding.find(t.value());
            if (it == blank_binding.end()) return false;
            *out = it->second;
            return true;
        }
        if (t.is_iri() && gcps.count(t.value())) {
            auto it = cp_binding.find(t.value());
            if (it == cp_binding.end()) return false;
            *out = Term::iri(it->second);
            return true;
        }
        *out = t;
        return true;
    }

    // First unresolved variable of the quad, if any.
    const Term* unresolved(const Triple& t) const {
        Term scratch = t.subject();
        for (const Term* p : {&t.subject(), &t.predicate(), &t.object()})
            if (!resolved(*p, &scratch)) return p;
        return nullptr;
    }

    bool match(std::size_t qi) {
        if (qi == quads.size()) return true;
        const auto& [gname, t] = quads[qi];

        if (const Term* var = unresolved(t)) {
            if (var->is_blank()) {
                for (const Term& cand : universe) {
                    blank_binding.emplace(var->value(), cand);
                    if (match(qi)) return true;
                    blank_binding.erase(var->value());
                }
                return false;
            }
            // conjectural predicate to rename, injectively
            for (const std::string& cand : ecps) {
                if (cp_used.count(cand)) continue;
                cp_binding.emplace(var->value(), cand);
                cp_used.insert(cand);
                if (match(qi)) return true;
                cp_used.erase(cand);
                cp_binding.erase(var->value());
            }
            return false;
        }

        Term s = t.subject(), p = t.predicate(), o = t.object();
        resolved(t.subject(), &s);
        resolved(t.predicate(), &p);
        resolved(t.object(), &o);
        if (s.is_literal() || !p.is_iri()) return false;

        auto it = egraphs.find(gname);
        if (it == egraphs.end()) return false;
        if (!it->second.count(Triple(s, p, o))) return false;
        return match(qi + 1);
    }
};

// ---------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------

// Term slots in compiled form.
enum SlotKind : int { kIriSlot, kLitSlot, kBlankSlot };
struct Slot {
    int kind;
    int idx;
};
struct OTriple {
    int p; // iri index
    Slot s, o;
};
struct OGraph {
    std::vector<OTriple> triples;
    int nblanks = 0;
};
using OData = std::vector<OGraph>; // [0] = default graph

struct Compiler {
    std::vector<std::string> iris;
    std::vector<std::string> lits;
    std::map<std::string, int> iri_idx, lit_idx;
    int iacf = -1, cl = -1;

    int intern_iri(const std::string& s) {
        auto [it, fresh] = iri_idx.emplace(s, (int)iris.size());
        if (fresh) iris.push_back(s);
        return it->second;
    }
    int intern_lit(const std::string& s) {
        auto [it, fresh] = lit_idx.emplace(s, (int)lits.size());
        if (fresh) lits.push_back(s);
        return it->second;
    }

    Slot slot(const Term& t, std::map<std::string, int>& blanks) {
        switch (t.kind()) {
        case TermKind::Iri: return {kIriSlot, intern_iri(t.value())};
        case TermKind::Literal: return {kLitSlot, intern_lit(t.value())};
        case TermKind::Blank: {
            auto it = blanks.emplace(t.value(), (int)blanks.size()).first;
            return {kBlankSlot, it->second};
        }
        }
        return {kIriSlot, 0};
    }

    OGraph compile_graph(const std::vector<Triple>& triples) {
        OGraph og;
        std::map<std::string, int> blanks;
        for (const auto& t : triples) {
            OTriple ot;
            ot.p = intern_iri(t.predicate().value());
            ot.s = slot(t.subject(), blanks);
            ot.o = slot(t.object(), blanks);
            og.triples.push_back(ot);
        }
        og.nblanks = (int)blanks.size();
        return og;
    }

    OData compile(const Dataset& d) {
        OData out;
        out.push_back(compile_graph(d.default_graph));
        for (const auto& g : d.named_graphs)
            out.push_back(compile_graph(g.triples));
        return out;
    }
};

void reject_outside_scope(const Dataset& d) {
    for (const auto& g : d.named_graphs)
        if (g.kind == GraphKind::Collapse)
            throw ConjError(Errc::TooLarge,
                            "oracle scope excludes collapse graphs (<" +
                                g.name.iri + ">)");
    for_each_triple(d, [&](const GraphName*, const Triple& t) {
        if (!t.predicate().is_iri(kCollapsesIri) || !t.object().is_iri())
            return;
        const NamedGraph* target = d.find_graph(GraphName{t.object().value()});
        if (target && target->kind == GraphKind::Conjectural)
            throw ConjError(Errc::TooLarge,
                            "oracle scope excludes collapse-to-reality "
                            "conditions (" + show(t) + ")");
    });
}

struct Oracle {
    Compiler c;
    OData e, g;
    unsigned long long budget = 0, spent = 0;

    int n = 1;
    std::vector<int> is, il; // iri/literal denotations
    std::vector<int> role;   // per resource: 0 none, 1 IP, 2 IPC

    std::vector<std::array<int, 3>> iext_atoms;
    std::vector<std::array<int, 2>> cf_atoms;
    std::uint64_t iext_mask = 0, cf_mask = 0;
    std::vector<int> queried_cps;         // resources
    std::vector<std::pair<int, int>> iextc; // parallel to queried_cps

    bool iext_has(int p, int x, int y) const {
        for (std::size_t i = 0; i < iext_atoms.size(); ++i)
            if (iext_atoms[i] == std::array<int, 3>{p, x, y})
                return (iext_mask >> i) & 1;
        return false;
    }
    bool cf_has(int p, int cp) const {
        for (std::size_t i = 0; i < cf_atoms.size(); ++i)
            if (cf_atoms[i] == std::array<int, 2>{p, cp})
                return (cf_mask >> i) & 1;
        return false;
    }
    const std::pair<int, int>* iextc_of(int cp) const {
        for (std::size_t i = 0; i < queried_cps.size(); ++i)
            if (queried_cps[i] == cp) return &iextc[i];
        return nullptr;
    }

    int resolve(const Slot& s, const std::vector<int>& a) const {
        switch (s.kind) {
        case kIriSlot: return is[s.idx];
        case kLitSlot: return il[s.idx];
        default: return a[s.idx];
        }
    }

    bool eval_triple(const OTriple& t, const std::vector<int>& a) const {
        const int sres = resolve(t.s, a);
        const int ores = resolve(t.o, a);
        const int pres = is[t.p];
        if (t.p == c.iacf)
            return role[sres] == 2 && role[ores] == 1 && cf_has(ores, sres) &&
                   role[pres] == 1 && iext_has(pres, sres, ores);
        if (t.p == c.cl) return role[pres] == 1 && iext_has(pres, sres, ores);
        if (role[pres] == 2) {
            const auto* pair = iextc_of(pres);
            if (!pair || pair->first != sres || pair->second != ores)
                return false;
            for (int q = 0; q < n; ++q)
                if (role[q] == 1 && cf_has(q, pres)) return true;
            return false;
        }
        if (role[pres] == 1) return iext_has(pres, sres, ores);
        return false;
    }

    bool eval_graph(const OGraph& og) const {
        std::vector<int> a(og.nblanks, 0);
        if (og.nblanks == 0) {
            for (const auto& t : og.triples)
                if (!eval_triple(t, a)) return false;
            return true;
        }
        for (;;) {
            bool all = true;
            for (const auto& t : og.triples)
                if (!eval_triple(t, a)) {
                    all = false;
                    break;
                }
            if (all) return true;
            int k = og.nblanks;
            while (k > 0) {
                --k;
                if (++a[k] < n) break;
                a[k] = 0;
                if (k == 0) return false;
            }
        }
    }

    bool eval_data(const OData& d) const {
        for (const auto& og : d)
            if (!eval_graph(og)) return false;
        return true;
    }

    // Resource candidates of a slot under the current IS/IL.
    std::vector<int> slot_values(const Slot& s) const {
        if (s.kind == kIriSlot) return {is[s.idx]};
        if (s.kind == kLitSlot) return {il[s.idx]};
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
    }

    void collect_atoms() {
        iext_atoms.clear();
        cf_atoms.clear();
        queried_cps.clear();
        auto add_iext = [&](std::array<int, 3> a) {
            if (std::find(iext_atoms.begin(), iext_atoms.end(), a) ==
                iext_atoms.end())
                iext_atoms.push_back(a);
        };
        auto add_cf = [&](std::array<int, 2> a) {
            if (std::find(cf_atoms.begin(), cf_atoms.end(), a) ==
                cf_atoms.end())
                cf_atoms.push_back(a);
        };
        for (const OData* d : {&e, &g}) {
            for (const auto& og : *d) {
                for (const auto& t : og.triples) {
                    const int pres = is[t.p];
                    const auto svals = slot_values(t.s);
                    const auto ovals = slot_values(t.o);
                    if (role[pres] == 1) {
                        for (int x : svals)
                            for (int y : ovals) add_iext({pres, x, y});
                    }
                    if (t.p == c.iacf) {
                        for (int y : ovals) {
                            if (role[y] != 1) continue;
                            for (int x : svals) add_cf({y, x});
                        }
                    } else if (t.p != c.cl && role[pres] == 2) {
                        if (std::find(queried_cps.begin(), queried_cps.end(),
                                      pres) == queried_cps.end())
                            queried_cps.push_back(pres);
                        for (int q = 0; q < n; ++q)
                            if (role[q] == 1) add_cf({q, pres});
                    }
                }
            }
        }
    }

    bool counter_model_here() {
        // Candidate count for this (IS, IL, role) choice.
        const std::size_t ia = iext_atoms.size();
        const std::size_t ca = cf_atoms.size();
        if (ia > 62 || ca > 62)
            throw ConjError(Errc::TooLarge, "oracle atom space too large");
        unsigned long long cnt = 1ULL << ia;
        cnt *= 1ULL << ca;
        unsigned long long pairs = (unsigned long long)n * n;
        unsigned long long inj = 1;
        for (std::size_t i = 0; i < queried_cps.size(); ++i)
            inj *= pairs - i;
        cnt *= inj;
        spent += cnt;
        if (spent > budget)
            throw ConjError(Errc::TooLarge,
                            "oracle enumeration exceeds " +
                                std::to_string(budget) + " candidates");

        iextc.assign(queried_cps.size(), {0, 0});
        return enumerate_iextc(0);
    }

    bool enumerate_iextc(std::size_t k) {
        if (k == queried_cps.size()) return enumerate_cf();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                bool taken = false;
                for (std::size_t j = 0; j < k; ++j)
                    if (iextc[j] == std::pair<int, int>{x, y}) taken = true;
                if (taken) continue; // IEXTC is injective
                iextc[k] = {x, y};
                if (enumerate_iextc(k + 1)) return true;
            }
        return false;
    }

    bool enumerate_cf() {
        const std::uint64_t end = 1ULL << cf_atoms.size();
        for (cf_mask = 0; cf_mask < end; ++cf_mask)
            if (enumerate_iext()) return true;
        return false;
    }

    bool enumerate_iext() {
        const std::uint64_t end = 1ULL << iext_atoms.size();
        for (iext_mask = 0; iext_mask < end; ++iext_mask)
            if (eval_data(e) && !eval_data(g)) return true;
        return false;
    }

    bool any_counter_model(int max_domain) {
        const std::size_t nv = c.iris.size();
        const std::size_t nl = c.lits.size();
        for (n = 1; n <= max_domain; ++n) {
            is.assign(nv, 0);
            il.assign(nl, 0);
            for (;;) { // IS odometer
                for (;;) { // IL odometer
                    role.assign(n, 0);
                    for (;;) { // role odometer
                        collect_atoms();
                        if (counter_model_here()) return true;
                        std::size_t k = role.size();
                        bool done = true;
                        while (k > 0) {
                            --k;
                            if (++role[k] < 3) {
                                done = false;
                                break;
                            }
                            role[k] = 0;
                        }
                        if (done) break;
                    }
                    std::size_t k = il.size();
                    bool done = true;
                    while (k > 0) {
                        --k;
                        if (++il[k] < n) {
                            done = false;
                            break;
                        }
                        il[k] = 0;
                    }
                    if (done) break;
                }
                std::size_t k = is.size();
                bool done = true;
                while (k > 0) {
                    --k;
                    if (++is[k] < n) {
                        done = false;
                        break;
                    }
                    is[k] = 0;
                }
                if (done) break;
            }
        }
        return false;
    }
};

} // namespace

bool entails(const Dataset& e, const Dataset& g, const EntailOptions& opts) {
    Matcher m;
    m.egraphs[""] = {e.default_graph.begin(), e.default_graph.end()};
    for (const auto& ng : e.named_graphs)
        m.egraphs[ng.name.iri] = {ng.triples.begin(), ng.triples.end()};

    std::set<Term> seen;
    auto add_term = [&](const Term& t) {
        if (seen.insert(t).second) m.universe.push_back(t);
    };
    for_each_triple(e, [&](const GraphName*, const Triple& t) {
        add_term(t.subject());
        add_term(t.predicate());
        add_term(t.object());
    });
    for (const auto& ng : e.named_graphs) add_term(ng.name.to_term());

    if (opts.rename_conjectural) {
        m.gcps = renameable_cps(g);
        for (const auto& cp : renameable_cps(e)) m.ecps.push_back(cp);
    }

    m.quads.reserve(g.triple_count());
    for (const auto& t : g.default_graph) m.quads.emplace_back("", t);
    for (const auto& ng : g.named_graphs)
        for (const auto& t : ng.triples) m.quads.emplace_back(ng.name.iri, t);

    return m.match(0);
}

bool brute_force_entails(const Dataset& e, const Dataset& g, int max_domain,
                         const OracleOptions& opts) {
    if (max_domain < 1 || max_domain > 4)
        throw ConjError(Errc::TooLarge, "oracle domains must be 1..4");
    reject_outside_scope(e);
    reject_outside_scope(g);

    Oracle o;
    o.e = o.c.compile(e);
    o.g = o.c.compile(g);
    o.budget = opts.max_candidates;
    if (o.c.iris.size() + o.c.lits.size() > 8)
        throw ConjError(Errc::TooLarge,
                        "oracle vocabulary exceeds 8 terms (" +
                            std::to_string(o.c.iris.size() + o.c.lits.size()) +
                            ")");
    o.c.iacf = [&] {
        auto it = o.c.iri_idx.find(std::string(kIsAConjecturalFormOfIri));
        return it == o.c.iri_idx.end() ? -1 : it->second;
    }();
    o.c.cl = [&] {
        auto it = o.c.iri_idx.find(std::string(kCollapsesIri));
        return it == o.c.iri_idx.end() ? -1 : it->second;
    }();

    return !o.any_counter_model(max_domain);
}

} // namespace conjectures
