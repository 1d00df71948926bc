#include "conjectures/canonical.hpp"

#include <map>

#include "conjectures/error.hpp"

namespace conjectures {

namespace {

class Builder {
public:
    explicit Builder(const Dataset& d) : d_(d), cps_(conjectural_predicates(d)) {}

    Interpretation run() {
        // Conjectural predicates bound to the same (subject, object) pair
        // share one resource: IEXTC must stay injective, and the pair
        // already forces their denotations together in every model.
        for_each_triple(d_, [&](const GraphName*, const Triple& t) {
            if (!is_conjecture_triple(t)) return;
            const auto key = std::make_pair(t.subject(), t.object());
            auto it = pair_group_.find(key);
            if (it == pair_group_.end())
                pair_group_.emplace(key, t.predicate().value());
            else
                cp_alias_[t.predicate().value()] = it->second;
        });

        for_each_triple(d_, [&](const GraphName* g, const Triple& t) {
            if (g && !seen_graphs_.count(g->iri)) {
                seen_graphs_.insert(g->iri);
                res_of(g->to_term());
            }
            const Resource s = res_of(t.subject());
            const Resource p = res_of(t.predicate());
            const Resource o = res_of(t.object());

            if (is_conjecture_triple(t)) {
                interp_.ipc.insert(p);
                auto [it, fresh] = interp_.iextc.emplace(p, ResourcePair{s, o});
                if (!fresh && it->second != ResourcePair{s, o})
                    throw ConjError(
                        Errc::ValidationFailed,
                        "conjectural predicate <" + t.predicate().value() +
                            "> is bound to two pairs; no canonical model");
            } else {
                interp_.ip.insert(p);
                interp_.iext[p].insert({s, o});
            }

            if (t.predicate().is_iri(kIsAConjecturalFormOfIri) &&
                t.subject().is_iri() && t.object().is_iri()) {
                interp_.ipc.insert(s);
                interp_.ip.insert(o);
                interp_.conjform[o].insert(s);
            }
        });

        // A conjectural predicate that is annotated but never used still
        // needs a pair; its own self-pair keeps IEXTC injective.
        for (const auto& r : interp_.ipc)
            interp_.iextc.emplace(r, ResourcePair{r, r});

        // Properties with no effective use get an explicit empty
        // extension, as in the hand-built models.
        for (const auto& r : interp_.ip) interp_.iext[r];

        for (const auto& r : interp_.ipc)
            if (interp_.ip.count(r))
                throw ConjError(Errc::ValidationFailed,
                                "resource '" + r +
                                    "' would be both a property and a "
                                    "conjectural property; no canonical model");

        if (interp_.ir.empty()) interp_.add_resource("r0");
        check_interpretation(interp_);
        return std::move(interp_);
    }

private:
    bool is_conjecture_triple(const Triple& t) const {
        return cps_.count(t.predicate().value()) &&
               !t.predicate().is_iri(kIsAConjecturalFormOfIri);
    }

    Resource res_of(const Term& t) {
        std::string key = show(t);
        if (t.is_iri()) {
            // Aliased conjectural predicates share their group leader.
            auto alias = cp_alias_.find(t.value());
            if (alias != cp_alias_.end())
                key = show(Term::iri(alias->second));
        }
        auto it = names_.find(key);
        Resource r;
        if (it != names_.end()) {
            r = it->second;
        } else {
            r = "r" + std::to_string(names_.size());
            names_.emplace(std::move(key), r);
            interp_.add_resource(r);
        }
        if (t.is_iri())
            interp_.is_map.emplace(t.value(), r);
        else if (t.is_literal())
            interp_.il_map.emplace(t.value(), r);
        // Blank nodes get a fresh resource each; the satisfaction search
        // rediscovers them as witnesses.
        return r;
    }

    const Dataset& d_;
    std::set<std::string> cps_;
    std::map<std::pair<Term, Term>, std::string> pair_group_;
    std::map<std::string, std::string> cp_alias_;
    std::map<std::string, Resource> names_;
    std::set<std::string> seen_graphs_;
    Interpretation interp_;
};

} // namespace

Interpretation canonical_interpretation(const Dataset& d) {
    check_dataset_invariants(d);
    return Builder(d).run();
}

} // namespace conjectures
