#pragma once
// Extended simple interpretations: the usual (IR, IP, IEXT, IS, IL)
// structure plus the set IPC of conjectural properties, the injective
// IEXTC assigning each conjectural property its single pair, and
// CONJFORM relating properties to their conjectural forms.
//
// The .interp file format is line oriented, one directive per line,
// '#' comments:
//
//   IR: dVWH h c cc1 e iacf
//   IP: c iacf
//   IPC: cc1
//   IS: :deVereWroteHamlet -> dVWH
//   IL: "text" -> res
//   IEXT: iacf { (cc1, c) }
//   IEXTC: cc1 (h, e)
//   CONJFORM: c { cc1 }
//
// Resources are bare words; the left side of '->' uses the paired
// dataset's prefixed or quoted form.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjectures/term.hpp"

namespace conjectures {

using Resource = std::string;
using ResourcePair = std::pair<Resource, Resource>;

struct Interpretation {
    // IR in declaration order; blank-node assignments are searched in
    // this order.
    std::vector<Resource> resource_order;
    std::set<Resource> ir;
    std::set<Resource> ip;
    std::set<Resource> ipc;
    std::map<Resource, std::set<ResourcePair>> iext;
    std::map<Resource, ResourcePair> iextc;
    std::map<Resource, std::set<Resource>> conjform;
    std::map<std::string, Resource> is_map; // IRI -> resource
    std::map<std::string, Resource> il_map; // literal lexical form -> resource

    void add_resource(const Resource& r);
};

// Structural invariants: IR non-empty, IP and IPC disjoint subsets of
// IR, IEXT keyed by IP over IR pairs, IEXTC keyed by IPC and injective,
// CONJFORM from IP into subsets of IPC, IS/IL ranging over IR. Throws
// InvalidInterpretation.
void check_interpretation(const Interpretation& i);

// Parses the .interp format; prefixed names on the left of '->' are
// expanded against `prefixes`. Validates the result.
Interpretation parse_interp(std::string_view text,
                            const std::map<std::string, std::string>& prefixes);

Interpretation parse_interp_file(const std::string& path,
                                 const std::map<std::string, std::string>& prefixes);

// Deterministic .interp text; IS/IL keys rendered with `prefixes`.
std::string serialize_interp(const Interpretation& i,
                             const std::map<std::string, std::string>& prefixes);

} // namespace conjectures
