#pragma once
// Validation reports: violations are data, not errors.

#include <optional>
#include <string>
#include <vector>

#include "conjectures/span.hpp"
#include "conjectures/term.hpp"

namespace conjectures {

struct Violation {
    std::string code;
    GraphName graph;
    std::string message;
    std::optional<SourceSpan> span;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
    void add(std::string code, GraphName graph, std::string message,
             std::optional<SourceSpan> span = std::nullopt) {
        violations.push_back(
            {std::move(code), std::move(graph), std::move(message), span});
    }
};

struct ValidationOptions {
    // Lenient mode tolerates plain triples inside conjectural graphs.
    bool lenient = false;
};

} // namespace conjectures
