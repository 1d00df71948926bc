#pragma once

#include <cstddef>

namespace conjectures {

// Byte range plus the 1-based line/column of its start.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    int line = 1;
    int column = 1;

    bool operator==(const SourceSpan&) const = default;
};

} // namespace conjectures
