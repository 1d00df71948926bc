#pragma once
// Typed error conditions shared across the library.

#include <stdexcept>
#include <string>

namespace conjectures {

enum class Errc {
    ConflictingGraphKind,
    UniquenessViolation,
    DuplicateGraphName,
    PrefixConflict,
    AlreadyConjectural,
    AmbiguousForm,
    NotConjectural,
    MissingForm,
    CycleDetected,
    CyclicNesting,
    UnmappedTerm,
    TooLarge,
    Exhaustion,
    InvalidInterpretation,
    ValidationFailed,
    Io,
};

const char* errc_name(Errc c);

class ConjError : public std::runtime_error {
public:
    ConjError(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace conjectures
