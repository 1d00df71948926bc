#include "conjectures/error.hpp"

namespace conjectures {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ConflictingGraphKind: return "ConflictingGraphKind";
    case Errc::UniquenessViolation: return "UniquenessViolation";
    case Errc::DuplicateGraphName: return "DuplicateGraphName";
    case Errc::PrefixConflict: return "PrefixConflict";
    case Errc::AlreadyConjectural: return "AlreadyConjectural";
    case Errc::AmbiguousForm: return "AmbiguousForm";
    case Errc::NotConjectural: return "NotConjectural";
    case Errc::MissingForm: return "MissingForm";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::CyclicNesting: return "CyclicNesting";
    case Errc::UnmappedTerm: return "UnmappedTerm";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Exhaustion: return "Exhaustion";
    case Errc::InvalidInterpretation: return "InvalidInterpretation";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

ConjError::ConjError(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

} // namespace conjectures
