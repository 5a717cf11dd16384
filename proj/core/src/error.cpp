#include <subcat/error.hpp>

namespace subcat {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::IdentityLawViolation: return "IdentityLawViolation";
    case ErrorKind::NonComposablePairInTable: return "NonComposablePairInTable";
    case ErrorKind::CompositionEndpointMismatch: return "CompositionEndpointMismatch";
    case ErrorKind::ConflictingComposition: return "ConflictingComposition";
    case ErrorKind::MissingComposition: return "MissingComposition";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::UnmappedObject: return "UnmappedObject";
    case ErrorKind::UnmappedArrow: return "UnmappedArrow";
    case ErrorKind::IdentityNotPreserved: return "IdentityNotPreserved";
    case ErrorKind::CompositionNotPreserved: return "CompositionNotPreserved";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::DuplicateState: return "DuplicateState";
    case ErrorKind::StateTypeMismatch: return "StateTypeMismatch";
    case ErrorKind::NotSubcategorical: return "NotSubcategorical";
    case ErrorKind::MotorMismatch: return "MotorMismatch";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::ClockNotDeterministic: return "ClockNotDeterministic";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::SuccessionViolation: return "SuccessionViolation";
    case ErrorKind::EmptyParameterSet: return "EmptyParameterSet";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::SliceNotSubcategorical: return "SliceNotSubcategorical";
    case ErrorKind::DatationViolation: return "DatationViolation";
    case ErrorKind::NotAnEquivalence: return "NotAnEquivalence";
    case ErrorKind::EmptyInteraction: return "EmptyInteraction";
    case ErrorKind::CoherenceViolation: return "CoherenceViolation";
    case ErrorKind::UnknownRealizationReference: return "UnknownRealizationReference";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::SynchronizationNotDeterministic: return "SynchronizationNotDeterministic";
    case ErrorKind::SynchronizationNotCommuting: return "SynchronizationNotCommuting";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::InternalStabilityCheckFailed: return "InternalStabilityCheckFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::ReferenceCycle: return "ReferenceCycle";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(to_string(kind)) + ": " + message),
    _kind(kind)
{
}

} // namespace subcat
