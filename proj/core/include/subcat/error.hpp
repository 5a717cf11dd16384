#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subcat {

enum class ErrorKind {
    // category / functor
    DuplicateName,
    UnknownObject,
    UnknownArrow,
    DanglingEndpoint,
    MissingIdentity,
    IdentityLawViolation,
    NonComposablePairInTable,
    CompositionEndpointMismatch,
    ConflictingComposition,
    MissingComposition,
    AssociativityViolation,
    EndpointMismatch,
    UnmappedObject,
    UnmappedArrow,
    IdentityNotPreserved,
    CompositionNotPreserved,
    // dynamics
    UnknownState,
    DuplicateState,
    StateTypeMismatch,
    NotSubcategorical,
    MotorMismatch,
    EmptyList,
    // temporal
    ClockNotDeterministic,
    SizeGuardExceeded,
    SuccessionViolation,
    // open
    EmptyParameterSet,
    UnknownParameter,
    SliceNotSubcategorical,
    DatationViolation,
    NotAnEquivalence,
    // family
    EmptyInteraction,
    CoherenceViolation,
    UnknownRealizationReference,
    IndexMismatch,
    SynchronizationNotDeterministic,
    SynchronizationNotCommuting,
    // generation
    PartitionMismatch,
    InternalStabilityCheckFailed,
    // documents / commands
    ParseError,
    UnknownReference,
    ReferenceCycle,
    ValidationError,
    UnknownCommand,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string & message);

    [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

} // namespace subcat
