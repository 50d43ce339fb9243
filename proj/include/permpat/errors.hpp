#pragma once

#include <stdexcept>
#include <string>

namespace permpat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// standardize() input has duplicates or is empty.
struct InvalidWindow : Error {
    using Error::Error;
};

/// The optimized counter does not support this pattern length.
struct UnsupportedPattern : Error {
    using Error::Error;
};

/// A closed form was evaluated below its stated domain.
struct DomainError : Error {
    using Error::Error;
};

/// An enumeration request exceeds the configured census ceiling.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// A bijection input fails its class membership precondition.
struct NotInDomain : Error {
    using Error::Error;
};

/// locate_unique found no occurrence (a domain failure for phi/phi_inverse).
struct NoOccurrence : NotInDomain {
    using NotInDomain::NotInDomain;
};

/// locate_unique found two or more occurrences.
struct AmbiguousOccurrence : NotInDomain {
    using NotInDomain::NotInDomain;
};

/// recfit::apply hit a vanishing leading coefficient.
struct SingularLeadingCoefficient : Error {
    using Error::Error;
};

/// The sequence is too short for even the smallest recurrence shape.
struct InsufficientData : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace permpat
