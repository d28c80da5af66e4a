#pragma once

#include <stdexcept>
#include <string>

namespace mdlie {

/// Malformed user input: bad indices, duplicate brackets, unparsable numbers.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that violates its precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The algebra fails the Jacobi identity where a Lie algebra is required.
class NotLieAlgebraError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The algebra is a Lie algebra but its derived series does not reach zero.
class NotSolvableError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace mdlie
