#pragma once

#include <stdexcept>
#include <string>

namespace bier {

/// Raised when an argument violates an operation's precondition
/// (cap violation, non-closed member list, non-edge, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is undefined for its input, e.g. the dual of a
/// full multicomplex or a colon by the zero ideal.
class Undefined : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a size guard refuses work (Hochster vertex limit).
class SizeLimit : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Raised when two independently computed sides of an identity disagree.
/// The message names the identity that failed.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bier
