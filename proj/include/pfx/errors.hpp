#pragma once

#include <stdexcept>
#include <string>

namespace pfx {

/// Input outside an operation's accepted domain (unknown symbol, bad value).
class RejectedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A stated precondition of an operation does not hold for the given machine.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed automaton or certificate file.  The message names the offending
/// field or line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or subset-construction budget was exceeded.  Always an
/// explicit error, never a silently truncated answer.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Witness-family parameters outside the family's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A searched fixture slot that has not been populated yet.  The message
/// names the search command that produces it.
class UnavailableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pfx
