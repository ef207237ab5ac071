#ifndef OCTO_ERRORS_HPP
#define OCTO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace octo {

// Base class for every error the engine reports.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition: bad argument, mismatched sizes, unsupported type.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Inversion of zero in a division algebra or a zero denominator.
class DivideByZeroError : public DomainError {
public:
    explicit DivideByZeroError(const std::string& what) : DomainError(what) {}
};

// Explicit Weyl group enumeration refused because the predicted order
// exceeds the enumeration cap.
class EnumerationCapError : public Error {
public:
    explicit EnumerationCapError(const std::string& what) : Error(what) {}
};

// Greedy highest-weight stripping found a non-dominant extremal weight:
// the input multiset is not the character of any virtual representation.
class NotACharacterError : public Error {
public:
    explicit NotACharacterError(const std::string& what) : Error(what) {}
};

// A branching projection produced a multiset that is not Weyl-symmetric
// for the target root system.
class InvalidProjectionError : public Error {
public:
    explicit InvalidProjectionError(const std::string& what) : Error(what) {}
};

// A mathematically impossible state; indicates a bug, never user input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

// Bad command-line usage (unknown suite, unknown table name).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace octo

#endif
