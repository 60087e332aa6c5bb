#pragma once

#include <stdexcept>
#include <string>

namespace jacobsthal
{

    /// Base class for every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Caller supplied an argument outside the operation's domain.
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    class DivisionByZero : public DomainError
    {
    public:
        DivisionByZero() : DomainError("division by zero") {}
    };

    class SingularMatrix : public DomainError
    {
    public:
        SingularMatrix() : DomainError("singular matrix (determinant is zero)") {}
    };

    class UnsupportedSequence : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    class BadRange : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    class UnknownIdentity : public DomainError
    {
    public:
        explicit UnknownIdentity(const std::string &id)
            : DomainError("unknown identity: " + id) {}
    };

    class BadParams : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    /// An internal consistency check failed. These indicate a bug, never bad input.
    class InvariantViolation : public Error
    {
    public:
        using Error::Error;
    };

    /// A cyclotomic evaluation that must land in Q left a nonzero omega component.
    class NonRationalResult : public InvariantViolation
    {
    public:
        explicit NonRationalResult(const std::string &where)
            : InvariantViolation("non-rational result in " + where) {}
    };

} // namespace jacobsthal
