#pragma once

#include <stdexcept>
#include <string>

namespace decount {

enum class ErrorKind
{
    Input,          ///< malformed or invalid user input
    CapExceeded,    ///< pattern or source-set size above the supported cap
    Unsupported,    ///< orientation not handled by the framework and fallback disabled
    Verification,   ///< counting results disagree with a reference
    Invariant       ///< an internal consistency check failed
};

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(message),
        _kind(kind)
    {
    }

    [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

class InputError : public Error
{
public:
    explicit InputError(const std::string & message) : Error(ErrorKind::Input, message) {}
};

class CapExceededError : public Error
{
public:
    explicit CapExceededError(const std::string & message) : Error(ErrorKind::CapExceeded, message) {}
};

class UnsupportedError : public Error
{
public:
    explicit UnsupportedError(const std::string & message) : Error(ErrorKind::Unsupported, message) {}
};

class VerificationError : public Error
{
public:
    explicit VerificationError(const std::string & message) : Error(ErrorKind::Verification, message) {}
};

class InvariantError : public Error
{
public:
    explicit InvariantError(const std::string & message) : Error(ErrorKind::Invariant, message) {}
};

} // namespace decount
