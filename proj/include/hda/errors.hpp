#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hda {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto exit codes (input problems → 2, resource bounds → 3).
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed something that does not fit the operation's contract.
class InputError : public Error
{
public:
    using Error::Error;
};

/// Malformed JSON text.
class SyntaxError : public InputError
{
public:
    SyntaxError( const std::string& what, std::size_t line, std::size_t column )
        : InputError( what ), _line{ line }, _column{ column }
    {}

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }

private:
    std::size_t _line;
    std::size_t _column;
};

/// Well-formed text describing an invalid object (dangling id, precubical
/// identity violation, bad label ...). Carries one message per problem.
class SemanticError : public InputError
{
public:
    explicit SemanticError( std::vector<std::string> problems );

    [[nodiscard]] const std::vector<std::string>& problems() const { return _problems; }

private:
    std::vector<std::string> _problems;
};

/// Two consecutive cubes of a would-be cube path are not related by a step.
class PathError : public InputError
{
public:
    PathError( const std::string& what, std::size_t position )
        : InputError( what ), _position{ position }
    {}

    /// 0-based index of the first cube of the offending pair.
    [[nodiscard]] std::size_t position() const { return _position; }

private:
    std::size_t _position;
};

class LabelingError : public InputError
{
public:
    LabelingError( const std::string& what, std::string cube )
        : InputError( what ), _cube{ std::move( cube ) }
    {}

    [[nodiscard]] const std::string& cube() const { return _cube; }

private:
    std::string _cube;
};

class PreconditionError : public InputError
{
public:
    using InputError::InputError;
};

/// A configured size bound (class closure, oracle, unfolding) was hit.
class ResourceError : public Error
{
public:
    using Error::Error;
};

} // namespace hda
