#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnmm
{

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2 (usage / input error).
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error
{
    std::size_t _line;
    std::size_t _column;

public:
    parse_error( const std::string& message, std::size_t line, std::size_t column );

    // 1-based position of the offending character.
    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }
};

class dimension_error : public error
{
public:
    using error::error;
};

// An operation was asked to run above its configured dimension cap.
class cap_exceeded : public error
{
    std::string _operation;
    int _cap;
    int _requested;

public:
    cap_exceeded( std::string operation, int cap, int requested );

    [[nodiscard]] const std::string& operation() const { return _operation; }
    [[nodiscard]] int cap() const { return _cap; }
    [[nodiscard]] int requested() const { return _requested; }
};

class invalid_argument : public error
{
public:
    using error::error;
};

} // namespace bnmm
