#ifndef HOMCALC_ERRORS_HPP
#define HOMCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcalc
{

/// Base class of every exception raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Operands do not share a variable list, rank, dimension or arity.
class StructureError : public Error
{
public:
    using Error::Error;
};

/// An operation was called on data that violates its stated precondition
/// (singular matrix, non-involutive base, wrong definition variant, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Malformed textual input. `position()` is a 0-based character offset into
/// the string that failed to parse.
class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), m_detail(what),
          m_position(position)
    {
    }

    /// The message without the position suffix.
    const std::string &detail() const noexcept
    {
        return m_detail;
    }

    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::string m_detail;
    std::size_t m_position;
};

} // namespace homcalc

#endif
