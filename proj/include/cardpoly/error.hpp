#ifndef CARDPOLY_ERROR_HPP
#define CARDPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cardpoly {

/// Raised when an argument violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string &what)
        : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string &what)
        : std::logic_error(what) {}
};

inline void require(bool cond, const std::string &msg)
{
    if (!cond)
        throw InvalidParameter(msg);
}

} // namespace cardpoly

#endif
