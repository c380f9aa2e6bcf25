#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tclose
{
    /// Malformed input text. Carries the 1-based line number when one is known (0 otherwise).
    class ParseError : public std::runtime_error
    {
        private:
            std::size_t _line;

        public:
            ParseError(const std::string & message, std::size_t line = 0);

            auto line() const -> std::size_t
            {
                return _line;
            }
    };

    /// A documented precondition of an operation does not hold, e.g. delta < d0 + d1 + d2.
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An exhaustive routine refused an instance larger than its guard.
    class SizeGuardError : public std::length_error
    {
        public:
            using std::length_error::length_error;
    };
}
