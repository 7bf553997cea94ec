#pragma once

#include <stdexcept>
#include <string>

namespace contactcalc {

// Root of every error the library throws. Callers that only need a message
// can catch this; the subclasses exist so tests and the CLI can tell failure
// classes apart.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error { using Error::Error; };
class SingularMatrixError : public Error { using Error::Error; };
class ParityError : public Error { using Error::Error; };
class DataError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class ApplicabilityError : public Error { using Error::Error; };
class UnderflowError : public Error { using Error::Error; };
class ResourceError : public Error { using Error::Error; };
class LookupError : public Error { using Error::Error; };
class NonUniqueTopError : public Error { using Error::Error; };

// An internal cross-check disagreed; always indicates a bug or a wrong
// convention, never bad user input.
class InternalConsistencyError : public Error { using Error::Error; };

class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace contactcalc
