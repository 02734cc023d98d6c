#ifndef RCV_ERRORS_HPP
#define RCV_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rcv {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input data; message names the offending row where applicable.
class ParseError : public Error {
public:
    using Error::Error;
};

// Schema file references a column that does not exist, or is itself invalid.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A ballot references a candidate outside the profile roster.
class RosterError : public Error {
public:
    using Error::Error;
};

// Elimination tie under TiePolicy::error_on_tie; carries the tied candidates.
class TieError : public Error {
public:
    TieError(const std::string &msg, std::vector<std::string> tied)
        : Error(msg), tied_candidates(std::move(tied)) {}
    std::vector<std::string> tied_candidates;
};

// Tabulation requested on a profile with no first-place votes at all.
class NoVotesError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace rcv

#endif
