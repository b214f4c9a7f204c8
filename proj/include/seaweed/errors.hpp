#pragma once

#include <stdexcept>

namespace seaweed {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input: meander strings, part sets, b-files, tables.
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input outside an operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// Enumeration job exceeding the configured pair budget.
struct BudgetError : Error {
    using Error::Error;
};

// Part set with no registered generating function of the requested kind.
struct UnsupportedFamily : Error {
    using Error::Error;
};

// Remote or cached resource missing; distinct from a value mismatch.
struct UnavailableError : Error {
    using Error::Error;
};

}  // namespace seaweed
