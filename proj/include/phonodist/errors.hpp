#pragma once

#include <stdexcept>
#include <string>

namespace phonodist {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (inventory tables, sequence notation, automaton
// files, weight profiles, names). CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input that violates a domain invariant
// (duplicate symbols, vowel with a place value, dangling pinning). CLI
// exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// Operands drawn from different inventories.
struct MixedInventoryError : Error {
    using Error::Error;
};

// A configurable budget (product-state limit) was exceeded. CLI exit
// code 3.
struct ResourceLimitError : Error {
    using Error::Error;
};

}  // namespace phonodist
