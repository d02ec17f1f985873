#pragma once

#include <stdexcept>
#include <string>

namespace cwl {

// A leg is used by two chords, or a leg is left unmatched.
struct MatchingError : std::runtime_error {
    explicit MatchingError(const std::string& what) : std::runtime_error(what) {}
};

// Circle/position/chord reference out of range.
struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

// Structurally invalid argument (bad profile, empty subset, ...).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text (PD code, JSON, diagram string).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A computation needs Conway data for a sublink that was not supplied.
struct IncompleteDataError : std::runtime_error {
    explicit IncompleteDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cwl
