// Error taxonomy shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace hbm {

// Unreadable or unsupported file content.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs violate a documented precondition (geometry mismatch, empty mask, ...).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Input would exceed a configured resource cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A filtered complex failed its structural invariants.
struct malformed_complex_error : std::runtime_error {
    explicit malformed_complex_error(const std::string& what) : std::runtime_error(what) {}
};

// Point set too degenerate to triangulate.
struct degenerate_input_error : std::runtime_error {
    explicit degenerate_input_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hbm
