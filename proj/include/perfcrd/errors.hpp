#pragma once
#include <stdexcept>
#include <string>

namespace perfcrd {

// Malformed or inconsistent user input (configs, file formats, CLI args).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration requested on a graph above the node cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite value produced by a numeric primitive; carries the primitive name.
struct NumericError : std::runtime_error {
    std::string primitive;
    NumericError(std::string prim, const std::string& what)
        : std::runtime_error(what), primitive(std::move(prim)) {}
};

}  // namespace perfcrd
