#pragma once

#include <stdexcept>
#include <string>

namespace phimat {

// Malformed input text (files, literals). CLI maps this to exit code 3.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An axiom or verification contract failed; the message carries the witness.
// CLI maps this to exit code 2.
struct axiom_error : std::runtime_error {
    explicit axiom_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phimat
