#pragma once

#include "nichols/braiding.hpp"

#include <stdexcept>
#include <string>

namespace nichols {

/// Raised on malformed braiding documents, with a human-readable location.
class SpecError : public std::runtime_error {
public:
  explicit SpecError(const std::string& message) : std::runtime_error(message) {}
};

/// Parses {"n":..., "conductor":..., "exponents":[[...]]} with optional
/// "cap" and "labels".
BraidingSpec load_spec(const std::string& path);
BraidingSpec parse_spec_json(const std::string& text);

/// Serialization used by --json reports.
std::string spec_to_json(const BraidingSpec& spec);

}  // namespace nichols
