#pragma once

#include <stdexcept>
#include <string>

namespace qee {

/// Thrown when a matrix or state violates a numerical invariant it is
/// analytically guaranteed to satisfy (Hermiticity, unitarity, positivity,
/// unit trace, real coherence). Distinct from std::invalid_argument, which
/// is reserved for caller errors such as out-of-range parameters or
/// dimension mismatches.
class invariant_error : public std::runtime_error {
  public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qee
