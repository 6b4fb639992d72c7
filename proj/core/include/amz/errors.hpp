#pragma once

#include <stdexcept>
#include <string>

namespace amz {

// Thrown when an internal mathematical invariant fails. Reaching one of
// these means a bug in this library, not bad user input.
class invariant_violation : public std::logic_error {
  public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace amz
