#pragma once

#include <stdexcept>
#include <string>

namespace coalloc {

// Thrown when an operation would cross one of the explicit enumeration
// guards (tabular games above 24 players, modularity checks above 16,
// verifier player ranges). Distinct from plain input validation so callers
// can report the two failure classes separately.
class GuardViolation : public std::invalid_argument {
 public:
  explicit GuardViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace coalloc
