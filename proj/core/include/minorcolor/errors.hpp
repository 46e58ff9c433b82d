#pragma once

#include <stdexcept>
#include <string>

namespace minorcolor {

// Precondition violation: unknown vertex, non-edge, modulus mismatch, bad
// color set, malformed input. These are caller bugs or bad data, never
// resource limits.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured budget ran out (term count, search nodes, evaluation points).
// Verifier layers translate this into a SKIP verdict with the reason string;
// it is never swallowed silently.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minorcolor
