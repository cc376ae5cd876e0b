#pragma once

#include <stdexcept>

namespace wythoff {

/// A complex, graph or certificate violates one of its structural invariants.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or search cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request names something outside the supported families.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wythoff
