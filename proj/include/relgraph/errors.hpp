#pragma once

#include <stdexcept>
#include <string>

namespace relgraph {

// Raised when a fact the theory guarantees fails to hold at runtime.
// Seeing one of these is always a bug in this library, never a property of
// the input; the CLI maps it to exit code 3.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) {
    throw InternalConsistencyError(what);
  }
}

}  // namespace relgraph
