#pragma once

#include <stdexcept>

namespace ramsey {

// input shape cannot guarantee the procedure succeeds
struct ShapeTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a guaranteed step failed anyway; always an implementation bug
struct InternalContradiction : std::logic_error {
  using std::logic_error::logic_error;
};

struct EnumerationGuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// no placement of the requested index pattern fits the family at all
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// placements exist but none is monochromatic; legitimate under truncation
struct NotFoundWithinDepth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dense embedding ran out of source blocks
struct InsufficientMaterial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ramsey
