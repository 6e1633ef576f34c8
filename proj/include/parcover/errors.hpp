#ifndef PARCOVER_ERRORS_HPP
#define PARCOVER_ERRORS_HPP

#include <stdexcept>

namespace parcover {

// Thrown when an enumeration would run over a degree above the configured cap.
struct DegreeCapError : std::runtime_error {
  DegreeCapError(int degree, int cap);

  int degree;
  int cap;
};

// An internal consistency check failed. Valid inputs can never trigger this;
// it signals a bug (or corrupted data), not a user error.
struct SelfCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace parcover

#endif
