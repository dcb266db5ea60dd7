#ifndef RQNS_ERRORS_HPP_
#define RQNS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rqns {

struct ClosureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAMember : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndefinedForFullSemigroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration or search exceeds its configured limit.
// The bound that was in effect is part of the message.
struct ResourceBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInAmbient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ImproperIdeal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbientMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotNilpotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PresentationMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrivialIdentity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rqns

#endif  // RQNS_ERRORS_HPP_
