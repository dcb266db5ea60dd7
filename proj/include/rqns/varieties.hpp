#ifndef RQNS_VARIETIES_HPP_
#define RQNS_VARIETIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rqns/finite_semigroup.hpp"

namespace rqns {

// A commutative identity between two words in variables x1..xn, or a
// zero-equation lhs = 0.  Omega exponents are not represented here: on a
// nilpotent semigroup x^omega = 0, so pseudoidentities in scope reduce to
// an Identity plus the nilpotency predicate.
struct Identity {
  std::vector<std::string> variables;
  std::vector<int> lhs;                 // exponents parallel to variables
  std::optional<std::vector<int>> rhs;  // absent for a zero-equation

  bool is_zero_equation() const { return !rhs.has_value(); }
  // Equal exponent vectors on both sides (no semigroup can separate it).
  bool is_trivial() const { return rhs.has_value() && lhs == *rhs; }

  std::string format() const;
  // Accepts e.g. "x^2*y = x*y^2" and "x^3 = 0".
  static Identity parse(const std::string& text);
};

struct IdentityWitness {
  std::vector<size_t> assignment;  // element index per variable
  std::string describe(const Identity& id, const FiniteSemigroup& q) const;
};

// Exhaustive evaluation over all assignments; the witness, when the
// identity fails, is the lexicographically least failing assignment.
std::optional<IdentityWitness> falsifying_assignment(const FiniteSemigroup& q,
                                                     const Identity& id);
inline bool satisfies(const FiniteSemigroup& q, const Identity& id) {
  return !falsifying_assignment(q, id).has_value();
}

// The nilpotency class when the power sets shrink to one element, nullopt
// otherwise.
std::optional<int> nilpotency_class_opt(const FiniteSemigroup& q);

struct SeparationResult {
  int64_t r;  // least r with Q_r = N/I_r falsifying the identity
  IdentityWitness witness;
};

// Least r such that N/I_r fails the identity, found by upward scan capped
// by the sufficiency bound derived from the identity's exponents.  Throws
// TrivialIdentity when no separator can exist.
SeparationResult separating_index(const Identity& id);

// The scan cap used by separating_index, exposed for testing.
int64_t separation_bound(const Identity& id);

}  // namespace rqns

#endif  // RQNS_VARIETIES_HPP_
