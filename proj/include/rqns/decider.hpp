#ifndef RQNS_DECIDER_HPP_
#define RQNS_DECIDER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rqns/finite_semigroup.hpp"
#include "rqns/ideal.hpp"
#include "rqns/numerical_semigroup.hpp"

namespace rqns {

enum class Verdict { in_class, not_in_class, unknown };
enum class SemigroupClass { CN, CQNS, RQNS, NcapCom };

std::string to_string(Verdict v);
std::string to_string(SemigroupClass c);

// A witnessing (S, I, labeling) triple: mapping each finite element label
// of the input to an integer so that the input is the Rees quotient S/I.
struct Realization {
  NumericalSemigroup semigroup;
  Ideal ideal;
  std::map<std::string, int64_t> labeling;
};

struct Certificate {
  Verdict verdict;
  SemigroupClass class_name;
  std::string reason;                    // set for negative/unknown verdicts
  std::optional<Realization> realization;  // set for positive CN/CQNS/RQNS
  int64_t bound_used = 0;                // label bound, for unknown verdicts

  bool in_class() const { return verdict == Verdict::in_class; }
};

// Membership in N cap Com: commutative and nilpotent.
Certificate check_ncap_com(const FiniteSemigroup& q);

// Fast necessary conditions for RQNS membership: commutative, nilpotent,
// finite-part cancellation.  Returns a negative certificate on failure.
std::optional<Certificate> necessary_conditions_rqns(const FiniteSemigroup& q);

// Bounded semi-decision of RQNS membership: searches injective integer
// labelings of the finite part compatible with the table; a positive
// verdict is re-verified by rebuilding the quotient.  Verdicts are
// in_class, not_in_class (necessary conditions failed) or unknown (label
// bound exhausted; the general question is open).  label_bound <= 0 picks
// the default 4*|Q|^2.
Certificate decide_rqns(const FiniteSemigroup& q, int64_t label_bound = 0);

// Same search restricted to cutting-point realizations: the labels,
// together with everything past the largest one, must form the numerical
// semigroup itself.
Certificate decide_cqns(const FiniteSemigroup& q, int64_t label_bound = 0);

// The two-generator obstruction: two minimal generators with cube zero,
// layer sizes |S^2\S^3| = 2 and |S^3\S^4| = 1, rule out any cutting-point
// realization outright.
std::optional<std::string> cqns_obstruction(const FiniteSemigroup& q);

// Membership in the quotients of N: exactly the monogenic nilpotent
// semigroups (one per size; the trivial semigroup is excluded by the
// proper-ideal convention).
Certificate decide_cn(const FiniteSemigroup& q);

}  // namespace rqns

#endif  // RQNS_DECIDER_HPP_
