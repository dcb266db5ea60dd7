#ifndef RQNS_REES_QUOTIENT_HPP_
#define RQNS_REES_QUOTIENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rqns/finite_semigroup.hpp"
#include "rqns/ideal.hpp"
#include "rqns/numerical_semigroup.hpp"

namespace rqns {

// S/I for a proper ideal I of a numerical semigroup S: the members of I
// collapse to a single zero, written "inf"; the finite part keeps its
// integer labels and adds with truncation to infinity.
class ReesQuotient {
 public:
  // Throws AmbientMismatch if ideal.ambient() != s.
  ReesQuotient(const NumericalSemigroup& s, const Ideal& ideal);

  const std::vector<int64_t>& finite_part() const { return finite_part_; }
  const NumericalSemigroup& ambient() const { return ambient_; }
  const Ideal& ideal() const { return ideal_; }

  // The concrete table; finite elements labelled by their decimal value,
  // in increasing order, with "inf" last.
  const FiniteSemigroup& table() const { return table_; }

  // Provenance equality: same ambient semigroup and same ideal.
  bool operator==(const ReesQuotient& other) const {
    return ambient_ == other.ambient_ && ideal_ == other.ideal_;
  }

 private:
  NumericalSemigroup ambient_;
  Ideal ideal_;
  std::vector<int64_t> finite_part_;
  FiniteSemigroup table_;
};

// A numerical semigroup T with rqns(S, I_k) = rqns(T, I_{c(T)}): T = S
// together with everything from k on when k <= c(S), and 2S together with
// everything from 2k on otherwise.
NumericalSemigroup conductor_normalize(const NumericalSemigroup& s, int64_t k);

// The quotient N/I_r directly; allows r = 1 (the trivial semigroup), which
// ReesQuotient itself excludes via the proper-ideal rule.
FiniteSemigroup naturals_quotient(int64_t r);

// Plain-text rendering of a multiplication table in the grid layout used
// for quotients of numerical semigroups.
std::string format_table(const FiniteSemigroup& q);

}  // namespace rqns

#endif  // RQNS_REES_QUOTIENT_HPP_
