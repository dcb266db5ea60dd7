#ifndef RQNS_PRESENTATION_HPP_
#define RQNS_PRESENTATION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rqns/finite_semigroup.hpp"
#include "rqns/ideal.hpp"
#include "rqns/numerical_semigroup.hpp"

namespace rqns {

// A commutative word: generator label -> positive exponent.  Zero exponents
// are never stored; the empty map never denotes a valid word side.
using CommutativeWord = std::map<std::string, int>;

int degree(const CommutativeWord& w);
std::string format_word(const CommutativeWord& w);

// Presentation of a commutative semigroup, optionally with zero-relations
// w = 0.  Plain numerical-semigroup presentations have no zero-relations.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<CommutativeWord, CommutativeWord>> relations;
  std::vector<CommutativeWord> zero_relations;

  std::string format() const;  // "<a,b | a^5=b^2, a^3=0>"
};

// A minimal presentation of S over its minimal generators (named a, b,
// c, ... in increasing generator order), computed from factorization
// graphs: one relation per extra connected component of the graph of
// factorizations of each element.
Presentation minimal_presentation(const NumericalSemigroup& s);

// Presentation with zero of S/I over the full minimal generating system X
// of S: the relations of S plus w_g = 0 for each minimal ideal generator
// g, where w_g is the lexicographically smallest factorization of g.
Presentation quotient_presentation(const NumericalSemigroup& s, const Ideal& ideal);

// Presentation of S/I over the minimal generating system X \ I of the
// quotient: relations with both sides over X \ I survive, one-sided
// relations collapse to u = 0, and zero-relations remain only for ideal
// generators outside X.
Presentation reduced_quotient_presentation(const NumericalSemigroup& s,
                                           const Ideal& ideal);

// The semigroup presented by p (which must include enough zero-relations
// to be nilpotent), materialized by breadth-first closure over exponent
// vectors.  Throws SizeBoundExceeded when more than size_bound classes (or
// unboundedly deep words) appear.  Elements are labelled by their
// lexicographically least representative word; the zero is labelled "0".
FiniteSemigroup semigroup_from_presentation(const Presentation& p, int size_bound);

// The multiplication-table presentation of a finite nilpotent semigroup
// over its minimal generating system, with generators named by element
// labels.  Used by the generator-bijection isomorphism search.
Presentation table_presentation(const FiniteSemigroup& q);

// All factorizations of n over gens, as exponent vectors parallel to gens,
// in increasing lexicographic order.
std::vector<std::vector<int>> integer_factorizations(int64_t n,
                                                     const std::vector<int64_t>& gens);

}  // namespace rqns

#endif  // RQNS_PRESENTATION_HPP_
