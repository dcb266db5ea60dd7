#ifndef RQNS_MORPHISMS_HPP_
#define RQNS_MORPHISMS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rqns/finite_semigroup.hpp"
#include "rqns/presentation.hpp"

namespace rqns {

// A total map between two finite semigroups, stored as source index ->
// target index.
struct SemigroupMap {
  std::vector<size_t> assignment;

  // Label form, e.g. {"2":"3","4":"6","5":"5","inf":"inf"}.
  std::map<std::string, std::string> by_label(const FiniteSemigroup& source,
                                              const FiniteSemigroup& target) const;

  bool operator==(const SemigroupMap& other) const {
    return assignment == other.assignment;
  }
  bool operator<(const SemigroupMap& other) const {
    return assignment < other.assignment;
  }
};

// Exhaustive pair check of f(xy) = f(x)f(y).
bool is_homomorphism(const SemigroupMap& f, const FiniteSemigroup& a,
                     const FiniteSemigroup& b);

// All isomorphisms a -> b obtained by extending bijections between the
// minimal generating systems that satisfy the relations of p, where p is a
// presentation of a over its minimal generating system with generators
// named by a's element labels (see table_presentation).  Returns the empty
// set immediately when |a| != |b|.  Results in deterministic order.
// Throws PresentationMismatch when p's generators are not exactly the
// labels of a's minimal generating system.
std::vector<SemigroupMap> isomorphisms_via_generators(const FiniteSemigroup& a,
                                                      const FiniteSemigroup& b,
                                                      const Presentation& p);

// Convenience overload computing the presentation itself.
std::vector<SemigroupMap> isomorphisms_via_generators(const FiniteSemigroup& a,
                                                      const FiniteSemigroup& b);

// All automorphisms of a; always contains the identity.
std::vector<SemigroupMap> automorphism_group(const FiniteSemigroup& a);

// Backtracking search over element bijections, used as an independent
// oracle for the generator-based search.  Throws ResourceBound when either
// semigroup is larger than size_limit.
std::optional<SemigroupMap> brute_force_isomorphic(const FiniteSemigroup& a,
                                                   const FiniteSemigroup& b,
                                                   size_t size_limit = 12);

}  // namespace rqns

#endif  // RQNS_MORPHISMS_HPP_
