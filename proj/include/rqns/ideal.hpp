#ifndef RQNS_IDEAL_HPP_
#define RQNS_IDEAL_HPP_

#include <cstdint>
#include <vector>

#include "rqns/numerical_semigroup.hpp"

namespace rqns {

// A proper ideal of a numerical semigroup, stored through its minimal ideal
// generating system G, so that I = G + S^0.  Membership is computed, never
// materialized.
class Ideal {
 public:
  // Minimizes gens.  Throws NotInAmbient if some generator is not a member
  // of s, ImproperIdeal if the ideal would be all of s.
  static Ideal from_generators(const NumericalSemigroup& s,
                               std::vector<int64_t> gens);

  // I_k(s) = {x in s : x >= k}.  Throws ImproperIdeal when k <= m(s).
  static Ideal cutting(const NumericalSemigroup& s, int64_t k);

  bool contains(int64_t x) const;

  const NumericalSemigroup& ambient() const { return ambient_; }
  const std::vector<int64_t>& min_generators() const { return min_generators_; }

  bool operator==(const Ideal& other) const {
    return ambient_ == other.ambient_ && min_generators_ == other.min_generators_;
  }

 private:
  Ideal(NumericalSemigroup ambient, std::vector<int64_t> gens)
      : ambient_(std::move(ambient)), min_generators_(std::move(gens)) {}

  NumericalSemigroup ambient_;
  std::vector<int64_t> min_generators_;
};

}  // namespace rqns

#endif  // RQNS_IDEAL_HPP_
