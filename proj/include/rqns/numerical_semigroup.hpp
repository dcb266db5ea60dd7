#ifndef RQNS_NUMERICAL_SEMIGROUP_HPP_
#define RQNS_NUMERICAL_SEMIGROUP_HPP_

#include <cstdint>
#include <vector>

namespace rqns {

// A co-finite subsemigroup of the positive integers under addition, in
// canonical form: any generating set is first divided by its gcd, so two
// values are equal exactly when their minimal generating sets are equal.
// The carrier does not contain 0; operations that need the monoid view
// (membership of 0, Apery sets) treat 0 explicitly.
class NumericalSemigroup {
 public:
  // Canonical semigroup generated by gens / gcd(gens).
  static NumericalSemigroup from_generators(std::vector<int64_t> gens);

  // Semigroup whose members are smalls together with every integer >=
  // conductor.  Requires max(smalls) == conductor; throws ClosureViolation
  // if the set is not closed under addition.
  static NumericalSemigroup from_small_elements(std::vector<int64_t> smalls,
                                                int64_t conductor);

  // The full semigroup of positive integers.
  static NumericalSemigroup naturals() { return from_generators({1}); }

  bool contains(int64_t x) const;

  // Least member congruent to i mod n, for each residue i (0 included via
  // the adjoined identity).  Throws NotAMember if n is not a member.
  std::vector<int64_t> apery_set(int64_t n) const;

  bool is_symmetric() const;
  bool is_pseudo_symmetric() const;
  bool is_irreducible() const;

  const std::vector<int64_t>& min_generators() const { return min_generators_; }
  const std::vector<int64_t>& small_elements() const { return small_elements_; }
  int64_t conductor() const { return conductor_; }
  int64_t frobenius() const { return conductor_ - 1; }
  int64_t multiplicity() const { return small_elements_.front(); }
  int64_t embedding_dim() const { return static_cast<int64_t>(min_generators_.size()); }
  int64_t genus() const;

  bool operator==(const NumericalSemigroup& other) const {
    return min_generators_ == other.min_generators_;
  }
  bool operator!=(const NumericalSemigroup& other) const {
    return !(*this == other);
  }
  // Lexicographic on small-element sets; the order used by enumeration.
  bool operator<(const NumericalSemigroup& other) const {
    return small_elements_ < other.small_elements_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<int64_t> min_generators_;
  std::vector<int64_t> small_elements_;  // members <= conductor, increasing
  int64_t conductor_ = 0;
};

// All numerical semigroups with Frobenius number exactly f, in increasing
// lexicographic order of their small-element sets.  Throws ResourceBound if
// f exceeds max_frobenius.  The subset search is OpenMP-parallel; the
// result is schedule-independent.
std::vector<NumericalSemigroup> enumerate_by_frobenius(int64_t f,
                                                       int64_t max_frobenius = 20);

// Serial reference for the enumeration above; kept for testing and for the
// benchmark target.
std::vector<NumericalSemigroup> enumerate_by_frobenius_serial(int64_t f,
                                                              int64_t max_frobenius = 20);

}  // namespace rqns

#endif  // RQNS_NUMERICAL_SEMIGROUP_HPP_
