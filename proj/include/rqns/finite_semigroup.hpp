#ifndef RQNS_FINITE_SEMIGROUP_HPP_
#define RQNS_FINITE_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rqns {

// A finite semigroup with zero, given by an element list and a
// multiplication table of element indices.  Labels are opaque strings.
// Associativity and the absorbing law are checked eagerly on construction
// (sizes here are tiny, the cubic check is nothing).  Commutativity is a
// predicate, not an assumption.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::string> elements, size_t zero_index,
                  std::vector<std::vector<int>> table);

  size_t size() const { return elements_.size(); }
  size_t zero() const { return zero_; }
  int product(size_t i, size_t j) const { return table_[i][j]; }
  const std::string& label(size_t i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  // Index of the element with the given label, if any.
  std::optional<size_t> index_of(const std::string& label) const;

  bool is_commutative() const;
  // A witness pair (i, j) with ij != ji, when not commutative.
  std::optional<std::pair<size_t, size_t>> commutativity_witness() const;

  bool operator==(const FiniteSemigroup& other) const {
    return elements_ == other.elements_ && zero_ == other.zero_ &&
           table_ == other.table_;
  }

 private:
  std::vector<std::string> elements_;
  size_t zero_;
  std::vector<std::vector<int>> table_;
};

// Least n with |Q^n| = 1.  Throws NotNilpotent if the powers stabilize
// above one element.
int nilpotency_class(const FiniteSemigroup& q);

// Q^i as a set of element indices (i >= 1; Q^1 is everything).
std::set<size_t> power_layer(const FiniteSemigroup& q, int i);

// The indecomposable non-zero elements: those not appearing in the table
// body.  For a nilpotent semigroup this is its minimal generating system.
std::vector<size_t> minimal_generating_system(const FiniteSemigroup& q);

struct CancellationWitness {
  size_t a, b, c;  // a*b == a*c != zero, b != c
};

// Finite-part cancellation check; a witness is returned on failure.
std::optional<CancellationWitness> cancellation_witness(const FiniteSemigroup& q);
inline bool cancellation_holds(const FiniteSemigroup& q) {
  return !cancellation_witness(q).has_value();
}

// Componentwise product; elements are labelled "(x,y)" and the zero is the
// pair of zeros.
FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b);

// Quotient by the smallest congruence containing the given pairs of
// element indices.  Singleton classes keep their label; larger classes are
// labelled "{l1,l2,...}"; the class of the zero becomes the zero.
FiniteSemigroup quotient_by_congruence(
    const FiniteSemigroup& q, const std::vector<std::pair<size_t, size_t>>& pairs);

}  // namespace rqns

#endif  // RQNS_FINITE_SEMIGROUP_HPP_
