#ifndef RQNS_CATALOG_HPP_
#define RQNS_CATALOG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rqns/finite_semigroup.hpp"
#include "rqns/numerical_semigroup.hpp"

namespace rqns {

// One semigroup of a catalog row, together with its conductor-cut
// quotient.  iso_class numbers the isomorphism classes among quotients of
// the same size within the same row, in first-seen order.
struct TableEntry {
  NumericalSemigroup semigroup;
  bool irreducible;
  FiniteSemigroup quotient;
  int nilpotency_class;
  int iso_class;
};

struct TableRow {
  int64_t frobenius;
  std::vector<TableEntry> entries;  // enumeration order (lex on small elements)
};

struct TableReport {
  int64_t max_frobenius;
  std::vector<TableRow> rows;
};

// All semigroups with Frobenius number 1..max_frobenius, each with its
// quotient by the conductor cut, grouped into isomorphism classes.  Rows
// are built in parallel; the result is deterministic.
TableReport build_table(int64_t max_frobenius);

// The quotients in the report are pairwise isomorphic exactly when they
// share size and nilpotency class; on failure the offending pair.
struct SizeClassFailure {
  NumericalSemigroup a, b;
  bool isomorphic;  // the direction in which the claim broke
};
std::optional<SizeClassFailure> size_class_claim_failure(const TableReport& report);
inline bool verify_size_class_claim(const TableReport& report) {
  return !size_class_claim_failure(report).has_value();
}

// Pairwise isomorphism scan over conductor-cut quotients of all symmetric
// semigroups with Frobenius number up to the bound.  Any collision between
// distinct semigroups is reported.
struct ScanCollision {
  NumericalSemigroup a, b;
};
struct ScanReport {
  int64_t max_frobenius;
  std::vector<NumericalSemigroup> symmetric;
  std::vector<ScanCollision> collisions;
};
ScanReport scan_conjecture_symmetric(int64_t max_frobenius);

// The quotient of <4,11,13,18> cut at its conductor 15 is a nilpotent
// semigroup of size 6 with 3 minimal generators and nilpotency class 4,
// but no irreducible numerical semigroup cut at its conductor produces an
// isomorphic quotient: the candidates are the irreducibles with 6 small
// elements (Frobenius 11 or 12), and the only one whose quotient has class
// 4 has just 2 minimal generators.
struct CounterexampleReport {
  NumericalSemigroup semigroup;
  size_t quotient_size;
  size_t min_generator_count;
  int nilpotency_class;
  std::vector<NumericalSemigroup> candidates;         // irreducible, 6 smalls
  std::vector<NumericalSemigroup> class4_candidates;  // quotient class 4
  bool any_isomorphic;
  bool confirmed;
};
CounterexampleReport verify_non_irreducible_counterexample();

nlohmann::json table_report_to_json(const TableReport& report);
std::string table_report_to_markdown(const TableReport& report);
nlohmann::json scan_report_to_json(const ScanReport& report);
nlohmann::json counterexample_report_to_json(const CounterexampleReport& report);

}  // namespace rqns

#endif  // RQNS_CATALOG_HPP_
