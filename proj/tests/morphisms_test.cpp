#include <doctest.h>

#include <map>

#include "rqns/errors.hpp"
#include "rqns/ideal.hpp"
#include "rqns/morphisms.hpp"
#include "rqns/presentation.hpp"
#include "rqns/rees_quotient.hpp"

#include "oracles.hpp"

using rqns::Ideal;
using rqns::NumericalSemigroup;
using rqns::ReesQuotient;
using rqns::SemigroupMap;

namespace {

rqns::FiniteSemigroup q1_table() {
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 5});
  return ReesQuotient(s, Ideal::from_generators(s, {6, 7})).table();
}

rqns::FiniteSemigroup q2_table() {
  NumericalSemigroup t = NumericalSemigroup::from_generators({3, 5});
  return ReesQuotient(t, Ideal::from_generators(t, {8, 9, 10})).table();
}

}  // namespace

TEST_SUITE("morphisms") {

TEST_CASE("the classic pair of quotients is isomorphic by the expected map") {
  rqns::FiniteSemigroup a = q1_table();
  rqns::FiniteSemigroup b = q2_table();
  auto maps = rqns::isomorphisms_via_generators(a, b);
  REQUIRE(maps.size() == 1);
  std::map<std::string, std::string> expected{
      {"2", "3"}, {"4", "6"}, {"5", "5"}, {"inf", "inf"}};
  CHECK(maps[0].by_label(a, b) == expected);
  CHECK(rqns::is_homomorphism(maps[0], a, b));
  CHECK(rqns::brute_force_isomorphic(a, b).has_value());
}

TEST_CASE("size or generator mismatches yield no isomorphism") {
  rqns::FiniteSemigroup a = q1_table();
  CHECK(rqns::isomorphisms_via_generators(a, rqns::naturals_quotient(5)).empty());
  // Same size, different number of minimal generators.
  rqns::FiniteSemigroup c = rqns::naturals_quotient(4);
  CHECK(rqns::isomorphisms_via_generators(a, c).empty());
  CHECK_FALSE(rqns::brute_force_isomorphic(a, c).has_value());
}

TEST_CASE("automorphism groups") {
  for (int64_t r : {2, 4, 6}) {
    auto auts = rqns::automorphism_group(rqns::naturals_quotient(r));
    REQUIRE(auts.size() == 1);  // identity only
    for (size_t i = 0; i < auts[0].assignment.size(); ++i) {
      CHECK(auts[0].assignment[i] == i);
    }
  }
  // A null semigroup of rank 2: both generators interchangeable.
  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 4});
  ReesQuotient q(s, Ideal::cutting(s, s.conductor()));
  CHECK(q.finite_part() == std::vector<int64_t>{3, 4});
  CHECK(rqns::automorphism_group(q.table()).size() == 2);
}

TEST_CASE("presentation generators must match the source") {
  rqns::FiniteSemigroup a = q1_table();
  rqns::Presentation wrong;
  wrong.generators = {"x", "y"};
  CHECK_THROWS_AS(rqns::isomorphisms_via_generators(a, a, wrong),
                  rqns::PresentationMismatch);
}

TEST_CASE("the brute-force oracle refuses oversized inputs") {
  CHECK_THROWS_AS(
      rqns::brute_force_isomorphic(rqns::naturals_quotient(14),
                                   rqns::naturals_quotient(14)),
      rqns::ResourceBound);
}

TEST_CASE("generator search and brute force agree on mixed pairs") {
  std::vector<rqns::FiniteSemigroup> tables;
  for (int64_t f = 3; f <= 7; ++f) {
    for (const NumericalSemigroup& s : rqns::enumerate_by_frobenius(f)) {
      if (s.conductor() > s.multiplicity()) {
        tables.push_back(oracles::conductor_cut(s));
      }
    }
  }
  for (size_t i = 0; i < tables.size(); ++i) {
    for (size_t j = i; j < tables.size(); ++j) {
      if (tables[i].size() != tables[j].size()) {
        continue;
      }
      bool fancy = !rqns::isomorphisms_via_generators(tables[i], tables[j]).empty();
      bool brute = rqns::brute_force_isomorphic(tables[i], tables[j]).has_value();
      CAPTURE(i);
      CAPTURE(j);
      CHECK(fancy == brute);
      if (i == j) {
        CHECK(fancy);
      }
    }
  }
}

}  // TEST_SUITE
