#include <doctest.h>

#include <set>

#include "rqns/errors.hpp"
#include "rqns/finite_semigroup.hpp"
#include "rqns/ideal.hpp"
#include "rqns/rees_quotient.hpp"

#include "oracles.hpp"

using rqns::FiniteSemigroup;
using rqns::Ideal;
using rqns::NumericalSemigroup;
using rqns::ReesQuotient;

namespace {

FiniteSemigroup left_zero_with_zero() {
  // x*y = x on {a,b}, with an absorbing zero adjoined.
  return FiniteSemigroup({"a", "b", "0"}, 2, {{0, 0, 2}, {1, 1, 2}, {2, 2, 2}});
}

}  // namespace

TEST_SUITE("finite_semigroups") {

TEST_CASE("construction validates the table") {
  CHECK_THROWS_AS(FiniteSemigroup({"a"}, 0, {{0, 0}}), rqns::InvalidTable);
  CHECK_THROWS_AS(FiniteSemigroup({"a", "0"}, 1, {{0, 0}, {1, 5}}),
                  rqns::InvalidTable);
  // Zero must absorb.
  CHECK_THROWS_AS(FiniteSemigroup({"a", "0"}, 1, {{1, 1}, {1, 0}}),
                  rqns::InvalidTable);
  // Associativity: x*(y*y) != (x*y)*y.
  CHECK_THROWS_AS(FiniteSemigroup({"a", "b", "0"}, 2,
                                  {{1, 2, 2}, {2, 0, 2}, {2, 2, 2}}),
                  rqns::InvalidTable);
}

TEST_CASE("commutativity witnesses") {
  FiniteSemigroup lz = left_zero_with_zero();
  CHECK_FALSE(lz.is_commutative());
  auto w = lz.commutativity_witness();
  REQUIRE(w.has_value());
  CHECK(lz.product(w->first, w->second) != lz.product(w->second, w->first));
  CHECK(rqns::naturals_quotient(5).is_commutative());
}

TEST_CASE("nilpotency class and power layers") {
  CHECK_THROWS_AS(rqns::nilpotency_class(left_zero_with_zero()),
                  rqns::NotNilpotent);
  for (int64_t r = 1; r <= 8; ++r) {
    FiniteSemigroup q = rqns::naturals_quotient(r);
    CHECK(rqns::nilpotency_class(q) == r);
    CHECK(oracles::naive_nilpotency_class(q) == r);
  }

  NumericalSemigroup n = NumericalSemigroup::from_generators({3, 5});
  ReesQuotient s(n, Ideal::from_generators(n, {6}));
  const FiniteSemigroup& q = s.table();
  CHECK(rqns::power_layer(q, 2).size() == 4);   // 8, 10, 13, inf
  CHECK(rqns::power_layer(q, 3).size() == 2);   // 13, inf
  CHECK(rqns::power_layer(q, 4).size() == 1);
  CHECK(rqns::power_layer(q, 2).size() - rqns::power_layer(q, 3).size() == 2);
  CHECK(rqns::power_layer(q, 3).size() - rqns::power_layer(q, 4).size() == 1);
}

TEST_CASE("minimal generating system is the set of indecomposables") {
  NumericalSemigroup n = NumericalSemigroup::from_generators({3, 5});
  ReesQuotient s(n, Ideal::from_generators(n, {6}));
  std::vector<std::string> labels;
  for (size_t g : rqns::minimal_generating_system(s.table())) {
    labels.push_back(s.table().label(g));
  }
  CHECK(labels == std::vector<std::string>{"3", "5"});
  CHECK(rqns::minimal_generating_system(rqns::naturals_quotient(6)).size() == 1);
}

TEST_CASE("congruence quotient breaks cancellation as in the homomorphic image") {
  NumericalSemigroup n = NumericalSemigroup::from_generators({4, 5});
  ReesQuotient s(n, Ideal::cutting(n, 12));
  const FiniteSemigroup& q = s.table();
  CHECK(s.finite_part() == std::vector<int64_t>{4, 5, 8, 9, 10});
  CHECK(rqns::cancellation_holds(q));

  size_t e9 = *q.index_of("9");
  size_t e10 = *q.index_of("10");
  FiniteSemigroup quot = rqns::quotient_by_congruence(q, {{e9, e10}});
  REQUIRE(quot.size() == 5);
  CHECK(quot.index_of("{9,10}").has_value());

  // 4 + 5 and 5 + 5 collapse to the merged class: cancellation fails.
  size_t a4 = *quot.index_of("4");
  size_t a5 = *quot.index_of("5");
  CHECK(quot.product(a5, a4) == quot.product(a5, a5));
  auto w = rqns::cancellation_witness(quot);
  REQUIRE(w.has_value());
  CHECK(quot.product(w->a, w->b) == quot.product(w->a, w->c));
  CHECK(static_cast<size_t>(quot.product(w->a, w->b)) != quot.zero());
  CHECK(w->b != w->c);
}

TEST_CASE("congruence closure matches the naive fixpoint") {
  FiniteSemigroup q = rqns::naturals_quotient(7);
  for (std::pair<size_t, size_t> seed :
       {std::pair<size_t, size_t>{1, 2}, {0, 3}, {4, 5}}) {
    std::vector<size_t> naive = oracles::naive_congruence(q, {seed});
    FiniteSemigroup quot = rqns::quotient_by_congruence(q, {seed});
    std::set<size_t> classes(naive.begin(), naive.end());
    CHECK(quot.size() == classes.size());
  }
}

TEST_CASE("direct product of quotients need not cancel") {
  NumericalSemigroup n1 = NumericalSemigroup::from_generators({2, 5});
  NumericalSemigroup n2 = NumericalSemigroup::from_generators({2, 7});
  ReesQuotient s(n1, Ideal::cutting(n1, 4));
  ReesQuotient t(n2, Ideal::cutting(n2, 6));
  CHECK(s.finite_part() == std::vector<int64_t>{2});
  CHECK(t.finite_part() == std::vector<int64_t>{2, 4});

  FiniteSemigroup p = rqns::direct_product(s.table(), t.table());
  REQUIRE(p.size() == 6);
  size_t a = *p.index_of("(2,2)");
  size_t b = *p.index_of("(inf,2)");
  size_t ab = *p.index_of("(inf,4)");
  CHECK(static_cast<size_t>(p.product(a, a)) == ab);
  CHECK(static_cast<size_t>(p.product(a, b)) == ab);
  CHECK(static_cast<size_t>(p.product(b, b)) == ab);
  CHECK_FALSE(rqns::cancellation_holds(p));
  CHECK(p.is_commutative());
  CHECK(rqns::nilpotency_class(p) > 0);
}

}  // TEST_SUITE
