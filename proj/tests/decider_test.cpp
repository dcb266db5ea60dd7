#include <doctest.h>

#include <string>

#include "rqns/decider.hpp"
#include "rqns/ideal.hpp"
#include "rqns/morphisms.hpp"
#include "rqns/rees_quotient.hpp"

#include "oracles.hpp"

using rqns::Certificate;
using rqns::FiniteSemigroup;
using rqns::Ideal;
using rqns::NumericalSemigroup;
using rqns::ReesQuotient;
using rqns::Verdict;

namespace {

FiniteSemigroup example_3_9() {
  NumericalSemigroup n = NumericalSemigroup::from_generators({3, 5});
  return ReesQuotient(n, Ideal::from_generators(n, {6})).table();
}

FiniteSemigroup collapsed_quotient() {
  NumericalSemigroup n = NumericalSemigroup::from_generators({4, 5});
  ReesQuotient s(n, Ideal::cutting(n, 12));
  const FiniteSemigroup& q = s.table();
  return rqns::quotient_by_congruence(q, {{*q.index_of("9"), *q.index_of("10")}});
}

FiniteSemigroup product_of_quotients() {
  NumericalSemigroup n1 = NumericalSemigroup::from_generators({2, 5});
  NumericalSemigroup n2 = NumericalSemigroup::from_generators({2, 7});
  ReesQuotient s(n1, Ideal::cutting(n1, 4));
  ReesQuotient t(n2, Ideal::cutting(n2, 6));
  return rqns::direct_product(s.table(), t.table());
}

// Rebuild the certified realization and compare against the input table.
bool realization_checks(const FiniteSemigroup& q, const Certificate& cert) {
  if (!cert.realization) {
    return false;
  }
  ReesQuotient rebuilt(cert.realization->semigroup, cert.realization->ideal);
  return rqns::brute_force_isomorphic(q, rebuilt.table()).has_value();
}

}  // namespace

TEST_SUITE("decider") {

TEST_CASE("commutative nilpotent membership") {
  CHECK(rqns::check_ncap_com(collapsed_quotient()).in_class());
  CHECK(rqns::check_ncap_com(product_of_quotients()).in_class());

  FiniteSemigroup monoid({"e", "0"}, 1, {{0, 1}, {1, 1}});
  Certificate c = rqns::check_ncap_com(monoid);
  CHECK(c.verdict == Verdict::not_in_class);
  CHECK(c.reason.find("idempotent") != std::string::npos);
}

TEST_CASE("necessary conditions catch both classic failures") {
  auto c1 = rqns::necessary_conditions_rqns(collapsed_quotient());
  REQUIRE(c1.has_value());
  CHECK(c1->verdict == Verdict::not_in_class);
  CHECK(c1->reason.find("cancellation") != std::string::npos);

  auto c2 = rqns::necessary_conditions_rqns(product_of_quotients());
  REQUIRE(c2.has_value());
  CHECK(c2->reason.find("cancellation") != std::string::npos);

  CHECK_FALSE(rqns::necessary_conditions_rqns(example_3_9()).has_value());
}

TEST_CASE("realization search certifies the two-generator quotient") {
  Certificate c = rqns::decide_rqns(example_3_9());
  REQUIRE(c.verdict == Verdict::in_class);
  CHECK(realization_checks(example_3_9(), c));

  Certificate no = rqns::decide_rqns(collapsed_quotient());
  CHECK(no.verdict == Verdict::not_in_class);
}

TEST_CASE("abstract relabelings are still recognized") {
  // The 4-element table with x + x = y and every other sum infinite on
  // the generators x, z: realized by <2,5> mod {6,7} among others.
  FiniteSemigroup q({"x", "y", "z", "w"}, 3,
                    {{1, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}});
  Certificate c = rqns::decide_rqns(q);
  REQUIRE(c.verdict == Verdict::in_class);
  CHECK(realization_checks(q, c));
  CHECK(c.realization->labeling.size() == 3);
}

TEST_CASE("cutting-point decisions") {
  Certificate no = rqns::decide_cqns(example_3_9());
  CHECK(no.verdict == Verdict::not_in_class);
  CHECK(no.reason.find("cube") != std::string::npos);

  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 5});
  ReesQuotient cut10(s, Ideal::cutting(s, 10));
  Certificate yes = rqns::decide_cqns(cut10.table());
  REQUIRE(yes.verdict == Verdict::in_class);
  CHECK(realization_checks(cut10.table(), yes));
  // The realization must itself be a cutting ideal: everything from its
  // least generator on.
  const auto& r = *yes.realization;
  CHECK(r.ideal == Ideal::cutting(r.semigroup, r.ideal.min_generators().front()));

  Certificate mono = rqns::decide_cqns(rqns::naturals_quotient(4));
  CHECK(mono.verdict == Verdict::in_class);
}

TEST_CASE("obstruction pattern matching") {
  CHECK(rqns::cqns_obstruction(example_3_9()).has_value());
  CHECK_FALSE(rqns::cqns_obstruction(rqns::naturals_quotient(5)).has_value());
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 5});
  ReesQuotient q(s, Ideal::from_generators(s, {6, 7}));
  CHECK_FALSE(rqns::cqns_obstruction(q.table()).has_value());
}

TEST_CASE("monogenic quotients of the naturals") {
  Certificate yes = rqns::decide_cn(rqns::naturals_quotient(4));
  REQUIRE(yes.verdict == Verdict::in_class);
  CHECK(yes.realization->semigroup == NumericalSemigroup::naturals());
  CHECK(realization_checks(rqns::naturals_quotient(4), yes));

  // Two minimal generators: in CQNS but not in the monogenic chain.
  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 5});
  FiniteSemigroup cut = oracles::conductor_cut(s);
  CHECK(rqns::decide_cn(cut).verdict == Verdict::not_in_class);
  CHECK(rqns::decide_cqns(cut).verdict == Verdict::in_class);

  CHECK(rqns::decide_cn(example_3_9()).verdict == Verdict::not_in_class);
}

TEST_CASE("the trivial table is excluded by convention") {
  FiniteSemigroup trivial({"inf"}, 0, {{0}});
  CHECK(rqns::decide_rqns(trivial).verdict == Verdict::not_in_class);
  CHECK(rqns::decide_cqns(trivial).verdict == Verdict::not_in_class);
  CHECK(rqns::decide_cn(trivial).verdict == Verdict::not_in_class);
  CHECK(rqns::check_ncap_com(trivial).in_class());
}

TEST_CASE("chain coherence on small conductor cuts") {
  for (int64_t f = 2; f <= 6; ++f) {
    for (const NumericalSemigroup& s : rqns::enumerate_by_frobenius(f)) {
      if (s.conductor() <= s.multiplicity()) {
        continue;
      }
      FiniteSemigroup q = oracles::conductor_cut(s);
      Certificate cn = rqns::decide_cn(q);
      Certificate cq = rqns::decide_cqns(q);
      Certificate rq = rqns::decide_rqns(q);
      CAPTURE(s.small_elements());
      CHECK(cq.verdict == Verdict::in_class);
      CHECK(rq.verdict == Verdict::in_class);
      if (cn.verdict == Verdict::in_class) {
        CHECK(cq.verdict == Verdict::in_class);
      }
      CHECK(realization_checks(q, rq));
      CHECK(realization_checks(q, cq));
    }
  }
}

}  // TEST_SUITE
