#include <doctest.h>

#include <algorithm>
#include <set>

#include "rqns/errors.hpp"
#include "rqns/numerical_semigroup.hpp"

#include "oracles.hpp"

using rqns::NumericalSemigroup;

TEST_SUITE("numerical_core") {

TEST_CASE("generators determine small elements and notable values") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 5});
  CHECK(s.small_elements() == std::vector<int64_t>{3, 5, 6, 8});
  CHECK(s.frobenius() == 7);
  CHECK(s.conductor() == 8);
  CHECK(s.multiplicity() == 3);
  CHECK(s.embedding_dim() == 2);
  CHECK(s.genus() == 4);

  NumericalSemigroup t = NumericalSemigroup::from_generators({4, 11, 13, 18});
  CHECK(t.small_elements() == std::vector<int64_t>{4, 8, 11, 12, 13, 15});
  CHECK(t.conductor() == 15);
  CHECK(t.min_generators() == std::vector<int64_t>{4, 11, 13, 18});
}

TEST_CASE("generating sets are canonicalized") {
  CHECK(NumericalSemigroup::from_generators({4, 6}) ==
        NumericalSemigroup::from_generators({2, 3}));
  CHECK(NumericalSemigroup::from_generators({2, 3, 4, 7}) ==
        NumericalSemigroup::from_generators({2, 3}));
  CHECK(NumericalSemigroup::naturals().conductor() == 1);
  CHECK(NumericalSemigroup::naturals().min_generators() == std::vector<int64_t>{1});
}

TEST_CASE("membership matches the brute-force expansion") {
  for (const std::vector<int64_t>& gens :
       {std::vector<int64_t>{3, 5}, {2, 5}, {4, 11, 13, 18}, {5, 7, 9},
        {4, 6, 9, 11}, {7, 8, 9, 10, 11, 12, 13}}) {
    NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    std::set<int64_t> naive = oracles::naive_members(gens, 200);
    for (int64_t x = 1; x <= 200; ++x) {
      CAPTURE(x);
      CHECK(s.contains(x) == (naive.count(x) > 0));
    }
  }
}

TEST_CASE("small-element form recovers the generators") {
  NumericalSemigroup s =
      NumericalSemigroup::from_small_elements({3, 6, 8, 9, 11}, 11);
  CHECK(s.min_generators() == std::vector<int64_t>{3, 8, 13});
  CHECK(s.frobenius() == 10);

  NumericalSemigroup t = NumericalSemigroup::from_small_elements({4, 6, 8}, 8);
  CHECK(t == NumericalSemigroup::from_generators({4, 6, 9, 11}));

  CHECK_THROWS_AS(NumericalSemigroup::from_small_elements({2, 5}, 5),
                  rqns::ClosureViolation);
  CHECK_THROWS_AS(NumericalSemigroup::from_small_elements({3, 5}, 6),
                  rqns::ClosureViolation);
}

TEST_CASE("apery sets match the residue scan") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 5});
  CHECK(s.apery_set(3) == std::vector<int64_t>{0, 10, 5});
  CHECK_THROWS_AS(s.apery_set(4), rqns::NotAMember);
  for (const std::vector<int64_t>& gens :
       {std::vector<int64_t>{2, 5}, {4, 11, 13, 18}, {5, 7, 9}}) {
    NumericalSemigroup t = NumericalSemigroup::from_generators(gens);
    for (int64_t n : t.min_generators()) {
      CHECK(t.apery_set(n) == oracles::naive_apery(t, n));
    }
    int64_t m = t.multiplicity();
    auto ap = t.apery_set(m);
    CHECK(*std::max_element(ap.begin(), ap.end()) - m == t.frobenius());
  }
}

TEST_CASE("symmetry predicates match their defining reflections") {
  for (int64_t f = 1; f <= 9; ++f) {
    for (const NumericalSemigroup& s : rqns::enumerate_by_frobenius(f)) {
      CAPTURE(s.small_elements());
      CHECK(s.is_symmetric() == oracles::naive_symmetric(s));
      CHECK(s.is_pseudo_symmetric() == oracles::naive_pseudo_symmetric(s));
      CHECK(s.is_irreducible() == (s.is_symmetric() || s.is_pseudo_symmetric()));
      CHECK(s.genus() == static_cast<int64_t>(oracles::gaps(s).size()));
    }
  }
}

TEST_CASE("enumeration agrees with the subset oracle") {
  for (int64_t f = 1; f <= 9; ++f) {
    std::vector<std::set<int64_t>> expected = oracles::naive_enumerate(f);
    std::vector<NumericalSemigroup> got = rqns::enumerate_by_frobenius(f);
    REQUIRE(got.size() == expected.size());
    std::set<std::vector<int64_t>> got_sets;
    for (const NumericalSemigroup& s : got) {
      CHECK(s.frobenius() == f);
      got_sets.insert(s.small_elements());
    }
    for (const std::set<int64_t>& smalls : expected) {
      std::vector<int64_t> v(smalls.begin(), smalls.end());
      CHECK(got_sets.count(v) == 1);
    }
  }
}

TEST_CASE("parallel and serial enumeration coincide and sort identically") {
  for (int64_t f : {5, 10, 13}) {
    auto par = rqns::enumerate_by_frobenius(f);
    auto ser = rqns::enumerate_by_frobenius_serial(f);
    CHECK(par == ser);
    CHECK(std::is_sorted(par.begin(), par.end()));
  }
}

TEST_CASE("enumeration refuses oversized bounds") {
  CHECK_THROWS_AS(rqns::enumerate_by_frobenius(25), rqns::ResourceBound);
  CHECK_THROWS_AS(rqns::enumerate_by_frobenius(15, 10), rqns::ResourceBound);
}

}  // TEST_SUITE
