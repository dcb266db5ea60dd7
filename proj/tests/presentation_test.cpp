#include <doctest.h>

#include <algorithm>

#include "rqns/errors.hpp"
#include "rqns/ideal.hpp"
#include "rqns/morphisms.hpp"
#include "rqns/presentation.hpp"
#include "rqns/rees_quotient.hpp"

#include "oracles.hpp"

using rqns::CommutativeWord;
using rqns::Ideal;
using rqns::NumericalSemigroup;
using rqns::Presentation;
using rqns::ReesQuotient;

TEST_SUITE("presentations") {

TEST_CASE("word formatting") {
  CommutativeWord w{{"a", 2}, {"b", 1}};
  CHECK(rqns::degree(w) == 3);
  CHECK(rqns::format_word(w) == "a^2*b");
  CHECK(rqns::format_word(CommutativeWord{{"x", 1}}) == "x");
}

TEST_CASE("minimal presentations of two-generator semigroups") {
  Presentation p = rqns::minimal_presentation(NumericalSemigroup::from_generators({3, 5}));
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relations.size() == 1);
  CHECK(p.zero_relations.empty());
  CHECK(p.format() == "<a,b | a^5=b^3>");

  Presentation q = rqns::minimal_presentation(NumericalSemigroup::from_generators({2, 5}));
  CHECK(q.format() == "<a,b | a^5=b^2>");
}

TEST_CASE("relation sides are factorizations of a common value") {
  for (const std::vector<int64_t>& gens :
       {std::vector<int64_t>{4, 11, 13, 18}, {3, 7, 8}, {5, 6, 9}}) {
    NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    Presentation p = rqns::minimal_presentation(s);
    for (const auto& [u, v] : p.relations) {
      int64_t lu = 0, lv = 0;
      for (const auto& [name, e] : u) {
        lu += e * gens[static_cast<size_t>(name[0] - 'a')];
      }
      for (const auto& [name, e] : v) {
        lv += e * gens[static_cast<size_t>(name[0] - 'a')];
      }
      CHECK(lu == lv);
      CHECK(u != v);
    }
  }
}

TEST_CASE("relation count stays under the multiplicity bound") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({4, 11, 13, 18});
  Presentation p = rqns::minimal_presentation(s);
  int64_t m = s.multiplicity(), e = s.embedding_dim();
  CHECK(static_cast<int64_t>(p.relations.size()) <=
        (2 * m - e + 1) * (e - 2) / 2 + 1);
}

TEST_CASE("quotient presentation adds zero words for ideal generators") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 5});
  Presentation p = rqns::quotient_presentation(s, Ideal::from_generators(s, {6, 7}));
  CHECK(p.format() == "<a,b | a^5=b^2, a^3=0, a*b=0>");
}

TEST_CASE("reduced presentation lives on the finite part generators") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 5});
  Presentation p =
      rqns::reduced_quotient_presentation(s, Ideal::from_generators(s, {6}));
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  CHECK(p.format() == "<a,b | a^5=b^3, a^2=0>");

  NumericalSemigroup t = NumericalSemigroup::from_generators({2, 5});
  Presentation q =
      rqns::reduced_quotient_presentation(t, Ideal::from_generators(t, {5}));
  CHECK(q.generators == std::vector<std::string>{"a"});
  CHECK(q.relations.empty());
  REQUIRE(q.zero_relations.size() == 1);
  CHECK(rqns::format_word(q.zero_relations[0]) == "a^5");
}

TEST_CASE("materializing presented semigroups") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 5});
  Ideal ideal = Ideal::from_generators(s, {6, 7});
  ReesQuotient rq(s, ideal);

  Presentation p = rqns::quotient_presentation(s, ideal);
  rqns::FiniteSemigroup built = rqns::semigroup_from_presentation(p, 32);
  REQUIRE(built.size() == 4);
  CHECK(rqns::brute_force_isomorphic(built, rq.table()).has_value());

  Presentation r = rqns::reduced_quotient_presentation(s, ideal);
  rqns::FiniteSemigroup built2 = rqns::semigroup_from_presentation(r, 32);
  CHECK(rqns::brute_force_isomorphic(built2, rq.table()).has_value());
}

TEST_CASE("presentations without enough zero relations blow the bound") {
  Presentation free_one;
  free_one.generators = {"a"};
  CHECK_THROWS_AS(rqns::semigroup_from_presentation(free_one, 16),
                  rqns::SizeBoundExceeded);
}

TEST_CASE("table presentations rebuild their table") {
  for (int64_t r : {2, 3, 5, 7}) {
    rqns::FiniteSemigroup q = rqns::naturals_quotient(r);
    Presentation p = rqns::table_presentation(q);
    CHECK(p.generators == std::vector<std::string>{"1"});
    rqns::FiniteSemigroup built =
        rqns::semigroup_from_presentation(p, static_cast<int>(q.size()) + 8);
    CHECK(rqns::brute_force_isomorphic(built, q).has_value());
  }
  NumericalSemigroup n = NumericalSemigroup::from_generators({3, 5});
  ReesQuotient s(n, Ideal::from_generators(n, {6}));
  Presentation p = rqns::table_presentation(s.table());
  CHECK(p.generators == std::vector<std::string>{"3", "5"});
  rqns::FiniteSemigroup built = rqns::semigroup_from_presentation(p, 32);
  CHECK(rqns::brute_force_isomorphic(built, s.table()).has_value());
}

TEST_CASE("integer factorizations match the naive recursion") {
  CHECK(rqns::integer_factorizations(15, {3, 5}) ==
        std::vector<std::vector<int>>{{0, 3}, {5, 0}});
  for (int64_t n : {7, 12, 20, 30}) {
    for (const std::vector<int64_t>& gens :
         {std::vector<int64_t>{2, 5}, {3, 4, 5}, {4, 11, 13, 18}}) {
      auto got = rqns::integer_factorizations(n, gens);
      auto expect = oracles::naive_factorizations(n, gens);
      std::sort(expect.begin(), expect.end());
      CHECK(got == expect);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

}  // TEST_SUITE
