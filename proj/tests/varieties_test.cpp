#include <doctest.h>

#include "rqns/errors.hpp"
#include "rqns/rees_quotient.hpp"
#include "rqns/varieties.hpp"

using rqns::Identity;

TEST_SUITE("varieties") {

TEST_CASE("parsing and formatting identities") {
  Identity id = Identity::parse("x^2*y = x*y^2");
  CHECK(id.variables == std::vector<std::string>{"x", "y"});
  CHECK(id.lhs == std::vector<int>{2, 1});
  REQUIRE(id.rhs.has_value());
  CHECK(*id.rhs == std::vector<int>{1, 2});
  CHECK_FALSE(id.is_zero_equation());
  CHECK_FALSE(id.is_trivial());
  CHECK(id.format() == "x^2*y = x*y^2");

  Identity z = Identity::parse("x^3 = 0");
  CHECK(z.is_zero_equation());
  CHECK(z.format() == "x^3 = 0");

  CHECK(Identity::parse("x*y = y*x").is_trivial());
  CHECK_THROWS_AS(Identity::parse("x^2"), rqns::ParseError);
  CHECK_THROWS_AS(Identity::parse("x^^2 = x"), rqns::ParseError);
  CHECK_THROWS_AS(Identity::parse("= x"), rqns::ParseError);
}

TEST_CASE("falsifying assignments are found exhaustively") {
  Identity square_cube = Identity::parse("x^2 = x^3");
  CHECK(rqns::satisfies(rqns::naturals_quotient(2), square_cube));
  auto w = rqns::falsifying_assignment(rqns::naturals_quotient(3), square_cube);
  REQUIRE(w.has_value());
  CHECK(rqns::naturals_quotient(3).label(w->assignment[0]) == "1");

  Identity comm = Identity::parse("x*y = y*x");
  CHECK(rqns::satisfies(rqns::naturals_quotient(6), comm));
}

TEST_CASE("separating index is the least quotient that fails") {
  rqns::SeparationResult r = rqns::separating_index(Identity::parse("x^2 = x^3"));
  CHECK(r.r == 3);
  for (int64_t i = 1; i < r.r; ++i) {
    CHECK(rqns::satisfies(rqns::naturals_quotient(i), Identity::parse("x^2 = x^3")));
  }

  CHECK(rqns::separating_index(Identity::parse("x = x^2")).r == 2);
  CHECK(rqns::separating_index(Identity::parse("x^3 = 0")).r == 4);
  CHECK(rqns::separating_index(Identity::parse("x^2*y = x*y^2")).r == 5);
}

TEST_CASE("trivial identities cannot be separated") {
  CHECK_THROWS_AS(rqns::separating_index(Identity::parse("x*y = y*x")),
                  rqns::TrivialIdentity);
}

TEST_CASE("the scan bound dominates the separating index") {
  for (const char* text : {"x^2 = x^3", "x^3 = 0", "x^2*y = x*y^2",
                           "x*y*z = x^2*y*z", "x^2 = y^2", "x*y = z"}) {
    Identity id = Identity::parse(text);
    rqns::SeparationResult r = rqns::separating_index(id);
    CAPTURE(text);
    CHECK(r.r <= rqns::separation_bound(id));
    CHECK_FALSE(rqns::satisfies(rqns::naturals_quotient(r.r), id));
    if (r.r > 1) {
      CHECK(rqns::satisfies(rqns::naturals_quotient(r.r - 1), id));
    }
  }
}

}  // TEST_SUITE
