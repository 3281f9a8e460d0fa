#include <doctest.h>

#include "cayley/klein.hpp"
#include "cayley/parse.hpp"

using namespace cayley;

TEST_CASE("parser accepts the documented grammar") {
  auto vars = VarSet::pluecker();
  CHECK(parse_poly("0", vars).is_zero());
  CHECK(parse_poly("p01*p23 - p02*p13 + p03*p12", vars) == klein_quadric());
  MultiPoly f = parse_poly("(p01+p23)^2 + 4*p03*p12", vars);
  CHECK(f == parse_poly("p01^2 + 2*p01*p23 + p23^2 + 4*p03*p12", vars));
  CHECK(parse_poly("-(p01 - p02)", vars) == parse_poly("p02 - p01", vars));
  CHECK(parse_poly("p01/2 + p01/2", vars) == parse_poly("p01", vars));
  CHECK(parse_poly("2*-p01", vars) == parse_poly("-2*p01", vars));
  CHECK(parse_poly("  p01 \n * p02 ", vars) == parse_poly("p01*p02", vars));
  CHECK(parse_poly("(p01)^0", vars) == parse_poly("1", vars));
}

TEST_CASE("parser picks the ring from the variables used") {
  CHECK(same_vars(parse_poly("p01*p23").vars(), VarSet::pluecker()));
  CHECK(same_vars(parse_poly("x0*p23").vars(), VarSet::points_and_pluecker()));
}

TEST_CASE("parse errors carry line and column") {
  auto vars = VarSet::pluecker();
  auto column_of = [&](const char* text) -> std::size_t {
    try {
      parse_poly(text, vars);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("p01 + ") == 7);
  CHECK(column_of("p01 + q7") == 7);
  CHECK(column_of("p01 * (p02") == 11);
  CHECK(column_of("p01 / p02") == 7);
  CHECK(column_of("p01 / 0") == 7);
  CHECK(column_of("p01^x") == 5);
  CHECK(column_of("") == 1);
  try {
    parse_poly("p01 +\n  ?", vars);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}
