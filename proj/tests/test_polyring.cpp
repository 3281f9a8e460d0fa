#include <doctest.h>

#include "cayley/parse.hpp"
#include "cayley/polyring.hpp"
#include "oracle.hpp"

using namespace cayley;

namespace {

MultiPoly P(const char* s) { return parse_poly(s, VarSet::pluecker()); }

}  // namespace

TEST_CASE("VarSet rejects duplicates and reports unknown names") {
  CHECK_THROWS_AS(VarSet({"a", "a"}), Error);
  auto vs = VarSet::make({"a", "b"});
  CHECK(vs->index_of("b") == 1u);
  CHECK_FALSE(vs->index_of("c").has_value());
  try {
    vs->require_index("c");
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
  CHECK(VarSet::pluecker()->size() == 6);
  CHECK(VarSet::points_and_pluecker()->elimination_block() == 4);
}

TEST_CASE("ring arithmetic matches the map oracle") {
  oracle::Random rng(11);
  auto vars = VarSet::pluecker();
  for (int trial = 0; trial < 60; ++trial) {
    auto a = rng.form(6, rng.integer(0, 4), rng.integer(1, 8));
    auto b = rng.form(6, rng.integer(0, 4), rng.integer(1, 8));
    MultiPoly fa = oracle::to(a, vars);
    MultiPoly fb = oracle::to(b, vars);
    CHECK(oracle::from(fa + fb) == oracle::add(a, b));
    CHECK(oracle::from(fa - fb) == oracle::add(a, b, -1));
    CHECK(oracle::from(fa * fb) == oracle::mul(a, b));
    int v = rng.integer(0, 5);
    CHECK(oracle::from(partial(fa, static_cast<std::size_t>(v))) == oracle::deriv(a, v));
    std::vector<mpq_class> pt;
    for (int i = 0; i < 6; ++i) pt.push_back(rng.rational());
    std::vector<Rational> rpt(pt.begin(), pt.end());
    CHECK(evaluate(fa * fb, rpt) == oracle::eval(a, pt) * oracle::eval(b, pt));
  }
}

TEST_CASE("canonical form: terms merge, zeros vanish, equality is structural") {
  auto vars = VarSet::pluecker();
  Monomial m = Monomial::unit(0);
  MultiPoly f = MultiPoly::from_terms(vars, {{m, 2}, {m, -2}, {Monomial::unit(1), 0}});
  CHECK(f.is_zero());
  CHECK(f.degree() == -1);
  CHECK(P("p01 + p02") == P("p02 + p01"));
  CHECK(P("(p01 - p02)*(p01 + p02)") == P("p01^2 - p02^2"));
}

TEST_CASE("mixing variable sets is rejected") {
  MultiPoly a = P("p01");
  MultiPoly b = parse_poly("x0", VarSet::points());
  try {
    (void)(a + b);
    FAIL("expected VarSetMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VarSetMismatch);
  }
}

TEST_CASE("exponent overflow is detected") {
  MultiPoly x = P("p01");
  MultiPoly big = pow(x, 40000);
  try {
    (void)(big * big);
    FAIL("expected ExponentOverflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExponentOverflow);
  }
}

TEST_CASE("exact division") {
  MultiPoly q = P("p01*p23 - p02*p13 + p03*p12");
  MultiPoly g = P("p01 + 3*p12");
  CHECK(exact_divide(q * g, q) == g);
  CHECK(divides(q, q * g));
  CHECK_FALSE(divides(q, g));
  try {
    exact_divide(g, q);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  try {
    exact_divide(g, MultiPoly(VarSet::pluecker()));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("printing uses descending graded-lex order") {
  CHECK(to_string(P("p03*p12 - p02*p13 + p01*p23")) == "p01*p23 - p02*p13 + p03*p12");
  CHECK(to_string(P("p01*p23 - (p01*p23 - p02*p13 + p03*p12)/3")) ==
        "2/3*p01*p23 + 1/3*p02*p13 - 1/3*p03*p12");
  CHECK(to_string(P("0")) == "0");
  CHECK(to_string(P("-1")) == "-1");
  CHECK(to_string(P("-p01^3 + 2")) == "-p01^3 + 2");
}

TEST_CASE("homogeneity, degree and homogeneous parts") {
  MultiPoly f = P("p01^2 + p02 + 1");
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.degree() == 2);
  CHECK(f.homogeneous_part(1) == P("p02"));
  CHECK(P("p01*p02 - p13^2").is_homogeneous());
  CHECK(P("0").is_homogeneous());
}

TEST_CASE("substitution and change of ring") {
  auto vars = VarSet::pluecker();
  std::map<std::string, MultiPoly> a{{"p01", P("p23")}, {"p23", P("p01")}};
  CHECK(substitute(P("p01^2*p02 + p23"), a) == P("p23^2*p02 + p01"));
  MultiPoly g = change_ring(P("p01*p23"), VarSet::points_and_pluecker());
  CHECK(g.vars()->size() == 10);
  CHECK(change_ring(g, vars) == P("p01*p23"));
}

TEST_CASE("monic scaling and monomial content") {
  CHECK(make_monic(P("3*p01*p23 - 6*p02^2")) == P("p02^2 - 1/2*p01*p23"));
  CHECK(make_monic(P("-2*p01 + 4*p23")) == P("p01 - 2*p23"));
  CHECK(make_monic(P("0")).is_zero());
  CHECK(strip_monomial_content(P("p01^2*p02 + p01*p02^3")) == P("p01 + p02^2"));
}

TEST_CASE("to_string and parse round-trip on random polynomials") {
  oracle::Random rng(5);
  auto vars = VarSet::pluecker();
  for (int trial = 0; trial < 80; ++trial) {
    oracle::Poly p;
    int terms = rng.integer(1, 7);
    for (int k = 0; k < terms; ++k) p[rng.monomial(6, rng.integer(0, 5))] += rng.rational();
    oracle::clean(p);
    MultiPoly f = oracle::to(p, vars);
    CHECK(parse_poly(to_string(f), vars) == f);
  }
}
