#include <doctest.h>

#include <algorithm>

#include "cayley/groebner.hpp"
#include "cayley/klein.hpp"
#include "cayley/parse.hpp"
#include "oracle.hpp"

using namespace cayley;

namespace {

MultiPoly P(const char* s) { return parse_poly(s, VarSet::pluecker()); }
MultiPoly X(const char* s) { return parse_poly(s, VarSet::points()); }
MultiPoly XP(const char* s) { return parse_poly(s, VarSet::points_and_pluecker()); }

std::vector<oracle::Poly> to_oracle(const std::vector<MultiPoly>& v) {
  std::vector<oracle::Poly> out;
  for (const auto& f : v) out.push_back(oracle::from(f));
  return out;
}

void check_certificate(const MultiPoly& f, const IdealBasis& ideal) {
  NormalForm nf = normal_form(f, ideal);
  oracle::Poly sum = oracle::from(nf.remainder);
  for (std::size_t i = 0; i < nf.cofactors.size(); ++i) {
    sum = oracle::add(sum, oracle::mul(oracle::from(nf.cofactors[i]), oracle::from(ideal.groebner()[i])));
  }
  CHECK(sum == oracle::from(f));
  for (const auto& t : nf.remainder.terms()) {
    for (const auto& lm : ideal.leading_monomials()) CHECK_FALSE(lm.divides(t.mono));
  }
}

}  // namespace

TEST_CASE("a single generator is its own basis") {
  IdealBasis q({klein_quadric() * Rational(3)});
  REQUIRE(q.groebner().size() == 1);
  CHECK(q.groebner()[0] == klein_quadric());
  auto nf = normal_form(klein_quadric(), q);
  CHECK(nf.remainder.is_zero());
  CHECK(nf.cofactors[0] == P("1"));
  auto nf2 = normal_form(P("p01"), q);
  CHECK(nf2.remainder == P("p01"));
  CHECK(nf2.cofactors[0].is_zero());
}

TEST_CASE("twisted cubic minors have a quadratic staircase") {
  IdealBasis tc({X("x0*x2 - x1^2"), X("x0*x3 - x1*x2"), X("x1*x3 - x2^2")});
  const auto& lms = tc.leading_monomials();
  REQUIRE(lms.size() == 3);
  std::vector<std::string> got;
  for (const auto& m : lms) got.push_back(to_string(MultiPoly::monomial(VarSet::points(), m, 1)));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"x1*x2", "x1^2", "x2^2"});
  CHECK(oracle::is_groebner(to_oracle(tc.groebner())));
}

TEST_CASE("skew lines bracket reduces to zero modulo (Q, F)") {
  MultiPoly f = P("p01*p23");
  IdealBasis i({klein_quadric(), f});
  CHECK(member(bracket(f, f), i));
  check_certificate(bracket(f, f), i);
}

TEST_CASE("membership of the chain bracket") {
  MultiPoly f = P("p01*p02*p23");
  MultiPoly ff = bracket(f, f);
  CHECK(ff == f * P("2*p02"));
  CHECK(member(ff, IdealBasis({klein_quadric(), f})));
  CHECK_FALSE(member(ff, IdealBasis({klein_quadric()})));
}

TEST_CASE("random ideals: basis property, lift and uniqueness") {
  oracle::Random rng(41);
  auto vars = VarSet::pluecker();
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<MultiPoly> gens;
    int n = rng.integer(2, 3);
    for (int k = 0; k < n; ++k) gens.push_back(oracle::to(rng.form(6, rng.integer(1, 2), rng.integer(2, 3)), vars));
    IdealBasis ideal(gens);
    const auto& gb = ideal.groebner();
    auto ogb = to_oracle(gb);
    CHECK(oracle::is_groebner(ogb));
    for (const auto& g : gens) CHECK(oracle::remainder(oracle::from(g), ogb).empty());
    for (std::size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].leading_term().coeff == 1);
      oracle::Poly sum;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        sum = oracle::add(sum, oracle::mul(oracle::from(ideal.lift()[i][j]), oracle::from(gens[j])));
      }
      CHECK(sum == ogb[i]);
    }
    std::vector<MultiPoly> shuffled(gens.rbegin(), gens.rend());
    shuffled.push_back(gens[0] * gens[1]);
    CHECK(IdealBasis(shuffled).groebner() == gb);

    MultiPoly a = oracle::to(rng.form(6, 1, 3), vars);
    MultiPoly b = oracle::to(rng.form(6, 2, 3), vars);
    MultiPoly comb = a * gens[0] + b * gens[1];
    CHECK(member(comb, ideal));
    check_certificate(comb + oracle::to(rng.form(6, 3, 4), vars), ideal);
    MembershipCertificate cert = generator_cofactors(comb, ideal);
    CHECK(cert.remainder.is_zero());
    CHECK(verify_certificate(comb, ideal, cert));
  }
}

TEST_CASE("elimination") {
  IdealBasis i({XP("x0"), klein_quadric(VarSet::points_and_pluecker())});
  IdealBasis e = eliminate(i, {"x0", "x1", "x2", "x3"});
  REQUIRE(e.groebner().size() == 1);
  CHECK(e.groebner()[0] == klein_quadric());

  IdealBasis j({X("x0*x1 - x2^2"), X("x1 - x3")});
  IdealBasis ej = eliminate(j, {"x1"});
  for (const auto& g : ej.groebner()) {
    CHECK_FALSE(g.vars()->contains("x1"));
    MultiPoly lifted = change_ring(g, VarSet::points());
    CHECK(member(lifted, j));
  }
  CHECK(ej.groebner().size() == 1);
  CHECK(to_string(ej.groebner()[0]) == "-x0*x3 + x2^2");
}

TEST_CASE("saturation") {
  auto vars = VarSet::points_and_pluecker();
  IdealBasis s = saturate(IdealBasis({XP("x0*p01")}), XP("x0"));
  REQUIRE(s.groebner().size() == 1);
  CHECK(s.groebner()[0] == XP("p01"));
  IdealBasis t = saturate(IdealBasis({P("p01")}), P("p02"));
  REQUIRE(t.groebner().size() == 1);
  CHECK(t.groebner()[0] == P("p01"));
  IdealBasis u = saturate(IdealBasis({P("p01^3*p02"), P("p01^2*p13")}), P("p01"));
  CHECK(u.groebner() == IdealBasis({P("p02"), P("p13")}).groebner());
}

TEST_CASE("block orders put the eliminated block first") {
  IdealBasis i({XP("x0*p01 - p02"), XP("x0 - 1")}, MonomialOrder::block(4));
  bool found = false;
  for (const auto& g : i.groebner()) found = found || g == XP("p01 - p02");
  CHECK(found);
  CHECK(describe(MonomialOrder::block(4)) == "block(4)");
  CHECK(describe(MonomialOrder::grevlex()) == "grevlex");
}

TEST_CASE("degree budget") {
  IdealBasis i({X("x0*x2 - x1^2"), X("x0*x3 - x1*x2"), X("x1*x3 - x2^2")}, MonomialOrder::grevlex(),
               {.track_lift = false, .max_degree = 2});
  try {
    i.groebner();
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("lift requires tracking") {
  IdealBasis i({P("p01")}, MonomialOrder::grevlex(), {.track_lift = false});
  CHECK_THROWS_AS(i.lift(), Error);
  CHECK_THROWS_AS(IdealBasis(std::vector<MultiPoly>{}), Error);
}
