#pragma once

// Pluecker-coordinate algebra on Lambda^2 of a 4-dimensional space.
//
// Coordinates are always ordered (p01, p02, p03, p12, p13, p23). The symmetric
// pairing is <a,b> = a01 b23 - a02 b13 + a03 b12 + a12 b03 - a13 b02 + a23 b01,
// so that <p,p> = 2 Q(p) for the Klein quadric Q = p01 p23 - p02 p13 + p03 p12.
//
// Every operation here accepts polynomials over any VarSet that contains the
// six Pluecker names; other variables are treated as constants.

#include <array>

#include "cayley/polyring.hpp"

namespace cayley {

struct PlueckerVector {
  std::array<MultiPoly, 6> entries;

  const MultiPoly& operator[](std::size_t i) const { return entries[i]; }
  MultiPoly& operator[](std::size_t i) { return entries[i]; }
  const VarSetPtr& vars() const { return entries[0].vars(); }

  static PlueckerVector zero(const VarSetPtr& vars);
  static PlueckerVector constant(const VarSetPtr& vars, const std::array<Rational, 6>& values);
  // The generic point p = (p01, ..., p23).
  static PlueckerVector symbolic(const VarSetPtr& vars);
  // e_i ^ e_j for i != j in 0..3 (sign flips for i > j).
  static PlueckerVector basis(const VarSetPtr& vars, int i, int j);

  bool operator==(const PlueckerVector& o) const { return entries == o.entries; }
};

PlueckerVector operator+(const PlueckerVector& a, const PlueckerVector& b);
PlueckerVector operator-(const PlueckerVector& a, const PlueckerVector& b);
PlueckerVector operator*(const MultiPoly& s, const PlueckerVector& v);

// Index of the coordinate p_ij (i < j) in the fixed order.
std::size_t pluecker_slot(int i, int j);
// Positions of p01..p23 inside a VarSet; throws UnknownVariable when absent.
std::array<std::size_t, 6> pluecker_indices(const VarSet& vars);

MultiPoly klein_quadric(const VarSetPtr& vars = VarSet::pluecker());
MultiPoly pairing(const PlueckerVector& a, const PlueckerVector& b);

// Polarity-twisted gradient
//   (dF/dp23, -dF/dp13, dF/dp12, dF/dp03, -dF/dp02, dF/dp01),
// chosen so that pairing(gradient(F), v) is the differential dF applied to v.
PlueckerVector gradient(const MultiPoly& f);

// Cayley bracket {F,G} = <grad F, grad G>.
MultiPoly bracket(const MultiPoly& f, const MultiPoly& g);

// d/dp01 d/dp23 - d/dp02 d/dp13 + d/dp03 d/dp12
MultiPoly laplacian(const MultiPoly& f);

// {F,Q} - deg(F) F; zero for every homogeneous F.
MultiPoly euler_check(const MultiPoly& f);
// Laplacian(AB) - Laplacian(A) B - A Laplacian(B) - {A,B}; always zero.
MultiPoly product_rule_check(const MultiPoly& a, const MultiPoly& b);

// (p01,p02,p03,p12,p13,p23) -> (p23,-p13,p12,p03,-p02,p01); an involutive isometry.
PlueckerVector polarity(const PlueckerVector& v);

// The substitution realizing polarity on forms: F(p) -> F(polarity(p)).
MultiPoly polarity_substitute(const MultiPoly& f);

struct HessianForm {
  MultiPoly base;
  // Second partials with respect to the raw coordinates, row/column in the
  // fixed Pluecker order.
  std::array<std::array<MultiPoly, 6>, 6> matrix;
};

HessianForm hessian(const MultiPoly& f);
// sum_ij H_ij u_i v_j
MultiPoly hessian_apply(const HessianForm& h, const PlueckerVector& u, const PlueckerVector& v);

}  // namespace cayley
