#pragma once

// Cayley forms of curves in P^3 and their classification.

#include <array>
#include <optional>
#include <vector>

#include "cayley/groebner.hpp"
#include "cayley/harmonic.hpp"
#include "cayley/klein.hpp"

namespace cayley {

struct CurveIdeal {
  // Homogeneous forms over VarSet::points().
  std::vector<MultiPoly> generators;
  // Optional parametrization t -> (x0..x3), over VarSet::parameter().
  std::optional<std::array<MultiPoly, 4>> param;

  // Throws InvalidArgument / NotHomogeneous when malformed, or when the
  // parametrization does not satisfy the generators.
  void validate() const;
};

// <p, L0> for a decomposable constant vector L0.
MultiPoly line_form(const PlueckerVector& l0);
// sum_{i<j} a_i a_j p_ij^2
MultiPoly tangential_quadric_form(const std::array<Rational, 4>& a);
// det [[p23, -p13, p12], [-p13, p03 + p12, -p02], [p12, -p02, p01]], the form
// vanishing on lines meeting (1 : t : t^2 : t^3).
MultiPoly twisted_cubic_form();

MultiPoly chow_form_of_curve(const CurveIdeal& curve, GroebnerOptions options = {.track_lift = false});

bool weak_cayley_test(const MultiPoly& f);

// L'' = e_b ^ y meeting both L and Lp, with y bilinear in (L, Lp).
PlueckerVector schubert_third_line(const PlueckerVector& l, const PlueckerVector& lp);

struct Witness {
  MultiPoly poly;
  MultiPoly remainder;
  // Cofactors of poly - remainder over the generators (F, Q).
  std::vector<MultiPoly> cofactors;
  bool in_ideal() const { return remainder.is_zero(); }
};

struct HonestResult {
  bool honest = false;
  PlueckerVector third_line;
  std::array<Witness, 3> witnesses;
};

HonestResult honest_test(const MultiPoly& f);
MultiPoly dualize(const MultiPoly& f);
bool dual_honest_test(const MultiPoly& f);

struct AssociatedCurve {
  int k = 0;
  // k = 0: the point (4 entries); k = 1: tangent lines in Pluecker order
  // (6 entries); k = 2: osculating planes as dual coordinates (4 entries).
  std::vector<MultiPoly> coords;
};

AssociatedCurve associated_curve(const std::array<MultiPoly, 4>& gamma, int k);

struct ClassificationReport {
  MultiPoly form;
  MultiPoly self_bracket;
  bool weak_cayley = false;
  bool honest = false;
  bool dual_honest = false;
  Witness weak_witness;
  std::optional<CanonicalCayleyRep> canonical;
  std::optional<HonestResult> honest_detail;
  std::optional<HonestResult> dual_detail;
};

ClassificationReport classify(const MultiPoly& f);

}  // namespace cayley
