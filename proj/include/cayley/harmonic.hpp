#pragma once

// Harmonic decomposition of Pluecker forms and the canonical Cayley
// representative.
//
// Every form F of degree m splits uniquely as F = sum_i Q^i h_i with each h_i
// harmonic (Laplacian zero) of degree m - 2i.

#include <optional>
#include <vector>

#include "cayley/polyring.hpp"

namespace cayley {

struct HarmonicDecomposition {
  int degree = 0;
  // components[i] is h_i, of degree degree - 2i.
  std::vector<MultiPoly> components;

  MultiPoly reconstruct() const;
};

HarmonicDecomposition decompose(const MultiPoly& f);
MultiPoly harmonic_project(const MultiPoly& f);

// Delta(G Q^i) = peeling_constant(m, i) G Q^(i-1) for harmonic G with
// deg(G Q^i) = m.
Rational peeling_constant(int m, int i);

struct CanonicalCayleyRep {
  MultiPoly f2;
  MultiPoly f0;
  MultiPoly f1;
  // {F,F} = cofactor_a * Q + cofactor_b * F for the input F.
  MultiPoly cofactor_a;
  MultiPoly cofactor_b;
};

CanonicalCayleyRep canonical_rep(const MultiPoly& f);

// The unique B of degree deg(F) - 2 with {F,F} - B F in (Q), when the linear
// system determines it; nullopt when it is inconsistent or underdetermined.
std::optional<MultiPoly> forced_cofactor(const MultiPoly& f);

// h_{2m-2}({F0 + Q F1, F0 + Q F1}).
MultiPoly quadratic_equation_check(const MultiPoly& f0, const MultiPoly& f1);

// Exact solution of A x = b over the rationals. Returns nullopt when the system
// is inconsistent; free variables are set to zero and reported through
// `nullity` when given.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  std::size_t* nullity = nullptr);

// All monomials of the given degree in the listed variables.
std::vector<Monomial> monomials_of_degree(const std::vector<std::size_t>& vars, int degree);

}  // namespace cayley
