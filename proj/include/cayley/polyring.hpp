#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// A MultiPoly lives in a VarSet (an ordered list of variable names). Terms are
// kept in canonical form: sorted by graded reverse lexicographic order with the
// VarSet order as variable precedence, no zero coefficients, no duplicate
// monomials. Two polynomials over the same VarSet are equal iff their term
// lists are equal.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cayley/error.hpp"

namespace cayley {

using Rational = mpq_class;

std::string to_string(const Rational& q);

inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::uint32_t kMaxExponent = 0xffff;

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

class VarSet {
 public:
  // The first `elimination_block` names form the block that elimination
  // orders compare first.
  explicit VarSet(std::vector<std::string> names, std::size_t elimination_block = 0);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t elimination_block() const noexcept { return block_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  bool operator==(const VarSet& other) const {
    return names_ == other.names_ && block_ == other.block_;
  }

  static VarSetPtr make(std::vector<std::string> names, std::size_t elimination_block = 0);
  // p01 p02 p03 p12 p13 p23
  static VarSetPtr pluecker();
  // x0 x1 x2 x3 | p01 ... p23, point variables as the elimination block
  static VarSetPtr points_and_pluecker();
  static VarSetPtr points();
  static VarSetPtr parameter();

 private:
  std::vector<std::string> names_;
  std::size_t block_;
};

inline const std::array<std::string_view, 6> kPlueckerNames = {"p01", "p02", "p03",
                                                               "p12", "p13", "p23"};

bool same_vars(const VarSetPtr& a, const VarSetPtr& b);

// Dense exponent vector; slots past the VarSet size stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  bool operator==(const Monomial& o) const { return exp == o.exp; }

  static Monomial one() { return {}; }
  static Monomial unit(std::size_t var);
  static Monomial from_exponents(std::span<const std::uint32_t> e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
};

// Negative, zero or positive as a < b, a == b, a > b.
int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t nvars);
int block_compare(const Monomial& a, const Monomial& b, std::size_t split, std::size_t nvars);
int deglex_compare(const Monomial& a, const Monomial& b, std::size_t nvars);

struct Term {
  Monomial mono;
  Rational coeff;
};

class MultiPoly {
 public:
  // Zero over the Pluecker ring.
  MultiPoly();
  explicit MultiPoly(VarSetPtr vars);

  static MultiPoly constant(VarSetPtr vars, const Rational& c);
  static MultiPoly variable(VarSetPtr vars, std::string_view name);
  static MultiPoly monomial(VarSetPtr vars, const Monomial& m, const Rational& c);
  // Accepts terms in any order, with repeats and zeros.
  static MultiPoly from_terms(VarSetPtr vars, std::vector<Term> terms);

  const VarSetPtr& vars() const noexcept { return vars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Monomial& m) const;
  // Leading term in grevlex; requires nonzero.
  const Term& leading_term() const { return terms_.front(); }
  MultiPoly homogeneous_part(int deg) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

 private:
  void check_same(const MultiPoly& o) const;

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& f, unsigned k);
MultiPoly partial(const MultiPoly& f, std::string_view var);
MultiPoly partial(const MultiPoly& f, std::size_t var);

// Replaces each assigned variable by its image. Unassigned variables of f are
// carried over by name into the images' VarSet.
MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& assignment);
MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& assignment,
                     const VarSetPtr& target);
Rational evaluate(const MultiPoly& f, std::span<const Rational> point);

// Re-expresses f over another VarSet; every variable f actually uses must
// exist there by name.
MultiPoly change_ring(const MultiPoly& f, const VarSetPtr& target);

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);
bool divides(const MultiPoly& g, const MultiPoly& f);

// Scales f so that its grevlex leading coefficient is 1; zero stays zero.
MultiPoly make_monic(const MultiPoly& f);
// Divides out the gcd of all monomials of f.
MultiPoly strip_monomial_content(const MultiPoly& f);

// Terms in descending graded-lex order, e.g. "p01*p23 - p02*p13 + p03*p12".
std::string to_string(const MultiPoly& f);

}  // namespace cayley
