#pragma once

// Groebner bases over the rationals.
//
// Buchberger's algorithm with the Gebauer-Moeller update (product and chain
// criteria) and sugar-degree pair selection. Every basis element is monic and
// the final basis is reduced, so it is unique for a given ideal and order.
// Optionally each basis element carries its expression in the original
// generators ("lift"), which turns any normal-form computation into a
// membership certificate over the generators.

#include <memory>
#include <string>
#include <vector>

#include "cayley/polyring.hpp"

namespace cayley {

struct MonomialOrder {
  enum class Kind { Grevlex, BlockElimination };

  Kind kind = Kind::Grevlex;
  // Number of leading variables in the eliminated block.
  std::size_t split = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder block(std::size_t split) { return {Kind::BlockElimination, split}; }

  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
    return kind == Kind::Grevlex ? grevlex_compare(a, b, nvars) : block_compare(a, b, split, nvars);
  }
  bool operator==(const MonomialOrder&) const = default;
};

std::string describe(const MonomialOrder& order);

struct GroebnerOptions {
  bool track_lift = true;
  // 0 disables the cap. Otherwise a pair whose sugar degree exceeds the cap
  // aborts the computation with BudgetExceeded.
  int max_degree = 0;
};

// Generators plus a lazily computed reduced Groebner basis. Copies share the
// cached basis; once computed it is immutable and safe to query concurrently.
class IdealBasis {
 public:
  // Requires at least one generator.
  IdealBasis(std::vector<MultiPoly> generators, MonomialOrder order = MonomialOrder::grevlex(),
             GroebnerOptions options = {});
  IdealBasis(VarSetPtr vars, std::vector<MultiPoly> generators, MonomialOrder order = MonomialOrder::grevlex(),
             GroebnerOptions options = {});

  const VarSetPtr& vars() const noexcept { return vars_; }
  const std::vector<MultiPoly>& generators() const noexcept { return generators_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const GroebnerOptions& options() const noexcept { return options_; }

  bool has_groebner() const;
  // Sorted by ascending leading monomial.
  const std::vector<MultiPoly>& groebner() const;
  // groebner()[i] == sum_j lift()[i][j] * generators()[j]; requires track_lift.
  const std::vector<std::vector<MultiPoly>>& lift() const;
  // Leading monomial of each basis element under order().
  const std::vector<Monomial>& leading_monomials() const;
  // Statistics of the last computation.
  std::size_t pairs_reduced() const;

 private:
  struct Cache;

  void check() const;

  VarSetPtr vars_;
  std::vector<MultiPoly> generators_;
  MonomialOrder order_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

IdealBasis buchberger(std::vector<MultiPoly> generators, MonomialOrder order = MonomialOrder::grevlex(),
                      GroebnerOptions options = {});

struct NormalForm {
  MultiPoly remainder;
  // One cofactor per Groebner basis element:
  // f == remainder + sum_i cofactors[i] * groebner()[i].
  std::vector<MultiPoly> cofactors;
};

NormalForm normal_form(const MultiPoly& f, const IdealBasis& ideal);
bool member(const MultiPoly& f, const IdealBasis& ideal);

struct MembershipCertificate {
  // f == remainder + sum_j cofactors[j] * generators()[j]
  std::vector<MultiPoly> cofactors;
  MultiPoly remainder;
};

MembershipCertificate generator_cofactors(const MultiPoly& f, const IdealBasis& ideal);
// Recomputes remainder + sum cofactors * generators and compares with f.
bool verify_certificate(const MultiPoly& f, const IdealBasis& ideal, const MembershipCertificate& cert);

// Ideal intersected with the polynomial ring of the variables not in `drop`.
// The result lives over the retained variables, in their original order.
IdealBasis eliminate(const IdealBasis& ideal, const std::vector<std::string>& drop,
                     GroebnerOptions options = {.track_lift = false});

// I : g^infinity, computed by adjoining t with 1 - t g and eliminating t.
IdealBasis saturate(const IdealBasis& ideal, const MultiPoly& g, GroebnerOptions options = {.track_lift = false});

// Every generator of `sub` lies in `ideal`.
bool contains(const IdealBasis& ideal, const IdealBasis& sub);

}  // namespace cayley
