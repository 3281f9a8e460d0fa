#include "cayley/harmonic.hpp"

#include <map>

#include "cayley/groebner.hpp"
#include "cayley/klein.hpp"

namespace cayley {

MultiPoly HarmonicDecomposition::reconstruct() const {
  if (components.empty()) throw Error(ErrorKind::InvalidArgument, "empty decomposition");
  const auto& vars = components.front().vars();
  MultiPoly q = klein_quadric(vars);
  MultiPoly sum(vars);
  MultiPoly qi = MultiPoly::constant(vars, 1);
  for (const auto& h : components) {
    sum += qi * h;
    qi *= q;
  }
  return sum;
}

Rational peeling_constant(int m, int i) {
  // Delta(G Q^i) = i (d + i + 2) G Q^(i-1) with d = m - 2i.
  return Rational(i * (m - 2 * i + i + 2));
}

HarmonicDecomposition decompose(const MultiPoly& f) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "decompose needs a form");
  pluecker_indices(*f.vars());
  HarmonicDecomposition out;
  out.degree = std::max(f.degree(), 0);
  int m = out.degree;
  int k = m / 2;
  out.components.assign(k + 1, MultiPoly(f.vars()));
  if (f.is_zero()) return out;

  MultiPoly q = klein_quadric(f.vars());
  MultiPoly rest = f;
  for (int i = k; i >= 1; --i) {
    MultiPoly d = rest;
    Rational c = 1;
    for (int j = 1; j <= i; ++j) d = laplacian(d);
    for (int j = i; j >= 1; --j) c *= peeling_constant(m - 2 * (i - j), j);
    MultiPoly h = d * Rational(1 / c);
    out.components[i] = h;
    if (!h.is_zero()) rest -= pow(q, static_cast<unsigned>(i)) * h;
  }
  out.components[0] = rest;
  return out;
}

MultiPoly harmonic_project(const MultiPoly& f) { return decompose(f).components.front(); }

std::vector<Monomial> monomials_of_degree(const std::vector<std::size_t>& vars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (vars.empty()) {
    if (degree == 0) out.push_back(Monomial::one());
    return out;
  }
  Monomial cur;
  cur.degree = static_cast<std::uint32_t>(degree);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == vars.size()) {
      cur.exp[vars[pos]] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      cur.exp[vars[pos]] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.exp[vars[pos]] = static_cast<std::uint16_t>(e);
      self(self, pos + 1, left - e);
    }
    cur.exp[vars[pos]] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  std::size_t* nullity) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  if (nullity != nullptr) *nullity = cols - r;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<MultiPoly> forced_cofactor(const MultiPoly& f) {
  const auto& vars = f.vars();
  auto idx = pluecker_indices(*vars);
  int m = f.degree();
  MultiPoly ff = bracket(f, f);
  IdealBasis qideal({klein_quadric(vars)});
  auto basis = monomials_of_degree(std::vector<std::size_t>(idx.begin(), idx.end()), m - 2);

  std::map<std::vector<std::uint16_t>, std::size_t> row_of;
  auto row = [&](const Monomial& mono) {
    std::vector<std::uint16_t> key(mono.exp.begin(), mono.exp.end());
    return row_of.emplace(key, row_of.size()).first->second;
  };
  std::vector<MultiPoly> columns;
  for (const auto& mono : basis) {
    columns.push_back(normal_form(MultiPoly::monomial(vars, mono, 1) * f, qideal).remainder);
  }
  MultiPoly rhs = normal_form(ff, qideal).remainder;
  for (const auto& col : columns) {
    for (const auto& t : col.terms()) row(t.mono);
  }
  for (const auto& t : rhs.terms()) row(t.mono);

  std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(basis.size(), Rational(0)));
  std::vector<Rational> b(row_of.size(), Rational(0));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& t : columns[j].terms()) a[row(t.mono)][j] = t.coeff;
  }
  for (const auto& t : rhs.terms()) b[row(t.mono)] = t.coeff;

  std::size_t nullity = 0;
  auto x = solve_linear(std::move(a), std::move(b), &nullity);
  if (!x || nullity != 0) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t j = 0; j < basis.size(); ++j) terms.push_back({basis[j], (*x)[j]});
  return MultiPoly::from_terms(vars, std::move(terms));
}

CanonicalCayleyRep canonical_rep(const MultiPoly& f) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "canonical_rep needs a form");
  int m = f.degree();
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "canonical_rep needs degree at least 1");
  const auto& vars = f.vars();
  MultiPoly q = klein_quadric(vars);
  MultiPoly ff = bracket(f, f);

  IdealBasis ideal({f, q});
  MembershipCertificate cert = generator_cofactors(ff, ideal);
  if (!cert.remainder.is_zero()) {
    throw Error(ErrorKind::NotWeaklyCayley, "{F,F} is not in the ideal (Q,F)");
  }
  CanonicalCayleyRep rep{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars), cert.cofactors[1], cert.cofactors[0]};

  bool multiple_of_q = divides(q, f);
  if (m <= 3 && !multiple_of_q) {
    auto forced = forced_cofactor(f);
    if (!forced || !(*forced == rep.cofactor_b)) {
      throw std::logic_error("canonical_rep: cofactor B disagrees with the degree-forced solution");
    }
  }

  MultiPoly f2p = f - rep.cofactor_b * q * Rational(1, 2 * m);
  HarmonicDecomposition dec = decompose(f2p);
  rep.f0 = dec.components[0];
  if (dec.components.size() > 1) rep.f1 = dec.components[1];
  rep.f2 = rep.f0 + q * rep.f1;

  if (!divides(q, bracket(rep.f2, rep.f2))) {
    throw Error(ErrorKind::NotWeaklyCayley, "{F2,F2} is not divisible by Q");
  }
  return rep;
}

MultiPoly quadratic_equation_check(const MultiPoly& f0, const MultiPoly& f1) {
  if (!same_vars(f0.vars(), f1.vars())) throw Error(ErrorKind::VarSetMismatch, "quadratic_equation_check");
  if (!f0.is_homogeneous() || !f1.is_homogeneous()) {
    throw Error(ErrorKind::NotHomogeneous, "quadratic_equation_check needs forms");
  }
  if (!laplacian(f0).is_zero() || !laplacian(f1).is_zero()) {
    throw Error(ErrorKind::NotHarmonic, "both components must have zero Laplacian");
  }
  if (!f1.is_zero() && !f0.is_zero() && f1.degree() != f0.degree() - 2) {
    throw Error(ErrorKind::DegreeMismatch, "F1 must have degree deg(F0) - 2");
  }
  MultiPoly f2 = f0 + klein_quadric(f0.vars()) * f1;
  return harmonic_project(bracket(f2, f2));
}

}  // namespace cayley
