#include "cayley/klein.hpp"

namespace cayley {

namespace {

// Partner slot under the pairing: 01<->23, 02<->13, 03<->12.
constexpr std::array<std::size_t, 6> kPartner = {5, 4, 3, 2, 1, 0};
constexpr std::array<int, 6> kPairSign = {1, -1, 1, 1, -1, 1};

MultiPoly partial_slot(const MultiPoly& f, const std::array<std::size_t, 6>& idx, std::size_t slot) {
  return partial(f, idx[slot]);
}

}  // namespace

std::size_t pluecker_slot(int i, int j) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (i < 0 || j < 0 || i > 3 || j > 3 || i == j) {
    throw Error(ErrorKind::InvalidArgument, "Pluecker slot needs two distinct indices in 0..3");
  }
  return static_cast<std::size_t>(table[i][j]);
}

std::array<std::size_t, 6> pluecker_indices(const VarSet& vars) {
  std::array<std::size_t, 6> idx{};
  for (std::size_t k = 0; k < 6; ++k) idx[k] = vars.require_index(kPlueckerNames[k]);
  return idx;
}

PlueckerVector PlueckerVector::zero(const VarSetPtr& vars) {
  return {{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars), MultiPoly(vars), MultiPoly(vars),
           MultiPoly(vars)}};
}

PlueckerVector PlueckerVector::constant(const VarSetPtr& vars, const std::array<Rational, 6>& values) {
  PlueckerVector v = zero(vars);
  for (std::size_t k = 0; k < 6; ++k) v[k] = MultiPoly::constant(vars, values[k]);
  return v;
}

PlueckerVector PlueckerVector::symbolic(const VarSetPtr& vars) {
  PlueckerVector v = zero(vars);
  for (std::size_t k = 0; k < 6; ++k) v[k] = MultiPoly::variable(vars, kPlueckerNames[k]);
  return v;
}

PlueckerVector PlueckerVector::basis(const VarSetPtr& vars, int i, int j) {
  PlueckerVector v = zero(vars);
  v[pluecker_slot(i, j)] = MultiPoly::constant(vars, i < j ? 1 : -1);
  return v;
}

PlueckerVector operator+(const PlueckerVector& a, const PlueckerVector& b) {
  PlueckerVector r = a;
  for (std::size_t k = 0; k < 6; ++k) r[k] += b[k];
  return r;
}

PlueckerVector operator-(const PlueckerVector& a, const PlueckerVector& b) {
  PlueckerVector r = a;
  for (std::size_t k = 0; k < 6; ++k) r[k] -= b[k];
  return r;
}

PlueckerVector operator*(const MultiPoly& s, const PlueckerVector& v) {
  PlueckerVector r = v;
  for (std::size_t k = 0; k < 6; ++k) r[k] = s * v[k];
  return r;
}

MultiPoly klein_quadric(const VarSetPtr& vars) {
  auto v = PlueckerVector::symbolic(vars);
  return v[0] * v[5] - v[1] * v[4] + v[2] * v[3];
}

MultiPoly pairing(const PlueckerVector& a, const PlueckerVector& b) {
  if (!same_vars(a.vars(), b.vars())) throw Error(ErrorKind::VarSetMismatch, "pairing operands");
  MultiPoly sum(a.vars());
  for (std::size_t k = 0; k < 6; ++k) {
    MultiPoly prod = a[k] * b[kPartner[k]];
    if (kPairSign[k] > 0) {
      sum += prod;
    } else {
      sum -= prod;
    }
  }
  return sum;
}

PlueckerVector gradient(const MultiPoly& f) {
  auto idx = pluecker_indices(*f.vars());
  PlueckerVector g = PlueckerVector::zero(f.vars());
  // Slot k of the twisted gradient carries sign(k) * dF/d(partner slot).
  for (std::size_t k = 0; k < 6; ++k) {
    MultiPoly d = partial_slot(f, idx, kPartner[k]);
    g[k] = kPairSign[k] > 0 ? d : -d;
  }
  return g;
}

MultiPoly bracket(const MultiPoly& f, const MultiPoly& g) { return pairing(gradient(f), gradient(g)); }

MultiPoly laplacian(const MultiPoly& f) {
  auto idx = pluecker_indices(*f.vars());
  MultiPoly r(f.vars());
  for (std::size_t k = 0; k < 3; ++k) {
    MultiPoly d = partial(partial(f, idx[k]), idx[kPartner[k]]);
    if (kPairSign[k] > 0) {
      r += d;
    } else {
      r -= d;
    }
  }
  return r;
}

MultiPoly euler_check(const MultiPoly& f) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "euler_check needs a form");
  int m = std::max(f.degree(), 0);
  return bracket(f, klein_quadric(f.vars())) - f * Rational(m);
}

MultiPoly product_rule_check(const MultiPoly& a, const MultiPoly& b) {
  return laplacian(a * b) - laplacian(a) * b - a * laplacian(b) - bracket(a, b);
}

PlueckerVector polarity(const PlueckerVector& v) {
  PlueckerVector r = v;
  for (std::size_t k = 0; k < 6; ++k) r[k] = kPairSign[k] > 0 ? v[kPartner[k]] : -v[kPartner[k]];
  return r;
}

MultiPoly polarity_substitute(const MultiPoly& f) {
  auto image = polarity(PlueckerVector::symbolic(f.vars()));
  std::map<std::string, MultiPoly> assignment;
  for (std::size_t k = 0; k < 6; ++k) assignment.emplace(std::string(kPlueckerNames[k]), image[k]);
  return substitute(f, assignment, f.vars());
}

HessianForm hessian(const MultiPoly& f) {
  auto idx = pluecker_indices(*f.vars());
  HessianForm h{f, {}};
  std::array<MultiPoly, 6> first = PlueckerVector::zero(f.vars()).entries;
  for (std::size_t i = 0; i < 6; ++i) first[i] = partial(f, idx[i]);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      h.matrix[i][j] = j < i ? h.matrix[j][i] : partial(first[i], idx[j]);
    }
  }
  return h;
}

MultiPoly hessian_apply(const HessianForm& h, const PlueckerVector& u, const PlueckerVector& v) {
  MultiPoly sum(h.base.vars());
  for (std::size_t i = 0; i < 6; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < 6; ++j) {
      if (h.matrix[i][j].is_zero() || v[j].is_zero()) continue;
      sum += h.matrix[i][j] * u[i] * v[j];
    }
  }
  return sum;
}

}  // namespace cayley
