#include "cayley/chow.hpp"

#include <future>

namespace cayley {

namespace {

MultiPoly var(const VarSetPtr& vars, std::string_view name) { return MultiPoly::variable(vars, name); }

void require_form(const MultiPoly& f) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "expected a homogeneous form");
}

Witness witness(const MultiPoly& p, const IdealBasis& ideal) {
  MembershipCertificate cert = generator_cofactors(p, ideal);
  return {p, cert.remainder, cert.cofactors};
}

// Four coordinates of x ^ p in Lambda^3, each bilinear in (x, p).
std::array<MultiPoly, 4> incidence_forms(const VarSetPtr& vars) {
  std::array<MultiPoly, 4> x{var(vars, "x0"), var(vars, "x1"), var(vars, "x2"), var(vars, "x3")};
  PlueckerVector p = PlueckerVector::symbolic(vars);
  auto pij = [&](int i, int j) { return p[pluecker_slot(i, j)]; };
  std::array<MultiPoly, 4> out{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)};
  int n = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        out[n++] = x[i] * pij(j, k) - x[j] * pij(i, k) + x[k] * pij(i, j);
      }
    }
  }
  return out;
}

bool is_unit_ideal(const IdealBasis& ideal) {
  const auto& gb = ideal.groebner();
  return gb.size() == 1 && gb.front().constant_value().has_value();
}

MultiPoly choose_linear_section(const CurveIdeal& curve, const GroebnerOptions& options) {
  auto pts = VarSet::points();
  static const std::array<std::array<int, 4>, 4> kCandidates = {
      {{1, 1, 1, 1}, {1, 2, 3, 5}, {1, -1, 2, -3}, {3, 1, -2, 7}}};
  std::vector<MultiPoly> forms;
  std::vector<IdealBasis> sats;
  IdealBasis base(pts, curve.generators, MonomialOrder::grevlex(), {false, options.max_degree});
  for (const auto& c : kCandidates) {
    MultiPoly l(pts);
    for (int i = 0; i < 4; ++i) l += Rational(c[i]) * var(pts, "x" + std::to_string(i));
    forms.push_back(l);
    sats.push_back(saturate(base, l, {false, options.max_degree}));
  }
  bool all_empty = true;
  for (const auto& s : sats) all_empty = all_empty && is_unit_ideal(s);
  if (all_empty) throw Error(ErrorKind::EmptyCurve, "the curve ideal defines the empty set");
  for (std::size_t a = 0; a < sats.size(); ++a) {
    if (is_unit_ideal(sats[a])) continue;
    bool smallest = true;
    for (std::size_t b = 0; b < sats.size() && smallest; ++b) {
      if (b != a) smallest = contains(sats[b], sats[a]);
    }
    if (smallest) return forms[a];
  }
  return forms.front();
}

}  // namespace

void CurveIdeal::validate() const {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "a curve needs at least one generator");
  for (const auto& g : generators) {
    if (!same_vars(g.vars(), VarSet::points())) {
      throw Error(ErrorKind::VarSetMismatch, "curve generators must live in x0..x3");
    }
    require_form(g);
  }
  if (!param) return;
  auto t = VarSet::parameter();
  std::map<std::string, MultiPoly> assignment;
  for (int i = 0; i < 4; ++i) {
    if (!same_vars((*param)[i].vars(), t)) throw Error(ErrorKind::VarSetMismatch, "parametrization must use t");
    assignment.emplace("x" + std::to_string(i), (*param)[i]);
  }
  for (const auto& g : generators) {
    if (!substitute(g, assignment, t).is_zero()) {
      throw Error(ErrorKind::InvalidArgument, "parametrization does not satisfy " + to_string(g));
    }
  }
}

MultiPoly line_form(const PlueckerVector& l0) {
  std::array<Rational, 6> c;
  for (std::size_t k = 0; k < 6; ++k) {
    auto v = l0[k].constant_value();
    if (!v) throw Error(ErrorKind::InvalidArgument, "line_form needs constant coordinates");
    c[k] = *v;
  }
  auto pl = VarSet::pluecker();
  PlueckerVector l = PlueckerVector::constant(pl, c);
  if (!pairing(l, l).is_zero()) throw Error(ErrorKind::NotALine, "Q(L0) != 0");
  bool zero = std::all_of(c.begin(), c.end(), [](const Rational& r) { return sgn(r) == 0; });
  if (zero) throw Error(ErrorKind::NotALine, "the zero vector is not a line");
  return pairing(PlueckerVector::symbolic(pl), l);
}

MultiPoly tangential_quadric_form(const std::array<Rational, 4>& a) {
  for (const auto& x : a) {
    if (sgn(x) == 0) throw Error(ErrorKind::DegenerateQuadric, "all weights must be nonzero");
  }
  auto pl = VarSet::pluecker();
  PlueckerVector p = PlueckerVector::symbolic(pl);
  MultiPoly f(pl);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const MultiPoly& x = p[pluecker_slot(i, j)];
      f += x * x * Rational(a[i] * a[j]);
    }
  }
  return f;
}

MultiPoly twisted_cubic_form() {
  auto pl = VarSet::pluecker();
  auto v = [&](std::string_view n) { return var(pl, n); };
  std::array<std::array<MultiPoly, 3>, 3> m = {{
      {v("p23"), -v("p13"), v("p12")},
      {-v("p13"), v("p03") + v("p12"), -v("p02")},
      {v("p12"), -v("p02"), v("p01")},
  }};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

MultiPoly chow_form_of_curve(const CurveIdeal& curve, GroebnerOptions options) {
  curve.validate();
  MultiPoly section = choose_linear_section(curve, options);

  std::vector<std::string> names{"_t", "x0", "x1", "x2", "x3"};
  for (auto n : kPlueckerNames) names.emplace_back(n);
  auto ring = VarSet::make(names, 5);
  std::vector<MultiPoly> gens;
  for (const auto& g : curve.generators) gens.push_back(change_ring(g, ring));
  for (auto& f : incidence_forms(ring)) gens.push_back(std::move(f));
  gens.push_back(klein_quadric(ring));
  gens.push_back(MultiPoly::constant(ring, 1) - var(ring, "_t") * change_ring(section, ring));

  options.track_lift = false;
  IdealBasis incidence(ring, std::move(gens), MonomialOrder::grevlex(), options);
  IdealBasis elim = eliminate(incidence, {"_t", "x0", "x1", "x2", "x3"}, options);
  const auto& basis = elim.groebner();
  if (is_unit_ideal(elim)) throw Error(ErrorKind::EmptyCurve, "no line meets the curve");

  auto pl = VarSet::pluecker();
  IdealBasis qideal({klein_quadric(pl)});
  std::optional<MultiPoly> best;
  for (const auto& g : basis) {
    MultiPoly r = normal_form(g, qideal).remainder;
    if (r.is_zero()) continue;
    if (!best || r.degree() < best->degree()) best = r;
  }
  if (!best) throw Error(ErrorKind::NotACurve, "elimination ideal lies inside (Q)");
  MultiPoly f = make_monic(*best);
  IdealBasis zf({f, klein_quadric(pl)}, MonomialOrder::grevlex(), {false, options.max_degree});
  for (const auto& g : basis) {
    if (!member(g, zf)) throw Error(ErrorKind::NotACurve, "elimination ideal is not cut out by one form on Q");
  }
  return f;
}

bool weak_cayley_test(const MultiPoly& f) {
  require_form(f);
  MultiPoly q = klein_quadric(f.vars());
  if (divides(q, f)) throw Error(ErrorKind::MultipleOfQ, "F is a multiple of Q");
  return member(bracket(f, f), IdealBasis({f, q}, MonomialOrder::grevlex(), {.track_lift = false}));
}

PlueckerVector schubert_third_line(const PlueckerVector& l, const PlueckerVector& lp) {
  const auto& vars = l.vars();
  if (!same_vars(vars, lp.vars())) throw Error(ErrorKind::VarSetMismatch, "schubert_third_line operands");
  bool symbolic = std::all_of(kPlueckerNames.begin(), kPlueckerNames.end(),
                              [&](std::string_view n) { return vars->contains(n); });
  std::optional<IdealBasis> qideal;
  if (symbolic) qideal.emplace(std::vector<MultiPoly>{klein_quadric(vars)});

  for (int b = 0; b < 4; ++b) {
    std::array<int, 3> others{};
    for (int i = 0, n = 0; i < 4; ++i) {
      if (i != b) others[n++] = i;
    }
    std::array<MultiPoly, 3> r1{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)};
    std::array<MultiPoly, 3> r2 = r1;
    for (int k = 0; k < 3; ++k) {
      PlueckerVector e = PlueckerVector::basis(vars, b, others[k]);
      r1[k] = pairing(e, l);
      r2[k] = pairing(e, lp);
    }
    std::array<MultiPoly, 3> y{r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
                               r1[0] * r2[1] - r1[1] * r2[0]};
    if (qideal) {
      for (auto& c : y) c = normal_form(c, *qideal).remainder;
    }
    if (std::all_of(y.begin(), y.end(), [](const MultiPoly& c) { return c.is_zero(); })) continue;

    // Common monomial content and the sign/scale of the first nonzero entry.
    std::optional<Monomial> g;
    for (const auto& c : y) {
      for (const auto& t : c.terms()) g = g ? g->gcd(t.mono) : t.mono;
    }
    MultiPoly unit = MultiPoly::monomial(vars, *g, 1);
    Rational lead;
    for (const auto& c : y) {
      if (!c.is_zero()) {
        lead = c.leading_term().coeff;
        break;
      }
    }
    PlueckerVector out = PlueckerVector::zero(vars);
    for (int k = 0; k < 3; ++k) {
      MultiPoly c = exact_divide(y[k], unit) * Rational(1 / lead);
      out = out + c * PlueckerVector::basis(vars, b, others[k]);
    }
    return out;
  }
  throw Error(ErrorKind::DegenerateSpan, "no base point gives a third line");
}

HonestResult honest_test(const MultiPoly& f) {
  require_form(f);
  CanonicalCayleyRep rep = canonical_rep(f);
  const auto& vars = f.vars();
  PlueckerVector l = PlueckerVector::symbolic(vars);
  PlueckerVector lp = gradient(rep.f2);
  HonestResult out{false, schubert_third_line(l, lp), {}};
  HessianForm h = hessian(f);
  const PlueckerVector& l2 = out.third_line;
  IdealBasis ideal({f, klein_quadric(vars)});
  Rational half(1, 2);
  out.witnesses[0] = witness(hessian_apply(h, l2, l) * half, ideal);
  out.witnesses[1] = witness(hessian_apply(h, l2, lp) * half, ideal);
  out.witnesses[2] = witness(hessian_apply(h, l2, l2) * half, ideal);
  out.honest = std::all_of(out.witnesses.begin(), out.witnesses.end(), [](const Witness& w) { return w.in_ideal(); });
  return out;
}

MultiPoly dualize(const MultiPoly& f) { return polarity_substitute(f); }

bool dual_honest_test(const MultiPoly& f) { return honest_test(dualize(f)).honest; }

AssociatedCurve associated_curve(const std::array<MultiPoly, 4>& gamma, int k) {
  if (k < 0 || k > 2) throw Error(ErrorKind::InvalidArgument, "k must be 0, 1 or 2");
  const auto& vars = gamma[0].vars();
  if (vars->size() != 1) throw Error(ErrorKind::InvalidArgument, "parametrization must be univariate");
  std::array<std::array<MultiPoly, 4>, 4> d{gamma, gamma, gamma, gamma};
  for (int r = 1; r < 4; ++r) {
    for (int i = 0; i < 4; ++i) {
      if (!same_vars(gamma[i].vars(), vars)) throw Error(ErrorKind::VarSetMismatch, "parametrization");
      d[r][i] = partial(d[r - 1][i], std::size_t{0});
    }
  }
  // 3x3 minor of rows 0..2 with column c removed.
  auto minor3 = [&](int c) {
    std::array<int, 3> cols{};
    for (int i = 0, n = 0; i < 4; ++i) {
      if (i != c) cols[n++] = i;
    }
    auto e = [&](int r, int j) -> const MultiPoly& { return d[r][cols[j]]; };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  };
  std::array<MultiPoly, 4> u{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)};
  for (int c = 0; c < 4; ++c) u[c] = (c % 2 == 0) ? minor3(c) : -minor3(c);
  // det[gamma''' ; gamma ; gamma' ; gamma''] = sum u_i gamma'''_i
  MultiPoly det(vars);
  for (int i = 0; i < 4; ++i) det += u[i] * d[3][i];
  if (det.is_zero()) throw Error(ErrorKind::DegenerateCurve, "the curve lies in a plane");

  AssociatedCurve out{k, {}};
  if (k == 0) {
    out.coords.assign(gamma.begin(), gamma.end());
  } else if (k == 1) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) out.coords.push_back(d[0][i] * d[1][j] - d[0][j] * d[1][i]);
    }
  } else {
    out.coords.assign(u.begin(), u.end());
  }
  return out;
}

ClassificationReport classify(const MultiPoly& f) {
  require_form(f);
  const auto& vars = f.vars();
  MultiPoly q = klein_quadric(vars);
  if (divides(q, f)) throw Error(ErrorKind::MultipleOfQ, "F is a multiple of Q");
  ClassificationReport out;
  out.form = f;
  out.self_bracket = bracket(f, f);
  IdealBasis ideal({f, q});
  out.weak_witness = witness(out.self_bracket, ideal);
  out.weak_cayley = out.weak_witness.in_ideal();
  if (!out.weak_cayley) return out;
  out.canonical = canonical_rep(f);
  auto dual = std::async(std::launch::async, [&] { return honest_test(dualize(f)); });
  out.honest_detail = honest_test(f);
  out.dual_detail = dual.get();
  out.honest = out.honest_detail->honest;
  out.dual_honest = out.dual_detail->honest;
  return out;
}

}  // namespace cayley
