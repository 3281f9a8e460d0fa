#include "cayley/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace cayley {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VarSetMismatch: return "VarSetMismatch";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotHarmonic: return "NotHarmonic";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotWeaklyCayley: return "NotWeaklyCayley";
    case ErrorKind::MultipleOfQ: return "MultipleOfQ";
    case ErrorKind::NotALine: return "NotALine";
    case ErrorKind::DegenerateQuadric: return "DegenerateQuadric";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::NotACurve: return "NotACurve";
    case ErrorKind::EmptyCurve: return "EmptyCurve";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::vector<std::string> names, std::size_t elimination_block)
    : names_(std::move(names)), block_(elimination_block) {
  if (names_.size() > kMaxVars) {
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  if (block_ > names_.size()) {
    throw Error(ErrorKind::InvalidArgument, "elimination block larger than the variable set");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second) throw Error(ErrorKind::InvalidArgument, "duplicate variable " + n);
  }
  // Reserved Pluecker names keep their relative order when present.
  std::size_t last = 0;
  bool any = false;
  for (auto pn : kPlueckerNames) {
    auto idx = index_of(pn);
    if (!idx) continue;
    if (any && *idx < last) {
      throw Error(ErrorKind::InvalidArgument, "Pluecker variables must appear as p01,p02,p03,p12,p13,p23");
    }
    last = *idx;
    any = true;
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSet::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error(ErrorKind::UnknownVariable, std::string(name));
  return *idx;
}

VarSetPtr VarSet::make(std::vector<std::string> names, std::size_t elimination_block) {
  return std::make_shared<const VarSet>(std::move(names), elimination_block);
}

VarSetPtr VarSet::pluecker() {
  static const VarSetPtr vs = make({"p01", "p02", "p03", "p12", "p13", "p23"});
  return vs;
}

VarSetPtr VarSet::points_and_pluecker() {
  static const VarSetPtr vs =
      make({"x0", "x1", "x2", "x3", "p01", "p02", "p03", "p12", "p13", "p23"}, 4);
  return vs;
}

VarSetPtr VarSet::points() {
  static const VarSetPtr vs = make({"x0", "x1", "x2", "x3"});
  return vs;
}

VarSetPtr VarSet::parameter() {
  static const VarSetPtr vs = make({"t"});
  return vs;
}

bool same_vars(const VarSetPtr& a, const VarSetPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::unit(std::size_t var) {
  Monomial m;
  m.exp.at(var) = 1;
  m.degree = 1;
  return m;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> e) {
  if (e.size() > kMaxVars) throw Error(ErrorKind::InvalidArgument, "too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > kMaxExponent) throw Error(ErrorKind::ExponentOverflow, "exponent too large");
    m.exp[i] = static_cast<std::uint16_t>(e[i]);
    m.degree += e[i];
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t(exp[i]) + other.exp[i];
    if (e > kMaxExponent) throw Error(ErrorKind::ExponentOverflow, "exponent overflow in product");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = degree + other.degree;
  return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = other.exp[i] - exp[i];
  m.degree = other.degree - degree;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(exp[i], other.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::min(exp[i], other.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0;
  std::uint32_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int block_compare(const Monomial& a, const Monomial& b, std::size_t split, std::size_t nvars) {
  if (int c = grevlex_range(a, b, 0, split); c != 0) return c;
  return grevlex_range(a, b, split, nvars);
}

int deglex_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

namespace {

// Sorts descending, merges repeats, drops zeros.
void canonicalize(std::vector<Term>& terms, std::size_t nvars) {
  std::sort(terms.begin(), terms.end(), [nvars](const Term& x, const Term& y) {
    return grevlex_compare(x.mono, y.mono, nvars) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (sgn(acc.coeff) != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// a + sign*b on sorted term lists.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, bool subtract,
                        std::size_t nvars) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].mono, b[j].mono, nvars);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly() : MultiPoly(VarSet::pluecker()) {}

MultiPoly::MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error(ErrorKind::InvalidArgument, "null VarSet");
}

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.push_back({Monomial::one(), c});
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::string_view name) {
  std::size_t idx = vars->require_index(name);
  MultiPoly p(std::move(vars));
  p.terms_.push_back({Monomial::unit(idx), Rational(1)});
  return p;
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, const Monomial& m, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(VarSetPtr vars, std::vector<Term> terms) {
  MultiPoly p(std::move(vars));
  std::size_t n = p.vars_->size();
  for (const auto& t : terms) {
    for (std::size_t i = n; i < kMaxVars; ++i) {
      if (t.mono.exp[i] != 0) throw Error(ErrorKind::VarSetMismatch, "monomial uses a slot outside the VarSet");
    }
  }
  canonicalize(terms, n);
  p.terms_ = std::move(terms);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.degree));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.exp.at(var)));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint32_t d = terms_.front().mono.degree;
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree == d; });
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().mono.degree == 0) return terms_.front().coeff;
  return std::nullopt;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Rational(0);
}

MultiPoly MultiPoly::homogeneous_part(int deg) const {
  MultiPoly p(vars_);
  for (const auto& t : terms_) {
    if (int(t.mono.degree) == deg) p.terms_.push_back(t);
  }
  return p;
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (!same_vars(vars_, o.vars_)) {
    throw Error(ErrorKind::VarSetMismatch, "operands live in different variable sets");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  terms_ = merge(terms_, o.terms_, false, vars_->size());
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  terms_ = merge(terms_, o.terms_, true, vars_->size());
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly p(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  canonicalize(prod, a.vars_->size());
  p.terms_ = std::move(prod);
  return p;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_same(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly pow(const MultiPoly& f, unsigned k) {
  MultiPoly result = MultiPoly::constant(f.vars(), 1);
  MultiPoly base = f;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly partial(const MultiPoly& f, std::string_view var) {
  return partial(f, f.vars()->require_index(var));
}

MultiPoly partial(const MultiPoly& f, std::size_t var) {
  if (var >= f.vars()->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::uint16_t e = t.mono.exp[var];
    if (e == 0) continue;
    Term d{t.mono, t.coeff * e};
    d.mono.exp[var] = e - 1;
    d.mono.degree -= 1;
    out.push_back(std::move(d));
  }
  return MultiPoly::from_terms(f.vars(), std::move(out));
}

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& assignment) {
  if (assignment.empty()) return f;
  return substitute(f, assignment, assignment.begin()->second.vars());
}

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& assignment,
                     const VarSetPtr& target) {
  const VarSet& src = *f.vars();
  std::vector<MultiPoly> images;
  images.reserve(src.size());
  for (const auto& [name, img] : assignment) {
    if (!src.contains(name)) throw Error(ErrorKind::UnknownVariable, name + " is not a variable of the source");
    if (!same_vars(img.vars(), target)) {
      throw Error(ErrorKind::VarSetMismatch, "substitution images must share one VarSet");
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = assignment.find(src.name(i));
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (f.degree_in(i) > 0) {
      if (!target->contains(src.name(i))) {
        throw Error(ErrorKind::VarSetMismatch, "unassigned variable " + src.name(i) + " missing from target");
      }
      images.push_back(MultiPoly::variable(target, src.name(i)));
    } else {
      images.push_back(MultiPoly(target));
    }
  }
  // Cache powers per variable.
  std::vector<std::vector<MultiPoly>> powers(src.size());
  auto power_of = [&](std::size_t var, std::uint16_t e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  MultiPoly result(target);
  for (const auto& t : f.terms()) {
    MultiPoly term = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono.exp[i] != 0) term *= power_of(i, t.mono.exp[i]);
    }
    result += term;
  }
  return result;
}

Rational evaluate(const MultiPoly& f, std::span<const Rational> point) {
  if (point.size() != f.vars()->size()) {
    throw Error(ErrorKind::VarSetMismatch, "evaluation point has the wrong dimension");
  }
  Rational sum = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint16_t e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

MultiPoly change_ring(const MultiPoly& f, const VarSetPtr& target) {
  if (same_vars(f.vars(), target)) {
    if (f.vars() == target) return f;
    return MultiPoly::from_terms(target, std::vector<Term>(f.terms().begin(), f.terms().end()));
  }
  const VarSet& src = *f.vars();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src.name(i));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Term n{Monomial::one(), t.coeff};
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (!map[i]) throw Error(ErrorKind::VarSetMismatch, "variable " + src.name(i) + " missing from target ring");
      n.mono.exp[*map[i]] = t.mono.exp[i];
    }
    n.mono.degree = t.mono.degree;
    out.push_back(std::move(n));
  }
  return MultiPoly::from_terms(target, std::move(out));
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (!same_vars(f.vars(), g.vars())) throw Error(ErrorKind::VarSetMismatch, "exact_divide operands");
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_divide by zero");
  const Term& lg = g.leading_term();
  std::vector<Term> quotient;
  MultiPoly r = f;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lg.mono.divides(lr.mono)) throw Error(ErrorKind::NotDivisible, "divisor does not divide dividend");
    Term q{lg.mono.quotient_of(lr.mono), lr.coeff / lg.coeff};
    r -= MultiPoly::monomial(f.vars(), q.mono, q.coeff) * g;
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(f.vars(), std::move(quotient));
}

bool divides(const MultiPoly& g, const MultiPoly& f) {
  try {
    exact_divide(f, g);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotDivisible) return false;
    throw;
  }
}

MultiPoly make_monic(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.leading_term().coeff;
  return f * inv;
}

MultiPoly strip_monomial_content(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Monomial g = f.terms().front().mono;
  for (const auto& t : f.terms()) g = g.gcd(t.mono);
  if (g.degree == 0) return f;
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back({g.quotient_of(t.mono), t.coeff});
  return MultiPoly::from_terms(f.vars(), std::move(out));
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  const VarSet& vs = *f.vars();
  std::vector<const Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
    return deglex_compare(a->mono, b->mono, vs.size()) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coeff;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool unit = (c == 1);
    bool wrote = false;
    if (!unit || t->mono.degree == 0) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::uint16_t e = t->mono.exp[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << vs.name(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace cayley
