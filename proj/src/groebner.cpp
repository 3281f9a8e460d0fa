#include "cayley/groebner.hpp"

#include <algorithm>
#include <mutex>

namespace cayley {

namespace {

using Poly = std::vector<Term>;

struct Ord {
  MonomialOrder order;
  std::size_t n;
  int operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b, n); }
};

Poly to_poly(const MultiPoly& f, const Ord& ord) {
  Poly p(f.terms().begin(), f.terms().end());
  if (ord.order.kind != MonomialOrder::Kind::Grevlex) {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord(a.mono, b.mono) > 0; });
  }
  return p;
}

MultiPoly from_poly(const VarSetPtr& vars, Poly p) { return MultiPoly::from_terms(vars, std::move(p)); }

// f[head..] - c * m * g
Poly axpy(const Poly& f, std::size_t head, const Rational& c, const Monomial& m, const Poly& g, const Ord& ord) {
  Poly out;
  out.reserve(f.size() - head + g.size());
  std::size_t i = head;
  std::size_t j = 0;
  Monomial gm;
  if (j < g.size()) gm = m * g[j].mono;
  while (i < f.size() && j < g.size()) {
    int s = ord(f[i].mono, gm);
    if (s > 0) {
      out.push_back(f[i++]);
      continue;
    }
    if (s < 0) {
      out.push_back({gm, -c * g[j].coeff});
    } else {
      Rational v = f[i].coeff - c * g[j].coeff;
      if (sgn(v) != 0) out.push_back({gm, std::move(v)});
      ++i;
    }
    if (++j < g.size()) gm = m * g[j].mono;
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({m * g[j].mono, -c * g[j].coeff});
  return out;
}

Poly shift(const Poly& g, const Monomial& m) {
  Poly out = g;
  for (auto& t : out) t.mono = t.mono * m;
  return out;
}

void scale(Poly& p, const Rational& c) {
  for (auto& t : p) t.coeff *= c;
}

struct Element {
  Poly poly;
  std::vector<Poly> rep;
  std::uint32_t sugar = 0;
  bool active = true;

  const Monomial& lm() const { return poly.front().mono; }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

class Engine {
 public:
  Engine(VarSetPtr vars, MonomialOrder order, GroebnerOptions options, std::size_t ngens)
      : vars_(std::move(vars)), ord_{order, vars_->size()}, options_(options), ngens_(ngens) {}

  void add_generator(const MultiPoly& g, std::size_t index) {
    Poly f = to_poly(g, ord_);
    if (f.empty()) return;
    std::vector<Poly> rep;
    if (options_.track_lift) {
      rep.resize(ngens_);
      rep[index].push_back({Monomial::one(), Rational(1)});
    }
    auto sugar = static_cast<std::uint32_t>(g.degree());
    reduce(f, options_.track_lift ? &rep : nullptr);
    if (!f.empty()) insert(std::move(f), std::move(rep), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar != b.sugar ? a.sugar < b.sugar : ord_(a.lcm, b.lcm) < 0) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (options_.max_degree > 0 && p.sugar > static_cast<std::uint32_t>(options_.max_degree)) {
        throw Error(ErrorKind::BudgetExceeded,
                    "Groebner computation needs degree " + std::to_string(p.sugar) + " > budget " +
                        std::to_string(options_.max_degree));
      }
      ++reduced_;
      const Element& a = elements_[p.i];
      const Element& b = elements_[p.j];
      Monomial ma = a.lm().quotient_of(p.lcm);
      Monomial mb = b.lm().quotient_of(p.lcm);
      Poly s = axpy(shift(a.poly, ma), 0, Rational(1), mb, b.poly, ord_);
      std::vector<Poly> rep;
      if (options_.track_lift) {
        rep.resize(ngens_);
        for (std::size_t k = 0; k < ngens_; ++k) rep[k] = axpy(shift(a.rep[k], ma), 0, Rational(1), mb, b.rep[k], ord_);
      }
      reduce(s, options_.track_lift ? &rep : nullptr);
      if (!s.empty()) insert(std::move(s), std::move(rep), p.sugar);
    }
  }

  void finish(std::vector<MultiPoly>& basis, std::vector<std::vector<MultiPoly>>& lift,
              std::vector<Monomial>& lms) {
    std::vector<std::size_t> act;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      if (elements_[k].active) act.push_back(k);
    }
    for (std::size_t k : act) {
      Element& e = elements_[k];
      Poly tail(e.poly.begin() + 1, e.poly.end());
      reduce(tail, options_.track_lift ? &e.rep : nullptr);
      Term lead = e.poly.front();
      e.poly.clear();
      e.poly.push_back(std::move(lead));
      e.poly.insert(e.poly.end(), tail.begin(), tail.end());
    }
    std::sort(act.begin(), act.end(),
              [&](std::size_t a, std::size_t b) { return ord_(elements_[a].lm(), elements_[b].lm()) < 0; });
    for (std::size_t k : act) {
      Element& e = elements_[k];
      lms.push_back(e.lm());
      basis.push_back(from_poly(vars_, e.poly));
      if (options_.track_lift) {
        std::vector<MultiPoly> row;
        row.reserve(ngens_);
        for (auto& r : e.rep) row.push_back(from_poly(vars_, r));
        lift.push_back(std::move(row));
      }
    }
  }

  std::size_t reduced() const { return reduced_; }

 private:
  const Element* divisor(const Monomial& m) const {
    for (std::size_t k : active_) {
      if (elements_[k].lm().divides(m)) return &elements_[k];
    }
    return nullptr;
  }

  void reduce(Poly& f, std::vector<Poly>* rep) const {
    Poly rem;
    std::size_t head = 0;
    while (head < f.size()) {
      const Element* d = divisor(f[head].mono);
      if (d == nullptr) {
        rem.push_back(f[head++]);
        continue;
      }
      Rational q = f[head].coeff;
      Monomial m = d->lm().quotient_of(f[head].mono);
      if (rep != nullptr) {
        for (std::size_t k = 0; k < ngens_; ++k) {
          if (!d->rep[k].empty()) (*rep)[k] = axpy((*rep)[k], 0, q, m, d->rep[k], ord_);
        }
      }
      f = axpy(f, head, q, m, d->poly, ord_);
      head = 0;
    }
    f = std::move(rem);
  }

  void insert(Poly f, std::vector<Poly> rep, std::uint32_t sugar) {
    Rational inv = 1 / f.front().coeff;
    scale(f, inv);
    for (auto& r : rep) scale(r, inv);
    std::size_t h = elements_.size();
    elements_.push_back({std::move(f), std::move(rep), sugar, true});
    update(h);
  }

  // Gebauer-Moeller installation of element h.
  void update(std::size_t h) {
    const Monomial lh = elements_[h].lm();
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g : active_) {
      const Monomial& lg = elements_[g].lm();
      cands.push_back({g, lg.lcm(lh), lg.coprime(lh)});
    }
    // Chain criterion among the new pairs.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      if (!cands[a].coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b) {
          if (cands[b].lcm.divides(cands[a].lcm)) drop = true;
        }
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) {
          if (kept[b].lcm.divides(cands[a].lcm)) drop = true;
        }
      }
      if (!drop) kept.push_back(cands[a]);
    }
    // Product criterion.
    std::erase_if(kept, [](const Cand& c) { return c.coprime; });
    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial li = elements_[p.i].lm().lcm(lh);
      Monomial lj = elements_[p.j].lm().lcm(lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const Cand& c : kept) {
      const Element& eg = elements_[c.g];
      const Element& eh = elements_[h];
      std::uint32_t sg = eg.sugar + c.lcm.degree - eg.lm().degree;
      std::uint32_t sh = eh.sugar + c.lcm.degree - eh.lm().degree;
      pairs_.push_back({c.g, h, c.lcm, std::max(sg, sh)});
    }
    std::erase_if(active_, [&](std::size_t g) {
      if (lh.divides(elements_[g].lm())) {
        elements_[g].active = false;
        return true;
      }
      return false;
    });
    active_.push_back(h);
  }

  VarSetPtr vars_;
  Ord ord_;
  GroebnerOptions options_;
  std::size_t ngens_;
  std::vector<Element> elements_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t reduced_ = 0;
};

VarSetPtr common_vars(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
  return gens.front().vars();
}

}  // namespace

std::string describe(const MonomialOrder& order) {
  if (order.kind == MonomialOrder::Kind::Grevlex) return "grevlex";
  return "block(" + std::to_string(order.split) + ")";
}

struct IdealBasis::Cache {
  std::once_flag once;
  std::vector<MultiPoly> basis;
  std::vector<std::vector<MultiPoly>> lift;
  std::vector<Monomial> lms;
  std::size_t pairs = 0;
  bool done = false;
};

IdealBasis::IdealBasis(std::vector<MultiPoly> generators, MonomialOrder order, GroebnerOptions options)
    : vars_(common_vars(generators)),
      generators_(std::move(generators)),
      order_(order),
      options_(options),
      cache_(std::make_shared<Cache>()) {
  check();
}

IdealBasis::IdealBasis(VarSetPtr vars, std::vector<MultiPoly> generators, MonomialOrder order,
                       GroebnerOptions options)
    : vars_(std::move(vars)),
      generators_(std::move(generators)),
      order_(order),
      options_(options),
      cache_(std::make_shared<Cache>()) {
  check();
}

void IdealBasis::check() const {
  for (const auto& g : generators_) {
    if (!same_vars(g.vars(), vars_)) throw Error(ErrorKind::VarSetMismatch, "ideal generators");
  }
  if (order_.kind == MonomialOrder::Kind::BlockElimination && order_.split > vars_->size()) {
    throw Error(ErrorKind::InvalidArgument, "elimination block larger than the ring");
  }
}

bool IdealBasis::has_groebner() const { return cache_->done; }

const std::vector<MultiPoly>& IdealBasis::groebner() const {
  std::call_once(cache_->once, [this] {
    Engine engine(vars_, order_, options_, generators_.size());
    for (std::size_t j = 0; j < generators_.size(); ++j) engine.add_generator(generators_[j], j);
    engine.run();
    engine.finish(cache_->basis, cache_->lift, cache_->lms);
    cache_->pairs = engine.reduced();
    cache_->done = true;
  });
  return cache_->basis;
}

const std::vector<std::vector<MultiPoly>>& IdealBasis::lift() const {
  if (!options_.track_lift) throw Error(ErrorKind::InvalidArgument, "ideal was built without lift tracking");
  groebner();
  return cache_->lift;
}

const std::vector<Monomial>& IdealBasis::leading_monomials() const {
  groebner();
  return cache_->lms;
}

std::size_t IdealBasis::pairs_reduced() const {
  groebner();
  return cache_->pairs;
}

IdealBasis buchberger(std::vector<MultiPoly> generators, MonomialOrder order, GroebnerOptions options) {
  IdealBasis ideal(std::move(generators), order, options);
  ideal.groebner();
  return ideal;
}

NormalForm normal_form(const MultiPoly& f, const IdealBasis& ideal) {
  if (!same_vars(f.vars(), ideal.vars())) throw Error(ErrorKind::VarSetMismatch, "normal_form operand");
  const auto& basis = ideal.groebner();
  const auto& lms = ideal.leading_monomials();
  Ord ord{ideal.order(), ideal.vars()->size()};
  std::vector<Poly> gb;
  gb.reserve(basis.size());
  for (const auto& g : basis) gb.push_back(to_poly(g, ord));
  std::vector<std::vector<Term>> cof(basis.size());

  Poly p = to_poly(f, ord);
  Poly rem;
  std::size_t head = 0;
  while (head < p.size()) {
    std::size_t k = 0;
    while (k < lms.size() && !lms[k].divides(p[head].mono)) ++k;
    if (k == lms.size()) {
      rem.push_back(p[head++]);
      continue;
    }
    Rational q = p[head].coeff;
    Monomial m = lms[k].quotient_of(p[head].mono);
    cof[k].push_back({m, q});
    p = axpy(p, head, q, m, gb[k], ord);
    head = 0;
  }
  NormalForm out{from_poly(ideal.vars(), std::move(rem)), {}};
  for (auto& c : cof) out.cofactors.push_back(from_poly(ideal.vars(), std::move(c)));
  return out;
}

bool member(const MultiPoly& f, const IdealBasis& ideal) { return normal_form(f, ideal).remainder.is_zero(); }

MembershipCertificate generator_cofactors(const MultiPoly& f, const IdealBasis& ideal) {
  const auto& lift = ideal.lift();
  NormalForm nf = normal_form(f, ideal);
  MembershipCertificate cert;
  cert.remainder = nf.remainder;
  cert.cofactors.assign(ideal.generators().size(), MultiPoly(ideal.vars()));
  for (std::size_t i = 0; i < nf.cofactors.size(); ++i) {
    if (nf.cofactors[i].is_zero()) continue;
    for (std::size_t j = 0; j < cert.cofactors.size(); ++j) {
      if (!lift[i][j].is_zero()) cert.cofactors[j] += nf.cofactors[i] * lift[i][j];
    }
  }
  return cert;
}

bool verify_certificate(const MultiPoly& f, const IdealBasis& ideal, const MembershipCertificate& cert) {
  if (cert.cofactors.size() != ideal.generators().size()) return false;
  MultiPoly sum = cert.remainder;
  for (std::size_t j = 0; j < cert.cofactors.size(); ++j) sum += cert.cofactors[j] * ideal.generators()[j];
  return sum == f;
}

namespace {

VarSetPtr retained_ring(const std::vector<std::string>& keep) {
  if (keep == VarSet::pluecker()->names()) return VarSet::pluecker();
  if (keep == VarSet::points()->names()) return VarSet::points();
  return VarSet::make(keep);
}

}  // namespace

IdealBasis eliminate(const IdealBasis& ideal, const std::vector<std::string>& drop, GroebnerOptions options) {
  const VarSet& src = *ideal.vars();
  std::vector<bool> dropped(src.size(), false);
  for (const auto& name : drop) dropped[src.require_index(name)] = true;
  std::vector<std::string> names;
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (dropped[i]) names.push_back(src.name(i));
  }
  std::size_t split = names.size();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!dropped[i]) {
      names.push_back(src.name(i));
      keep.push_back(src.name(i));
    }
  }
  auto ring = VarSet::make(names, split);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(change_ring(g, ring));
  IdealBasis big(ring, std::move(gens), MonomialOrder::block(split), options);

  auto target = retained_ring(keep);
  std::vector<MultiPoly> kept;
  for (const auto& g : big.groebner()) {
    bool free = true;
    for (std::size_t i = 0; i < split && free; ++i) free = g.degree_in(i) == 0;
    if (free) kept.push_back(change_ring(g, target));
  }
  return IdealBasis(target, std::move(kept), MonomialOrder::grevlex(), options);
}

IdealBasis saturate(const IdealBasis& ideal, const MultiPoly& g, GroebnerOptions options) {
  if (!same_vars(g.vars(), ideal.vars())) throw Error(ErrorKind::VarSetMismatch, "saturating element");
  const VarSet& src = *ideal.vars();
  std::string t = "_sat";
  while (src.contains(t)) t += "_";
  std::vector<std::string> names{t};
  names.insert(names.end(), src.names().begin(), src.names().end());
  auto ring = VarSet::make(names, 1);
  std::vector<MultiPoly> gens;
  for (const auto& f : ideal.generators()) gens.push_back(change_ring(f, ring));
  gens.push_back(MultiPoly::constant(ring, 1) - MultiPoly::variable(ring, t) * change_ring(g, ring));
  IdealBasis big(ring, std::move(gens), MonomialOrder::block(1), options);

  std::vector<MultiPoly> kept;
  for (const auto& f : big.groebner()) {
    if (f.degree_in(0) == 0) kept.push_back(change_ring(f, ideal.vars()));
  }
  return IdealBasis(ideal.vars(), std::move(kept), ideal.order(), options);
}

bool contains(const IdealBasis& ideal, const IdealBasis& sub) {
  for (const auto& g : sub.generators()) {
    if (!member(change_ring(g, ideal.vars()), ideal)) return false;
  }
  return true;
}

}  // namespace cayley
