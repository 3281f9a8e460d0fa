#include "cayley/serialize.hpp"

#include <fstream>
#include <sstream>

#include "cayley/parse.hpp"

namespace cayley {

namespace {

Json poly_list(std::span<const MultiPoly> polys) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(to_string(p));
  return a;
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a polynomial string", 1, 1);
  return j.get<std::string>();
}

}  // namespace

Json to_json(const MultiPoly& f) { return to_string(f); }

Json to_json(const HarmonicDecomposition& d) {
  return Json{{"degree", d.degree}, {"components", poly_list(d.components)}};
}

Json to_json(const CanonicalCayleyRep& rep) {
  return Json{{"f2", to_string(rep.f2)},
              {"f0", to_string(rep.f0)},
              {"f1", to_string(rep.f1)},
              {"cofactor_a", to_string(rep.cofactor_a)},
              {"cofactor_b", to_string(rep.cofactor_b)}};
}

Json to_json(const IdealBasis& ideal) {
  Json order{{"kind", ideal.order().kind == MonomialOrder::Kind::Grevlex ? "grevlex" : "block"}};
  if (ideal.order().kind == MonomialOrder::Kind::BlockElimination) order["split"] = ideal.order().split;
  return Json{{"generators", poly_list(ideal.generators())}, {"order", order}};
}

Json to_json(const Witness& w, bool certificate) {
  Json j{{"polynomial", to_string(w.poly)}, {"remainder", to_string(w.remainder)}, {"in_ideal", w.in_ideal()}};
  if (certificate) j["cofactors"] = poly_list(w.cofactors);
  return j;
}

Json to_json(const HonestResult& h, bool certificate) {
  Json third = Json::array();
  for (const auto& c : h.third_line.entries) third.push_back(to_string(c));
  Json ws = Json::array();
  for (const auto& w : h.witnesses) ws.push_back(to_json(w, certificate));
  return Json{{"honest", h.honest}, {"third_line", third}, {"witnesses", ws}};
}

Json to_json(const ClassificationReport& r, bool certificate) {
  Json j{{"form", to_string(r.form)},
         {"weak_cayley", r.weak_cayley},
         {"honest", r.honest},
         {"dual_honest", r.dual_honest},
         {"self_bracket", to_string(r.self_bracket)},
         {"weak_witness", to_json(r.weak_witness, certificate)}};
  if (certificate) j["ideal_generators"] = Json::array({"F", "Q"});
  if (r.canonical) j["canonical_rep"] = to_json(*r.canonical);
  if (r.honest_detail) j["honest_witnesses"] = to_json(*r.honest_detail, certificate);
  if (r.dual_detail) j["dual_honest_witnesses"] = to_json(*r.dual_detail, certificate);
  return j;
}

Json to_json(const AssociatedCurve& c) { return Json{{"k", c.k}, {"coords", poly_list(c.coords)}}; }

Json to_json(const CurveIdeal& c) {
  Json j{{"generators", poly_list(c.generators)}};
  if (c.param) j["param"] = poly_list(*c.param);
  return j;
}

IdealBasis ideal_from_json(const Json& j, const VarSetPtr& vars) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw ParseError("ideal needs a \"generators\" array", 1, 1);
  }
  std::vector<MultiPoly> gens;
  for (const auto& g : j["generators"]) gens.push_back(parse_poly(require_string(g, "generator"), vars));
  MonomialOrder order;
  if (j.contains("order")) {
    const Json& o = j["order"];
    std::string kind = o.value("kind", "grevlex");
    if (kind == "block") {
      order = MonomialOrder::block(o.value("split", std::size_t{0}));
    } else if (kind != "grevlex") {
      throw ParseError("unknown monomial order '" + kind + "'", 1, 1);
    }
  }
  return IdealBasis(vars, std::move(gens), order);
}

CurveIdeal curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw ParseError("curve file needs a \"generators\" array", 1, 1);
  }
  CurveIdeal c;
  for (const auto& g : j["generators"]) {
    c.generators.push_back(parse_poly(require_string(g, "generator"), VarSet::points()));
  }
  if (j.contains("param")) {
    const Json& p = j["param"];
    if (!p.is_array() || p.size() != 4) throw ParseError("\"param\" needs exactly 4 polynomials", 1, 1);
    std::array<MultiPoly, 4> gamma;
    for (std::size_t i = 0; i < 4; ++i) gamma[i] = parse_poly(require_string(p[i], "param entry"), VarSet::parameter());
    c.param = gamma;
  }
  return c;
}

CurveIdeal read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), 1, e.byte);
  }
  return curve_from_json(j);
}

}  // namespace cayley
