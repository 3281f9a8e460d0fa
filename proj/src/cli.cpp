#include "cayley/cli.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>

#include "cayley/chow.hpp"
#include "cayley/parse.hpp"
#include "cayley/serialize.hpp"

namespace cayley {

namespace {

struct Options {
  bool json = false;
  bool certificate = false;
  int max_degree = 0;
  std::vector<std::string> polys;
  std::string poly;
  std::string file;
  int k = 1;
};

MultiPoly pl(const std::string& text) { return parse_poly(text, VarSet::pluecker()); }

void emit(std::ostream& out, const Options& o, const std::string& key, const MultiPoly& f) {
  if (o.json) {
    out << Json{{key, to_string(f)}}.dump(2) << "\n";
  } else {
    out << to_string(f) << "\n";
  }
}

const char* flag(bool b) { return b ? "true" : "false"; }

void print_witnesses(std::ostream& out, const char* label, const HonestResult& h) {
  static const char* names[3] = {"(L'',L)", "(L'',L')", "(L'',L'')"};
  out << label << ":\n";
  for (int i = 0; i < 3; ++i) {
    const Witness& w = h.witnesses[i];
    out << "  " << names[i] << " " << to_string(w.poly) << "  remainder " << to_string(w.remainder) << "\n";
  }
}

void print_report(std::ostream& out, const ClassificationReport& r, bool certificate) {
  out << "form: " << to_string(r.form) << "\n";
  out << "weak_cayley: " << flag(r.weak_cayley) << "\n";
  out << "honest: " << flag(r.honest) << "\n";
  out << "dual_honest: " << flag(r.dual_honest) << "\n";
  out << "{F,F}: " << to_string(r.self_bracket) << "\n";
  out << "{F,F} mod (Q,F): " << to_string(r.weak_witness.remainder) << "\n";
  if (certificate) {
    out << "  = " << to_string(r.weak_witness.cofactors[0]) << " * F + (" << to_string(r.weak_witness.cofactors[1])
        << ") * Q + remainder\n";
  }
  if (r.canonical) out << "F2: " << to_string(r.canonical->f2) << "\n";
  if (r.honest_detail) print_witnesses(out, "honest witnesses", *r.honest_detail);
  if (r.dual_detail) print_witnesses(out, "dual honest witnesses", *r.dual_detail);
}

struct Check {
  std::string name;
  std::function<bool()> body;
};

std::vector<Check> selftest_checks() {
  auto P = [](const char* s) { return pl(s); };
  MultiPoly q = klein_quadric();
  MultiPoly skew = P("p01*p23");
  MultiPoly quadric = P("(p01+p23)^2 + 4*p03*p12");
  MultiPoly chain = P("p01*p02*p23");
  MultiPoly conic = P("p02^2 + 4*p01*p12");
  MultiPoly cubic = twisted_cubic_form();
  std::vector<MultiPoly> forms{q, skew, quadric, chain, conic, cubic};

  std::vector<Check> checks;
  checks.push_back({"euler identity", [=] {
                      return std::all_of(forms.begin(), forms.end(),
                                         [](const MultiPoly& f) { return euler_check(f).is_zero(); });
                    }});
  checks.push_back({"product rule", [=] {
                      for (const auto& a : forms) {
                        for (const auto& b : forms) {
                          if (!product_rule_check(a, b).is_zero()) return false;
                        }
                      }
                      return true;
                    }});
  checks.push_back({"laplacian of Q", [=] { return laplacian(q) == MultiPoly::constant(q.vars(), 3); }});
  checks.push_back({"skew lines bracket", [=] { return bracket(skew, skew) == skew * Rational(2); }});
  checks.push_back({"quadric bracket", [=] { return bracket(quadric, quadric) == quadric * Rational(8); }});
  checks.push_back({"skew lines representative", [=] {
                      auto rep = canonical_rep(skew);
                      return rep.f2 == skew - q * Rational(1, 2) && bracket(rep.f2, rep.f2) == q * Rational(1, 2);
                    }});
  checks.push_back({"quadric representative", [=] {
                      auto rep = canonical_rep(quadric);
                      return rep.f2 == quadric - q * Rational(2) && bracket(rep.f2, rep.f2) == q * Rational(8) &&
                             laplacian(rep.f2).is_zero();
                    }});
  checks.push_back({"chain representative", [=] {
                      auto rep = canonical_rep(chain);
                      MultiPoly p02 = P("p02");
                      return rep.f2 == chain - p02 * q * Rational(1, 3) &&
                             bracket(rep.f2, rep.f2) == q * p02 * p02 * Rational(4, 9);
                    }});
  checks.push_back({"conic strong equation", [=] { return bracket(conic, conic).is_zero(); }});
  checks.push_back({"weak Cayley fixtures", [=] {
                      return weak_cayley_test(skew) && weak_cayley_test(quadric) && weak_cayley_test(chain) &&
                             weak_cayley_test(conic) && weak_cayley_test(cubic) &&
                             !weak_cayley_test(P("p01^2 + p02*p13"));
                    }});
  checks.push_back({"chain is honest", [=] {
                      auto h = honest_test(chain);
                      return h.honest && !member(h.witnesses[2].poly, IdealBasis({q}));
                    }});
  checks.push_back({"twisted cubic is honest", [=] { return honest_test(cubic).honest; }});
  checks.push_back({"quadric is tangential", [=] {
                      auto r = classify(tangential_quadric_form({1, 1, 1, 1}));
                      return r.weak_cayley && !r.honest && !r.dual_honest;
                    }});
  checks.push_back({"polarity is an involution", [=] {
                      return std::all_of(forms.begin(), forms.end(),
                                         [](const MultiPoly& f) { return dualize(dualize(f)) == f; });
                    }});
  return checks;
}

int selftest(std::ostream& out, const Options& o) {
  auto checks = selftest_checks();
  int failed = 0;
  Json results = Json::array();
  for (const auto& c : checks) {
    bool ok = false;
    std::string error;
    try {
      ok = c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!ok) ++failed;
    if (o.json) {
      Json r{{"check", c.name}, {"ok", ok}};
      if (!error.empty()) r["error"] = error;
      results.push_back(r);
    } else {
      out << (ok ? "ok   " : "FAIL ") << c.name;
      if (!error.empty()) out << " (" << error << ")";
      out << "\n";
    }
  }
  if (o.json) out << Json{{"checks", results}, {"failed", failed}}.dump(2) << "\n";
  return failed == 0 ? 0 : 1;
}

GroebnerOptions budget(const Options& o) { return {.track_lift = false, .max_degree = o.max_degree}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley forms of curves in P^3: brackets, harmonic decomposition, Chow forms, classification"};
  app.name("cayley");
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_flag("--certificate", o.certificate, "Include cofactor witnesses for membership claims");
  app.add_option("--max-degree", o.max_degree, "Degree cap for Groebner eliminations (0 = none)")
      ->check(CLI::NonNegativeNumber);

  auto* c_bracket = app.add_subcommand("bracket", "Cayley bracket {F,G}");
  c_bracket->add_option("forms", o.polys, "F G")->required()->expected(2);
  auto* c_laplace = app.add_subcommand("laplace", "Laplacian of F");
  c_laplace->add_option("F", o.poly)->required();
  auto* c_harmonic = app.add_subcommand("harmonic", "Harmonic decomposition F = sum Q^i h_i");
  c_harmonic->add_option("F", o.poly)->required();
  auto* c_f2 = app.add_subcommand("f2", "Canonical Cayley representative F2 = F0 + Q F1");
  c_f2->add_option("F", o.poly)->required();
  auto* c_quad = app.add_subcommand("quadcheck", "Harmonic top of {F0 + Q F1, F0 + Q F1}");
  c_quad->add_option("forms", o.polys, "F0 F1")->required()->expected(2);
  auto* c_classify = app.add_subcommand("classify", "Weak Cayley, honest and dual honest tests");
  auto* opt_poly = c_classify->add_option("--poly", o.poly, "Form in p01..p23");
  auto* opt_file = c_classify->add_option("--file", o.file, "Curve JSON file")->check(CLI::ExistingFile);
  opt_poly->excludes(opt_file);
  c_classify->require_option(1);
  auto* c_chow = app.add_subcommand("chow", "Chow form of a curve");
  c_chow->add_option("--file", o.file, "Curve JSON file")->required()->check(CLI::ExistingFile);
  auto* c_dual = app.add_subcommand("dualize", "Apply the polarity to F");
  c_dual->add_option("F", o.poly)->required();
  auto* c_assoc = app.add_subcommand("associated", "Associated curves of a parametrized curve");
  c_assoc->add_option("--file", o.file, "Curve JSON file with \"param\"")->required()->check(CLI::ExistingFile);
  c_assoc->add_option("-k", o.k, "0, 1 or 2")->check(CLI::Range(0, 2));
  auto* c_self = app.add_subcommand("selftest", "Run built-in identity and fixture checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_bracket->parsed()) {
      emit(out, o, "bracket", bracket(pl(o.polys[0]), pl(o.polys[1])));
    } else if (c_laplace->parsed()) {
      emit(out, o, "laplacian", laplacian(pl(o.poly)));
    } else if (c_harmonic->parsed()) {
      auto d = decompose(pl(o.poly));
      if (o.json) {
        out << to_json(d).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          out << "h" << i << " (degree " << d.degree - 2 * static_cast<int>(i) << "): "
              << to_string(d.components[i]) << "\n";
        }
      }
    } else if (c_f2->parsed()) {
      auto rep = canonical_rep(pl(o.poly));
      MultiPoly ff2 = bracket(rep.f2, rep.f2);
      if (o.json) {
        Json j = to_json(rep);
        if (o.certificate) {
          j["f2_self_bracket"] = to_string(ff2);
          j["f2_self_bracket_over_q"] = to_string(exact_divide(ff2, klein_quadric()));
        }
        out << j.dump(2) << "\n";
      } else {
        out << "F2: " << to_string(rep.f2) << "\n";
        out << "F0: " << to_string(rep.f0) << "\n";
        out << "F1: " << to_string(rep.f1) << "\n";
        out << "A: " << to_string(rep.cofactor_a) << "\n";
        out << "B: " << to_string(rep.cofactor_b) << "\n";
        if (o.certificate) {
          out << "{F2,F2}: " << to_string(ff2) << "\n";
          out << "{F2,F2}/Q: " << to_string(exact_divide(ff2, klein_quadric())) << "\n";
        }
      }
    } else if (c_quad->parsed()) {
      emit(out, o, "harmonic_top", quadratic_equation_check(pl(o.polys[0]), pl(o.polys[1])));
    } else if (c_classify->parsed()) {
      MultiPoly f = o.file.empty() ? pl(o.poly) : chow_form_of_curve(read_curve_file(o.file), budget(o));
      auto report = classify(f);
      if (o.json) {
        out << to_json(report, o.certificate).dump(2) << "\n";
      } else {
        print_report(out, report, o.certificate);
      }
    } else if (c_chow->parsed()) {
      emit(out, o, "chow_form", chow_form_of_curve(read_curve_file(o.file), budget(o)));
    } else if (c_dual->parsed()) {
      emit(out, o, "dual", dualize(pl(o.poly)));
    } else if (c_assoc->parsed()) {
      CurveIdeal curve = read_curve_file(o.file);
      curve.validate();
      if (!curve.param) throw Error(ErrorKind::InvalidArgument, "curve file has no \"param\"");
      auto a = associated_curve(*curve.param, o.k);
      if (o.json) {
        out << to_json(a).dump(2) << "\n";
      } else {
        for (const auto& c : a.coords) out << to_string(c) << "\n";
      }
    } else if (c_self->parsed()) {
      return selftest(out, o);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cayley
