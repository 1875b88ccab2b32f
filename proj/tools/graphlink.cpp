// Command-line front end: parse .spl files, run the invariant computations,
// emit text/JSON/SVG, and drive property-verification runs.
//
// Exit codes: 0 success, 1 domain error (bad input, unsupported case,
// theorem violation in verify), 2 usage error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "graphlink/alexander.hpp"
#include "graphlink/diagram.hpp"
#include "graphlink/fibration.hpp"
#include "graphlink/geometry.hpp"
#include "graphlink/linking.hpp"
#include "graphlink/norms.hpp"

using json = nlohmann::ordered_json;
using namespace graphlink;

namespace {

SpliceDiagram load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

VecQ parse_phi(const std::string& spec, int r) {
  VecQ phi;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) phi.push_back(parse_rat(tok));
  if (static_cast<int>(phi.size()) != r)
    throw Error("--phi needs " + std::to_string(r) + " comma-separated values");
  return phi;
}

json vec_json(const VecQ& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

json vec_json(const VecZ& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

json poly_json(const LaurentPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json ent = json::array();
    json ev = json::array();
    for (std::int64_t x : e) ev.push_back(x);
    ent.push_back(ev);
    ent.push_back(c.get_str());
    terms.push_back(ent);
  }
  return terms;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& file, bool as_json) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read file '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  SpliceDiagram d = parse_diagram_raw(buf.str());
  ValidationReport rep = validate(d);
  if (as_json) {
    json j;
    j["name"] = d.name;
    j["ok"] = rep.ok();
    j["errors"] = rep.errors;
    j["warnings"] = rep.warnings;
    emit(j);
  } else {
    for (const auto& e : rep.errors) std::cout << "error: " << e << "\n";
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
    std::cout << (rep.ok() ? "ok" : "invalid") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_linking(const std::string& file, bool as_json) {
  SpliceDiagram d = load(file);
  LinkingMatrix lm = linking_matrix(d);
  if (as_json) {
    json j;
    j["columns"] = json::array();
    for (std::size_t c = 0; c < lm.columns.size(); ++c) {
      json col;
      col["vertex"] = d.vertices[lm.columns[c]].name;
      col["kind"] = c < static_cast<std::size_t>(lm.num_nodes) ? "node" : "leaf";
      col["l"] = vec_json(lm.column(lm.columns[c]));
      col["delta"] = lm.delta[c];
      if (c < static_cast<std::size_t>(lm.num_nodes))
        col["delta_tilde_minus_2"] = rat_str(lm.delta_tilde_minus_2[c]);
      j["columns"].push_back(col);
    }
    emit(j);
  } else {
    std::cout << "vertex\tkind\tdelta\tdelta~-2\tl-column\n";
    for (std::size_t c = 0; c < lm.columns.size(); ++c) {
      bool node = c < static_cast<std::size_t>(lm.num_nodes);
      std::cout << d.vertices[lm.columns[c]].name << "\t"
                << (node ? "node" : "leaf") << "\t" << lm.delta[c] << "\t"
                << (node ? rat_str(lm.delta_tilde_minus_2[c]) : "-") << "\t";
      VecZ col = lm.column(lm.columns[c]);
      for (std::size_t i = 0; i < col.size(); ++i)
        std::cout << (i ? "," : "") << col[i];
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_alexander(const std::string& file, bool raw, bool as_json) {
  SpliceDiagram d = load(file);
  LinkingMatrix lm = linking_matrix(d);
  if (raw) {
    AlexanderFactors fac = alexander_factors(d, lm);
    json j;
    j["numerator"] = json::array();
    for (const auto& [e, p] : fac.numerator) {
      json f;
      json ev = json::array();
      for (std::int64_t x : e) ev.push_back(x);
      f["exponent"] = ev;
      f["power"] = p;
      j["numerator"].push_back(f);
    }
    j["denominator"] = json::array();
    for (const Exponent& e : fac.denominator) {
      json ev = json::array();
      for (std::int64_t x : e) ev.push_back(x);
      j["denominator"].push_back(ev);
    }
    j["zero_factor_net"] = fac.zero_factor_net;
    emit(j);
    return 0;
  }
  LaurentPolynomial delta = alexander_polynomial(d, lm);
  if (as_json) {
    json j;
    j["nvars"] = delta.nvars();
    j["terms"] = poly_json(delta);
    emit(j);
  } else {
    std::cout << to_string(delta) << "\n";
  }
  return 0;
}

int cmd_newton(const std::string& file, bool as_json) {
  SpliceDiagram d = load(file);
  LinkingMatrix lm = linking_matrix(d);
  Polytope z = zonotope_newton(d, lm);
  EssentialReduction er = essential_basis(d, lm);
  json j;
  j["dim"] = z.dim;
  j["b_e"] = er.b_e;
  j["vertices"] = json::array();
  j["reduced_vertices"] = json::array();
  for (const VecQ& v : z.vertices) {
    j["vertices"].push_back(vec_json(v));
    VecZ iv;
    for (const Rat& x : v) iv.push_back(x.get_num());
    j["reduced_vertices"].push_back(vec_json(er.reduce_vector(iv)));
  }
  if (as_json) {
    emit(j);
  } else {
    std::cout << "dim " << z.dim << ", b_e " << er.b_e << "\n";
    for (const auto& v : j["reduced_vertices"]) {
      std::cout << "(";
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? "," : "") << v[i].get<std::string>();
      std::cout << ")\n";
    }
  }
  return 0;
}

int cmd_norm(const std::string& file, const std::string& phi_spec,
             bool as_json) {
  SpliceDiagram d = load(file);
  NormReport rep = norm_report(d, parse_phi(phi_spec, d.num_arrows()));
  if (as_json) {
    json j;
    j["thurston"] = rat_str(rep.thurston);
    j["alexander"] = rat_str(rep.alexander);
    j["coincide"] = rep.coincide;
    j["fibered"] = rep.fibered;
    if (rep.knot_offset) j["knot_offset"] = rat_str(*rep.knot_offset);
    j["per_node"] = json::array();
    for (const auto& nc : rep.per_node) {
      json n;
      n["node"] = nc.node_name;
      n["coefficient"] = rat_str(nc.coefficient);
      n["pairing"] = rat_str(nc.pairing);
      n["contribution"] = rat_str(nc.contribution);
      j["per_node"].push_back(n);
    }
    emit(j);
  } else {
    std::cout << "thurston=" << rat_str(rep.thurston)
              << " alexander=" << rat_str(rep.alexander)
              << " coincide=" << (rep.coincide ? "yes" : "no")
              << " fibered=" << (rep.fibered ? "yes" : "no");
    if (rep.knot_offset)
      std::cout << " knot_offset=" << rat_str(*rep.knot_offset);
    std::cout << "\n";
  }
  return 0;
}

int cmd_ball(const std::string& file, bool as_json) {
  SpliceDiagram d = load(file);
  Polytope ball = unit_ball(d);
  if (as_json) {
    json j;
    j["b_e"] = ball.dim;
    j["vertices"] = json::array();
    for (const VecQ& v : ball.vertices) j["vertices"].push_back(vec_json(v));
    emit(j);
  } else {
    for (const VecQ& v : ball.vertices) {
      std::cout << "(";
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? "," : "") << rat_str(v[i]);
      std::cout << ")\n";
    }
  }
  return 0;
}

int cmd_fibered(const std::string& file, const std::string& phi_spec,
                bool as_json) {
  SpliceDiagram d = load(file);
  bool fib = is_fibered(d, parse_phi(phi_spec, d.num_arrows()));
  if (as_json) {
    json j;
    j["fibered"] = fib;
    emit(j);
  } else {
    std::cout << (fib ? "fibered" : "not fibered") << "\n";
  }
  return 0;
}

int cmd_hyperplanes(const std::string& file, bool as_json) {
  SpliceDiagram d = load(file);
  std::vector<Hyperplane> hs = characteristic_hyperplanes(d);
  if (as_json) {
    json j = json::array();
    for (const Hyperplane& h : hs) {
      json e;
      e["node"] = h.node_name;
      e["normal"] = vec_json(h.normal);
      e["reduced_normal"] = vec_json(h.reduced_normal);
      j.push_back(e);
    }
    emit(j);
  } else {
    for (const Hyperplane& h : hs) {
      std::cout << h.node_name << ": normal (";
      for (std::size_t i = 0; i < h.normal.size(); ++i)
        std::cout << (i ? "," : "") << h.normal[i];
      std::cout << "), reduced (";
      for (std::size_t i = 0; i < h.reduced_normal.size(); ++i)
        std::cout << (i ? "," : "") << h.reduced_normal[i];
      std::cout << ")\n";
    }
  }
  return 0;
}

int cmd_facets(const std::string& file, bool as_json) {
  SpliceDiagram d = load(file);
  FacetReport rep = classify_facets(d);
  if (as_json) {
    json j;
    j["all_fibered"] = rep.all_fibered;
    j["hyperplane_meets_facet_interior"] = rep.hyperplane_meets_facet_interior;
    j["facets"] = json::array();
    for (const auto& f : rep.facets) {
      json e;
      e["vertices"] = json::array();
      for (const VecQ& v : f.vertices) e["vertices"].push_back(vec_json(v));
      e["sample"] = vec_json(f.sample);
      e["fibered"] = f.fibered;
      j["facets"].push_back(e);
    }
    j["hyperplanes"] = json::array();
    for (const auto& inc : rep.hyperplanes) {
      json e;
      e["node"] = inc.node_name;
      e["vertices_on"] = json::array();
      for (const VecQ& v : inc.vertices_on)
        e["vertices_on"].push_back(vec_json(v));
      j["hyperplanes"].push_back(e);
    }
    emit(j);
  } else {
    for (std::size_t i = 0; i < rep.facets.size(); ++i)
      std::cout << "facet " << i << ": "
                << (rep.facets[i].fibered ? "fibered" : "not fibered") << "\n";
    std::cout << "all_fibered=" << (rep.all_fibered ? "yes" : "no") << "\n";
  }
  return 0;
}

// Fixed-point decimal with two digits, computed exactly; keeps the SVG
// byte-stable across platforms.
std::string px(const Rat& q) {
  Rat scaled = q * 100;
  Int r;
  // round half away from zero
  Int num = scaled.get_num(), den = scaled.get_den();
  Int twice = 2 * num + (num >= 0 ? den : -den);
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
  bool neg = r < 0;
  Int a = abs(r);
  Int whole = a / 100, frac = a % 100;
  std::string f = frac.get_str();
  if (f.size() < 2) f = "0" + f;
  return (neg ? "-" : "") + whole.get_str() + "." + f;
}

int cmd_plot(const std::string& file, const std::string& out) {
  SpliceDiagram d = load(file);
  LinkingMatrix lm = linking_matrix(d);
  EssentialReduction er = essential_basis(d, lm);
  if (er.b_e != 2)
    throw Error("plot supports b_e = 2 only (got b_e = " +
                std::to_string(er.b_e) + ")");
  Polytope ball = unit_ball(d, lm, er);
  std::vector<Hyperplane> hs = characteristic_hyperplanes(d, lm, er);

  // viewport: ball bounding box scaled by 1.2, mapped into 400x400
  Rat xmax = 0, ymax = 0;
  for (const VecQ& v : ball.vertices) {
    xmax = std::max(xmax, rat_abs(v[0]));
    ymax = std::max(ymax, rat_abs(v[1]));
  }
  Rat half = std::max(xmax, ymax) * make_rat(6, 5);
  const Rat size = 400;
  auto X = [&](const Rat& x) -> Rat { return (x / half + 1) * size / 2; };
  auto Y = [&](const Rat& y) -> Rat { return (1 - y / half) * size / 2; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" "
         "height=\"400\" viewBox=\"0 0 400 400\">\n";
  svg << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  // ball polygon
  svg << "<polygon points=\"";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (i) svg << " ";
    svg << px(X(ball.vertices[i][0])) << "," << px(Y(ball.vertices[i][1]));
  }
  svg << "\" fill=\"#dce6f2\" stroke=\"#274e78\" stroke-width=\"1\"/>\n";
  // hyperplane lines through the origin, clipped to the viewport by length
  for (const Hyperplane& h : hs) {
    // direction perpendicular to the reduced normal (a,b): (-b,a)
    Rat a(h.reduced_normal[0]), b(h.reduced_normal[1]);
    Rat dx = -b, dy = a;
    Rat n = rat_abs(dx) + rat_abs(dy);
    Rat t = half * 4 / n;  // long enough to leave the box
    svg << "<line x1=\"" << px(X(-dx * t)) << "\" y1=\"" << px(Y(-dy * t))
        << "\" x2=\"" << px(X(dx * t)) << "\" y2=\"" << px(Y(dy * t))
        << "\" stroke=\"#b03a2e\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>"
        << "\n";
  }
  // labeled vertices
  for (const VecQ& v : ball.vertices) {
    svg << "<circle cx=\"" << px(X(v[0])) << "\" cy=\"" << px(Y(v[1]))
        << "\" r=\"3\" fill=\"#274e78\"/>\n";
    svg << "<text x=\"" << px(X(v[0]) + 5) << "\" y=\"" << px(Y(v[1]) - 5)
        << "\" font-size=\"11\" font-family=\"monospace\">(" << rat_str(v[0])
        << "," << rat_str(v[1]) << ")</text>\n";
  }
  svg << "</svg>\n";

  if (out.empty() || out == "-") {
    std::cout << svg.str();
  } else {
    std::ofstream f(out);
    if (!f) throw Error("cannot write '" + out + "'");
    f << svg.str();
  }
  return 0;
}

int cmd_gen(std::uint64_t seed, int count, int max_nodes) {
  RandomParams p;
  p.max_nodes = max_nodes;
  for (int i = 0; i < count; ++i) {
    SpliceDiagram d = random_diagram(seed + static_cast<std::uint64_t>(i), p);
    std::cout << print_diagram(d);
    if (i + 1 < count) std::cout << "\n";
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, int count) {
  RandomParams p;
  p.max_nodes = 3;
  p.weight_bound = 9;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> draw(-12, 12);
  int violations = 0;
  for (int i = 0; i < count; ++i) {
    SpliceDiagram d = random_diagram(seed + static_cast<std::uint64_t>(i), p);
    try {
      LinkingMatrix lm = linking_matrix(d);
      NormEvaluator ev(d);
      // Newton polytope of the expanded polynomial vs the zonotope
      if (!support_equals_zonotope(ev.alexander(), d, lm)) {
        std::cerr << "violation: support/zonotope mismatch on " << d.name
                  << "\n";
        ++violations;
        continue;
      }
      // large expansions: take the width from the generator description,
      // exact because the support/zonotope equality above already passed
      bool small = ev.alexander().num_terms() <= 20000;
      Polytope z = zonotope_newton(d, lm);
      for (int t = 0; t < 25; ++t) {
        VecQ phi;
        for (int k = 0; k < d.num_arrows(); ++k) phi.push_back(Rat(draw(rng)));
        Rat tn = ev.thurston(phi);  // cross-asserts both T routes
        Rat an = small ? ev.alexander_norm(phi)  // cross-asserts both A routes
                       : width(z, phi);
        Rat want_gap = d.num_arrows() == 1 ? rat_abs(phi[0]) : Rat(0);
        if (an - tn != want_gap) {
          std::cerr << "violation: norm gap on " << d.name << "\n";
          ++violations;
          break;
        }
        is_fibered(d, lm, phi);  // throws if the two criteria disagree
      }
      EssentialReduction er = essential_basis(d, lm);
      if (er.b_e <= 3) {
        FacetReport rep = classify_facets(d);
        if (!rep.all_fibered || rep.hyperplane_meets_facet_interior) {
          std::cerr << "violation: facet theorem fails on " << d.name << "\n";
          ++violations;
        }
      }
    } catch (const Error& e) {
      std::cerr << "violation: " << e.what() << " on " << d.name << "\n";
      ++violations;
    }
  }
  std::cout << count << " diagrams checked, " << violations << " violation(s)"
            << "\n";
  return violations ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splice-diagram invariant calculator"};
  app.require_subcommand(1);

  std::string file, phi_spec, out;
  bool as_json = false, raw = false;
  std::uint64_t seed = 0;
  int count = 50, max_nodes = 3;

  auto* validate_cmd = app.add_subcommand("validate", "check a .spl file");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_flag("--json", as_json);

  auto* linking_cmd = app.add_subcommand("linking", "linking matrix");
  linking_cmd->add_option("file", file)->required();
  linking_cmd->add_flag("--json", as_json);

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial");
  alex_cmd->add_option("file", file)->required();
  alex_cmd->add_flag("--raw", raw, "print factor lists instead of expanding");
  alex_cmd->add_flag("--json", as_json);

  auto* newton_cmd = app.add_subcommand("newton", "Newton polytope");
  newton_cmd->add_option("file", file)->required();
  newton_cmd->add_flag("--json", as_json);

  auto* norm_cmd = app.add_subcommand("norm", "Alexander and Thurston norms");
  norm_cmd->add_option("file", file)->required();
  norm_cmd->add_option("--phi", phi_spec, "comma-separated rational class")
      ->required();
  norm_cmd->add_flag("--json", as_json);

  auto* ball_cmd = app.add_subcommand("ball", "reduced unit-ball vertices");
  ball_cmd->add_option("file", file)->required();
  ball_cmd->add_flag("--json", as_json);

  auto* fib_cmd = app.add_subcommand("fibered", "fiberedness of a class");
  fib_cmd->add_option("file", file)->required();
  fib_cmd->add_option("--phi", phi_spec)->required();
  fib_cmd->add_flag("--json", as_json);

  auto* hyp_cmd = app.add_subcommand("hyperplanes", "characteristic hyperplanes");
  hyp_cmd->add_option("file", file)->required();
  hyp_cmd->add_flag("--json", as_json);

  auto* facets_cmd = app.add_subcommand("facets", "unit-ball facet report");
  facets_cmd->add_option("file", file)->required();
  facets_cmd->add_flag("--json", as_json);

  auto* plot_cmd = app.add_subcommand("plot", "SVG of the reduced ball");
  plot_cmd->add_option("file", file)->required();
  plot_cmd->add_option("-o,--output", out, "output file ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run the property corpus");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--count", count);

  auto* gen_cmd = app.add_subcommand("gen", "generate random diagrams");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--count", count)->default_val(1);
  gen_cmd->add_option("--max-nodes", max_nodes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, as_json);
    if (*linking_cmd) return cmd_linking(file, as_json);
    if (*alex_cmd) return cmd_alexander(file, raw, as_json);
    if (*newton_cmd) return cmd_newton(file, as_json);
    if (*norm_cmd) return cmd_norm(file, phi_spec, as_json);
    if (*ball_cmd) return cmd_ball(file, as_json);
    if (*fib_cmd) return cmd_fibered(file, phi_spec, as_json);
    if (*hyp_cmd) return cmd_hyperplanes(file, as_json);
    if (*facets_cmd) return cmd_facets(file, as_json);
    if (*plot_cmd) return cmd_plot(file, out);
    if (*verify_cmd) return cmd_verify(seed, count);
    if (*gen_cmd) return cmd_gen(seed, count, max_nodes);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
