#ifndef GRAPHLINK_DIAGRAM_HPP
#define GRAPHLINK_DIAGRAM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphlink/rational.hpp"

namespace graphlink {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class VertexKind { Arrowhead, Node, Leaf };

using VertexId = int;

struct Vertex {
  VertexKind kind;
  int sign = 0;  // +1 or -1 for nodes, 0 otherwise
  std::string name;
};

/// An edge of a splice diagram. Weights live on node endpoints only;
/// arrowhead and leaf ends carry none.
struct Edge {
  VertexId a = -1;
  VertexId b = -1;
  std::optional<std::int64_t> weight_a;
  std::optional<std::int64_t> weight_b;

  bool touches(VertexId v) const { return a == v || b == v; }
  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool has_weight_at(VertexId v) const {
    return v == a ? weight_a.has_value() : weight_b.has_value();
  }
  std::int64_t weight_at(VertexId v) const {
    auto w = (v == a) ? weight_a : weight_b;
    if (!w) throw Error("edge end carries no weight");
    return *w;
  }
};

/// Weighted-tree model of a graph link: arrowheads are link components,
/// signed nodes are Seifert pieces, leaves are exceptional fibers.
/// Immutable after construction; splice and friends return fresh values.
struct SpliceDiagram {
  std::string name = "unnamed";
  std::vector<Vertex> vertices;  // id = index
  std::vector<Edge> edges;
  std::vector<VertexId> arrow_order;  // defines variables t_1..t_r

  int num_arrows() const { return static_cast<int>(arrow_order.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }

  bool is_node(VertexId v) const { return vertices[v].kind == VertexKind::Node; }
  bool is_leaf(VertexId v) const { return vertices[v].kind == VertexKind::Leaf; }
  bool is_arrow(VertexId v) const {
    return vertices[v].kind == VertexKind::Arrowhead;
  }

  std::vector<VertexId> node_ids() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < num_vertices(); ++v)
      if (is_node(v)) out.push_back(v);
    return out;
  }
  std::vector<VertexId> leaf_ids() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < num_vertices(); ++v)
      if (is_leaf(v)) out.push_back(v);
    return out;
  }

  std::vector<int> incident_edges(VertexId v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      if (edges[e].touches(v)) out.push_back(e);
    return out;
  }
  int degree(VertexId v) const {
    return static_cast<int>(incident_edges(v).size());
  }

  std::optional<VertexId> find_vertex(const std::string& name) const {
    for (VertexId v = 0; v < num_vertices(); ++v)
      if (vertices[v].name == name) return v;
    return std::nullopt;
  }
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

namespace detail {

inline bool connected(const SpliceDiagram& d) {
  if (d.vertices.empty()) return false;
  std::vector<bool> seen(d.vertices.size(), false);
  std::vector<VertexId> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Edge& e : d.edges) {
      if (!e.touches(v)) continue;
      VertexId u = e.other(v);
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace detail

/// Checks every structural invariant; findings go into the report, nothing
/// throws. Weight-1 leaves and non-coprime node weights are warnings only.
inline ValidationReport validate(const SpliceDiagram& d) {
  ValidationReport rep;
  auto err = [&rep](const std::string& m) { rep.errors.push_back(m); };
  auto warn = [&rep](const std::string& m) { rep.warnings.push_back(m); };

  if (d.vertices.empty()) {
    err("empty diagram");
    return rep;
  }
  if (d.edges.size() + 1 != d.vertices.size() || !detail::connected(d))
    err("not a tree");

  bool has_node = false;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    const Vertex& vx = d.vertices[v];
    int deg = d.degree(v);
    switch (vx.kind) {
      case VertexKind::Node:
        has_node = true;
        if (vx.sign != 1 && vx.sign != -1)
          err("node " + vx.name + ": sign must be +1 or -1");
        if (deg < 3) err("node " + vx.name + ": node degree < 3");
        break;
      case VertexKind::Arrowhead:
        if (deg != 1) err("arrowhead " + vx.name + ": degree != 1");
        break;
      case VertexKind::Leaf:
        if (deg != 1) err("leaf " + vx.name + ": degree != 1");
        break;
    }
  }
  if (!has_node) err("no node present");
  if (d.arrow_order.empty()) err("no arrowhead present");
  for (VertexId a : d.arrow_order)
    if (a < 0 || a >= d.num_vertices() || !d.is_arrow(a))
      err("arrow_order entry is not an arrowhead");

  for (const Edge& e : d.edges) {
    for (VertexId v : {e.a, e.b}) {
      if (d.is_node(v) && !e.has_weight_at(v))
        err("edge " + d.vertices[e.a].name + "-" + d.vertices[e.b].name +
            ": missing weight on node end " + d.vertices[v].name);
      if (!d.is_node(v) && e.has_weight_at(v))
        err("edge " + d.vertices[e.a].name + "-" + d.vertices[e.b].name +
            ": weight given on non-node end " + d.vertices[v].name);
      if (d.is_node(v) && e.has_weight_at(v) && e.weight_at(v) < 0)
        err("edge " + d.vertices[e.a].name + "-" + d.vertices[e.b].name +
            ": negative weight");
    }
  }

  // convention checks (warnings)
  for (VertexId n = 0; n < d.num_vertices(); ++n) {
    if (!d.is_node(n)) continue;
    std::vector<std::int64_t> ws;
    for (int ei : d.incident_edges(n)) {
      const Edge& e = d.edges[ei];
      if (!e.has_weight_at(n)) continue;
      std::int64_t w = e.weight_at(n);
      ws.push_back(w);
      if (d.is_leaf(e.other(n)) && w <= 1)
        warn("node " + d.vertices[n].name + ": leaf weight " +
             std::to_string(w) + " represents a nonsingular fiber");
    }
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j)
        if (std::gcd(ws[i], ws[j]) > 1) {
          warn("node " + d.vertices[n].name +
               ": incident weights not pairwise coprime");
          goto next_node;
        }
  next_node:;
  }
  return rep;
}

/// Parses the `.spl` text format without structural validation;
/// syntax errors carry line numbers.
inline SpliceDiagram parse_diagram_raw(const std::string& text) {
  SpliceDiagram d;
  d.name.clear();
  std::map<std::string, VertexId> by_name;
  struct PendingEdge {
    int line;
    std::string id1, id2, w1, w2;
  };
  std::vector<PendingEdge> pending;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;

    auto add_vertex = [&](VertexKind kind, const std::string& id, int sign) {
      if (by_name.count(id)) throw ParseError(lineno, "duplicate id '" + id + "'");
      by_name[id] = d.num_vertices();
      d.vertices.push_back({kind, sign, id});
    };

    if (kw == "graphlink") {
      if (saw_header) throw ParseError(lineno, "repeated graphlink header");
      if (!(ls >> d.name)) throw ParseError(lineno, "missing diagram name");
      saw_header = true;
    } else if (kw == "node") {
      std::string id, sgn;
      if (!(ls >> id >> sgn)) throw ParseError(lineno, "node needs <id> <+|->");
      if (sgn != "+" && sgn != "-")
        throw ParseError(lineno, "node sign must be + or -");
      add_vertex(VertexKind::Node, id, sgn == "+" ? 1 : -1);
    } else if (kw == "arrow") {
      std::string id;
      if (!(ls >> id)) throw ParseError(lineno, "arrow needs <id>");
      add_vertex(VertexKind::Arrowhead, id, 0);
      d.arrow_order.push_back(by_name[id]);
    } else if (kw == "leaf") {
      std::string id;
      if (!(ls >> id)) throw ParseError(lineno, "leaf needs <id>");
      add_vertex(VertexKind::Leaf, id, 0);
    } else if (kw == "edge") {
      PendingEdge pe;
      pe.line = lineno;
      if (!(ls >> pe.id1 >> pe.id2 >> pe.w1 >> pe.w2))
        throw ParseError(lineno, "edge needs <id1> <id2> <w1|-> <w2|->");
      pending.push_back(pe);
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
  }
  if (!saw_header) throw ParseError(1, "missing graphlink header");

  for (const PendingEdge& pe : pending) {
    Edge e;
    auto lookup = [&](const std::string& id) {
      auto it = by_name.find(id);
      if (it == by_name.end())
        throw ParseError(pe.line, "unknown vertex id '" + id + "'");
      return it->second;
    };
    e.a = lookup(pe.id1);
    e.b = lookup(pe.id2);
    auto weight = [&](const std::string& w, VertexId v) -> std::optional<std::int64_t> {
      if (w == "-") {
        if (d.is_node(v))
          throw ParseError(pe.line, "missing weight on node end '" +
                                        d.vertices[v].name + "'");
        return std::nullopt;
      }
      std::int64_t val;
      try {
        std::size_t pos = 0;
        val = std::stoll(w, &pos);
        if (pos != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw ParseError(pe.line, "bad weight '" + w + "'");
      }
      if (!d.is_node(v))
        throw ParseError(pe.line, "weight given on non-node end '" +
                                      d.vertices[v].name + "'");
      return val;
    };
    e.weight_a = weight(pe.w1, e.a);
    e.weight_b = weight(pe.w2, e.b);
    d.edges.push_back(e);
  }
  return d;
}

/// Parse and require a structurally valid diagram.
inline SpliceDiagram parse_diagram(const std::string& text) {
  SpliceDiagram d = parse_diagram_raw(text);
  ValidationReport rep = validate(d);
  if (!rep.ok()) {
    std::string msg = "invalid diagram";
    for (const auto& e : rep.errors) msg += "; " + e;
    throw Error(msg);
  }
  return d;
}

/// Pretty-prints in the `.spl` format; parse_diagram(print_diagram(d))
/// reproduces d with canonical id ordering.
inline std::string print_diagram(const SpliceDiagram& d) {
  std::ostringstream out;
  out << "graphlink " << d.name << "\n";
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    const Vertex& vx = d.vertices[v];
    switch (vx.kind) {
      case VertexKind::Node:
        out << "node " << vx.name << " " << (vx.sign > 0 ? "+" : "-") << "\n";
        break;
      case VertexKind::Leaf:
        out << "leaf " << vx.name << "\n";
        break;
      case VertexKind::Arrowhead:
        break;  // emitted below in arrow order
    }
  }
  for (VertexId a : d.arrow_order) out << "arrow " << d.vertices[a].name << "\n";
  for (const Edge& e : d.edges) {
    auto w = [&](const std::optional<std::int64_t>& ow) {
      return ow ? std::to_string(*ow) : std::string("-");
    };
    out << "edge " << d.vertices[e.a].name << " " << d.vertices[e.b].name << " "
        << w(e.weight_a) << " " << w(e.weight_b) << "\n";
  }
  return out.str();
}

/// Splices d1 to d2 along the arrowheads a1, a2: both arrows are deleted
/// and one new edge joins their adjacent nodes, inheriting the weights the
/// arrow edges carried at those node ends.
inline SpliceDiagram splice(const SpliceDiagram& d1, VertexId a1,
                            const SpliceDiagram& d2, VertexId a2) {
  auto check_arrow = [](const SpliceDiagram& d, VertexId a, const char* which) {
    if (a < 0 || a >= d.num_vertices() || !d.is_arrow(a))
      throw Error(std::string(which) + ": id is not an arrowhead");
  };
  check_arrow(d1, a1, "splice arg 1");
  check_arrow(d2, a2, "splice arg 2");
  if (d1.num_arrows() + d2.num_arrows() - 2 < 1)
    throw Error("splice: result has zero arrowheads");

  SpliceDiagram out;
  out.name = d1.name + "*" + d2.name;

  std::vector<VertexId> map1(d1.num_vertices(), -1), map2(d2.num_vertices(), -1);
  auto copy_vertices = [&out](const SpliceDiagram& d, VertexId skip,
                              std::vector<VertexId>& map, bool rename) {
    for (VertexId v = 0; v < d.num_vertices(); ++v) {
      if (v == skip) continue;
      Vertex vx = d.vertices[v];
      if (rename) vx.name += "'";
      map[v] = out.num_vertices();
      out.vertices.push_back(vx);
    }
  };
  copy_vertices(d1, a1, map1, false);
  // d2 vertices get a prime suffix when the plain name is already taken
  for (VertexId v = 0; v < d2.num_vertices(); ++v) {
    if (v == a2) continue;
    Vertex vx = d2.vertices[v];
    while (out.find_vertex(vx.name)) vx.name += "'";
    map2[v] = out.num_vertices();
    out.vertices.push_back(vx);
  }

  // the spliced edge keeps each side's node-end weight from the deleted
  // arrow edge
  Edge joint;
  auto take_side = [](const SpliceDiagram& d, VertexId arrow, VertexId& node,
                      std::optional<std::int64_t>& w) {
    auto inc = d.incident_edges(arrow);
    if (inc.size() != 1) throw Error("splice: arrowhead degree != 1");
    const Edge& e = d.edges[inc[0]];
    node = e.other(arrow);
    w = (node == e.a) ? e.weight_a : e.weight_b;
  };
  VertexId n1, n2;
  take_side(d1, a1, n1, joint.weight_a);
  take_side(d2, a2, n2, joint.weight_b);
  joint.a = map1[n1];
  joint.b = map2[n2];

  auto copy_edges = [&out](const SpliceDiagram& d, VertexId skip,
                           const std::vector<VertexId>& map) {
    for (const Edge& e : d.edges) {
      if (e.touches(skip)) continue;
      Edge ne = e;
      ne.a = map[e.a];
      ne.b = map[e.b];
      out.edges.push_back(ne);
    }
  };
  copy_edges(d1, a1, map1);
  copy_edges(d2, a2, map2);
  out.edges.push_back(joint);

  for (VertexId a : d1.arrow_order)
    if (a != a1) out.arrow_order.push_back(map1[a]);
  for (VertexId a : d2.arrow_order)
    if (a != a2) out.arrow_order.push_back(map2[a]);
  return out;
}

struct RandomParams {
  int max_nodes = 3;
  int max_degree = 5;
  std::int64_t weight_bound = 16;
};

namespace detail {

/// One-node Seifert diagram with pairwise-coprime weights around the node.
/// min_arrows lets the caller force enough arrows to keep splicing legal.
inline SpliceDiagram random_seifert_piece(std::mt19937_64& rng,
                                          const RandomParams& p, int min_arrows,
                                          int index) {
  int degree = std::uniform_int_distribution<int>(3, p.max_degree)(rng);
  min_arrows = std::min(min_arrows, degree);
  int arrows =
      std::uniform_int_distribution<int>(std::max(1, min_arrows), degree - 1)(rng);
  int leaves = degree - arrows;

  // draw pairwise-coprime weights; arrows may carry 1, leaves need >= 2
  std::vector<std::int64_t> ws;
  std::uniform_int_distribution<std::int64_t> draw(2, std::max<std::int64_t>(2, p.weight_bound));
  int guard = 0;
  while (static_cast<int>(ws.size()) < degree) {
    if (++guard > 10000) throw Error("random_diagram: weight retry exhaustion");
    // a partial multiset can block every remaining choice (e.g. {14,15,13,11}
    // covers all primes up to 16), so restart it periodically
    if (guard % 200 == 0) ws.clear();
    bool arrow_slot = static_cast<int>(ws.size()) < arrows;
    std::int64_t w = draw(rng);
    if (arrow_slot && std::uniform_int_distribution<int>(0, 3)(rng) == 0) w = 1;
    bool ok = true;
    for (std::int64_t v : ws)
      if (std::gcd(v, w) > 1) ok = false;
    if (ok) ws.push_back(w);
  }

  SpliceDiagram d;
  d.name = "rand" + std::to_string(index);
  std::string tag = std::to_string(index);
  d.vertices.push_back({VertexKind::Node,
                        std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1,
                        "n" + tag});
  for (int i = 0; i < arrows; ++i) {
    VertexId v = d.num_vertices();
    d.vertices.push_back({VertexKind::Arrowhead, 0,
                          "a" + tag + "_" + std::to_string(i)});
    d.arrow_order.push_back(v);
    d.edges.push_back({0, v, ws[i], std::nullopt});
  }
  for (int i = 0; i < leaves; ++i) {
    VertexId v = d.num_vertices();
    d.vertices.push_back({VertexKind::Leaf, 0,
                          "b" + tag + "_" + std::to_string(i)});
    d.edges.push_back({0, v, ws[arrows + i], std::nullopt});
  }
  return d;
}

}  // namespace detail

/// Deterministic random diagram: 1..max_nodes Seifert pieces spliced at
/// random arrowheads. The result always validates with no errors and no
/// coprimality warnings.
inline SpliceDiagram random_diagram(std::uint64_t seed,
                                    const RandomParams& params = {}) {
  if (params.max_nodes < 1 || params.max_degree < 3 || params.weight_bound < 2)
    throw Error("random_diagram: bad params");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    int pieces = std::uniform_int_distribution<int>(1, params.max_nodes)(rng);
    SpliceDiagram d = detail::random_seifert_piece(rng, params, 1, 0);
    bool ok = true;
    for (int k = 1; k < pieces; ++k) {
      // keep at least one arrow after deleting one from each side
      int need = d.num_arrows() >= 2 ? 1 : 2;
      SpliceDiagram piece = detail::random_seifert_piece(rng, params, need, k);
      if (d.num_arrows() + piece.num_arrows() - 2 < 1) {
        ok = false;
        break;
      }
      VertexId a1 = d.arrow_order[std::uniform_int_distribution<std::size_t>(
          0, d.arrow_order.size() - 1)(rng)];
      VertexId a2 = piece.arrow_order[std::uniform_int_distribution<std::size_t>(
          0, piece.arrow_order.size() - 1)(rng)];
      d = splice(d, a1, piece, a2);
    }
    if (!ok) continue;
    ValidationReport rep = validate(d);
    bool coprime_warn = false;
    for (const auto& w : rep.warnings)
      if (w.find("coprime") != std::string::npos) coprime_warn = true;
    if (rep.ok() && !coprime_warn) return d;
  }
  throw Error("random_diagram: retry exhaustion");
}

}  // namespace graphlink

#endif  // GRAPHLINK_DIAGRAM_HPP
