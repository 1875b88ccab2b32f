#ifndef GRAPHLINK_LINKING_HPP
#define GRAPHLINK_LINKING_HPP

#include <algorithm>
#include <vector>

#include "graphlink/diagram.hpp"
#include "graphlink/rational.hpp"

namespace graphlink {

/// Linking numbers l_ji of arrowheads (rows) against nodes-then-leaves
/// (columns), plus the valences delta_i and corrected valences
/// delta~_i - 2 for the node columns.
struct LinkingMatrix {
  std::vector<VertexId> arrows;   // row order, = arrow_order
  std::vector<VertexId> columns;  // nodes first, then leaves
  int num_nodes = 0;
  std::vector<std::vector<Int>> entries;  // entries[row][col]
  std::vector<int> delta;                 // per column
  std::vector<Rat> delta_tilde_minus_2;   // per node column, exact

  int column_index(VertexId v) const {
    auto it = std::find(columns.begin(), columns.end(), v);
    if (it == columns.end()) throw Error("vertex is not a linking column");
    return static_cast<int>(it - columns.begin());
  }

  /// l-column of a vertex as a length-r vector indexed by arrow order.
  VecZ column(VertexId v) const {
    int c = column_index(v);
    VecZ out;
    out.reserve(arrows.size());
    for (std::size_t j = 0; j < arrows.size(); ++j)
      out.push_back(entries[j][c]);
    return out;
  }

  std::vector<VecZ> node_columns() const {
    std::vector<VecZ> out;
    for (int c = 0; c < num_nodes; ++c) out.push_back(column(columns[c]));
    return out;
  }
};

namespace detail {

/// Vertices of the unique tree path from s to t, endpoints included.
inline std::vector<VertexId> tree_path(const SpliceDiagram& d, VertexId s,
                                       VertexId t) {
  std::vector<VertexId> parent(d.num_vertices(), -1);
  std::vector<bool> seen(d.num_vertices(), false);
  std::vector<VertexId> stack = {s};
  seen[s] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == t) break;
    for (const Edge& e : d.edges) {
      if (!e.touches(v)) continue;
      VertexId u = e.other(v);
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = v;
        stack.push_back(u);
      }
    }
  }
  if (!seen[t]) throw Error("vertices lie in different components");
  std::vector<VertexId> path;
  for (VertexId v = t; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Path product: (signs of all nodes on the path, endpoints included) times
/// (weights, at each such node's end, of incident edges off the path).
inline Int linking_number(const SpliceDiagram& d, VertexId arrow,
                          VertexId target) {
  if (!d.is_arrow(arrow)) throw Error("linking_number: first id must be an arrowhead");
  if (d.is_arrow(target))
    throw Error("linking_number: arrowhead targets are unsupported");
  std::vector<VertexId> path = detail::tree_path(d, arrow, target);
  std::vector<bool> on_path(d.num_vertices(), false);
  for (VertexId v : path) on_path[v] = true;

  Int result = 1;
  for (VertexId v : path) {
    if (!d.is_node(v)) continue;
    result *= d.vertices[v].sign;
    for (int ei : d.incident_edges(v)) {
      const Edge& e = d.edges[ei];
      if (on_path[e.other(v)]) continue;
      result *= e.weight_at(v);
    }
  }
  return result;
}

inline LinkingMatrix linking_matrix(const SpliceDiagram& d) {
  LinkingMatrix lm;
  lm.arrows = d.arrow_order;
  for (VertexId v : d.node_ids()) lm.columns.push_back(v);
  lm.num_nodes = static_cast<int>(lm.columns.size());
  for (VertexId v : d.leaf_ids()) lm.columns.push_back(v);

  lm.entries.resize(lm.arrows.size());
  for (std::size_t j = 0; j < lm.arrows.size(); ++j) {
    lm.entries[j].reserve(lm.columns.size());
    for (VertexId v : lm.columns)
      lm.entries[j].push_back(linking_number(d, lm.arrows[j], v));
  }

  for (VertexId v : lm.columns) lm.delta.push_back(d.degree(v));
  for (int c = 0; c < lm.num_nodes; ++c) {
    VertexId n = lm.columns[c];
    Rat dt = lm.delta[c] - 2;
    for (int ei : d.incident_edges(n)) {
      const Edge& e = d.edges[ei];
      if (!d.is_leaf(e.other(n))) continue;
      std::int64_t alpha = e.weight_at(n);
      if (alpha == 0) throw Error("leaf weight 0 makes delta~ undefined");
      dt -= make_rat(1, alpha);
    }
    lm.delta_tilde_minus_2.push_back(dt);
  }
  return lm;
}

}  // namespace graphlink

#endif  // GRAPHLINK_LINKING_HPP
