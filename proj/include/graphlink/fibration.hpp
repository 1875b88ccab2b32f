#ifndef GRAPHLINK_FIBRATION_HPP
#define GRAPHLINK_FIBRATION_HPP

#include <string>
#include <vector>

#include "graphlink/diagram.hpp"
#include "graphlink/geometry.hpp"
#include "graphlink/linking.hpp"
#include "graphlink/rational.hpp"

namespace graphlink {

/// Vanishing locus of one node's pairing; the union over nodes is exactly
/// the non-fibered set.
struct Hyperplane {
  VertexId node = -1;
  std::string node_name;
  VecZ normal;           // the node's l-column, length r
  VecZ reduced_normal;   // primitive form in essential coordinates, length b_e
};

struct FacetReport {
  struct Facet {
    std::vector<VecQ> vertices;   // reduced coordinates
    VecQ sample;                  // strictly interior point (vertex centroid)
    bool fibered = false;
  };
  struct HyperplaneIncidence {
    std::string node_name;
    std::vector<VecQ> vertices_on;  // ball vertices lying on the hyperplane
  };
  std::vector<Facet> facets;
  std::vector<HyperplaneIncidence> hyperplanes;
  bool all_fibered = true;
  bool hyperplane_meets_facet_interior = false;
};

/// E-N criterion: phi is fibered iff its pairing with every node l-column
/// is nonzero. The redundant full version over nodes and leaves is also
/// evaluated and must agree.
inline bool is_fibered(const SpliceDiagram& d, const LinkingMatrix& lm,
                       const VecQ& phi) {
  if (static_cast<int>(phi.size()) != d.num_arrows())
    throw Error("is_fibered: class has wrong length");
  bool nodes_only = true;
  for (int c = 0; c < lm.num_nodes; ++c)
    if (dot(phi, lm.column(lm.columns[c])) == 0) nodes_only = false;
  bool full = true;
  for (std::size_t c = 0; c < lm.columns.size(); ++c)
    if (dot(phi, lm.column(lm.columns[c])) == 0) full = false;
  if (nodes_only != full)
    throw Error("fibration criteria disagree (linking lemma violated)");
  return nodes_only;
}

inline bool is_fibered(const SpliceDiagram& d, const VecQ& phi) {
  return is_fibered(d, linking_matrix(d), phi);
}

inline std::vector<Hyperplane> characteristic_hyperplanes(
    const SpliceDiagram& d, const LinkingMatrix& lm,
    const EssentialReduction& er) {
  std::vector<Hyperplane> out;
  for (int c = 0; c < lm.num_nodes; ++c) {
    Hyperplane h;
    h.node = lm.columns[c];
    h.node_name = d.vertices[h.node].name;
    h.normal = lm.column(h.node);
    VecZ red = er.reduced_generators[c];
    bool zero = true;
    for (const Int& x : red)
      if (x != 0) zero = false;
    if (zero) throw Error("characteristic hyperplane with zero normal");
    h.reduced_normal = detail::primitive(red);
    out.push_back(std::move(h));
  }
  return out;
}

inline std::vector<Hyperplane> characteristic_hyperplanes(const SpliceDiagram& d) {
  LinkingMatrix lm = linking_matrix(d);
  return characteristic_hyperplanes(d, lm, essential_basis(d, lm));
}

namespace detail {

inline VecQ centroid(const std::vector<VecQ>& pts) {
  VecQ c(pts.front().size(), Rat(0));
  for (const VecQ& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  Rat inv = make_rat(1, static_cast<long>(pts.size()));
  for (auto& x : c) x *= inv;
  return c;
}

inline VecQ to_vecq(const VecZ& v) {
  VecQ q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

/// Facet vertex sets of the reduced ball. The ball is the polar dual of
/// the centered zonotope, so its facets correspond to zonotope vertices:
/// facet F_z = { ball vertices u with <u, z> = 1 }.
inline std::vector<std::vector<VecQ>> ball_facets(
    const Polytope& ball, const std::vector<VecZ>& gens,
    const std::vector<Rat>& coeffs) {
  const int k = ball.dim;
  std::vector<std::vector<VecQ>> facets;
  if (k == 1) {
    for (const VecQ& v : ball.vertices) facets.push_back({v});
    return facets;
  }
  // centered zonotope vertices from all sign choices
  std::vector<VecQ> sums;
  sums.push_back(VecQ(k, Rat(0)));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    VecQ step(k);
    for (int j = 0; j < k; ++j) step[j] = coeffs[i] * Rat(gens[i][j]);
    std::size_t n = sums.size();
    for (std::size_t s = 0; s < n; ++s) {
      VecQ plus = sums[s], minus = sums[s];
      for (int j = 0; j < k; ++j) {
        plus[j] += step[j];
        minus[j] -= step[j];
      }
      sums[s] = std::move(plus);
      sums.push_back(std::move(minus));
    }
  }
  std::vector<VecQ> zverts = extreme_points(std::move(sums));
  for (const VecQ& z : zverts) {
    std::vector<VecQ> fverts;
    for (const VecQ& u : ball.vertices)
      if (dot(u, z) == 1) fverts.push_back(u);
    if (fverts.size() < static_cast<std::size_t>(k))
      throw Error("ball facet with too few vertices");
    facets.push_back(std::move(fverts));
  }
  return facets;
}

}  // namespace detail

/// Classifies every facet of the reduced unit ball via the E-N criterion
/// at the facet centroid, and reports how the reduced characteristic
/// hyperplanes meet the ball.
inline FacetReport classify_facets(const SpliceDiagram& d) {
  LinkingMatrix lm = linking_matrix(d);
  EssentialReduction er = essential_basis(d, lm);
  Polytope ball = unit_ball(d, lm, er);
  std::vector<Hyperplane> planes = characteristic_hyperplanes(d, lm, er);

  std::vector<Rat> coeffs(lm.delta_tilde_minus_2.begin(),
                          lm.delta_tilde_minus_2.end());
  auto facet_sets = detail::ball_facets(ball, er.reduced_generators, coeffs);

  FacetReport rep;
  for (const auto& fverts : facet_sets) {
    FacetReport::Facet f;
    f.vertices = fverts;
    f.sample = detail::centroid(fverts);
    f.fibered = is_fibered(d, lm, er.lift_class(f.sample));
    rep.all_fibered = rep.all_fibered && f.fibered;

    // a hyperplane crossing the facet interior would put strictly positive
    // and strictly negative pairings among the facet's vertices
    for (const Hyperplane& h : planes) {
      bool pos = false, neg = false;
      VecQ n = detail::to_vecq(h.reduced_normal);
      for (const VecQ& v : fverts) {
        Rat p = dot(n, v);
        if (p > 0) pos = true;
        if (p < 0) neg = true;
      }
      if (pos && neg) rep.hyperplane_meets_facet_interior = true;
    }
    rep.facets.push_back(std::move(f));
  }

  for (const Hyperplane& h : planes) {
    FacetReport::HyperplaneIncidence inc;
    inc.node_name = h.node_name;
    VecQ n = detail::to_vecq(h.reduced_normal);
    for (const VecQ& v : ball.vertices)
      if (dot(n, v) == 0) inc.vertices_on.push_back(v);
    rep.hyperplanes.push_back(std::move(inc));
  }
  return rep;
}

}  // namespace graphlink

#endif  // GRAPHLINK_FIBRATION_HPP
