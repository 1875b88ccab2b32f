#ifndef GRAPHLINK_GEOMETRY_HPP
#define GRAPHLINK_GEOMETRY_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "graphlink/diagram.hpp"
#include "graphlink/lattice.hpp"
#include "graphlink/laurent.hpp"
#include "graphlink/linking.hpp"
#include "graphlink/rational.hpp"

namespace graphlink {

/// Convex polytope over exact rationals, stored as its extreme points.
/// Zonotopes additionally remember their segment generators; when the
/// generator count is too large for vertex enumeration the vertex list is
/// empty and only the generator description is available.
struct Polytope {
  struct Generator {
    Rat scale;  // positive rational
    VecZ dir;   // integer segment direction, segment = scale * [0, dir]
  };

  int dim = 0;
  std::vector<VecQ> vertices;
  std::optional<std::vector<Generator>> generators;

  bool has_vertices() const { return !vertices.empty(); }
};

namespace detail {

inline bool lex_less(const VecQ& a, const VecQ& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline void sort_dedupe(std::vector<VecQ>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

/// Exact phase-1 simplex (Bland's rule): is x a convex combination of pts?
inline bool point_in_hull(const VecQ& x, const std::vector<VecQ>& pts) {
  if (pts.empty()) return false;
  const int d = static_cast<int>(x.size());
  const int rows = d + 1;
  const int m = static_cast<int>(pts.size());

  // tableau columns: m lambdas, rows artificials, rhs
  std::vector<VecQ> t(rows, VecQ(m + rows + 1, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = pts[j][i];
    t[i][m + rows] = x[i];
  }
  for (int j = 0; j < m; ++j) t[rows - 1][j] = 1;
  t[rows - 1][m + rows] = 1;
  for (int i = 0; i < rows; ++i) {
    if (t[i][m + rows] < 0)
      for (auto& v : t[i]) v = -v;
    t[i][m + i] = 1;
  }

  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = m + i;

  // reduced costs for cost = 1 on artificials, 0 on lambdas
  VecQ obj(m + rows, Rat(0));
  Rat obj_val = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < m + rows; ++j) obj[j] -= t[i][j];
    obj_val -= t[i][m + rows];
  }
  for (int i = 0; i < rows; ++i) obj[m + i] = 0;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < m + rows; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == -1) break;
    int leave = -1;
    Rat best = 0;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][m + rows] / t[i][enter];
      if (leave == -1 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == -1) return false;  // unbounded; cannot happen here
    Rat piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[leave][j];
    }
    Rat f = obj[enter];
    for (int j = 0; j < m + rows; ++j) obj[j] -= f * t[leave][j];
    obj_val -= f * t[leave][m + rows];
    basis[leave] = enter;
  }
  return obj_val == 0;
}

/// 2-D convex hull, counterclockwise, strictly convex turns only.
inline std::vector<VecQ> hull_2d(std::vector<VecQ> pts) {
  sort_dedupe(pts);
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  auto cross = [](const VecQ& o, const VecQ& a, const VecQ& b) -> Rat {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<VecQ> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

struct AffineFrame {
  VecQ base;
  std::vector<VecQ> basis;  // rows spanning the affine hull directions
  int dim() const { return static_cast<int>(basis.size()); }

  /// Coordinates of v in this frame; v must lie in the affine hull.
  VecQ coords(const VecQ& v) const {
    const int k = dim();
    const int big_d = static_cast<int>(base.size());
    // solve sum y_i basis_i = v - base by Gaussian elimination
    std::vector<VecQ> aug(big_d, VecQ(k + 1, Rat(0)));
    for (int i = 0; i < big_d; ++i) {
      for (int j = 0; j < k; ++j) aug[i][j] = basis[j][i];
      aug[i][k] = v[i] - base[i];
    }
    VecQ y(k, Rat(0));
    int row = 0;
    std::vector<int> pivot_row(k, -1);
    for (int col = 0; col < k && row < big_d; ++col) {
      int piv = -1;
      for (int i = row; i < big_d; ++i)
        if (aug[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv == -1) continue;
      std::swap(aug[row], aug[piv]);
      Rat p = aug[row][col];
      for (auto& vv : aug[row]) vv /= p;
      for (int i = 0; i < big_d; ++i) {
        if (i == row || aug[i][col] == 0) continue;
        Rat f = aug[i][col];
        for (int j = 0; j <= k; ++j) aug[i][j] -= f * aug[row][j];
      }
      pivot_row[col] = row;
      ++row;
    }
    for (int col = 0; col < k; ++col) {
      if (pivot_row[col] == -1) throw Error("affine frame: dependent basis");
      y[col] = aug[pivot_row[col]][k];
    }
    for (int i = row; i < big_d; ++i)
      if (aug[i][k] != 0) throw Error("point outside affine hull");
    return y;
  }
};

inline AffineFrame affine_frame(const std::vector<VecQ>& pts) {
  AffineFrame fr;
  fr.base = pts.front();
  const int big_d = static_cast<int>(fr.base.size());
  std::vector<VecQ> echelon;  // reduced rows for the rank test
  for (const VecQ& p : pts) {
    VecQ v(big_d);
    for (int i = 0; i < big_d; ++i) v[i] = p[i] - fr.base[i];
    VecQ red = v;
    for (const VecQ& e : echelon) {
      int lead = 0;
      while (lead < big_d && e[lead] == 0) ++lead;
      if (lead < big_d && red[lead] != 0) {
        Rat f = red[lead] / e[lead];
        for (int i = 0; i < big_d; ++i) red[i] -= f * e[i];
      }
    }
    bool zero = std::all_of(red.begin(), red.end(),
                            [](const Rat& q) { return q == 0; });
    if (!zero) {
      echelon.push_back(red);
      fr.basis.push_back(v);
      // keep echelon rows sorted by leading index for the reduction above
      std::sort(echelon.begin(), echelon.end(), [big_d](const VecQ& a, const VecQ& b) {
        int la = 0, lb = 0;
        while (la < big_d && a[la] == 0) ++la;
        while (lb < big_d && b[lb] == 0) ++lb;
        return la < lb;
      });
    }
  }
  return fr;
}

}  // namespace detail

/// Extreme points of the convex hull of an arbitrary rational point set.
/// Reduces to intrinsic coordinates first; dimensions 0-2 use direct hulls,
/// higher dimensions an exact LP filter.
inline std::vector<VecQ> extreme_points(std::vector<VecQ> pts) {
  detail::sort_dedupe(pts);
  if (pts.size() <= 1) return pts;
  detail::AffineFrame fr = detail::affine_frame(pts);
  const int k = fr.dim();
  if (k == 0) return {pts.front()};

  std::vector<VecQ> local;
  local.reserve(pts.size());
  for (const VecQ& p : pts) local.push_back(fr.coords(p));

  std::vector<std::size_t> keep;
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < local.size(); ++i) {
      if (local[i][0] < local[lo][0]) lo = i;
      if (local[i][0] > local[hi][0]) hi = i;
    }
    keep = {lo, hi};
  } else if (k == 2) {
    std::vector<VecQ> hull = detail::hull_2d(local);
    for (const VecQ& h : hull)
      for (std::size_t i = 0; i < local.size(); ++i)
        if (local[i] == h) {
          keep.push_back(i);
          break;
        }
  } else {
    for (std::size_t i = 0; i < local.size(); ++i) {
      std::vector<VecQ> others;
      others.reserve(local.size() - 1);
      for (std::size_t j = 0; j < local.size(); ++j)
        if (j != i) others.push_back(local[j]);
      if (!detail::point_in_hull(local[i], others)) keep.push_back(i);
    }
  }
  std::vector<VecQ> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) out.push_back(pts[i]);
  detail::sort_dedupe(out);
  return out;
}

inline Polytope make_polytope(int dim, std::vector<VecQ> pts) {
  Polytope p;
  p.dim = dim;
  p.vertices = extreme_points(std::move(pts));
  return p;
}

inline bool polytope_equal(const Polytope& a, const Polytope& b) {
  return a.dim == b.dim && a.vertices == b.vertices;
}

inline Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim != q.dim) throw Error("minkowski_sum: dimension mismatch");
  if (!p.has_vertices() || !q.has_vertices())
    throw Error("minkowski_sum: needs enumerated vertices");
  std::vector<VecQ> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const VecQ& a : p.vertices)
    for (const VecQ& b : q.vertices) {
      VecQ s(p.dim);
      for (int i = 0; i < p.dim; ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  Polytope out = make_polytope(p.dim, std::move(sums));
  if (p.generators && q.generators) {
    out.generators = *p.generators;
    out.generators->insert(out.generators->end(), q.generators->begin(),
                           q.generators->end());
  }
  return out;
}

/// Newton polytope of a nonzero polynomial: hull of its support.
inline Polytope support_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error("support_polytope of zero polynomial");
  std::vector<VecQ> pts;
  for (const Exponent& e : f.support()) {
    VecQ p(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) p[i] = Rat(static_cast<long>(e[i]));
    pts.push_back(std::move(p));
  }
  return make_polytope(f.nvars(), std::move(pts));
}

/// Width of P in direction phi: max minus min of the pairing over P.
/// Works from the generator description when vertices are not enumerated.
inline Rat width(const Polytope& p, const VecQ& phi) {
  if (static_cast<int>(phi.size()) != p.dim)
    throw Error("width: dimension mismatch");
  if (p.has_vertices()) {
    Rat lo = dot(phi, p.vertices.front());
    Rat hi = lo;
    for (const VecQ& v : p.vertices) {
      Rat d = dot(phi, v);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    return hi - lo;
  }
  if (p.generators) {
    Rat acc = 0;
    for (const auto& g : *p.generators) acc += rat_abs(g.scale * dot(phi, g.dir));
    return acc;
  }
  throw Error("width: empty polytope");
}

constexpr int kZonotopeVertexCap = 16;

/// The Newton polytope of the link's Alexander polynomial, built directly
/// from the diagram as a Minkowski sum of node segments (plus the knot
/// segment when r = 1), translated to the canonical origin orthant.
inline Polytope zonotope_newton(const SpliceDiagram& d,
                                const LinkingMatrix& lm) {
  const int r = d.num_arrows();
  Polytope z;
  z.dim = r;
  std::vector<Polytope::Generator> gens;
  for (int c = 0; c < lm.num_nodes; ++c)
    gens.push_back({lm.delta_tilde_minus_2[c], lm.column(lm.columns[c])});
  if (r == 1) {
    VecZ e1 = {Int(1)};
    gens.push_back({Rat(1), e1});
  }
  z.generators = gens;

  if (static_cast<int>(gens.size()) > kZonotopeVertexCap) return z;  // description only

  std::vector<VecQ> sums;
  sums.push_back(VecQ(r, Rat(0)));
  for (const auto& g : gens) {
    VecQ step(r);
    for (int i = 0; i < r; ++i) step[i] = g.scale * Rat(g.dir[i]);
    std::size_t n = sums.size();
    for (std::size_t s = 0; s < n; ++s) {
      VecQ v = sums[s];
      for (int i = 0; i < r; ++i) v[i] += step[i];
      sums.push_back(std::move(v));
    }
  }
  // canonical translation: per-coordinate minimum to 0
  VecQ mins = sums.front();
  for (const VecQ& v : sums)
    for (int i = 0; i < r; ++i) mins[i] = std::min(mins[i], v[i]);
  for (VecQ& v : sums)
    for (int i = 0; i < r; ++i) {
      v[i] -= mins[i];
      if (v[i].get_den() != 1)
        throw Error("zonotope_newton: non-integral vertex (inconsistent diagram)");
    }
  Polytope out = make_polytope(r, std::move(sums));
  out.generators = gens;
  return out;
}

inline Polytope zonotope_newton(const SpliceDiagram& d) {
  return zonotope_newton(d, linking_matrix(d));
}

/// Unimodular change of coordinates concentrating the span of the node
/// l-columns in the first b_e coordinates, with the induced map on
/// cohomology classes.
struct EssentialReduction {
  int b1 = 0;   // = r
  int b_e = 0;  // rank of the node l-columns
  MatZ basis;       // b_e x r, HNF basis (rows) of the saturated span
  MatZ forward;     // r x r unimodular; forward * g = (reduced g; 0)
  MatZ class_map;   // r x r unimodular; phi~ = first b_e coords of class_map * phi
  MatZ class_map_inv;
  std::vector<VecZ> reduced_generators;  // node columns in reduced coords

  VecZ reduce_vector(const VecZ& g) const {
    VecZ full = mat_vec(forward, g);
    for (int i = b_e; i < b1; ++i)
      if (full[i] != 0) throw Error("vector outside essential span");
    return VecZ(full.begin(), full.begin() + b_e);
  }

  VecQ reduce_class(const VecQ& phi) const {
    VecQ full = mat_vec(class_map, phi);
    return VecQ(full.begin(), full.begin() + b_e);
  }

  /// Any lift works; this one zeroes the non-essential components.
  VecQ lift_class(const VecQ& phi_reduced) const {
    VecQ padded(b1, Rat(0));
    for (int i = 0; i < b_e; ++i) padded[i] = phi_reduced[i];
    return mat_vec(class_map_inv, padded);
  }
};

inline EssentialReduction essential_basis(const SpliceDiagram& d,
                                          const LinkingMatrix& lm) {
  const int r = d.num_arrows();
  MatZ gens = lm.node_columns();
  bool any_nonzero = false;
  for (const VecZ& g : gens)
    for (const Int& x : g)
      if (x != 0) any_nonzero = true;
  if (!any_nonzero) throw Error("essential_basis: all l-columns are zero");

  EssentialReduction er;
  er.b1 = r;
  er.basis = saturation_basis(gens, r);
  er.b_e = static_cast<int>(er.basis.size());
  er.class_map = complete_to_unimodular(er.basis, r);
  er.class_map_inv = unimodular_inverse(er.class_map);
  er.forward = transpose(er.class_map_inv);
  for (const VecZ& g : gens) er.reduced_generators.push_back(er.reduce_vector(g));
  return er;
}

inline EssentialReduction essential_basis(const SpliceDiagram& d) {
  return essential_basis(d, linking_matrix(d));
}

/// Equality test between the Newton polytope of f (the hull of its support)
/// and the diagram zonotope that scales to supports far beyond what vertex
/// enumeration can handle. Two directions: every zonotope vertex must occur
/// as a support point (so the zonotope sits inside the hull), and every
/// support point must satisfy the zonotope's facet inequalities and lie in
/// its affine hull (so the hull sits inside the zonotope). Facet normals
/// come from (b_e - 1)-subsets of the generators in essential coordinates,
/// lifted back; affine-hull equations are the non-essential rows of the
/// reduction.
inline bool support_equals_zonotope(const LaurentPolynomial& f,
                                    const SpliceDiagram& d,
                                    const LinkingMatrix& lm) {
  if (f.is_zero()) return false;
  const int r = d.num_arrows();
  if (f.nvars() != r) throw Error("support_equals_zonotope: nvars != arrows");
  Polytope z = zonotope_newton(d, lm);
  if (!z.has_vertices())
    throw Error("support_equals_zonotope: too many generators to enumerate");

  // zonotope vertices are integral and must be support points
  for (const VecQ& v : z.vertices) {
    Exponent e(r);
    for (int i = 0; i < r; ++i) {
      if (v[i].get_den() != 1 || !v[i].get_num().fits_slong_p()) return false;
      e[i] = v[i].get_num().get_si();
    }
    if (f.coeff(e) == 0) return false;
  }

  const auto& gens = *z.generators;
  // translation applied by zonotope_newton: per-coordinate minimum to 0
  VecQ shift(r, Rat(0));
  for (const auto& g : gens)
    for (int i = 0; i < r; ++i)
      if (g.dir[i] < 0) shift[i] -= g.scale * Rat(g.dir[i]);

  // candidate directions: lifted facet normals plus affine-hull equations
  MatZ normals;
  if (r == 1) {
    normals.push_back({Int(1)});
  } else {
    EssentialReduction er = essential_basis(d, lm);
    MatZ reduced;
    for (const auto& g : gens) reduced.push_back(er.reduce_vector(g.dir));
    const int m = static_cast<int>(reduced.size());
    const int k = er.b_e - 1;
    auto lift = [&](VecZ n_red) {
      Int g = 0;
      for (const Int& x : n_red) g = gcd(g, x);
      if (g != 0)
        for (Int& x : n_red) x /= g;
      VecZ n(r, Int(0));
      for (int j = 0; j < er.b_e; ++j)
        for (int i = 0; i < r; ++i) n[i] += n_red[j] * er.forward[j][i];
      return n;
    };
    // every (b_e - 1)-subset whose kernel is a line contributes its normal;
    // subsets of lower rank never carry a facet, so skipping them is exact
    if (k <= m) {
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        MatZ rows;
        for (int i : idx) rows.push_back(reduced[i]);
        MatZ ker = kernel_basis(rows, er.b_e);
        if (ker.size() == 1) normals.push_back(lift(ker[0]));
        // next k-combination of {0..m-1} in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    for (int i = er.b_e; i < r; ++i) {
      VecZ row = er.forward[i];
      bool zero = std::all_of(row.begin(), row.end(),
                              [](const Int& x) { return x == 0; });
      if (!zero) normals.push_back(std::move(row));
    }
  }

  for (const VecZ& n : normals) {
    Rat hi = 0, lo = 0;
    for (const auto& g : gens) {
      Int p = 0;
      for (int i = 0; i < r; ++i) p += n[i] * g.dir[i];
      if (p > 0) hi += g.scale * Rat(p);
      if (p < 0) lo += g.scale * Rat(p);
    }
    Rat off = 0;
    for (int i = 0; i < r; ++i) off += Rat(n[i]) * shift[i];
    hi += off;
    lo += off;
    bool first = true;
    Int smax = 0, smin = 0;
    for (const auto& [e, c] : f.terms()) {
      Int dotv = 0;
      for (int i = 0; i < r; ++i) dotv += n[i] * e[i];
      if (first) {
        smax = smin = dotv;
        first = false;
      } else {
        if (dotv > smax) smax = dotv;
        if (dotv < smin) smin = dotv;
      }
    }
    if (Rat(smax) > hi || Rat(smin) < lo) return false;
  }
  return true;
}

inline bool support_equals_zonotope(const LaurentPolynomial& f,
                                    const SpliceDiagram& d) {
  return support_equals_zonotope(f, d, linking_matrix(d));
}

namespace detail {

inline VecZ primitive(VecZ v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw Error("primitive of zero vector");
  for (Int& x : v) x /= g;
  return v;
}

inline VecZ cross3(const VecZ& a, const VecZ& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace detail

/// Reduced-coordinate unit ball of the norm sum_i c_i |<w_i, phi~>|,
/// enumerated as the polar dual of the centered zonotope. Exact vertices,
/// centrally symmetric; supported for b_e <= 3.
inline Polytope unit_ball_from_generators(const std::vector<VecZ>& gens,
                                          const std::vector<Rat>& coeffs) {
  const int k = gens.empty() ? 0 : static_cast<int>(gens.front().size());
  if (k < 1 || k > 3)
    throw Error("unit_ball: vertex enumeration supports b_e <= 3 only "
                "(evaluation-only mode above)");
  for (const Rat& c : coeffs)
    if (c <= 0) throw Error("unit_ball: nonpositive norm coefficient");

  auto supportq = [&](const VecZ& n) {
    VecQ nq(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) nq[i] = Rat(n[i]);
    Rat h = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      VecQ gq(gens[i].size());
      for (std::size_t j = 0; j < gens[i].size(); ++j) gq[j] = Rat(gens[i][j]);
      h += coeffs[i] * rat_abs(dot(nq, gq));
    }
    return h;
  };

  std::vector<VecQ> verts;
  auto add_pair = [&](const VecZ& normal) {
    Rat h = supportq(normal);
    if (h == 0) throw Error("unit_ball: degenerate norm direction");
    VecQ v(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) v[i] = Rat(normal[i]) / h;
    VecQ neg = v;
    for (auto& x : neg) x = -x;
    verts.push_back(std::move(v));
    verts.push_back(std::move(neg));
  };

  if (k == 1) {
    add_pair({Int(1)});
  } else if (k == 2) {
    std::vector<VecZ> normals;
    for (const VecZ& g : gens) {
      if (g[0] == 0 && g[1] == 0) continue;
      VecZ n = detail::primitive({-g[1], g[0]});
      if (n[0] < 0 || (n[0] == 0 && n[1] < 0))
        for (auto& x : n) x = -x;
      normals.push_back(n);
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    for (const VecZ& n : normals) add_pair(n);
  } else {
    std::vector<VecZ> normals;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        VecZ c = detail::cross3(gens[i], gens[j]);
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        VecZ n = detail::primitive(c);
        for (int t = 0; t < 3; ++t) {
          if (n[t] == 0) continue;
          if (n[t] < 0)
            for (auto& x : n) x = -x;
          break;
        }
        normals.push_back(n);
      }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    for (const VecZ& n : normals) add_pair(n);
  }

  Polytope ball;
  ball.dim = k;
  detail::sort_dedupe(verts);
  ball.vertices = std::move(verts);
  if (k == 2) {
    // order counterclockwise starting from the positive x-axis
    std::sort(ball.vertices.begin(), ball.vertices.end(),
              [](const VecQ& a, const VecQ& b) {
                auto half = [](const VecQ& v) {
                  return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
                };
                if (half(a) != half(b)) return half(a) < half(b);
                return a[0] * b[1] - a[1] * b[0] > 0;
              });
  }
  return ball;
}

inline Polytope unit_ball(const SpliceDiagram& d, const LinkingMatrix& lm,
                          const EssentialReduction& er) {
  std::vector<Rat> coeffs(lm.delta_tilde_minus_2.begin(),
                          lm.delta_tilde_minus_2.end());
  return unit_ball_from_generators(er.reduced_generators, coeffs);
}

inline Polytope unit_ball(const SpliceDiagram& d) {
  LinkingMatrix lm = linking_matrix(d);
  return unit_ball(d, lm, essential_basis(d, lm));
}

}  // namespace graphlink

#endif  // GRAPHLINK_GEOMETRY_HPP
