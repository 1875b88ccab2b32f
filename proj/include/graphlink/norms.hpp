#ifndef GRAPHLINK_NORMS_HPP
#define GRAPHLINK_NORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphlink/alexander.hpp"
#include "graphlink/diagram.hpp"
#include "graphlink/fibration.hpp"
#include "graphlink/geometry.hpp"
#include "graphlink/linking.hpp"
#include "graphlink/rational.hpp"

namespace graphlink {

struct NormReport {
  struct NodeContribution {
    std::string node_name;
    Rat coefficient;   // delta~ - 2
    Rat pairing;       // sum_j phi_j l_ji
    Rat contribution;  // coefficient * |pairing|
  };
  std::vector<NodeContribution> per_node;
  Rat thurston;
  Rat alexander;
  bool coincide = false;
  bool fibered = false;
  std::optional<Rat> knot_offset;  // r = 1 only
};

/// Caches the linking matrix (and, lazily, the expanded Alexander
/// polynomial) so batches of classes evaluate cheaply.
class NormEvaluator {
 public:
  explicit NormEvaluator(const SpliceDiagram& d)
      : d_(d), lm_(linking_matrix(d)) {}

  const LinkingMatrix& matrix() const { return lm_; }

  const LaurentPolynomial& alexander() const {
    if (!delta_) delta_ = alexander_polynomial(d_, lm_);
    return *delta_;
  }

  /// T-norm by the node-and-leaf valence formula and independently by the
  /// node-only corrected-valence decomposition; the two must agree.
  Rat thurston(const VecQ& phi) const {
    check(phi);
    Rat full = 0;
    for (std::size_t c = 0; c < lm_.columns.size(); ++c)
      full += Rat(lm_.delta[c] - 2) * rat_abs(dot(phi, lm_.column(lm_.columns[c])));
    Rat nodes = nodes_decomposition(phi);
    if (full != nodes)
      throw Error("thurston norm decomposition mismatch (structural bug)");
    return nodes;
  }

  /// A-norm as the width of the Newton polytope and independently by the
  /// node decomposition (plus the |phi| knot segment when r = 1).
  Rat alexander_norm(const VecQ& phi) const {
    check(phi);
    Rat decomposed = nodes_decomposition(phi);
    if (d_.num_arrows() == 1) decomposed += rat_abs(phi[0]);
    const LaurentPolynomial& delta = alexander();
    if (delta.is_zero())
      throw Error("alexander norm undefined: zero alexander polynomial");
    Rat from_width = supp_width(delta, phi);
    if (from_width != decomposed)
      throw Error("alexander norm routes disagree (structural bug)");
    return decomposed;
  }

  /// Cheap single-route evaluations for large verification corpora.
  Rat thurston_fast(const VecQ& phi) const {
    check(phi);
    return nodes_decomposition(phi);
  }
  Rat alexander_norm_width_only(const VecQ& phi) const {
    check(phi);
    return supp_width(alexander(), phi);
  }

  NormReport report(const VecQ& phi) const {
    NormReport rep;
    for (int c = 0; c < lm_.num_nodes; ++c) {
      NormReport::NodeContribution nc;
      nc.node_name = d_.vertices[lm_.columns[c]].name;
      nc.coefficient = lm_.delta_tilde_minus_2[c];
      nc.pairing = dot(phi, lm_.column(lm_.columns[c]));
      nc.contribution = nc.coefficient * rat_abs(nc.pairing);
      rep.per_node.push_back(std::move(nc));
    }
    rep.thurston = thurston(phi);
    rep.alexander = alexander_norm(phi);
    if (d_.num_arrows() == 1) {
      rep.knot_offset = rep.alexander - rep.thurston;
      rep.coincide = (*rep.knot_offset == rat_abs(phi[0]));
    } else {
      rep.coincide = (rep.alexander == rep.thurston);
    }
    rep.fibered = is_fibered(d_, lm_, phi);
    return rep;
  }

 private:
  void check(const VecQ& phi) const {
    if (static_cast<int>(phi.size()) != d_.num_arrows())
      throw Error("cohomology class has wrong length");
  }

  Rat nodes_decomposition(const VecQ& phi) const {
    Rat acc = 0;
    for (int c = 0; c < lm_.num_nodes; ++c)
      acc += lm_.delta_tilde_minus_2[c] *
             rat_abs(dot(phi, lm_.column(lm_.columns[c])));
    return acc;
  }

  /// max minus min of <phi, alpha> over the support; equals the width of
  /// the Newton polytope without needing a hull.
  static Rat supp_width(const LaurentPolynomial& f, const VecQ& phi) {
    bool first = true;
    Rat lo = 0, hi = 0;
    for (const auto& [e, c] : f.terms()) {
      Rat v = 0;
      for (std::size_t i = 0; i < phi.size(); ++i)
        v += phi[i] * Rat(static_cast<long>(e[i]));
      if (first) {
        lo = hi = v;
        first = false;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    return hi - lo;
  }

  SpliceDiagram d_;  // owned copy: the evaluator may outlive the argument
  LinkingMatrix lm_;
  mutable std::optional<LaurentPolynomial> delta_;
};

inline Rat thurston_norm(const SpliceDiagram& d, const VecQ& phi) {
  return NormEvaluator(d).thurston(phi);
}

inline Rat alexander_norm(const SpliceDiagram& d, const VecQ& phi) {
  return NormEvaluator(d).alexander_norm(phi);
}

inline NormReport norm_report(const SpliceDiagram& d, const VecQ& phi) {
  return NormEvaluator(d).report(phi);
}

struct FiberGenus {
  Int multiplicity;  // gcd of the entries of phi
  Rat genus;         // genus of each connected piece
  bool integral_genus = false;
};

/// Genus of the dual surface from chi(S) = -2g - r + 2 and
/// ||phi||_T = d (2g + r - 2). A non-integral or negative result is
/// reported, never rounded.
inline FiberGenus fiber_genus(const SpliceDiagram& d, const VecQ& phi) {
  bool all_zero = true;
  Int g = 0;
  for (const Rat& x : phi) {
    if (x.get_den() != 1) throw Error("fiber_genus: class must be integral");
    if (x != 0) all_zero = false;
    g = gcd(g, x.get_num());
  }
  if (all_zero) throw Error("fiber_genus: zero class");

  FiberGenus out;
  out.multiplicity = abs(g);
  Rat t = thurston_norm(d, phi);
  out.genus = (t / Rat(out.multiplicity) - d.num_arrows() + 2) / 2;
  out.integral_genus = out.genus.get_den() == 1 && out.genus >= 0;
  return out;
}

}  // namespace graphlink

#endif  // GRAPHLINK_NORMS_HPP
