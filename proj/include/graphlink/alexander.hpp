#ifndef GRAPHLINK_ALEXANDER_HPP
#define GRAPHLINK_ALEXANDER_HPP

#include <vector>

#include "graphlink/diagram.hpp"
#include "graphlink/laurent.hpp"
#include "graphlink/linking.hpp"

namespace graphlink {

/// Factor lists before division: one binomial t^a - 1 per entry, with its
/// multiplicity. Zero l-columns are counted separately for formal
/// cancellation.
struct AlexanderFactors {
  std::vector<std::pair<Exponent, int>> numerator;    // (exponent vector, power)
  std::vector<Exponent> denominator;                  // power 1 each
  int zero_factor_net = 0;  // sum of delta_i - 2 over zero l-columns
};

namespace detail {

inline Exponent to_exponent(const VecZ& col) {
  Exponent e(col.size());
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (!col[i].fits_slong_p()) throw Error("linking number exceeds exponent range");
    e[i] = col[i].get_si();
  }
  return e;
}

inline bool is_zero_exp(const Exponent& e) {
  for (std::int64_t x : e)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

inline AlexanderFactors alexander_factors(const SpliceDiagram& d,
                                          const LinkingMatrix& lm) {
  AlexanderFactors fac;
  const int r = d.num_arrows();
  for (std::size_t c = 0; c < lm.columns.size(); ++c) {
    Exponent e = detail::to_exponent(lm.column(lm.columns[c]));
    int power = lm.delta[c] - 2;
    if (power == 0) continue;
    if (detail::is_zero_exp(e)) {
      fac.zero_factor_net += power;
      continue;
    }
    if (power > 0) {
      fac.numerator.emplace_back(std::move(e), power);
    } else {
      for (int k = 0; k < -power; ++k) fac.denominator.push_back(e);
    }
  }
  if (r == 1) {
    Exponent knot = {1};
    fac.numerator.emplace_back(std::move(knot), 1);
  }
  return fac;
}

/// Alexander polynomial assembled from the diagram: the product of
/// (t^l - 1)^(delta-2) over non-arrowhead vertices, the extra (t-1) factor
/// when r = 1, zero factors formally canceled, and the leaf binomials
/// divided out exactly. Returned in canonical form.
inline LaurentPolynomial alexander_polynomial(const SpliceDiagram& d,
                                              const LinkingMatrix& lm) {
  const int r = d.num_arrows();
  AlexanderFactors fac = alexander_factors(d, lm);

  if (fac.zero_factor_net > 0) return LaurentPolynomial::zero(r);
  if (fac.zero_factor_net < 0)
    throw Error("negative net zero-factor multiplicity (ill-posed diagram)");

  LaurentPolynomial num = LaurentPolynomial::one(r);
  for (const auto& [e, power] : fac.numerator)
    num = num * LaurentPolynomial::binomial(e).pow(static_cast<unsigned>(power));

  // divide by each leaf binomial in turn; an intermediate step can be
  // inexact even when the full quotient is a polynomial, so fall back to
  // one division by the expanded denominator
  LaurentPolynomial quotient = num;
  bool stepwise_ok = true;
  for (const Exponent& e : fac.denominator) {
    try {
      quotient = divide_exact(quotient, LaurentPolynomial::binomial(e));
    } catch (const NotDivisible&) {
      stepwise_ok = false;
      break;
    }
  }
  if (!stepwise_ok) {
    LaurentPolynomial den = LaurentPolynomial::one(r);
    for (const Exponent& e : fac.denominator)
      den = den * LaurentPolynomial::binomial(e);
    quotient = divide_exact(num, den);
  }
  if (quotient.is_zero()) throw Error("alexander polynomial vanished unexpectedly");
  return canonicalize(quotient);
}

inline LaurentPolynomial alexander_polynomial(const SpliceDiagram& d) {
  return alexander_polynomial(d, linking_matrix(d));
}

}  // namespace graphlink

#endif  // GRAPHLINK_ALEXANDER_HPP
