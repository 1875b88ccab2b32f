#ifndef GRAPHLINK_LAURENT_HPP
#define GRAPHLINK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "graphlink/rational.hpp"

namespace graphlink {

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("not divisible") {}
};

using Exponent = std::vector<std::int64_t>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow");
  return r;
}

inline std::int64_t total_degree(const Exponent& a) {
  std::int64_t s = 0;
  for (std::int64_t x : a) s = checked_add(s, x);
  return s;
}

/// Graded lexicographic: compare total degree, ties broken by lex with
/// t1 heaviest.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

}  // namespace detail

/// Finite map from integer exponent vectors to nonzero big-integer
/// coefficients. Exponents are machine integers with overflow checks;
/// coefficients are arbitrary precision.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Int, detail::GrlexLess>;

  explicit LaurentPolynomial(int nvars = 0) : nvars_(nvars) {}

  static LaurentPolynomial zero(int nvars) { return LaurentPolynomial(nvars); }

  static LaurentPolynomial monomial(const Exponent& e, Int coeff) {
    LaurentPolynomial f(static_cast<int>(e.size()));
    if (coeff != 0) f.terms_[e] = std::move(coeff);
    return f;
  }

  static LaurentPolynomial one(int nvars) {
    return monomial(Exponent(nvars, 0), 1);
  }

  /// t^a - 1; the zero polynomial when a = 0 (caller handles formal
  /// cancellation).
  static LaurentPolynomial binomial(const Exponent& a) {
    LaurentPolynomial f(static_cast<int>(a.size()));
    bool all_zero = true;
    for (std::int64_t x : a)
      if (x != 0) all_zero = false;
    if (all_zero) return f;
    f.terms_[a] = 1;
    f.terms_[Exponent(a.size(), 0)] = -1;
    return f;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  std::vector<Exponent> support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  void add_term(const Exponent& e, const Int& c) {
    if (static_cast<int>(e.size()) != nvars_) throw Error("nvars mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& f,
                                     const LaurentPolynomial& g) {
    check_vars(f, g);
    LaurentPolynomial out = f;
    for (const auto& [e, c] : g.terms_) out.add_term(e, c);
    return out;
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& f,
                                     const LaurentPolynomial& g) {
    check_vars(f, g);
    LaurentPolynomial out = f;
    for (const auto& [e, c] : g.terms_) out.add_term(e, -c);
    return out;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& f,
                                     const LaurentPolynomial& g) {
    check_vars(f, g);
    LaurentPolynomial out(f.nvars_);
    for (const auto& [ef, cf] : f.terms_)
      for (const auto& [eg, cg] : g.terms_) {
        Exponent e(f.nvars_);
        for (int i = 0; i < f.nvars_; ++i)
          e[i] = detail::checked_add(ef[i], eg[i]);
        out.add_term(e, cf * cg);
      }
    return out;
  }

  LaurentPolynomial pow(unsigned n) const {
    LaurentPolynomial acc = one(nvars_);
    for (unsigned i = 0; i < n; ++i) acc = acc * (*this);
    return acc;
  }

  bool operator==(const LaurentPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  /// Per-variable minimum exponent over the support.
  Exponent min_exponents() const {
    if (is_zero()) throw Error("zero polynomial has no exponents");
    Exponent mins = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < nvars_; ++i) mins[i] = std::min(mins[i], e[i]);
    return mins;
  }

  LaurentPolynomial shifted(const Exponent& offset) const {
    LaurentPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent ne(nvars_);
      for (int i = 0; i < nvars_; ++i) ne[i] = detail::checked_add(e[i], offset[i]);
      out.terms_[ne] = c;
    }
    return out;
  }

 private:
  static void check_vars(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.nvars_ != g.nvars_) throw Error("nvars mismatch");
  }

  int nvars_;
  TermMap terms_;
};

inline LaurentPolynomial mul(const LaurentPolynomial& f,
                             const LaurentPolynomial& g) {
  return f * g;
}

inline LaurentPolynomial binomial(const Exponent& a) {
  return LaurentPolynomial::binomial(a);
}

/// Exact quotient f/g. Both are translated to nonnegative exponents, then
/// long division in grlex order; throws NotDivisible on a nonzero remainder.
inline LaurentPolynomial divide_exact(const LaurentPolynomial& f,
                                      const LaurentPolynomial& g) {
  if (f.nvars() != g.nvars()) throw Error("nvars mismatch");
  if (g.is_zero()) throw Error("division by zero polynomial");
  if (f.is_zero()) return LaurentPolynomial::zero(f.nvars());
  const int n = f.nvars();

  Exponent off_f = f.min_exponents(), off_g = g.min_exponents();
  Exponent neg_f(n), neg_g(n);
  for (int i = 0; i < n; ++i) {
    neg_f[i] = -off_f[i];
    neg_g[i] = -off_g[i];
  }
  LaurentPolynomial fs = f.shifted(neg_f);
  LaurentPolynomial gs = g.shifted(neg_g);

  // For a single divisor, divisibility forces LT(g) | LT(remainder) at
  // every step, so getting stuck means "not divisible".
  const Exponent& lt_g = gs.terms().rbegin()->first;
  const Int& lc_g = gs.terms().rbegin()->second;
  LaurentPolynomial q(n), rem = fs;
  while (!rem.is_zero()) {
    const Exponent& lt_r = rem.terms().rbegin()->first;
    const Int& lc_r = rem.terms().rbegin()->second;
    Exponent e(n);
    for (int i = 0; i < n; ++i) {
      e[i] = lt_r[i] - lt_g[i];
      if (e[i] < 0) throw NotDivisible();
    }
    if (!mpz_divisible_p(lc_r.get_mpz_t(), lc_g.get_mpz_t()))
      throw NotDivisible();
    Int c = lc_r / lc_g;
    q.add_term(e, c);
    // subtract c*t^e*gs in place; rebuilding the remainder each step would
    // make the division quadratic in its term count
    for (const auto& [eg, cg] : gs.terms()) {
      Exponent es(n);
      for (int i = 0; i < n; ++i) es[i] = detail::checked_add(e[i], eg[i]);
      rem.add_term(es, -c * cg);
    }
  }

  Exponent off_q(n);
  for (int i = 0; i < n; ++i) off_q[i] = off_f[i] - off_g[i];
  return q.shifted(off_q);
}

/// Canonical unit normalization: each variable's minimum exponent becomes 0
/// and the grlex-smallest coefficient is made positive. Idempotent.
inline LaurentPolynomial canonicalize(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error("cannot canonicalize the zero polynomial");
  Exponent mins = f.min_exponents();
  Exponent neg(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) neg[i] = -mins[i];
  LaurentPolynomial out = f.shifted(neg);
  if (out.terms().begin()->second < 0) out = -out;
  return out;
}

/// Terms in descending grlex order, `t1^a*t2^b` syntax.
inline std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << abs_c.get_str();
    } else {
      if (abs_c != 1) out << abs_c.get_str() << "*";
      out << mono;
    }
  }
  return out.str();
}

}  // namespace graphlink

#endif  // GRAPHLINK_LAURENT_HPP
